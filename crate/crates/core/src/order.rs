//! Finite posets and lattices.
//!
//! Elements are the ids `0..size`. The order is kept as two dense bit
//! matrices (`x ≤ y` by row and its transpose) so that every comparison in
//! the downstream analyses is a single bit probe. Lattices additionally
//! carry their full meet and join tables, computed and checked at
//! construction.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::bits::{ones, BitMatrix};
use crate::error::{Error, Result};

/// A finite poset presented by its Hasse diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    size: usize,
    hasse: Vec<(usize, usize)>,
    names: Option<Vec<String>>,
    le: BitMatrix,
    ge: BitMatrix,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
}

/// A triple `(left, apex, right)` with `left ⋖ apex`, `right ⋖ apex` and
/// `left ≠ right`. Antihats are hats of the dual poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Hat {
    pub left: usize,
    pub apex: usize,
    pub right: usize,
}

/// Which cospans [`FinitePoset::has_pullbacks`] inspects.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PullbackMode {
    AllCospans,
    HatsOnly,
}

/// A connected component of the comparability graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub elements: Vec<usize>,
    pub minimal: Vec<usize>,
    pub maximal: Vec<usize>,
}

impl Component {
    pub fn has_least(&self) -> bool {
        self.minimal.len() == 1
    }

    pub fn has_greatest(&self) -> bool {
        self.maximal.len() == 1
    }
}

fn check_names(size: usize, names: &Option<Vec<String>>) -> Result<()> {
    match names {
        Some(n) if n.len() != size => Err(Error::Invalid(format!("{} names given for {} elements", n.len(), size))),
        _ => Ok(()),
    }
}

/// Kahn's algorithm over the given edges; `Err(Cycle)` if some element is
/// never released.
fn topological_order(size: usize, edges: &[(usize, usize)]) -> Result<Vec<usize>> {
    let mut indeg = vec![0usize; size];
    let mut out = vec![Vec::new(); size];
    for &(a, b) in edges {
        if a == b {
            return Err(Error::Cycle(a));
        }
        out[a].push(b);
        indeg[b] += 1;
    }
    let mut queue: VecDeque<usize> = (0..size).filter(|&x| indeg[x] == 0).collect();
    let mut order = Vec::with_capacity(size);
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &y in &out[x] {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                queue.push_back(y);
            }
        }
    }
    if order.len() < size {
        let stuck = (0..size).find(|&x| indeg[x] > 0).unwrap_or(0);
        return Err(Error::Cycle(stuck));
    }
    Ok(order)
}

fn check_ids(size: usize, edges: &[(usize, usize)]) -> Result<()> {
    for &(a, b) in edges {
        for id in [a, b] {
            if id >= size {
                return Err(Error::Index { id, size });
            }
        }
    }
    Ok(())
}

/// Reflexive-transitive closure of an acyclic edge set.
fn closure(size: usize, edges: &[(usize, usize)]) -> Result<BitMatrix> {
    let topo = topological_order(size, edges)?;
    let mut out = vec![Vec::new(); size];
    for &(a, b) in edges {
        out[a].push(b);
    }
    let mut le = BitMatrix::new(size);
    for &x in topo.iter().rev() {
        le.insert(x, x);
        for &y in &out[x] {
            le.union_rows(y, x);
        }
    }
    Ok(le)
}

/// The covering pairs of a reflexive order matrix, sorted.
fn reduction(le: &BitMatrix, ge: &BitMatrix) -> Vec<(usize, usize)> {
    let n = le.len();
    let words = n.div_ceil(64).max(1);
    let mut hasse = Vec::new();
    let mut between = vec![0u64; words];
    for x in 0..n {
        for y in le.iter_row(x) {
            if y == x {
                continue;
            }
            // strict up-set of x intersected with strict down-set of y
            let mut empty = true;
            for (k, slot) in between.iter_mut().enumerate() {
                *slot = le.row(x)[k] & ge.row(y)[k];
            }
            for z in ones(&between) {
                if z != x && z != y {
                    empty = false;
                    break;
                }
            }
            if empty {
                hasse.push((x, y));
            }
        }
    }
    hasse
}

impl FinitePoset {
    /// Strict constructor: `hasse` must be exactly the covering relation.
    pub fn from_hasse(size: usize, hasse: &[(usize, usize)], names: Option<Vec<String>>) -> Result<Self> {
        check_ids(size, hasse)?;
        check_names(size, &names)?;
        let le = closure(size, hasse)?;
        let mut upper = vec![Vec::new(); size];
        for &(a, b) in hasse {
            upper[a].push(b);
        }
        for (a, ups) in upper.iter_mut().enumerate() {
            ups.sort_unstable();
            for w in ups.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::NotReduced { lo: a, hi: w[0] });
                }
            }
            for &b in ups.iter() {
                if ups.iter().any(|&c| c != b && le.get(c, b)) {
                    return Err(Error::NotReduced { lo: a, hi: b });
                }
            }
        }
        Ok(Self::assemble(size, le, names))
    }

    /// Lenient constructor: any acyclic edge set; redundant edges are dropped.
    pub fn from_dag(size: usize, edges: &[(usize, usize)], names: Option<Vec<String>>) -> Result<Self> {
        check_ids(size, edges)?;
        check_names(size, &names)?;
        let le = closure(size, edges)?;
        Ok(Self::assemble(size, le, names))
    }

    /// Builds a poset from a relation `x ≤ y`; the reflexive-transitive
    /// closure is taken, and antisymmetry violations are reported as cycles.
    pub fn from_relation(order: &BitMatrix, names: Option<Vec<String>>) -> Result<Self> {
        let size = order.len();
        let edges: Vec<(usize, usize)> = (0..size)
            .flat_map(|x| order.iter_row(x).filter(move |&y| y != x).map(move |y| (x, y)))
            .collect();
        Self::from_dag(size, &edges, names)
    }

    fn assemble(size: usize, le: BitMatrix, names: Option<Vec<String>>) -> Self {
        let ge = le.transpose();
        let hasse = reduction(&le, &ge);
        let mut upper = vec![Vec::new(); size];
        let mut lower = vec![Vec::new(); size];
        for &(a, b) in &hasse {
            upper[a].push(b);
            lower[b].push(a);
        }
        FinitePoset {
            size,
            hasse,
            names,
            le,
            ge,
            upper,
            lower,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Covering pairs `(lo, hi)` in lexicographic order.
    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display label of `x`: its name if present, otherwise its id.
    pub fn label(&self, x: usize) -> String {
        match &self.names {
            Some(n) => n[x].clone(),
            None => x.to_string(),
        }
    }

    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.le.get(x, y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.le.get(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.le(x, y) || self.le(y, x)
    }

    pub fn is_cover(&self, x: usize, y: usize) -> bool {
        self.upper[x].binary_search(&y).is_ok()
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    /// Row `x` of `≤`: the principal filter of `x`.
    pub fn up_set(&self) -> &BitMatrix {
        &self.le
    }

    /// Row `x` of `≥`: the principal ideal of `x`.
    pub fn down_set(&self) -> &BitMatrix {
        &self.ge
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.size).filter(|&x| self.lower[x].is_empty()).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.size).filter(|&x| self.upper[x].is_empty()).collect()
    }

    /// The opposite poset on the same ids.
    pub fn dual(&self) -> FinitePoset {
        let mut hasse: Vec<(usize, usize)> = self.hasse.iter().map(|&(a, b)| (b, a)).collect();
        hasse.sort_unstable();
        FinitePoset {
            size: self.size,
            hasse,
            names: self.names.clone(),
            le: self.ge.clone(),
            ge: self.le.clone(),
            upper: self.lower.clone(),
            lower: self.upper.clone(),
        }
    }

    /// The sub-poset on `elements`, relabelled `0..elements.len()` in the
    /// given order.
    pub fn induced(&self, elements: &[usize]) -> FinitePoset {
        let order = BitMatrix::from_fn(elements.len(), |i, j| self.le(elements[i], elements[j]));
        let names = self
            .names
            .as_ref()
            .map(|n| elements.iter().map(|&x| n[x].clone()).collect());
        Self::assemble(elements.len(), order, names)
    }

    /// Greatest lower bound of `x` and `y` in the poset, if it exists.
    pub fn meet_of(&self, x: usize, y: usize) -> Option<usize> {
        bound_of(&self.ge, x, y)
    }

    /// Least upper bound of `x` and `y` in the poset, if it exists.
    pub fn join_of(&self, x: usize, y: usize) -> Option<usize> {
        bound_of(&self.le, x, y)
    }

    pub fn hats(&self) -> Vec<Hat> {
        let mut hats = Vec::new();
        for apex in 0..self.size {
            let lows = &self.lower[apex];
            for (i, &left) in lows.iter().enumerate() {
                for &right in &lows[i + 1..] {
                    hats.push(Hat { left, apex, right });
                }
            }
        }
        hats
    }

    /// Whether every cospan (or every hat) has a pullback.
    pub fn has_pullbacks(&self, mode: PullbackMode) -> bool {
        match mode {
            PullbackMode::HatsOnly => self.hats().iter().all(|h| self.meet_of(h.left, h.right).is_some()),
            PullbackMode::AllCospans => (0..self.size).all(|u| {
                (u + 1..self.size).all(|w| {
                    let bounded = self.le.row(u).iter().zip(self.le.row(w)).any(|(a, b)| a & b != 0);
                    !bounded || self.meet_of(u, w).is_some()
                })
            }),
        }
    }

    /// Connected components of the comparability graph, ordered by their
    /// smallest element.
    pub fn components(&self) -> Vec<Component> {
        let mut comp = vec![usize::MAX; self.size];
        let mut out = Vec::new();
        for start in 0..self.size {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            comp[start] = id;
            let mut elements = Vec::new();
            while let Some(x) = stack.pop() {
                elements.push(x);
                for &y in self.upper[x].iter().chain(&self.lower[x]) {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        stack.push(y);
                    }
                }
            }
            elements.sort_unstable();
            let minimal = elements.iter().copied().filter(|&x| self.lower[x].is_empty()).collect();
            let maximal = elements.iter().copied().filter(|&x| self.upper[x].is_empty()).collect();
            out.push(Component {
                elements,
                minimal,
                maximal,
            });
        }
        out
    }

    /// Length of the longest chain ending at each element.
    pub fn heights(&self) -> Vec<usize> {
        let topo = topological_order(self.size, &self.hasse).expect("poset is acyclic");
        let mut h = vec![0; self.size];
        for &x in &topo {
            for &y in &self.upper[x] {
                h[y] = h[y].max(h[x] + 1);
            }
        }
        h
    }

    pub(crate) fn topological(&self) -> Vec<usize> {
        topological_order(self.size, &self.hasse).expect("poset is acyclic")
    }
}

/// Element `m` of `rows[x] ∩ rows[y]` whose own row contains the whole
/// intersection (the extremal common bound), if any.
fn bound_of(rows: &BitMatrix, x: usize, y: usize) -> Option<usize> {
    let common: Vec<u64> = rows.row(x).iter().zip(rows.row(y)).map(|(a, b)| a & b).collect();
    let found = ones(&common).find(|&m| rows.row(m).iter().zip(&common).all(|(r, c)| r & c == *c));
    found
}

/// Arrow relation between a join-irreducible `j` and a meet-irreducible `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arrow {
    Up,
    Down,
    Both,
    None,
}

impl Arrow {
    pub fn is_up(self) -> bool {
        matches!(self, Arrow::Up | Arrow::Both)
    }

    pub fn is_down(self) -> bool {
        matches!(self, Arrow::Down | Arrow::Both)
    }
}

/// Join- and meet-irreducible elements with their unique lower (resp.
/// upper) cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Irreducibles {
    /// `(j, j_*)` pairs, sorted by `j`.
    pub join_irr: Vec<(usize, usize)>,
    /// `(m, m^*)` pairs, sorted by `m`.
    pub meet_irr: Vec<(usize, usize)>,
}

/// A finite lattice with precomputed meet and join tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    poset: FinitePoset,
    meet: Vec<u32>,
    join: Vec<u32>,
    bottom: usize,
    top: usize,
}

/// Validates a Hasse diagram as a lattice. `hasse` must already be the
/// transitive reduction.
pub fn build_lattice(size: usize, hasse: &[(usize, usize)], names: Option<Vec<String>>) -> Result<FiniteLattice> {
    if size == 0 {
        return Err(Error::NotLattice("the empty poset has no bottom".into()));
    }
    let poset = FinitePoset::from_hasse(size, hasse, names)?;
    FiniteLattice::from_poset(poset)
}

const UNSET: u32 = u32::MAX;

/// Fills one bound table by dynamic programming over `order` (bottom-up for
/// meets, top-down for joins) and checks every entry against the full
/// set of common bounds.
fn bound_table(p: &FinitePoset, dual: bool) -> Result<Vec<u32>> {
    let n = p.size;
    let (below, rows, order): (&Vec<Vec<usize>>, &BitMatrix, Vec<usize>) = if dual {
        let mut t = p.topological();
        t.reverse();
        (&p.upper, &p.le, t)
    } else {
        (&p.lower, &p.ge, p.topological())
    };
    let below_eq = |a: usize, b: usize| rows.get(b, a);
    let mut table = vec![UNSET; n * n];
    let what = if dual { "join" } else { "meet" };
    for &x in &order {
        for y in 0..n {
            let cand = if below_eq(x, y) {
                Some(x)
            } else if below_eq(y, x) {
                Some(y)
            } else {
                let mut best: Option<usize> = None;
                for &c in &below[x] {
                    let m = table[c * n + y];
                    if m == UNSET {
                        continue;
                    }
                    let m = m as usize;
                    best = match best {
                        Some(b) if below_eq(m, b) => Some(b),
                        _ => Some(m),
                    };
                }
                best
            };
            let ok = cand.filter(|&m| {
                below_eq(m, x)
                    && below_eq(m, y)
                    && rows
                        .row(x)
                        .iter()
                        .zip(rows.row(y))
                        .zip(rows.row(m))
                        .all(|((a, b), r)| a & b & !r == 0)
            });
            match ok {
                Some(m) => table[x * n + y] = m as u32,
                None => return Err(Error::NotLattice(format!("elements {x} and {y} have no {what}"))),
            }
        }
    }
    Ok(table)
}

impl FiniteLattice {
    pub fn from_poset(poset: FinitePoset) -> Result<Self> {
        if poset.size == 0 {
            return Err(Error::NotLattice("the empty poset has no bottom".into()));
        }
        let mins = poset.minimal();
        let maxs = poset.maximal();
        if mins.len() != 1 {
            return Err(Error::NotLattice(format!("{} minimal elements", mins.len())));
        }
        if maxs.len() != 1 {
            return Err(Error::NotLattice(format!("{} maximal elements", maxs.len())));
        }
        let meet = bound_table(&poset, false)?;
        let join = bound_table(&poset, true)?;
        Ok(FiniteLattice {
            bottom: mins[0],
            top: maxs[0],
            poset,
            meet,
            join,
        })
    }

    /// Lenient loader: reduces an arbitrary acyclic edge set first.
    pub fn from_dag(size: usize, edges: &[(usize, usize)], names: Option<Vec<String>>) -> Result<Self> {
        if size == 0 {
            return Err(Error::NotLattice("the empty poset has no bottom".into()));
        }
        Self::from_poset(FinitePoset::from_dag(size, edges, names)?)
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn size(&self) -> usize {
        self.poset.size
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.poset.le(x, y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.poset.lt(x, y)
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.size() + y] as usize
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.size() + y] as usize
    }

    fn check(&self, id: usize) -> Result<usize> {
        if id < self.size() {
            Ok(id)
        } else {
            Err(Error::Index { id, size: self.size() })
        }
    }

    pub fn checked_meet(&self, x: usize, y: usize) -> Result<usize> {
        Ok(self.meet(self.check(x)?, self.check(y)?))
    }

    pub fn checked_join(&self, x: usize, y: usize) -> Result<usize> {
        Ok(self.join(self.check(x)?, self.check(y)?))
    }

    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom, |a, b| self.join(a, b))
    }

    pub fn is_cover(&self, x: usize, y: usize) -> bool {
        self.poset.is_cover(x, y)
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        self.poset.upper_covers(x)
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        self.poset.lower_covers(x)
    }

    /// Hasse edges, i.e. the covers of the lattice, in lexicographic order.
    pub fn hasse(&self) -> &[(usize, usize)] {
        self.poset.hasse()
    }

    pub fn label(&self, x: usize) -> String {
        self.poset.label(x)
    }

    pub fn atoms(&self) -> &[usize] {
        self.upper_covers(self.bottom)
    }

    /// `Some(j_*)` when `j` is join-irreducible.
    pub fn lower_star(&self, j: usize) -> Option<usize> {
        match self.lower_covers(j) {
            [c] => Some(*c),
            _ => None,
        }
    }

    /// `Some(m^*)` when `m` is meet-irreducible.
    pub fn upper_star(&self, m: usize) -> Option<usize> {
        match self.upper_covers(m) {
            [c] => Some(*c),
            _ => None,
        }
    }

    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.size()).filter(|&x| self.lower_star(x).is_some()).collect()
    }

    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.size()).filter(|&x| self.upper_star(x).is_some()).collect()
    }

    pub fn irreducibles(&self) -> Irreducibles {
        Irreducibles {
            join_irr: (0..self.size())
                .filter_map(|j| self.lower_star(j).map(|s| (j, s)))
                .collect(),
            meet_irr: (0..self.size())
                .filter_map(|m| self.upper_star(m).map(|s| (m, s)))
                .collect(),
        }
    }

    /// Arrow relation without the irreducibility check; callers guarantee
    /// `j ∈ J(L)` and `m ∈ M(L)`.
    pub(crate) fn arrow_unchecked(&self, j: usize, j_star: usize, m: usize, m_star: usize) -> Arrow {
        if self.le(j, m) {
            return Arrow::None;
        }
        match (self.le(j, m_star), self.le(j_star, m)) {
            (true, true) => Arrow::Both,
            (true, false) => Arrow::Up,
            (false, true) => Arrow::Down,
            (false, false) => Arrow::None,
        }
    }

    pub fn arrow(&self, j: usize, m: usize) -> Result<Arrow> {
        self.check(j)?;
        self.check(m)?;
        let j_star = self.lower_star(j).ok_or(Error::NotIrreducible(j, "join-irreducible"))?;
        let m_star = self.upper_star(m).ok_or(Error::NotIrreducible(m, "meet-irreducible"))?;
        Ok(self.arrow_unchecked(j, j_star, m, m_star))
    }

    /// The order dual: same ids, order reversed, meet and join swapped.
    pub fn dual(&self) -> FiniteLattice {
        FiniteLattice {
            poset: self.poset.dual(),
            meet: self.join.clone(),
            join: self.meet.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }

    pub fn is_distributive(&self) -> bool {
        let n = self.size();
        (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))))
        })
    }
}

/// Free-function alias of [`FiniteLattice::dual`].
pub fn dualize(l: &FiniteLattice) -> FiniteLattice {
    l.dual()
}
