//! Poset isomorphism by colour refinement and backtracking, and regularity
//! of semidistributive lattices.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cover::Cover;
use crate::derived::derived_lattice;
use crate::error::{Error, Result};
use crate::order::{FiniteLattice, FinitePoset};
use crate::sd::is_semidistributive;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoResult {
    pub found: bool,
    /// `mapping[x]` is the image in the second poset of element `x` of the first.
    pub mapping: Option<Vec<usize>>,
}

fn depths(p: &FinitePoset) -> Vec<usize> {
    p.dual().heights()
}

/// Colours both posets with a shared palette until the partition is stable.
fn refine(p: &FinitePoset, q: &FinitePoset) -> (Vec<usize>, Vec<usize>) {
    let seed = |x: &FinitePoset| -> Vec<Vec<usize>> {
        let (h, d) = (x.heights(), depths(x));
        (0..x.size())
            .map(|v| {
                vec![
                    x.lower_covers(v).len(),
                    x.upper_covers(v).len(),
                    h[v],
                    d[v],
                    x.down_set().row_count(v),
                    x.up_set().row_count(v),
                ]
            })
            .collect()
    };
    let mut palette = BTreeMap::new();
    let colour = |keys: Vec<Vec<usize>>, palette: &mut BTreeMap<Vec<usize>, usize>| -> Vec<usize> {
        keys.into_iter()
            .map(|k| {
                let next = palette.len();
                *palette.entry(k).or_insert(next)
            })
            .collect()
    };
    let mut cp = colour(seed(p), &mut palette);
    let mut cq = colour(seed(q), &mut palette);
    let classes = |c: &[usize], d: &[usize]| {
        let mut all: Vec<usize> = c.iter().chain(d).copied().collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    };
    let mut count = classes(&cp, &cq);
    loop {
        let key = |x: &FinitePoset, c: &[usize], v: usize| -> Vec<usize> {
            let mut up: Vec<usize> = x.upper_covers(v).iter().map(|&w| c[w]).collect();
            let mut down: Vec<usize> = x.lower_covers(v).iter().map(|&w| c[w]).collect();
            up.sort_unstable();
            down.sort_unstable();
            let mut k = vec![c[v], up.len()];
            k.extend(up);
            k.push(usize::MAX);
            k.extend(down);
            k
        };
        let mut next_palette = BTreeMap::new();
        let kp = (0..p.size()).map(|v| key(p, &cp, v)).collect();
        let kq = (0..q.size()).map(|v| key(q, &cq, v)).collect();
        let np = colour(kp, &mut next_palette);
        let nq = colour(kq, &mut next_palette);
        let n = classes(&np, &nq);
        cp = np;
        cq = nq;
        if n == count {
            break;
        }
        count = n;
    }
    (cp, cq)
}

/// Decides whether two finite posets are isomorphic; returns a witness.
pub fn are_isomorphic(p: &FinitePoset, q: &FinitePoset) -> IsoResult {
    let no = IsoResult {
        found: false,
        mapping: None,
    };
    if p.size() != q.size() || p.hasse().len() != q.hasse().len() {
        return no;
    }
    let (cp, cq) = refine(p, q);
    let histogram = |c: &[usize]| {
        let mut h = c.to_vec();
        h.sort_unstable();
        h
    };
    if histogram(&cp) != histogram(&cq) {
        return no;
    }
    // Elements of `p` in order of height, so each new element has assigned
    // neighbours below it whenever possible.
    let h = p.heights();
    let mut order: Vec<usize> = (0..p.size()).collect();
    order.sort_by_key(|&v| (h[v], v));
    let mut candidates: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (y, &c) in cq.iter().enumerate() {
        candidates.entry(c).or_default().push(y);
    }
    let mut map = vec![usize::MAX; p.size()];
    let mut used = vec![false; q.size()];
    if search(p, q, &order, 0, &cp, &candidates, &mut map, &mut used) {
        IsoResult {
            found: true,
            mapping: Some(map),
        }
    } else {
        no
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    p: &FinitePoset,
    q: &FinitePoset,
    order: &[usize],
    depth: usize,
    cp: &[usize],
    candidates: &BTreeMap<usize, Vec<usize>>,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(depth) else {
        return true;
    };
    for &y in &candidates[&cp[x]] {
        if used[y] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&a| {
            let b = map[a];
            p.le(a, x) == q.le(b, y) && p.le(x, a) == q.le(y, b)
        });
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if search(p, q, order, depth + 1, cp, candidates, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}

/// A bijection preserving and reflecting the order.
pub fn is_isomorphism(p: &FinitePoset, q: &FinitePoset, map: &[usize]) -> bool {
    if p.size() != q.size() || map.len() != p.size() {
        return false;
    }
    let mut seen = vec![false; q.size()];
    for &y in map {
        if y >= q.size() || std::mem::replace(&mut seen[y], true) {
            return false;
        }
    }
    (0..p.size()).all(|a| (0..p.size()).all(|b| p.le(a, b) == q.le(map[a], map[b])))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomSummary {
    pub cover: Cover,
    pub size: usize,
    pub edges: usize,
    pub height: usize,
    pub join_irreducibles: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityReport {
    pub regular: bool,
    pub atoms: Vec<AtomSummary>,
    /// Two atomic covers whose derived lattices are not isomorphic.
    pub witness: Option<(Cover, Cover)>,
}

/// Whether all `Cov(L, (⊥, a))` for atoms `a` are isomorphic.
pub fn is_regular(l: &FiniteLattice) -> Result<RegularityReport> {
    if !is_semidistributive(l) {
        return Err(Error::NotSemidistributive);
    }
    let derived = l
        .atoms()
        .iter()
        .map(|&a| derived_lattice(l, Cover::new(l.bottom(), a)))
        .collect::<Result<Vec<_>>>()?;
    let atoms = derived
        .iter()
        .map(|d| AtomSummary {
            cover: d.seed,
            size: d.lattice.size(),
            edges: d.lattice.hasse().len(),
            height: d.lattice.poset().heights()[d.lattice.top()],
            join_irreducibles: d.lattice.join_irreducibles().len(),
        })
        .collect();
    let witness = derived.iter().skip(1).find_map(|d| {
        let first = &derived[0];
        (!are_isomorphic(first.lattice.poset(), d.lattice.poset()).found).then_some((first.seed, d.seed))
    });
    Ok(RegularityReport {
        regular: witness.is_none(),
        atoms,
        witness,
    })
}
