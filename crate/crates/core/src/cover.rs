//! The poset `Cov(L)` of covers of a lattice under the perspectivity order,
//! and the pushdown / pushup relations between covers.
//!
//! `γ ≤ δ` iff `γ₀ ≤ δ₀`, `γ₁ ≰ δ₀` and `γ₁ ≤ δ₁`, i.e. the interval
//! `[δ₀, δ₁]` transposes down onto `[γ₀, γ₁]`.

use std::cell::OnceCell;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::order::{Component, FiniteLattice, FinitePoset};

/// A covering pair `lo ⋖ hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Cover {
    pub lo: usize,
    pub hi: usize,
}

impl Cover {
    pub const fn new(lo: usize, hi: usize) -> Self {
        Cover { lo, hi }
    }
}

impl From<(usize, usize)> for Cover {
    fn from((lo, hi): (usize, usize)) -> Self {
        Cover { lo, hi }
    }
}

impl From<[usize; 2]> for Cover {
    fn from([lo, hi]: [usize; 2]) -> Self {
        Cover { lo, hi }
    }
}

impl From<Cover> for [usize; 2] {
    fn from(c: Cover) -> Self {
        [c.lo, c.hi]
    }
}

impl fmt::Display for Cover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

/// Perspectivity order on covers of `l`.
#[inline]
pub fn cover_le(l: &FiniteLattice, g: Cover, d: Cover) -> bool {
    l.le(g.lo, d.lo) && !l.le(g.hi, d.lo) && l.le(g.hi, d.hi)
}

pub fn check_cover(l: &FiniteLattice, c: Cover) -> Result<Cover> {
    if c.lo < l.size() && c.hi < l.size() && l.is_cover(c.lo, c.hi) {
        Ok(c)
    } else {
        Err(Error::InvalidCover(c))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Down,
    Up,
}

/// One step `from ⇘_along to` (or `from ⇗_along to`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PushStep {
    pub from: Cover,
    pub along: usize,
    pub to: Cover,
    pub direction: Direction,
}

/// All `γ` with `δ ⇘_u γ`: `u ≠ δ₀`, `γ₀ = u ∧ δ₀` and `γ₁ ≤ u ⋖ δ₁`.
pub fn pushdown_steps(l: &FiniteLattice, delta: Cover, u: usize) -> Result<Vec<Cover>> {
    check_cover(l, delta)?;
    if u >= l.size() || u == delta.lo || !l.is_cover(u, delta.hi) {
        return Err(Error::NotALowerCover { cover: delta, u });
    }
    Ok(pushdown_unchecked(l, delta, u))
}

fn pushdown_unchecked(l: &FiniteLattice, delta: Cover, u: usize) -> Vec<Cover> {
    let lo = l.meet(u, delta.lo);
    l.upper_covers(lo)
        .iter()
        .filter(|&&hi| l.le(hi, u))
        .map(|&hi| Cover { lo, hi })
        .collect()
}

/// All `δ` with `γ ⇗_w δ`: `w ≠ γ₁`, `δ₁ = w ∨ γ₁` and `γ₀ ⋖ w ≤ δ₀`.
pub fn pushup_steps(l: &FiniteLattice, gamma: Cover, w: usize) -> Result<Vec<Cover>> {
    check_cover(l, gamma)?;
    if w >= l.size() || w == gamma.hi || !l.is_cover(gamma.lo, w) {
        return Err(Error::NotAnUpperCover { cover: gamma, w });
    }
    Ok(pushup_unchecked(l, gamma, w))
}

fn pushup_unchecked(l: &FiniteLattice, gamma: Cover, w: usize) -> Vec<Cover> {
    let hi = l.join(w, gamma.hi);
    l.lower_covers(hi)
        .iter()
        .filter(|&&lo| l.le(w, lo))
        .map(|&lo| Cover { lo, hi })
        .collect()
}

/// Every instance `δ ⇘_u γ` of the pushdown relation, as `(δ, u, γ)`.
pub fn pushdown_relation(l: &FiniteLattice) -> Vec<(Cover, usize, Cover)> {
    let mut out = Vec::new();
    for &(lo, hi) in l.hasse() {
        let delta = Cover { lo, hi };
        for &u in l.lower_covers(hi) {
            if u != lo {
                for g in pushdown_unchecked(l, delta, u) {
                    out.push((delta, u, g));
                }
            }
        }
    }
    out
}

/// Every instance `γ ⇗_w δ` of the pushup relation, as `(γ, w, δ)`.
pub fn pushup_relation(l: &FiniteLattice) -> Vec<(Cover, usize, Cover)> {
    let mut out = Vec::new();
    for &(lo, hi) in l.hasse() {
        let gamma = Cover { lo, hi };
        for &w in l.upper_covers(lo) {
            if w != hi {
                for d in pushup_unchecked(l, gamma, w) {
                    out.push((gamma, w, d));
                }
            }
        }
    }
    out
}

/// `Cov(L)` with covers indexed in lexicographic `(lo, hi)` order.
pub struct CoverPoset<'a> {
    base: &'a FiniteLattice,
    covers: Vec<Cover>,
    index: HashMap<Cover, usize>,
    order: BitMatrix,
    poset: OnceCell<FinitePoset>,
    pushdown: OnceCell<bool>,
}

pub fn cover_poset(l: &FiniteLattice) -> CoverPoset<'_> {
    CoverPoset::new(l)
}

impl<'a> CoverPoset<'a> {
    pub fn new(base: &'a FiniteLattice) -> Self {
        let covers: Vec<Cover> = base.hasse().iter().map(|&c| c.into()).collect();
        let index = covers.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let order = BitMatrix::from_fn(covers.len(), |i, j| cover_le(base, covers[i], covers[j]));
        CoverPoset {
            base,
            covers,
            index,
            order,
            poset: OnceCell::new(),
            pushdown: OnceCell::new(),
        }
    }

    pub fn base(&self) -> &'a FiniteLattice {
        self.base
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    pub fn index_of(&self, c: Cover) -> Option<usize> {
        self.index.get(&c).copied()
    }

    pub(crate) fn idx(&self, c: Cover) -> Result<usize> {
        self.index_of(c).ok_or(Error::InvalidCover(c))
    }

    /// Order by cover index.
    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.order.get(i, j)
    }

    pub fn le_covers(&self, g: Cover, d: Cover) -> bool {
        cover_le(self.base, g, d)
    }

    pub fn order(&self) -> &BitMatrix {
        &self.order
    }

    /// Strict order pairs `(i, j)`, `covers[i] < covers[j]`, sorted.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| self.order.iter_row(i).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect()
    }

    /// `Cov(L)` as a [`FinitePoset`] over cover indices; names are `lo-hi`.
    pub fn poset(&self) -> &FinitePoset {
        self.poset.get_or_init(|| {
            let names = self
                .covers
                .iter()
                .map(|c| format!("{}-{}", self.base.label(c.lo), self.base.label(c.hi)))
                .collect();
            FinitePoset::from_relation(&self.order, Some(names))
                .expect("perspectivity order on a lattice is a partial order")
        })
    }

    /// Connected components of `Cov(L)`, each as sorted cover indices.
    pub fn components(&self) -> Vec<Component> {
        self.poset().components()
    }

    /// Indices of the covers in the component of `c`.
    pub fn component_of(&self, c: Cover) -> Result<Vec<usize>> {
        let i = self.idx(c)?;
        Ok(self
            .components()
            .into_iter()
            .find(|comp| comp.elements.contains(&i))
            .map(|comp| comp.elements)
            .unwrap_or_default())
    }

    /// Principal ideal of cover index `d`.
    fn below(&self, d: usize) -> Vec<usize> {
        (0..self.len()).filter(|&g| self.le(g, d)).collect()
    }

    /// `pr₀` is a Grothendieck fibration: `γ, ε ≤ δ` and `γ₀ ≤ ε₀` imply `γ ≤ ε`.
    pub fn is_pushdown(&self) -> bool {
        *self.pushdown.get_or_init(|| {
            let l = self.base;
            (0..self.len()).all(|d| {
                let down = self.below(d);
                down.iter().all(|&g| {
                    down.iter()
                        .all(|&e| !l.le(self.covers[g].lo, self.covers[e].lo) || self.le(g, e))
                })
            })
        })
    }

    /// Dual of [`is_pushdown`](Self::is_pushdown): `δ ≤ γ, ε` and `ε₁ ≤ γ₁`
    /// imply `ε ≤ γ`.
    pub fn is_pushup(&self) -> bool {
        let l = self.base;
        (0..self.len()).all(|d| {
            let up: Vec<usize> = (0..self.len()).filter(|&g| self.le(d, g)).collect();
            up.iter().all(|&g| {
                up.iter()
                    .all(|&e| !l.le(self.covers[e].hi, self.covers[g].hi) || self.le(e, g))
            })
        })
    }

    /// A `⇘`-path from `delta` down to `gamma`, or `None` when
    /// `gamma ≰ delta`. At each step the smallest admissible `u` is used.
    pub fn pushdown_path(&self, delta: Cover, gamma: Cover) -> Result<Option<Vec<PushStep>>> {
        let l = self.base;
        let (di, gi) = (self.idx(delta)?, self.idx(gamma)?);
        if !self.is_pushdown() {
            return Err(Error::NotPushdown);
        }
        if !self.le(gi, di) {
            return Ok(None);
        }
        let mut path = Vec::new();
        let mut cur = delta;
        while cur != gamma {
            let u = *l
                .lower_covers(cur.hi)
                .iter()
                .find(|&&u| u != cur.lo && l.le(gamma.hi, u))
                .expect("γ < current cover leaves room for a pusher");
            let next = match pushdown_unchecked(l, cur, u).as_slice() {
                [g] => *g,
                other => unreachable!("pushdown lattice with {} pushdowns", other.len()),
            };
            debug_assert!(self.le_covers(gamma, next));
            path.push(PushStep {
                from: cur,
                along: u,
                to: next,
                direction: Direction::Down,
            });
            cur = next;
        }
        Ok(Some(path))
    }
}

pub fn is_pushdown(l: &FiniteLattice) -> bool {
    CoverPoset::new(l).is_pushdown()
}

pub fn is_pushup(l: &FiniteLattice) -> bool {
    CoverPoset::new(l).is_pushup()
}

pub fn pushdown_path(l: &FiniteLattice, delta: Cover, gamma: Cover) -> Result<Option<Vec<PushStep>>> {
    CoverPoset::new(l).pushdown_path(delta, gamma)
}
