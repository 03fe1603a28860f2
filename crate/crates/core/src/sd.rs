//! Semidistributivity, decided directly and through the poset of covers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cover::{pushdown_relation, Cover, CoverPoset};
use crate::error::{Error, Result};
use crate::order::{FiniteLattice, PullbackMode};

/// `x ∨ y = x ∨ z ⇒ x ∨ (y ∧ z) = x ∨ y`, over all ordered triples.
pub fn is_join_semidistributive_direct(l: &FiniteLattice) -> bool {
    let n = l.size();
    (0..n).all(|x| {
        (0..n).all(|y| {
            let xy = l.join(x, y);
            (0..n).all(|z| l.join(x, z) != xy || l.join(x, l.meet(y, z)) == xy)
        })
    })
}

/// `x ∧ y = x ∧ z ⇒ x ∧ (y ∨ z) = x ∧ y`, over all ordered triples.
pub fn is_meet_semidistributive_direct(l: &FiniteLattice) -> bool {
    let n = l.size();
    (0..n).all(|x| {
        (0..n).all(|y| {
            let xy = l.meet(x, y);
            (0..n).all(|z| l.meet(x, z) != xy || l.meet(x, l.join(y, z)) == xy)
        })
    })
}

pub fn is_semidistributive(l: &FiniteLattice) -> bool {
    is_join_semidistributive_direct(l) && is_meet_semidistributive_direct(l)
}

/// Whether `pr₀ : Cov(L) → L` creates pullbacks: it is a fibration, and any
/// `γ, δ ≤ ε` have some `β ≤ γ, δ` with `β₀ = γ₀ ∧ δ₀`.
pub fn creates_pullbacks_pr0(l: &FiniteLattice) -> bool {
    let cp = CoverPoset::new(l);
    cp.is_pushdown() && lower_bounds_over_meets(&cp)
}

fn lower_bounds_over_meets(cp: &CoverPoset<'_>) -> bool {
    let l = cp.base();
    let covers = cp.covers();
    let down = cp.poset().down_set();
    let up = cp.poset().up_set();
    (0..cp.len()).all(|g| {
        (g..cp.len()).all(|d| {
            let bounded = up.row(g).iter().zip(up.row(d)).any(|(a, b)| a & b != 0);
            if !bounded {
                return true;
            }
            let target = l.meet(covers[g].lo, covers[d].lo);
            down.row(g).iter().zip(down.row(d)).enumerate().any(|(k, (a, b))| {
                let mut w = a & b;
                while w != 0 {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    if covers[k * 64 + t].lo == target {
                        return true;
                    }
                }
                false
            })
        })
    })
}

/// The join-irreducible `j` with `(j_*, j) ≤ γ`, returned as `(j, j_*)`.
/// Exactly one exists for every cover when `L` is join-semidistributive.
pub fn unique_perspective_ji(l: &FiniteLattice, gamma: Cover) -> Result<(usize, usize)> {
    crate::cover::check_cover(l, gamma)?;
    let candidates: Vec<(usize, usize)> = l
        .irreducibles()
        .join_irr
        .into_iter()
        .filter(|&(j, js)| crate::cover::cover_le(l, Cover::new(js, j), gamma))
        .collect();
    match candidates.as_slice() {
        [one] => Ok(*one),
        _ => Err(Error::Ambiguity {
            cover: gamma,
            candidates: candidates.iter().map(|&(j, _)| j).collect(),
        }),
    }
}

/// Every maximal element of `Cov(L)` has a least element below it.
pub fn least_below_every_maximal(cp: &CoverPoset<'_>) -> bool {
    let p = cp.poset();
    p.maximal().into_iter().all(|mu| {
        let below: Vec<usize> = p.down_set().iter_row(mu).collect();
        below.iter().any(|&g| below.iter().all(|&d| p.le(g, d)))
    })
}

/// (1) `δ ⇘ γ ⇒ γ ⋖ δ` in `Cov(L)`.
fn pushdowns_are_covers(cp: &CoverPoset<'_>, rel: &[(Cover, usize, Cover)]) -> bool {
    let p = cp.poset();
    rel.iter().all(|&(d, _, g)| {
        let (di, gi) = (cp.index_of(d).unwrap(), cp.index_of(g).unwrap());
        p.is_cover(gi, di)
    })
}

/// (2) `u ≠ v`, `δ ⇘_u γ`, `δ ⇘_v ε` ⇒ `γ₀` and `ε₀` are incomparable.
fn distinct_pushers_incomparable(l: &FiniteLattice, rel: &[(Cover, usize, Cover)]) -> bool {
    rel.iter().all(|&(d, u, g)| {
        rel.iter()
            .filter(|&&(d2, v, _)| d2 == d && v != u)
            .all(|&(_, _, e)| !l.le(g.lo, e.lo) && !l.le(e.lo, g.lo))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SdReport {
    pub sd_join_direct: bool,
    pub sd_meet_direct: bool,
    pub creates_pullbacks: bool,
    /// Whether the lattice is pushdown; the five conditions are only
    /// claimed to agree in that case.
    pub pushdown: bool,
    pub pushjsemid_conditions: [bool; 5],
    pub unique_ji_per_max: bool,
}

impl SdReport {
    /// On pushdown lattices all five conditions must agree.
    pub fn conditions_agree(&self) -> bool {
        let c = self.pushjsemid_conditions;
        c.iter().all(|&b| b == c[0])
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SdReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sd-join: {}", self.sd_join_direct)?;
        writeln!(f, "sd-meet: {}", self.sd_meet_direct)?;
        writeln!(f, "creates-pullbacks: {}", self.creates_pullbacks)?;
        writeln!(f, "pushdown: {}", self.pushdown)?;
        let names = [
            "pushdown-steps-are-covers",
            "distinct-pushers-incomparable",
            "hats-have-pullbacks",
            "cov-has-pullbacks",
            "sd-join",
        ];
        for (i, (name, v)) in names.iter().zip(self.pushjsemid_conditions).enumerate() {
            writeln!(f, "condition-{}-{}: {}", i + 1, name, v)?;
        }
        writeln!(f, "least-cover-below-each-maximal: {}", self.unique_ji_per_max)
    }
}

pub fn sd_report(l: &FiniteLattice) -> SdReport {
    let cp = CoverPoset::new(l);
    let rel = pushdown_relation(l);
    let sd_join = is_join_semidistributive_direct(l);
    let pushdown = cp.is_pushdown();
    SdReport {
        sd_join_direct: sd_join,
        sd_meet_direct: is_meet_semidistributive_direct(l),
        creates_pullbacks: pushdown && lower_bounds_over_meets(&cp),
        pushdown,
        pushjsemid_conditions: [
            pushdowns_are_covers(&cp, &rel),
            distinct_pushers_incomparable(l, &rel),
            cp.poset().has_pullbacks(PullbackMode::HatsOnly),
            cp.poset().has_pullbacks(PullbackMode::AllCospans),
            sd_join,
        ],
        unique_ji_per_max: least_below_every_maximal(&cp),
    }
}
