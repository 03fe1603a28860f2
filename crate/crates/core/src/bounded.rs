//! Join dependency, lower/upper boundedness, and strict facet labellings.

use std::collections::{BTreeMap, BTreeSet};

use petgraph::algo::{tarjan_scc, toposort};
use petgraph::graphmap::DiGraphMap;
use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::cover::{check_cover, pushdown_relation, pushdown_steps, pushup_relation, Cover};
use crate::error::{Error, Result};
use crate::order::FiniteLattice;
use crate::sd::{is_join_semidistributive_direct, is_semidistributive, unique_perspective_ji};

/// A relation over element ids with one witness per related pair.
pub type Witnessed<K, W> = BTreeMap<(K, K), W>;

/// The join-dependency relations over `J(L)`; witnesses are meet-irreducibles.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JoinDependency {
    pub join_irreducibles: Vec<usize>,
    /// `j D k`: `j ↗ m` and `k ↘ m`.
    pub d: Witnessed<usize, usize>,
    /// `j A k`: `j ↗ m` and `k ↕ m`.
    pub a: Witnessed<usize, usize>,
    /// `j B k`: `j ↕ m` and `k ↘ m`.
    pub b: Witnessed<usize, usize>,
    pub c: Witnessed<usize, usize>,
}

pub fn join_dependency(l: &FiniteLattice) -> JoinDependency {
    let irr = l.irreducibles();
    let mut dep = JoinDependency {
        join_irreducibles: irr.join_irr.iter().map(|&(j, _)| j).collect(),
        ..Default::default()
    };
    for &(m, ms) in &irr.meet_irr {
        let arrows: Vec<(usize, crate::order::Arrow)> = irr
            .join_irr
            .iter()
            .map(|&(j, js)| (j, l.arrow_unchecked(j, js, m, ms)))
            .collect();
        for &(j, aj) in &arrows {
            for &(k, ak) in &arrows {
                if j == k {
                    continue;
                }
                let both_k = ak.is_up() && ak.is_down();
                let both_j = aj.is_up() && aj.is_down();
                if aj.is_up() && ak.is_down() {
                    dep.d.entry((j, k)).or_insert(m);
                }
                if aj.is_up() && both_k {
                    dep.a.entry((j, k)).or_insert(m);
                    dep.c.entry((j, k)).or_insert(m);
                }
                if both_j && ak.is_down() {
                    dep.b.entry((j, k)).or_insert(m);
                    dep.c.entry((j, k)).or_insert(m);
                }
            }
        }
    }
    dep
}

fn graph<K: Copy + Ord + std::hash::Hash, W>(nodes: &[K], rel: &Witnessed<K, W>) -> DiGraphMap<K, ()> {
    let mut g = DiGraphMap::new();
    for &x in nodes {
        g.add_node(x);
    }
    for &(x, y) in rel.keys() {
        g.add_edge(x, y, ());
    }
    g
}

/// Whether a relation has a directed cycle, via strongly connected components.
pub fn has_cycle<K: Copy + Ord + std::hash::Hash, W>(nodes: &[K], rel: &Witnessed<K, W>) -> bool {
    assert!(rel.keys().all(|(x, y)| x != y), "dependency relations are irreflexive");
    tarjan_scc(&graph(nodes, rel)).iter().any(|scc| scc.len() > 1)
}

pub fn is_lower_bounded(l: &FiniteLattice) -> bool {
    let dep = join_dependency(l);
    !has_cycle(&dep.join_irreducibles, &dep.d)
}

/// Lower boundedness decided through the smaller relation `C = A ∪ B`.
pub fn is_lower_bounded_via_c(l: &FiniteLattice) -> bool {
    let dep = join_dependency(l);
    !has_cycle(&dep.join_irreducibles, &dep.c)
}

pub fn is_upper_bounded(l: &FiniteLattice) -> bool {
    is_lower_bounded(&l.dual())
}

pub fn is_bounded(l: &FiniteLattice) -> bool {
    is_lower_bounded(l) && is_upper_bounded(l)
}

/// `g(j)`: length of the longest `D`-path leaving `j`; `None` on a cycle.
pub fn longest_path_extension(dep: &JoinDependency) -> Option<BTreeMap<usize, u64>> {
    let g = graph(&dep.join_irreducibles, &dep.d);
    let order = toposort(&g, None).ok()?;
    let mut len: BTreeMap<usize, u64> = BTreeMap::new();
    for &j in order.iter().rev() {
        let best = g.neighbors(j).map(|k| len[&k] + 1).max().unwrap_or(0);
        len.insert(j, best);
    }
    Some(len)
}

/// `𝒜` and `ℬ` over `Cov(L)`, keyed `(γ, δ)` for `γ 𝒜 δ`, witnessed by `(ε, u)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoverDependency {
    /// `γ 𝒜 δ`: `ε ⇘_u δ` and `δ₁ ≤ γ₀ ⋖ γ₁ ≤ u`.
    pub cal_a: Witnessed<Cover, (Cover, usize)>,
    /// `γ ℬ δ`: `ε ⇗_u δ` and `u ≤ γ₀ ⋖ γ₁ ≤ δ₀`.
    pub cal_b: Witnessed<Cover, (Cover, usize)>,
}

fn all_covers(l: &FiniteLattice) -> Vec<Cover> {
    l.hasse().iter().map(|&e| Cover::from(e)).collect()
}

pub fn cover_dependency(l: &FiniteLattice) -> CoverDependency {
    let covers = all_covers(l);
    let mut dep = CoverDependency::default();
    for (eps, u, delta) in pushdown_relation(l) {
        for &g in &covers {
            if l.le(delta.hi, g.lo) && l.le(g.hi, u) {
                dep.cal_a.entry((g, delta)).or_insert((eps, u));
            }
        }
    }
    for (eps, u, delta) in pushup_relation(l) {
        for &g in &covers {
            if l.le(u, g.lo) && l.le(g.hi, delta.lo) {
                dep.cal_b.entry((g, delta)).or_insert((eps, u));
            }
        }
    }
    dep
}

/// A labelling `Cov(L) → ℕ`. Serializes as `[lo, hi, label]` triples.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<(usize, usize, u64)>", from = "Vec<(usize, usize, u64)>")]
pub struct FacetLabelling {
    pub labels: BTreeMap<Cover, u64>,
}

impl FacetLabelling {
    pub fn get(&self, c: Cover) -> Option<u64> {
        self.labels.get(&c).copied()
    }

    pub fn set(&mut self, c: Cover, v: u64) {
        self.labels.insert(c, v);
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cover, u64)> + '_ {
        self.labels.iter().map(|(&c, &v)| (c, v))
    }

    pub fn constant(l: &FiniteLattice, v: u64) -> Self {
        FacetLabelling {
            labels: all_covers(l).into_iter().map(|c| (c, v)).collect(),
        }
    }

    fn check_total(&self, l: &FiniteLattice) -> Result<()> {
        let covers: BTreeSet<Cover> = all_covers(l).into_iter().collect();
        if let Some(c) = covers.iter().find(|c| !self.labels.contains_key(c)) {
            return Err(Error::PartialLabelling(format!("no label for cover {c}")));
        }
        if let Some(c) = self.labels.keys().find(|c| !covers.contains(c)) {
            return Err(Error::PartialLabelling(format!("{c} is not a cover")));
        }
        Ok(())
    }
}

impl From<FacetLabelling> for Vec<(usize, usize, u64)> {
    fn from(f: FacetLabelling) -> Self {
        f.iter().map(|(c, v)| (c.lo, c.hi, v)).collect()
    }
}

impl From<Vec<(usize, usize, u64)>> for FacetLabelling {
    fn from(v: Vec<(usize, usize, u64)>) -> Self {
        v.into_iter().map(|(lo, hi, x)| (Cover::new(lo, hi), x)).collect()
    }
}

impl FromIterator<(Cover, u64)> for FacetLabelling {
    fn from_iter<I: IntoIterator<Item = (Cover, u64)>>(iter: I) -> Self {
        FacetLabelling {
            labels: iter.into_iter().collect(),
        }
    }
}

/// `f(δ) = g(j(δ))` with `g` the longest-path extension of `D`. `None`
/// when `L` is not join-semidistributive or `D` has a cycle.
pub fn construct_strict_facet_labelling(l: &FiniteLattice) -> Option<FacetLabelling> {
    if !is_join_semidistributive_direct(l) {
        return None;
    }
    let g = longest_path_extension(&join_dependency(l))?;
    all_covers(l)
        .into_iter()
        .map(|c| unique_perspective_ji(l, c).ok().map(|(j, _)| (c, g[&j])))
        .collect()
}

/// Solves the labelling constraints directly: covers related by `⇘` or `⇗`
/// are merged, then the strict `𝒜`/`ℬ` edges between classes must be
/// acyclic. Returns the longest-path solution, or `None` if none exists.
pub fn solve_strict_facet_labelling(l: &FiniteLattice) -> Option<FacetLabelling> {
    let covers = all_covers(l);
    let index: BTreeMap<Cover, usize> = covers.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut uf = UnionFind::<usize>::new(covers.len());
    for (d, _, g) in pushdown_relation(l).into_iter().chain(pushup_relation(l)) {
        uf.union(index[&d], index[&g]);
    }
    let class: Vec<usize> = (0..covers.len()).map(|i| uf.find(i)).collect();
    let dep = cover_dependency(l);
    let mut strict: Witnessed<usize, ()> = BTreeMap::new();
    // `δ 𝒜 γ` forces `f(γ) < f(δ)`: edge from δ's class to γ's class.
    for &(d, g) in dep.cal_a.keys().chain(dep.cal_b.keys()) {
        let (cd, cg) = (class[index[&d]], class[index[&g]]);
        if cd == cg {
            return None;
        }
        strict.insert((cd, cg), ());
    }
    let nodes: Vec<usize> = class.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let gr = graph(&nodes, &strict);
    let order = toposort(&gr, None).ok()?;
    let mut value: BTreeMap<usize, u64> = BTreeMap::new();
    for &c in order.iter().rev() {
        let v = gr.neighbors(c).map(|k| value[&k] + 1).max().unwrap_or(0);
        value.insert(c, v);
    }
    Some(covers.iter().enumerate().map(|(i, &c)| (c, value[&class[i]])).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Clause {
    /// `δ ⇘ γ` requires `f(γ) = f(δ)`.
    PushdownEqual,
    /// `δ 𝒜 γ` requires `f(γ) < f(δ)`.
    CalAStrict,
    /// `δ ⇗ γ` requires `f(γ) = f(δ)`.
    PushupEqual,
    /// `δ ℬ γ` requires `f(γ) < f(δ)`.
    CalBStrict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub clause: Clause,
    pub delta: Cover,
    pub gamma: Cover,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabellingCheck {
    pub violations: Vec<Violation>,
}

impl LabellingCheck {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn is_lower(&self) -> bool {
        self.violations
            .iter()
            .all(|v| !matches!(v.clause, Clause::PushdownEqual | Clause::CalAStrict))
    }

    pub fn is_upper(&self) -> bool {
        self.violations
            .iter()
            .all(|v| !matches!(v.clause, Clause::PushupEqual | Clause::CalBStrict))
    }
}

/// Checks the four clauses of a strict facet labelling exhaustively.
pub fn verify_strict_facet_labelling(l: &FiniteLattice, f: &FacetLabelling) -> Result<LabellingCheck> {
    f.check_total(l)?;
    let fv = |c: Cover| f.labels[&c];
    let mut violations = BTreeSet::new();
    for (d, _, g) in pushdown_relation(l) {
        if fv(g) != fv(d) {
            violations.insert(Violation {
                clause: Clause::PushdownEqual,
                delta: d,
                gamma: g,
            });
        }
    }
    for (d, _, g) in pushup_relation(l) {
        if fv(g) != fv(d) {
            violations.insert(Violation {
                clause: Clause::PushupEqual,
                delta: d,
                gamma: g,
            });
        }
    }
    let dep = cover_dependency(l);
    for (clause, rel) in [(Clause::CalAStrict, &dep.cal_a), (Clause::CalBStrict, &dep.cal_b)] {
        for &(d, g) in rel.keys() {
            if fv(g) >= fv(d) {
                violations.insert(Violation {
                    clause,
                    delta: d,
                    gamma: g,
                });
            }
        }
    }
    Ok(LabellingCheck {
        violations: violations.into_iter().collect(),
    })
}

/// Distinct covers with `δ₁ = δ'₁`, `γ₀ = γ'₀`, `δ ⇘_{δ'₀} γ` and `δ' ⇘_{δ₀} γ'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    pub delta: Cover,
    pub delta_p: Cover,
    pub gamma: Cover,
    pub gamma_p: Cover,
    /// Covers `ε` with `γ₁ ≤ ε₀ ⋖ ε₁ ≤ δ'₀` or `γ'₁ ≤ ε₀ ⋖ ε₁ ≤ δ₀`.
    pub interiors: Vec<Cover>,
}

pub fn facets(l: &FiniteLattice) -> Vec<Facet> {
    let covers = all_covers(l);
    let mut out = Vec::new();
    for (i, &d) in covers.iter().enumerate() {
        for &dp in &covers[i + 1..] {
            if dp.hi != d.hi {
                continue;
            }
            let gs = pushdown_steps(l, d, dp.lo).expect("δ'₀ is a lower cover of δ₁");
            let gps = pushdown_steps(l, dp, d.lo).expect("δ₀ is a lower cover of δ'₁");
            for &g in &gs {
                for &gp in &gps {
                    let distinct: BTreeSet<Cover> = [d, dp, g, gp].into_iter().collect();
                    if g.lo != gp.lo || distinct.len() < 4 {
                        continue;
                    }
                    let interiors = covers
                        .iter()
                        .copied()
                        .filter(|e| (l.le(g.hi, e.lo) && l.le(e.hi, dp.lo)) || (l.le(gp.hi, e.lo) && l.le(e.hi, d.lo)))
                        .collect();
                    out.push(Facet {
                        delta: d,
                        delta_p: dp,
                        gamma: g,
                        gamma_p: gp,
                        interiors,
                    });
                }
            }
        }
    }
    out
}

/// The facet form: `f(δ) = f(γ)`, `f(δ') = f(γ')`, and every interior
/// cover is labelled above both `f(δ')` and `f(γ)`.
pub fn verify_facet_form(l: &FiniteLattice, f: &FacetLabelling) -> Result<bool> {
    if !is_semidistributive(l) {
        return Err(Error::NotSemidistributive);
    }
    f.check_total(l)?;
    let fv = |c: Cover| f.labels[&c];
    Ok(facets(l).iter().all(|fc| {
        fv(fc.delta) == fv(fc.gamma)
            && fv(fc.delta_p) == fv(fc.gamma_p)
            && fc
                .interiors
                .iter()
                .all(|&e| fv(e) > fv(fc.delta_p) && fv(e) > fv(fc.gamma))
    }))
}

/// The join-irreducible `j(δ)` of each cover, as used by the construction.
pub fn perspective_ji_map(l: &FiniteLattice) -> Result<BTreeMap<Cover, usize>> {
    all_covers(l)
        .into_iter()
        .map(|c| {
            check_cover(l, c)?;
            unique_perspective_ji(l, c).map(|(j, _)| (c, j))
        })
        .collect()
}
