//! Lattice congruences, their least representatives, and quotients.

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::FiniteLattice;

/// A partition of the element ids of a lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Congruence {
    /// Classes sorted internally, and ordered by their least id.
    classes: Vec<Vec<usize>>,
    #[serde(skip)]
    class_of: Vec<usize>,
}

impl Congruence {
    /// Builds a partition from class lists; checks it covers `0..size` exactly once.
    pub fn from_classes(size: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut class_of = vec![usize::MAX; size];
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                if x >= size {
                    return Err(Error::Index { id: x, size });
                }
                if class_of[x] != usize::MAX {
                    return Err(Error::Invalid(format!("element {x} lies in two classes")));
                }
                class_of[x] = i;
            }
        }
        if let Some(x) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::Invalid(format!("element {x} lies in no class")));
        }
        Ok(Self::normalize(class_of))
    }

    fn normalize(labels: Vec<usize>) -> Self {
        let mut renumber = std::collections::HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![0; labels.len()];
        for (x, &lab) in labels.iter().enumerate() {
            let id = *renumber.entry(lab).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[id].push(x);
            class_of[x] = id;
        }
        Congruence { classes, class_of }
    }

    pub fn identity(l: &FiniteLattice) -> Self {
        Self::normalize((0..l.size()).collect())
    }

    pub fn full(l: &FiniteLattice) -> Self {
        Self::normalize(vec![0; l.size()])
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn same(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Compatibility with `∧` and `∨`, checked over all pairs and all `z`.
pub fn is_congruence(l: &FiniteLattice, theta: &Congruence) -> bool {
    if theta.class_of.len() != l.size() {
        return false;
    }
    theta.classes.iter().all(|c| {
        c.windows(2).all(|w| {
            let (x, y) = (w[0], w[1]);
            (0..l.size()).all(|z| theta.same(l.meet(x, z), l.meet(y, z)) && theta.same(l.join(x, z), l.join(y, z)))
        })
    })
}

/// The least congruence identifying every given pair.
pub fn congruence_generated(l: &FiniteLattice, pairs: &[(usize, usize)]) -> Result<Congruence> {
    let n = l.size();
    let mut uf = UnionFind::<usize>::new(n);
    for &(x, y) in pairs {
        for v in [x, y] {
            if v >= n {
                return Err(Error::Index { id: v, size: n });
            }
        }
        uf.union(x, y);
    }
    loop {
        let mut changed = false;
        for x in 0..n {
            let r = uf.find(x);
            if r == x {
                continue;
            }
            for z in 0..n {
                changed |= uf.union(l.meet(x, z), l.meet(r, z));
                changed |= uf.union(l.join(x, z), l.join(r, z));
            }
        }
        if !changed {
            break;
        }
    }
    Ok(Congruence::normalize(uf.into_labeling()))
}

/// `μ_θ(x) = ⋁ { j ∈ J(L) : j ≤ x, (j_*, j) ∉ θ }`, the least element of `[x]_θ`.
pub fn mu_min(l: &FiniteLattice, theta: &Congruence, x: usize) -> usize {
    l.join_all(
        l.irreducibles()
            .join_irr
            .into_iter()
            .filter(|&(j, js)| l.le(j, x) && !theta.same(js, j))
            .map(|(j, _)| j),
    )
}

/// The quotient `L/θ`, realised on the least representatives of the classes.
pub fn quotient(l: &FiniteLattice, theta: &Congruence) -> Result<FiniteLattice> {
    if !is_congruence(l, theta) {
        return Err(Error::NotACongruence(format!("{:?}", theta.classes)));
    }
    let mut reps: Vec<usize> = (0..l.size()).map(|x| mu_min(l, theta, x)).collect();
    reps.sort_unstable();
    reps.dedup();
    FiniteLattice::from_poset(l.poset().induced(&reps))
}
