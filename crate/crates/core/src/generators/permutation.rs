use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{check_size, ordinal_merge, ordinal_skip, DEFAULT_ELEMENT_CAP};
use crate::error::{Error, Result};
use crate::order::{build_lattice, FiniteLattice};

/// A permutation of `[n]` in one-line notation, values 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Invalid(format!("{word:?} is not a permutation of 1..{n}")));
            }
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w_i`, 1-based.
    pub fn get(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    /// Positions `i` with `w_i < w_{i+1}`.
    pub fn increases(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.get(i) < self.get(i + 1)).collect()
    }

    /// `w ∘ σ^i`: swaps positions `i` and `i+1`.
    pub fn swap_positions(&self, i: usize) -> Permutation {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Permutation(w)
    }

    /// Inversions as value pairs `(a, b)`, `a < b`, with `b` left of `a`.
    pub fn inversions(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for p in 0..self.len() {
            for q in p + 1..self.len() {
                if self.0[p] > self.0[q] {
                    out.insert((self.0[q], self.0[p]));
                }
            }
        }
        out
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Permutation(cur.clone()));
        }
        out
    }
}

/// Advances to the lexicographic successor; works on multisets as well.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() >= 10 { "," } else { "" };
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        let word = word.ok_or_else(|| Error::Invalid(format!("cannot read permutation {s:?}")))?;
        Permutation::new(word)
    }
}

fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

/// The weak order on `S_n`; element ids follow lexicographic order.
pub fn permutohedron(n: usize) -> Result<FiniteLattice> {
    permutohedron_with_cap(n, DEFAULT_ELEMENT_CAP)
}

pub fn permutohedron_with_cap(n: usize, cap: usize) -> Result<FiniteLattice> {
    if n == 0 {
        return Err(Error::Invalid("permutohedra start at n = 1".into()));
    }
    check_size(factorial(n), cap)?;
    let perms = Permutation::all(n);
    let index: HashMap<&Permutation, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut edges = Vec::new();
    for (id, w) in perms.iter().enumerate() {
        for i in w.increases() {
            edges.push((id, index[&w.swap_positions(i)]));
        }
    }
    edges.sort_unstable();
    let names = perms.iter().map(|p| p.to_string()).collect();
    build_lattice(perms.len(), &edges, Some(names))
}

/// `ψ^k(w, i) = merge_k ∘ w ∘ skip_i`, defined when the cover
/// `w ⋖ w∘σ^i` swaps the values `k` and `k+1`.
pub fn psi_perm(k: usize, w: &Permutation, i: usize) -> Result<Permutation> {
    let n = w.len();
    if i == 0 || i >= n || w.get(i) != k || w.get(i + 1) != k + 1 {
        return Err(Error::NotPerspective {
            k,
            detail: format!("({w},{i}) does not swap {k} and {}", k + 1),
        });
    }
    let skip = ordinal_skip(i, n)?;
    let merge = ordinal_merge(k, n)?;
    Permutation::new((1..n).map(|j| merge.apply(w.get(skip.apply(j)))).collect())
}

/// Inverse of [`psi_perm`] for fixed `k`: returns the unique `(w, i)`.
pub fn psi_perm_inverse(k: usize, u: &Permutation) -> Result<(Permutation, usize)> {
    let n = u.len() + 1;
    if k == 0 || k >= n {
        return Err(Error::NotPerspective {
            k,
            detail: format!("k must lie in 1..{}", n - 1),
        });
    }
    let i = u
        .word()
        .iter()
        .position(|&x| x == k)
        .map(|p| p + 1)
        .expect("k is a value of u");
    let skip = ordinal_skip(k, n)?;
    let merge = ordinal_merge(i, n)?;
    let w = (1..=n)
        .map(|j| if j == i { k } else { skip.apply(u.get(merge.apply(j))) })
        .collect();
    Ok((Permutation::new(w)?, i))
}
