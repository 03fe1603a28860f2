use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{check_size, ordinal_merge, ordinal_skip, DEFAULT_ELEMENT_CAP};
use crate::error::{Error, Result};
use crate::order::{build_lattice, FiniteLattice};

/// A bracketing vector `v ∈ [n]^n`: `i ≤ v_i`, and `i < j ≤ v_i ⇒ v_j ≤ v_i`.
/// Values and indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct BracketingVector(Vec<usize>);

impl TryFrom<Vec<usize>> for BracketingVector {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        BracketingVector::new(v)
    }
}

impl From<BracketingVector> for Vec<usize> {
    fn from(v: BracketingVector) -> Self {
        v.0
    }
}

impl BracketingVector {
    pub fn new(v: Vec<usize>) -> Result<Self> {
        let n = v.len();
        for i in 1..=n {
            let vi = v[i - 1];
            if vi < i || vi > n {
                return Err(Error::Invalid(format!("{v:?}: entry {i} is {vi}")));
            }
            for j in i + 1..=vi {
                if v[j - 1] > vi {
                    return Err(Error::Invalid(format!(
                        "{v:?}: v_{j} > v_{i} although {i} < {j} ≤ v_{i}"
                    )));
                }
            }
        }
        Ok(BracketingVector(v))
    }

    /// `⊥ = (1, 2, …, n)`.
    pub fn bottom(n: usize) -> Self {
        BracketingVector((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `v_i`, 1-based.
    pub fn get(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// Pointwise order.
    pub fn le(&self, other: &BracketingVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_split(&self, k: usize) -> bool {
        let n = self.len();
        if k == 0 || k >= n || self.get(k) >= n {
            return false;
        }
        let target = self.get(self.get(k) + 1);
        (1..k).all(|i| !(k <= self.get(i)) || target <= self.get(i))
    }

    /// All bracketing vectors of length `n`, lexicographically.
    pub fn all(n: usize) -> Vec<BracketingVector> {
        fn rec(v: &mut Vec<usize>, n: usize, out: &mut Vec<BracketingVector>) {
            let j = v.len() + 1;
            if j > n {
                out.push(BracketingVector(v.clone()));
                return;
            }
            // Every earlier i with j ≤ v_i bounds v_j from above.
            let bound = (1..j).filter(|&i| j <= v[i - 1]).map(|i| v[i - 1]).min().unwrap_or(n);
            for x in j..=bound {
                v.push(x);
                rec(v, n, out);
                v.pop();
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::with_capacity(n), n, &mut out);
        out
    }
}

impl fmt::Display for BracketingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for BracketingVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let v: Option<Vec<usize>> = if inner.trim().is_empty() {
            Some(Vec::new())
        } else {
            inner.split(',').map(|t| t.trim().parse().ok()).collect()
        };
        BracketingVector::new(v.ok_or_else(|| Error::Invalid(format!("cannot read bracketing vector {s:?}")))?)
    }
}

pub fn splits(v: &BracketingVector) -> BTreeSet<usize> {
    (1..v.len()).filter(|&k| v.is_split(k)).collect()
}

/// `v^k`: replaces `v_k` with `v_{v_k + 1}`.
pub fn bracket_cover(v: &BracketingVector, k: usize) -> Result<BracketingVector> {
    if !v.is_split(k) {
        return Err(Error::NotASplit {
            vector: v.to_string(),
            k,
        });
    }
    let mut w = v.0.clone();
    w[k - 1] = v.get(v.get(k) + 1);
    Ok(BracketingVector(w))
}

fn catalan(n: usize) -> Option<usize> {
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c.checked_mul(2 * (2 * i + 1))? / (i + 2);
    }
    usize::try_from(c).ok()
}

/// The Tamari lattice of bracketing vectors of length `n`, lexicographic ids.
pub fn tamari(n: usize) -> Result<FiniteLattice> {
    tamari_with_cap(n, DEFAULT_ELEMENT_CAP)
}

pub fn tamari_with_cap(n: usize, cap: usize) -> Result<FiniteLattice> {
    if n == 0 {
        return Err(Error::Invalid("Tamari lattices start at n = 1".into()));
    }
    check_size(catalan(n), cap)?;
    let all = BracketingVector::all(n);
    let index: HashMap<&BracketingVector, usize> = all.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut edges = Vec::new();
    for (id, v) in all.iter().enumerate() {
        for k in splits(v) {
            edges.push((id, index[&bracket_cover(v, k)?]));
        }
    }
    edges.sort_unstable();
    let names = all.iter().map(|v| v.to_string()).collect();
    build_lattice(all.len(), &edges, Some(names))
}

fn not_perspective(v: &BracketingVector, k: usize) -> Error {
    Error::NotPerspective {
        k,
        detail: format!("({v},{k}) needs k to be a split with v_k = k"),
    }
}

/// `ψ(v, k) = merge_k ∘ v ∘ skip_k`, for covers `(v, k)` perspective to `(⊥, k)`.
pub fn psi_tamari(v: &BracketingVector, k: usize) -> Result<BracketingVector> {
    if !v.is_split(k) || v.get(k) != k {
        return Err(not_perspective(v, k));
    }
    let n = v.len();
    let skip = ordinal_skip(k, n)?;
    let merge = ordinal_merge(k, n)?;
    BracketingVector::new((1..n).map(|i| merge.apply(v.get(skip.apply(i)))).collect())
}

/// Inverse of [`psi_tamari`] for fixed `k`.
pub fn psi_tamari_inverse(k: usize, w: &BracketingVector) -> Result<(BracketingVector, usize)> {
    let n = w.len() + 1;
    if k == 0 || k >= n {
        return Err(Error::NotPerspective {
            k,
            detail: format!("k must lie in 1..{}", n - 1),
        });
    }
    let skip = ordinal_skip(k, n)?;
    let merge = ordinal_merge(k, n)?;
    let v = (1..=n)
        .map(|i| if i == k { k } else { skip.apply(w.get(merge.apply(i))) })
        .collect();
    let v = BracketingVector::new(v)?;
    if !v.is_split(k) {
        return Err(not_perspective(&v, k));
    }
    Ok((v, k))
}
