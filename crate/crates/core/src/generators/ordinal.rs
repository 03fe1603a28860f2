use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The two generating maps of the category of finite ordinals `[n] = {1..n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrdinalMap {
    /// The order-preserving injection `[n-1] → [n]` missing `i`.
    Skip { i: usize, n: usize },
    /// The order-preserving surjection `[n] → [n-1]` identifying `k` and `k+1`.
    Merge { k: usize, n: usize },
}

pub fn ordinal_skip(i: usize, n: usize) -> Result<OrdinalMap> {
    if i == 0 || i > n {
        return Err(Error::Index { id: i, size: n });
    }
    Ok(OrdinalMap::Skip { i, n })
}

pub fn ordinal_merge(k: usize, n: usize) -> Result<OrdinalMap> {
    if k == 0 || k + 1 > n {
        return Err(Error::Index { id: k, size: n });
    }
    Ok(OrdinalMap::Merge { k, n })
}

impl OrdinalMap {
    pub fn domain(&self) -> usize {
        match *self {
            OrdinalMap::Skip { n, .. } => n - 1,
            OrdinalMap::Merge { n, .. } => n,
        }
    }

    pub fn codomain(&self) -> usize {
        match *self {
            OrdinalMap::Skip { n, .. } => n,
            OrdinalMap::Merge { n, .. } => n - 1,
        }
    }

    /// Applies the map to `x ∈ [domain]` (1-based).
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        debug_assert!(x >= 1 && x <= self.domain());
        match *self {
            OrdinalMap::Skip { i, .. } => {
                if x < i {
                    x
                } else {
                    x + 1
                }
            }
            OrdinalMap::Merge { k, .. } => {
                if x <= k {
                    x
                } else {
                    x - 1
                }
            }
        }
    }

    /// Values at `1..=domain`.
    pub fn table(&self) -> Vec<usize> {
        (1..=self.domain()).map(|x| self.apply(x)).collect()
    }
}

/// `maps[0] ∘ maps[1] ∘ … ∘ maps[last]` tabulated on `[domain of last]`.
pub fn compose(maps: &[OrdinalMap]) -> Result<Vec<usize>> {
    let Some(last) = maps.last() else {
        return Err(Error::Invalid("nothing to compose".into()));
    };
    for w in maps.windows(2) {
        if w[0].domain() != w[1].codomain() {
            return Err(Error::Invalid(format!("cannot compose {:?} after {:?}", w[0], w[1])));
        }
    }
    Ok((1..=last.domain())
        .map(|x| maps.iter().rev().fold(x, |acc, m| m.apply(acc)))
        .collect())
}
