//! Dense square bit matrices and row bit sets.

/// A square `n × n` boolean matrix stored row-major as 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    n: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix {
            n,
            words,
            data: vec![0; n * words],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = BitMatrix::new(n);
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    m.insert(i, j);
                }
            }
        }
        m
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize, j: usize) -> bool {
        let w = &mut self.data[i * self.words + j / 64];
        let bit = 1u64 << (j % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    /// `row[dst] |= row[src]`; returns whether `dst` changed.
    pub fn union_rows(&mut self, src: usize, dst: usize) -> bool {
        let mut changed = false;
        for k in 0..self.words {
            let s = self.data[src * self.words + k];
            let d = &mut self.data[dst * self.words + k];
            let nd = *d | s;
            changed |= nd != *d;
            *d = nd;
        }
        changed
    }

    pub fn iter_row(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        ones(self.row(i))
    }

    pub fn row_count(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn transpose(&self) -> BitMatrix {
        BitMatrix::from_fn(self.n, |i, j| self.get(j, i))
    }

    /// Number of set cells.
    pub fn count(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut list = f.debug_list();
        for i in 0..self.n {
            let row: String = (0..self.n).map(|j| if self.get(i, j) { '1' } else { '0' }).collect();
            list.entry(&row);
        }
        list.finish()
    }
}

/// Indices of set bits in a word slice.
pub fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(k, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let t = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(k * 64 + t)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_get_and_iterate() {
        let mut m = BitMatrix::new(130);
        assert!(m.insert(3, 129));
        assert!(!m.insert(3, 129));
        m.insert(3, 0);
        m.insert(3, 64);
        assert!(m.get(3, 64));
        assert!(!m.get(4, 64));
        assert_eq!(m.iter_row(3).collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(m.row_count(3), 3);
        assert!(m.transpose().get(129, 3));
    }

    #[test]
    fn union_reports_change() {
        let mut m = BitMatrix::new(5);
        m.insert(0, 1);
        assert!(m.union_rows(0, 2));
        assert!(!m.union_rows(0, 2));
        assert!(m.get(2, 1));
    }
}
