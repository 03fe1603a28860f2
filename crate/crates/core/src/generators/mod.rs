//! Constructors for concrete lattices and test corpora.
//!
//! Element numbering is part of the file-format contract: Boolean algebras
//! use subset bitmasks, products use `i * |L₂| + j`, and the Newman
//! lattices (permutations, bracketing vectors, multinomial words) use the
//! lexicographic order of their words.

mod completion;
mod multinomial;
mod ordinal;
mod permutation;
mod tamari;

pub use completion::{dedekind_macneille, dedekind_macneille_with_cap, random_poset, XorShift64Star};
pub use multinomial::{multinomial, multinomial_with_cap, MultinomialWord};
pub use ordinal::{compose, ordinal_merge, ordinal_skip, OrdinalMap};
pub use permutation::{permutohedron, permutohedron_with_cap, psi_perm, psi_perm_inverse, Permutation};
pub use tamari::{bracket_cover, psi_tamari, psi_tamari_inverse, splits, tamari, tamari_with_cap, BracketingVector};

use crate::error::{Error, Result};
use crate::order::{build_lattice, FiniteLattice};

/// Default limit on the number of elements a generator may produce.
pub const DEFAULT_ELEMENT_CAP: usize = 5000;

pub(crate) fn check_size(requested: Option<usize>, cap: usize) -> Result<usize> {
    match requested {
        Some(r) if r <= cap => Ok(r),
        Some(r) => Err(Error::Size { requested: r, cap }),
        None => Err(Error::Size {
            requested: usize::MAX,
            cap,
        }),
    }
}

/// The Boolean algebra with `n` atoms; element ids are subset bitmasks.
pub fn boolean(n: usize) -> Result<FiniteLattice> {
    boolean_with_cap(n, DEFAULT_ELEMENT_CAP)
}

pub fn boolean_with_cap(n: usize, cap: usize) -> Result<FiniteLattice> {
    let size = check_size(u32::try_from(n).ok().and_then(|n| 1usize.checked_shl(n)), cap)?;
    let mut edges = Vec::new();
    for mask in 0..size {
        for bit in 0..n {
            if mask & (1 << bit) == 0 {
                edges.push((mask, mask | (1 << bit)));
            }
        }
    }
    edges.sort_unstable();
    build_lattice(size, &edges, None)
}

/// The chain `0 < 1 < … < n-1` with `n` elements.
pub fn chain(n: usize) -> Result<FiniteLattice> {
    if n == 0 {
        return Err(Error::Invalid("a chain needs at least one element".into()));
    }
    check_size(Some(n), DEFAULT_ELEMENT_CAP)?;
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    build_lattice(n, &edges, None)
}

fn names(list: &[&str]) -> Option<Vec<String>> {
    Some(list.iter().map(|s| s.to_string()).collect())
}

/// `N₅`: `⊥=0 < a=1 < ⊤=4` and `⊥ < b=2 < c=3 < ⊤`.
pub fn pentagon() -> FiniteLattice {
    build_lattice(
        5,
        &[(0, 1), (0, 2), (1, 4), (2, 3), (3, 4)],
        names(&["bot", "a", "b", "c", "top"]),
    )
    .expect("N5 is a lattice")
}

/// `M₃`: three atoms `x=1, y=2, z=3` between `⊥=0` and `⊤=4`.
pub fn diamond() -> FiniteLattice {
    build_lattice(
        5,
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        names(&["bot", "x", "y", "z", "top"]),
    )
    .expect("M3 is a lattice")
}

/// Cartesian product; the pair `(i, j)` gets id `i * |b| + j`.
pub fn product(a: &FiniteLattice, b: &FiniteLattice) -> Result<FiniteLattice> {
    product_with_cap(a, b, DEFAULT_ELEMENT_CAP)
}

pub fn product_with_cap(a: &FiniteLattice, b: &FiniteLattice, cap: usize) -> Result<FiniteLattice> {
    let (na, nb) = (a.size(), b.size());
    let size = check_size(na.checked_mul(nb), cap)?;
    let mut edges = Vec::new();
    for i in 0..na {
        for j in 0..nb {
            for &i2 in a.upper_covers(i) {
                edges.push((i * nb + j, i2 * nb + j));
            }
            for &j2 in b.upper_covers(j) {
                edges.push((i * nb + j, i * nb + j2));
            }
        }
    }
    edges.sort_unstable();
    let names = (0..size)
        .map(|x| format!("({},{})", a.label(x / nb), b.label(x % nb)))
        .collect();
    build_lattice(size, &edges, Some(names))
}
