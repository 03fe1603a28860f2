//! Derived lattices `Cov(L, γ)`: the connected component of `γ` in the
//! poset of covers of a semidistributive lattice.

use std::sync::Arc;

use crate::bounded::{is_bounded, verify_strict_facet_labelling, FacetLabelling};
use crate::cover::{check_cover, pushdown_steps, pushup_steps, Cover, CoverPoset};
use crate::error::{Error, Result};
use crate::order::FiniteLattice;
use crate::sd::is_semidistributive;

#[derive(Clone, Debug)]
pub struct DerivedLattice {
    pub lattice: FiniteLattice,
    /// `cover_of[x]` is the cover of the base represented by element `x`.
    pub cover_of: Vec<Cover>,
    pub base: Arc<FiniteLattice>,
    pub seed: Cover,
}

impl DerivedLattice {
    /// The element representing base cover `c`, if `c` lies in the component.
    pub fn element_of(&self, c: Cover) -> Option<usize> {
        self.cover_of.binary_search(&c).ok()
    }
}

pub fn derived_lattice(l: &FiniteLattice, gamma: Cover) -> Result<DerivedLattice> {
    derive_in(Arc::new(l.clone()), gamma)
}

fn derive_in(base: Arc<FiniteLattice>, gamma: Cover) -> Result<DerivedLattice> {
    check_cover(&base, gamma)?;
    if !is_semidistributive(&base) {
        return Err(Error::NotSemidistributive);
    }
    let cp = CoverPoset::new(&base);
    let comp = cp.component_of(gamma)?;
    let cover_of: Vec<Cover> = comp.iter().map(|&i| cp.covers()[i]).collect();
    let lattice = FiniteLattice::from_poset(cp.poset().induced(&comp))?;
    drop(cp);
    Ok(DerivedLattice {
        lattice,
        cover_of,
        base,
        seed: gamma,
    })
}

/// Derives once per selector; selectors address covers of the current stage.
/// Returns every stage in order.
pub fn iterate_derive_stages(l: &FiniteLattice, seeds: &[Cover]) -> Result<Vec<DerivedLattice>> {
    let mut stages: Vec<DerivedLattice> = Vec::with_capacity(seeds.len());
    let mut current = Arc::new(l.clone());
    for (stage, &seed) in seeds.iter().enumerate() {
        if check_cover(&current, seed).is_err() {
            return Err(Error::StageSelector { stage, cover: seed });
        }
        let d = derive_in(current, seed)?;
        current = Arc::new(d.lattice.clone());
        stages.push(d);
    }
    Ok(stages)
}

/// The lattice after all derivations; `l` itself for an empty seed list.
pub fn iterate_derive(l: &FiniteLattice, seeds: &[Cover]) -> Result<FiniteLattice> {
    Ok(iterate_derive_stages(l, seeds)?
        .pop()
        .map(|d| d.lattice)
        .unwrap_or_else(|| l.clone()))
}

fn lift_preconditions(l: &FiniteLattice, f: &FacetLabelling) -> Result<()> {
    if !is_bounded(l) {
        return Err(Error::NotBounded);
    }
    let check = verify_strict_facet_labelling(l, f)?;
    if !check.is_valid() {
        return Err(Error::LabellingInvalid(check.violations.len()));
    }
    Ok(())
}

fn unique<T: Copy>(cover: Cover, found: Vec<(usize, T)>) -> Result<T> {
    match found.as_slice() {
        [(_, t)] => Ok(*t),
        _ => Err(Error::Ambiguity {
            cover,
            candidates: found.iter().map(|&(u, _)| u).collect(),
        }),
    }
}

/// `F(Γ) = f((u, Γ₁,₁))` where `Γ₁ ⇘_u Γ₀`, for every cover `Γ₀ ⋖ Γ₁` of `Cov(L, γ)`.
pub fn lift_labelling(l: &FiniteLattice, f: &FacetLabelling, gamma: Cover) -> Result<FacetLabelling> {
    lift_preconditions(l, f)?;
    let d = derived_lattice(l, gamma)?;
    d.lattice
        .hasse()
        .iter()
        .map(|&(a, b)| {
            let (g0, g1) = (d.cover_of[a], d.cover_of[b]);
            let pushers = l
                .lower_covers(g1.hi)
                .iter()
                .filter(|&&u| u != g1.lo)
                .filter(|&&u| pushdown_steps(l, g1, u).is_ok_and(|s| s.contains(&g0)))
                .map(|&u| (u, Cover::new(u, g1.hi)))
                .collect();
            let via = unique(g1, pushers)?;
            Ok((Cover::new(a, b), f.labels[&via]))
        })
        .collect()
}

/// The same lift computed from `Γ₀ ⇗_w Γ₁` as `F(Γ) = f((Γ₀,₀, w))`.
pub fn lift_labelling_via_pushup(l: &FiniteLattice, f: &FacetLabelling, gamma: Cover) -> Result<FacetLabelling> {
    lift_preconditions(l, f)?;
    let d = derived_lattice(l, gamma)?;
    d.lattice
        .hasse()
        .iter()
        .map(|&(a, b)| {
            let (g0, g1) = (d.cover_of[a], d.cover_of[b]);
            let pushers = l
                .upper_covers(g0.lo)
                .iter()
                .filter(|&&w| w != g0.hi)
                .filter(|&&w| pushup_steps(l, g0, w).is_ok_and(|s| s.contains(&g1)))
                .map(|&w| (w, Cover::new(g0.lo, w)))
                .collect();
            let via = unique(g0, pushers)?;
            Ok((Cover::new(a, b), f.labels[&via]))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounded::construct_strict_facet_labelling;
    use crate::generators::{boolean, diamond, pentagon, permutohedron};

    #[test]
    fn small_derivations() {
        let b2 = boolean(2).unwrap();
        let d = derived_lattice(&b2, Cover::new(0, 1)).unwrap();
        assert_eq!(d.cover_of, vec![Cover::new(0, 1), Cover::new(2, 3)]);
        assert_eq!(d.lattice.size(), 2);
        assert_eq!(d.element_of(Cover::new(2, 3)), Some(1));

        let n5 = pentagon();
        assert_eq!(derived_lattice(&n5, Cover::new(2, 3)).unwrap().lattice.size(), 1);
        let s3 = permutohedron(3).unwrap();
        assert_eq!(derived_lattice(&s3, Cover::new(0, 1)).unwrap().lattice.size(), 2);
    }

    #[test]
    fn derivation_errors() {
        assert!(matches!(
            derived_lattice(&diamond(), Cover::new(0, 1)),
            Err(Error::NotSemidistributive)
        ));
        assert!(matches!(
            derived_lattice(&pentagon(), Cover::new(0, 3)),
            Err(Error::InvalidCover(_))
        ));
        assert!(matches!(
            iterate_derive(&boolean(3).unwrap(), &[Cover::new(0, 1), Cover::new(5, 6)]),
            Err(Error::StageSelector { stage: 1, .. })
        ));
    }

    #[test]
    fn iterated() {
        let b3 = boolean(3).unwrap();
        let once = iterate_derive(&b3, &[Cover::new(0, 1)]).unwrap();
        assert_eq!(once.size(), 4);
        let twice = iterate_derive(&b3, &[Cover::new(0, 1), Cover::new(0, 1)]).unwrap();
        assert_eq!(twice.size(), 2);
        assert_eq!(iterate_derive(&b3, &[]).unwrap(), b3);
    }

    #[test]
    fn lifting() {
        let n5 = pentagon();
        let f = construct_strict_facet_labelling(&n5).unwrap();
        let lifted = lift_labelling(&n5, &f, Cover::new(0, 1)).unwrap();
        assert_eq!(lifted.iter().collect::<Vec<_>>(), vec![(Cover::new(0, 1), 0)]);
        assert_eq!(lift_labelling_via_pushup(&n5, &f, Cover::new(0, 1)).unwrap(), lifted);

        let mut bad = f.clone();
        bad.set(Cover::new(2, 3), 0);
        assert!(matches!(
            lift_labelling(&n5, &bad, Cover::new(0, 1)),
            Err(Error::LabellingInvalid(_))
        ));
        let m3 = diamond();
        let zero = FacetLabelling::constant(&m3, 0);
        assert!(matches!(
            lift_labelling(&m3, &zero, Cover::new(0, 1)),
            Err(Error::NotBounded)
        ));
    }
}
