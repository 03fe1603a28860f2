mod common;

use std::collections::BTreeSet;

use latder::generators::*;
use latder::iso::{are_isomorphic, is_isomorphism};
use latder::quotient::{congruence_generated, is_congruence, mu_min, quotient, Congruence};
use latder::{CoverPoset, FiniteLattice, FinitePoset};
use proptest::prelude::*;

fn check_mu(l: &FiniteLattice, theta: &Congruence) {
    for x in 0..l.size() {
        let m = mu_min(l, theta, x);
        assert!(theta.same(m, x));
        for y in 0..l.size() {
            if theta.same(x, y) {
                assert!(l.le(m, y));
            }
        }
    }
}

/// Brute-force least congruence: every partition of a tiny lattice that is
/// a congruence and contains the pair, minimised by refinement.
fn brute_least_congruence(l: &FiniteLattice, x: usize, y: usize) -> Vec<Vec<usize>> {
    let n = l.size();
    let mut best: Option<Vec<usize>> = None;
    // Restricted-growth strings enumerate each partition once.
    let mut rgs = vec![0usize; n];
    loop {
        let theta = {
            let k = rgs.iter().max().unwrap() + 1;
            let classes: Vec<Vec<usize>> = (0..k).map(|c| (0..n).filter(|&v| rgs[v] == c).collect()).collect();
            Congruence::from_classes(n, classes).unwrap()
        };
        if theta.same(x, y) && is_congruence(l, &theta) {
            let finer = |a: &[usize], b: &[usize]| (0..n).all(|u| (0..n).all(|v| a[u] != a[v] || b[u] == b[v]));
            if best.as_ref().is_none_or(|b| finer(&rgs, b)) {
                best = Some(rgs.clone());
            }
        }
        let Some(i) = (1..n).rev().find(|&i| rgs[i] <= *rgs[..i].iter().max().unwrap()) else {
            break;
        };
        rgs[i] += 1;
        for r in &mut rgs[i + 1..] {
            *r = 0;
        }
    }
    let best = best.unwrap();
    let k = best.iter().max().unwrap() + 1;
    (0..k).map(|c| (0..n).filter(|&v| best[v] == c).collect()).collect()
}

#[test]
fn generated_congruences_are_least() {
    for (name, l) in common::small_lattices().into_iter().filter(|(_, l)| l.size() <= 8) {
        for &(a, b) in l.hasse() {
            let theta = congruence_generated(&l, &[(a, b)]).unwrap();
            assert!(is_congruence(&l, &theta), "{name}");
            assert_eq!(theta.classes(), brute_least_congruence(&l, a, b), "{name} ({a},{b})");
            check_mu(&l, &theta);
        }
    }
}

#[test]
fn permutohedron_quotients_are_products() {
    for n in 2..=5 {
        let s = permutohedron(n).unwrap();
        let perms = Permutation::all(n);
        for k in 1..n {
            let atom = perms
                .iter()
                .position(|p| *p == Permutation::identity(n).swap_positions(k))
                .unwrap();
            let theta = congruence_generated(&s, &[(0, atom)]).unwrap();
            check_mu(&s, &theta);
            let q = quotient(&s, &theta).unwrap();
            let expected = product(&permutohedron(k).unwrap(), &permutohedron(n - k).unwrap()).unwrap();
            assert!(are_isomorphic(q.poset(), expected.poset()).found, "n={n} k={k}");

            for (x, w) in perms.iter().enumerate() {
                let rep = &perms[mu_min(&s, &theta, x)];
                let kept: BTreeSet<(usize, usize)> = w
                    .inversions()
                    .into_iter()
                    .filter(|&(a, b)| !(a <= k && k < b))
                    .collect();
                assert_eq!(rep.inversions(), kept, "n={n} k={k} w={w}");
            }
        }
    }
}

fn small_posets() -> Vec<FinitePoset> {
    let mut out: Vec<FinitePoset> = Vec::new();
    for (_, l) in common::corpus() {
        if l.size() <= 8 {
            out.push(l.poset().clone());
        }
        let cp = CoverPoset::new(&l);
        if cp.len() <= 8 {
            out.push(cp.poset().clone());
        }
    }
    for (_, p) in common::random_posets() {
        if p.size() <= 8 {
            out.push(p);
        }
    }
    // Keep one poset per distinct Hasse diagram.
    let mut seen = BTreeSet::new();
    out.retain(|p| seen.insert((p.size(), p.hasse().to_vec())));
    out
}

#[test]
fn isomorphism_agrees_with_brute_force() {
    let posets = small_posets();
    for p in &posets {
        for q in &posets {
            if p.size() != q.size() {
                continue;
            }
            let fast = are_isomorphic(p, q);
            assert_eq!(
                fast.found,
                common::brute_force_isomorphic(p, q),
                "{:?} vs {:?}",
                p.hasse(),
                q.hasse()
            );
            assert_eq!(fast.found, are_isomorphic(q, p).found);
            if let Some(m) = fast.mapping {
                assert!(is_isomorphism(p, q, &m));
            }
        }
    }
}

fn relabel(p: &FinitePoset, perm: &[usize]) -> FinitePoset {
    let edges: Vec<(usize, usize)> = p.hasse().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
    FinitePoset::from_dag(p.size(), &edges, None).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabelled_posets_are_isomorphic(
        size in 1usize..12,
        density in 0.0f64..0.6,
        seed in any::<u64>(),
        shuffle in Just(()).prop_perturb(|_, mut rng| rng.random::<u64>()),
    ) {
        let p = random_poset(size, density, seed).unwrap();
        let mut perm: Vec<usize> = (0..size).collect();
        let mut r = XorShift64Star::new(shuffle);
        for i in (1..size).rev() {
            perm.swap(i, (r.next_u64() % (i as u64 + 1)) as usize);
        }
        let q = relabel(&p, &perm);
        let found = are_isomorphic(&p, &q);
        prop_assert!(found.found);
        prop_assert!(is_isomorphism(&p, &q, &found.mapping.unwrap()));
    }

    #[test]
    fn generated_congruences_on_random_lattices(
        size in 1usize..9,
        density in 0.0f64..0.6,
        seed in any::<u64>(),
        pick in any::<prop::sample::Index>(),
    ) {
        let l = dedekind_macneille(&random_poset(size, density, seed).unwrap()).unwrap();
        let (x, y) = (pick.index(l.size()), l.top());
        let theta = congruence_generated(&l, &[(x, y)]).unwrap();
        prop_assert!(is_congruence(&l, &theta));
        prop_assert!(theta.same(x, y));
        check_mu(&l, &theta);
        let q = quotient(&l, &theta).unwrap();
        prop_assert_eq!(q.size(), theta.len());
    }
}
