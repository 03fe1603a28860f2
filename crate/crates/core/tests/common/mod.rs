#![allow(dead_code)]

use latder::generators::*;
use latder::{FiniteLattice, FinitePoset};

/// Seeds `1..=100` at densities 0.2 and 0.4, with `3 + seed % 10` elements.
pub fn random_posets() -> Vec<(String, FinitePoset)> {
    let mut out = Vec::new();
    for density in [0.2, 0.4] {
        for seed in 1..=100u64 {
            let size = 3 + (seed % 10) as usize;
            let p = random_poset(size, density, seed).unwrap();
            out.push((format!("random({size},{density},{seed})"), p));
        }
    }
    out
}

pub fn small_lattices() -> Vec<(String, FiniteLattice)> {
    let mut out: Vec<(String, FiniteLattice)> = Vec::new();
    for n in 1..=4 {
        out.push((format!("B{n}"), boolean(n).unwrap()));
    }
    for n in 1..=6 {
        out.push((format!("C{n}"), chain(n).unwrap()));
    }
    out.push(("N5".into(), pentagon()));
    out.push(("M3".into(), diamond()));
    for n in 2..=4 {
        out.push((format!("S{n}"), permutohedron(n).unwrap()));
    }
    for n in 2..=5 {
        out.push((format!("T{n}"), tamari(n).unwrap()));
    }
    for profile in [&[2, 2][..], &[2, 1, 1], &[2, 2, 1]] {
        out.push((format!("L{profile:?}"), multinomial(profile).unwrap()));
    }
    let c2 = chain(2).unwrap();
    let c3 = chain(3).unwrap();
    let n5 = pentagon();
    let pairs = [("C2xC3", &c2, &c3), ("N5xC2", &n5, &c2), ("N5xN5", &n5, &n5)];
    for (name, a, b) in pairs {
        out.push((name.into(), product(a, b).unwrap()));
    }
    out.push(("M3xC2".into(), product(&diamond(), &c2).unwrap()));
    out.push(("B2xN5".into(), product(&boolean(2).unwrap(), &n5).unwrap()));
    out.push(("T3xC2".into(), product(&tamari(3).unwrap(), &c2).unwrap()));
    out
}

/// The fixed characterization corpus: named families, products, and
/// Dedekind-MacNeille completions of random posets.
pub fn corpus() -> Vec<(String, FiniteLattice)> {
    let mut out = small_lattices();
    for (name, p) in random_posets() {
        out.push((format!("dm {name}"), dedekind_macneille(&p).unwrap()));
    }
    out
}

/// Index of a name in a generator's element labels.
pub fn id_of(l: &FiniteLattice, name: &str) -> usize {
    (0..l.size())
        .find(|&x| l.label(x) == name)
        .unwrap_or_else(|| panic!("no element {name}"))
}

/// Order isomorphism by exhaustive search over bijections, extending a
/// partial assignment only while it preserves and reflects `≤`.
pub fn brute_force_isomorphic(p: &FinitePoset, q: &FinitePoset) -> bool {
    fn extend(p: &FinitePoset, q: &FinitePoset, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let x = map.len();
        if x == p.size() {
            return true;
        }
        for y in 0..q.size() {
            if used[y] || !(0..x).all(|a| p.le(a, x) == q.le(map[a], y) && p.le(x, a) == q.le(y, map[a])) {
                continue;
            }
            used[y] = true;
            map.push(y);
            if extend(p, q, map, used) {
                return true;
            }
            map.pop();
            used[y] = false;
        }
        false
    }
    p.size() == q.size() && extend(p, q, &mut Vec::new(), &mut vec![false; q.size()])
}

/// An 11-element closure system that is join-semidistributive but has a
/// `D`-cycle, so it is not lower bounded.
pub fn jsd_not_lower_bounded() -> FiniteLattice {
    let edges = [
        (0, 1),
        (0, 2),
        (0, 4),
        (0, 7),
        (1, 3),
        (1, 5),
        (2, 3),
        (3, 6),
        (4, 5),
        (4, 8),
        (5, 6),
        (5, 9),
        (6, 10),
        (7, 8),
        (8, 9),
        (9, 10),
    ];
    FiniteLattice::from_dag(11, &edges, None).unwrap()
}
