//! Acceptance criteria 1 to 9, one line each. Runs without the libtest
//! harness so the lines are always printed.

mod common;

use std::collections::{BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use latder::bounded::*;
use latder::cover::{cover_le, Cover, CoverPoset};
use latder::derived::{derived_lattice, lift_labelling};
use latder::generators::*;
use latder::iso::{are_isomorphic, is_isomorphism, is_regular};
use latder::order::PullbackMode;
use latder::quotient::{congruence_generated, quotient};
use latder::sd::{creates_pullbacks_pr0, is_join_semidistributive_direct, is_semidistributive, sd_report};
use latder::{FiniteLattice, FinitePoset};

type Outcome = Result<(), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn covers(l: &FiniteLattice) -> Vec<Cover> {
    l.hasse().iter().map(|&(a, b)| Cover::new(a, b)).collect()
}

fn perm_atom(n: usize, k: usize) -> usize {
    let target = Permutation::identity(n).swap_positions(k);
    Permutation::all(n).iter().position(|p| *p == target).unwrap()
}

fn psi_example() -> Outcome {
    let w: Permutation = "45231".parse().unwrap();
    let u = psi_perm(2, &w, 3).map_err(|e| e.to_string())?;
    ensure(u.to_string() == "3421", || format!("psi gave {u}"))?;
    let back = psi_perm_inverse(2, &u).map_err(|e| e.to_string())?;
    ensure(back == (w, 3), || format!("inverse gave {back:?}"))
}

fn permutohedron_derivatives() -> Outcome {
    for n in 2..=5 {
        let s = permutohedron(n).unwrap();
        let perms = Permutation::all(n);
        let target = permutohedron(n - 1).unwrap();
        let smaller: HashMap<Permutation, usize> = Permutation::all(n - 1)
            .into_iter()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        for k in 1..n {
            let d = derived_lattice(&s, Cover::new(0, perm_atom(n, k))).map_err(|e| e.to_string())?;
            ensure(are_isomorphic(d.lattice.poset(), target.poset()).found, || {
                format!("S{n} at k={k}: not isomorphic to S{}", n - 1)
            })?;
            let map: Vec<usize> = d
                .cover_of
                .iter()
                .map(|c| {
                    let (w, w1) = (&perms[c.lo], &perms[c.hi]);
                    let i = (1..n).find(|&i| w.get(i) != w1.get(i)).unwrap();
                    smaller[&psi_perm(k, w, i).unwrap()]
                })
                .collect();
            ensure(is_isomorphism(d.lattice.poset(), target.poset(), &map), || {
                format!("S{n} at k={k}: psi is not an order isomorphism")
            })?;
        }
    }
    Ok(())
}

fn tamari_derivatives() -> Outcome {
    for n in 2..=5 {
        let t = tamari(n).unwrap();
        let all = BracketingVector::all(n);
        let index: HashMap<&BracketingVector, usize> = all.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let smaller: HashMap<BracketingVector, usize> = BracketingVector::all(n - 1)
            .into_iter()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let target = tamari(n - 1).unwrap();
        let bottom = BracketingVector::bottom(n);
        for k in splits(&bottom) {
            let atom = Cover::new(index[&bottom], index[&bracket_cover(&bottom, k).unwrap()]);
            let d = derived_lattice(&t, atom).map_err(|e| e.to_string())?;
            ensure(are_isomorphic(d.lattice.poset(), target.poset()).found, || {
                format!("T{n} at k={k}: not isomorphic to T{}", n - 1)
            })?;
            let map: Vec<usize> = d
                .cover_of
                .iter()
                .map(|c| smaller[&psi_tamari(&all[c.lo], k).unwrap()])
                .collect();
            ensure(is_isomorphism(d.lattice.poset(), target.poset(), &map), || {
                format!("T{n} at k={k}: psi is not an order isomorphism")
            })?;
        }
    }
    Ok(())
}

fn boolean_rule() -> Outcome {
    for n in 1..=5 {
        let b = boolean(n).unwrap();
        let smaller = boolean(n - 1).unwrap();
        let cp = CoverPoset::new(&b);
        let comps = cp.components();
        ensure(comps.len() == n, || format!("Cov(B{n}) has {} components", comps.len()))?;
        for c in comps {
            let part = cp.poset().induced(&c.elements);
            ensure(are_isomorphic(&part, smaller.poset()).found, || {
                format!("a component of Cov(B{n}) is not B{}", n - 1)
            })?;
        }
    }
    Ok(())
}

fn non_regularity() -> Outcome {
    let r = is_regular(&multinomial(&[2, 2, 1]).unwrap()).map_err(|e| e.to_string())?;
    ensure(!r.regular, || "L(2,2,1) reported regular".into())?;
    let (a, b) = r.witness.ok_or("no witness pair")?;
    let l = multinomial(&[2, 2, 1]).unwrap();
    let (da, db) = (derived_lattice(&l, a).unwrap(), derived_lattice(&l, b).unwrap());
    ensure(!are_isomorphic(da.lattice.poset(), db.lattice.poset()).found, || {
        format!("witness {a}, {b} derive isomorphic lattices")
    })
}

fn quotient_proposition() -> Outcome {
    for n in 2..=5 {
        let s = permutohedron(n).unwrap();
        for k in 1..n {
            let theta = congruence_generated(&s, &[(0, perm_atom(n, k))]).unwrap();
            let q = quotient(&s, &theta).map_err(|e| e.to_string())?;
            let expected = product(&permutohedron(k).unwrap(), &permutohedron(n - k).unwrap()).unwrap();
            ensure(are_isomorphic(q.poset(), expected.poset()).found, || {
                format!("S{n}/theta(bottom, sigma^{k}) is not S{k} x S{}", n - k)
            })?;
        }
    }
    Ok(())
}

fn characterization(corpus: &[(String, FiniteLattice)]) -> Outcome {
    for (name, l) in corpus {
        let jsd = is_join_semidistributive_direct(l);
        // a
        ensure(jsd == creates_pullbacks_pr0(l), || {
            format!("{name}: (a) SD-join vs pullbacks")
        })?;
        // b
        let r = sd_report(l);
        ensure(!r.pushdown || r.conditions_agree(), || {
            format!("{name}: (b) conditions {r:?}")
        })?;
        // c
        let labelled = construct_strict_facet_labelling(l)
            .is_some_and(|f| verify_strict_facet_labelling(l, &f).unwrap().is_valid());
        ensure(is_lower_bounded(l) == (jsd && labelled), || {
            format!("{name}: (c) lower bounded")
        })?;
        // d, e
        let sd = is_semidistributive(l);
        let bounded = is_bounded(l);
        let f = if bounded {
            construct_strict_facet_labelling(l)
        } else {
            None
        };
        if sd {
            for c in covers(l) {
                let d = derived_lattice(l, c).map_err(|e| format!("{name} at {c}: {e}"))?;
                ensure(is_semidistributive(&d.lattice), || format!("{name} at {c}: (d) not SD"))?;
                if let Some(f) = &f {
                    ensure(is_bounded(&d.lattice), || format!("{name} at {c}: (e) not bounded"))?;
                    let lifted = lift_labelling(l, f, c).map_err(|e| format!("{name} at {c}: (e) {e}"))?;
                    let ok = verify_strict_facet_labelling(&d.lattice, &lifted).unwrap().is_valid();
                    ensure(ok, || format!("{name} at {c}: (e) lifted labelling fails"))?;
                }
            }
        }
        // f
        let cp = CoverPoset::new(l);
        let p = cp.poset();
        let all = p.has_pullbacks(PullbackMode::AllCospans);
        ensure(all == p.has_pullbacks(PullbackMode::HatsOnly), || {
            format!("{name}: (f) hats")
        })?;
        if all && p.dual().has_pullbacks(PullbackMode::AllCospans) {
            for c in p.components() {
                ensure(FiniteLattice::from_poset(p.induced(&c.elements)).is_ok(), || {
                    format!("{name}: (f) component is not a lattice")
                })?;
            }
        }
        // g
        ensure(!(sd && is_lower_bounded(l)) || bounded, || {
            format!("{name}: (g) Day closure")
        })?;
    }
    Ok(())
}

fn tamari_facets() -> Outcome {
    for n in 2..=5 {
        let t = tamari(n).unwrap();
        let all = BracketingVector::all(n);
        let id: HashMap<&BracketingVector, usize> = all.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let up = |v: &BracketingVector, k: usize| bracket_cover(v, k).unwrap();
        for v in &all {
            let s = splits(v);
            for &i in &s {
                for &j in &s {
                    if i == j {
                        continue;
                    }
                    let (vi, vj) = (up(v, i), up(v, j));
                    if j == v.get(i) + 1 {
                        let vii = up(&vi, i);
                        let vji = up(&vj, i);
                        let five: BTreeSet<&BracketingVector> = [v, &vi, &vii, &vj, &vji].into_iter().collect();
                        let shape = five.len() == 5
                            && up(&vii, j) == vji
                            && [(v, &vi), (&vi, &vii), (&vii, &vji), (v, &vj), (&vj, &vji)]
                                .iter()
                                .all(|(a, b)| t.is_cover(id[a], id[b]));
                        ensure(shape, || format!("no pentagon at {v}, {i}, {j}"))?;
                    } else if i != v.get(j) + 1 {
                        ensure(up(&vi, j) == up(&vj, i), || format!("no diamond at {v}, {i}, {j}"))?;
                    }
                }
            }
        }
        let bottom = BracketingVector::bottom(n);
        for &(a, b) in t.hasse() {
            let v = &all[a];
            let j = splits(v).into_iter().find(|&k| up(v, k) == all[b]).unwrap();
            for k in splits(&bottom) {
                let atom = Cover::new(id[&bottom], id[&up(&bottom, k)]);
                let perspective = cover_le(&t, atom, Cover::new(a, b));
                ensure(perspective == (j == k && v.get(k) == k), || {
                    format!("cover ({v},{j}) against atom {k}")
                })?;
                if perspective {
                    let count = (1..=n).filter(|&i| v.get(i) == k).count();
                    ensure(count == 1, || format!("{k} is not unique in {v}"))?;
                }
            }
        }
    }
    Ok(())
}

fn oracle_equivalence(corpus: &[(String, FiniteLattice)]) -> Outcome {
    let mut posets: Vec<FinitePoset> = Vec::new();
    for (_, l) in corpus {
        let cp = CoverPoset::new(l);
        for p in [l.poset(), cp.poset()] {
            if p.size() <= 8 {
                posets.push(p.clone());
            }
        }
    }
    let mut seen = BTreeSet::new();
    posets.retain(|p| seen.insert((p.size(), p.hasse().to_vec())));
    for p in &posets {
        for q in &posets {
            let fast = are_isomorphic(p, q).found;
            ensure(fast == common::brute_force_isomorphic(p, q), || {
                format!("disagreement on {:?} and {:?}", p.hasse(), q.hasse())
            })?;
        }
    }
    Ok(())
}

fn main() {
    let corpus = common::corpus();
    let criteria: Vec<Criterion<'_>> = vec![
        ("psi worked example and inverse", Box::new(psi_example)),
        (
            "permutohedron derivatives are S(n-1)",
            Box::new(permutohedron_derivatives),
        ),
        ("Tamari derivatives are T(n-1)", Box::new(tamari_derivatives)),
        ("Cov(B^n) is n copies of B^(n-1)", Box::new(boolean_rule)),
        ("L(2,2,1) is not regular", Box::new(non_regularity)),
        ("S_n quotients are products", Box::new(quotient_proposition)),
        (
            "characterization suite on the corpus",
            Box::new(|| characterization(&corpus)),
        ),
        ("Tamari pentagons, diamonds and perspectivity", Box::new(tamari_facets)),
        (
            "isomorphism agrees with brute force",
            Box::new(|| oracle_equivalence(&corpus)),
        ),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {title} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {title} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("corpus: {} lattices", corpus.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
