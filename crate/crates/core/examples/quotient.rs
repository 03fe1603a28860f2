// Collapsing an atomic cover of S4 and comparing the quotient with a product.

use latder::generators::{permutohedron, product, Permutation};
use latder::iso::are_isomorphic;
use latder::quotient::{congruence_generated, mu_min, quotient};
use latder::Result;

pub fn run_example() -> Result<()> {
    let n = 4;
    let s = permutohedron(n)?;
    let perms = Permutation::all(n);
    for k in 1..n {
        let atom = perms
            .iter()
            .position(|p| *p == Permutation::identity(n).swap_positions(k))
            .expect("atoms are permutations");
        let theta = congruence_generated(&s, &[(s.bottom(), atom)])?;
        let q = quotient(&s, &theta)?;
        let expected = product(&permutohedron(k)?, &permutohedron(n - k)?)?;
        println!(
            "k={k}: {} classes, quotient is S{k} x S{}: {}",
            theta.len(),
            n - k,
            are_isomorphic(q.poset(), expected.poset()).found
        );
        println!(
            "  least element of the class of 4321: {}",
            perms[mu_min(&s, &theta, s.top())]
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
