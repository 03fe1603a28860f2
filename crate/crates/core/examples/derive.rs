// Derived lattices of S4 at its atomic covers, and a lifted labelling.

use latder::bounded::{construct_strict_facet_labelling, verify_strict_facet_labelling};
use latder::derived::{derived_lattice, iterate_derive, lift_labelling};
use latder::generators::permutohedron;
use latder::iso::are_isomorphic;
use latder::{Cover, Result};

pub fn run_example() -> Result<()> {
    let s4 = permutohedron(4)?;
    let s3 = permutohedron(3)?;
    let f = construct_strict_facet_labelling(&s4).expect("S4 is bounded");
    for &a in s4.atoms() {
        let gamma = Cover::new(s4.bottom(), a);
        let d = derived_lattice(&s4, gamma)?;
        let iso = are_isomorphic(d.lattice.poset(), s3.poset()).found;
        let lifted = lift_labelling(&s4, &f, gamma)?;
        let valid = verify_strict_facet_labelling(&d.lattice, &lifted)?.is_valid();
        println!(
            "Cov(S4, (1234,{})): {} elements, isomorphic to S3: {iso}, lifted labelling valid: {valid}",
            s4.label(a),
            d.lattice.size()
        );
    }
    let twice = iterate_derive(&s4, &[Cover::new(0, 1), Cover::new(0, 1)])?;
    println!("derived twice: {} elements", twice.size());
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
