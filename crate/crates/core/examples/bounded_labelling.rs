// Join dependency, boundedness, and a strict facet labelling of the pentagon.

use latder::bounded::*;
use latder::generators::{diamond, pentagon};
use latder::Result;

pub fn run_example() -> Result<()> {
    let n5 = pentagon();
    let dep = join_dependency(&n5);
    for (&(j, k), m) in &dep.d {
        println!("{} D {} (witness {})", n5.label(j), n5.label(k), n5.label(*m));
    }
    println!("lower bounded: {}, bounded: {}", is_lower_bounded(&n5), is_bounded(&n5));

    let f = construct_strict_facet_labelling(&n5).expect("N5 is lower bounded");
    for (c, v) in f.iter() {
        println!("f{c} = {v}");
    }
    println!("verified: {}", verify_strict_facet_labelling(&n5, &f)?.is_valid());
    for facet in facets(&n5) {
        println!(
            "facet {} {} {} {} with {} interior cover(s)",
            facet.delta,
            facet.delta_p,
            facet.gamma,
            facet.gamma_p,
            facet.interiors.len()
        );
    }
    println!("facet form: {}", verify_facet_form(&n5, &f)?);

    let m3 = diamond();
    let check = verify_strict_facet_labelling(&m3, &FacetLabelling::constant(&m3, 0))?;
    println!(
        "M3 constant labelling valid: {}, lower bounded: {}",
        check.is_valid(),
        is_lower_bounded(&m3)
    );
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
