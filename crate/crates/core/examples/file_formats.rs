// Writing, reading and rendering lattice, label and cover files.

use latder::bounded::construct_strict_facet_labelling;
use latder::generators::pentagon;
use latder::io::*;
use latder::{CoverPoset, Result};

pub fn run_example() -> Result<()> {
    let n5 = pentagon();
    let text = lattice_to_string(&n5, Some(Provenance::new("pentagon", serde_json::Value::Null)));
    print!("{text}");
    let (back, provenance) = parse_lattice(&text)?;
    assert_eq!(back, n5);
    println!("family: {}", provenance.map(|p| p.family).unwrap_or_default());
    println!("sha256: {}", lattice_hash(&n5));

    let f = construct_strict_facet_labelling(&n5).expect("N5 is lower bounded");
    print!("{}", labels_to_string(&f));
    print!(
        "{}",
        CoversFile::from_cover_poset(&CoverPoset::new(&n5)).to_canonical_string()
    );
    print!("{}", n5.to_dot());
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
