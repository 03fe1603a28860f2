// Builds each lattice family and prints its size and number of covers.

use latder::generators::*;
use latder::Result;

pub fn run_example() -> Result<()> {
    let families = [
        ("boolean(3)", boolean(3)?),
        ("chain(4)", chain(4)?),
        ("pentagon", pentagon()),
        ("diamond", diamond()),
        ("permutohedron(4)", permutohedron(4)?),
        ("tamari(4)", tamari(4)?),
        ("multinomial(2,2,1)", multinomial(&[2, 2, 1])?),
        ("pentagon x chain(2)", product(&pentagon(), &chain(2)?)?),
        (
            "completion of a random poset",
            dedekind_macneille(&random_poset(8, 0.3, 11)?)?,
        ),
    ];
    for (name, l) in &families {
        println!("{name}: {} elements, {} covers", l.size(), l.hasse().len());
    }
    let s3 = permutohedron(3)?;
    let names: Vec<String> = (0..s3.size()).map(|x| s3.label(x)).collect();
    println!("S3 elements: {}", names.join(" "));
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
