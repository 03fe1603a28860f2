// Regularity: are all derived lattices at atomic covers isomorphic?

use latder::generators::{boolean, multinomial, permutohedron};
use latder::iso::is_regular;
use latder::Result;

pub fn run_example() -> Result<()> {
    for (name, l) in [
        ("B3", boolean(3)?),
        ("S4", permutohedron(4)?),
        ("L(2,2,1)", multinomial(&[2, 2, 1])?),
    ] {
        let r = is_regular(&l)?;
        println!("{name}: regular {}", r.regular);
        for a in &r.atoms {
            println!("  at {}: {} elements, height {}", a.cover, a.size, a.height);
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
