// Semidistributivity reports for a few small lattices.

use latder::generators::{diamond, pentagon, permutohedron};
use latder::sd::sd_report;
use latder::Result;

pub fn run_example() -> Result<()> {
    for (name, l) in [("N5", pentagon()), ("M3", diamond()), ("S4", permutohedron(4)?)] {
        let r = sd_report(&l);
        println!("{name}:");
        print!("{r}");
        if r.pushdown {
            println!("five conditions agree: {}", r.conditions_agree());
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
