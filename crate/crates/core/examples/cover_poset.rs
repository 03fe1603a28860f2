// The poset of covers of the pentagon, its components, and a pushdown path.

use latder::cover::{pushdown_relation, Cover, CoverPoset};
use latder::generators::pentagon;
use latder::Result;

pub fn run_example() -> Result<()> {
    let n5 = pentagon();
    let cp = CoverPoset::new(&n5);
    for (i, c) in cp.covers().iter().enumerate() {
        println!("cover {i}: {c} ({} below {})", n5.label(c.lo), n5.label(c.hi));
    }
    for comp in cp.components() {
        let members: Vec<String> = comp.elements.iter().map(|&i| cp.covers()[i].to_string()).collect();
        println!("component: {}", members.join(" "));
    }
    for (delta, u, gamma) in pushdown_relation(&n5) {
        println!("{delta} pushes down along {u} to {gamma}");
    }
    let path = cp.pushdown_path(Cover::new(3, 4), Cover::new(0, 1))?;
    println!("path from (3,4) to (0,1): {} step(s)", path.map_or(0, |p| p.len()));
    println!("pushdown: {}, pushup: {}", cp.is_pushdown(), cp.is_pushup());
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
