// The bijections between covers of S_n, T_n and the smaller lattices.

use latder::generators::*;
use latder::Result;

pub fn run_example() -> Result<()> {
    let w: Permutation = "45231".parse().expect("a permutation");
    let u = psi_perm(2, &w, 3)?;
    println!("psi^2(45231, 3) = {u}");
    let (back, i) = psi_perm_inverse(2, &u)?;
    println!("inverse: ({back}, {i})");

    let v: BracketingVector = "(1,3,3)".parse().expect("a bracketing vector");
    let t = psi_tamari(&v, 1)?;
    println!("psi((1,3,3), 1) = {t}");
    println!("splits of (1,2,3): {:?}", splits(&BracketingVector::bottom(3)));
    let word = MultinomialWord::bottom(&[2, 2, 1]);
    println!("bottom of L(2,2,1): {word}, ascents at {:?}", word.ascents());
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
