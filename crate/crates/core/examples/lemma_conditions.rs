// Closed conditions on a flag: which fixed flags satisfy `N^i F_k ⊆ F_m`,
// and how a component's conditions cut out its points.

use springer::finfield::{
    component_flags, enumerate_fixed_flags, lemma_predicate, LemmaShape, NilpotentOp, PrimeField,
};
use springer::tableau::TwoColumnTableau;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let op = NilpotentOp::two_block(2, 1, PrimeField::new(2)?)?;
    let flags = enumerate_fixed_flags(&op)?;
    let shape = LemmaShape::PowerIntoFlag {
        power: 1,
        index: 2,
        target: 0,
    };
    let mut holds = 0;
    for flag in &flags {
        if lemma_predicate(&op, flag, &shape)? {
            holds += 1;
        }
    }
    println!("{} fixed flags, {holds} with N F_2 = 0", flags.len());

    for psi in [[1, 2, 1], [2, 1, 1]] {
        let t = TwoColumnTableau::from_psi(&psi)?;
        let points = component_flags(&t, &op)?;
        println!("component {}: {} points", t.psi_string(), points.len());
        for flag in points {
            let dims: Vec<String> = flag.spaces().iter().map(|s| format!("{:?}", s.basis())).collect();
            println!("    {}", dims.join(" < "));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
