// The affine paving by choice words, checked against a brute-force count of
// fixed flags.

use springer::finfield::{count_fixed_flags, stratum_flags, NilpotentOp, PrimeField};
use springer::strata::{enumerate_strata, fiber_class};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (p, q) = (2, 2);
    let f = PrimeField::new(3)?;
    let op = NilpotentOp::two_block(p, q, f)?;
    let mut total = 0;
    for w in enumerate_strata(p, q)? {
        let cells = stratum_flags(&op, &w)?.len();
        println!("{w}  dim {}  {cells} points over {f}", w.dim());
        total += cells;
    }
    let class = fiber_class(p, q)?;
    let brute = count_fixed_flags(&op)?;
    println!("class {class}; strata give {total}, brute force {brute}");
    assert_eq!(total as u64, brute);
    assert_eq!(class.specialize(3), brute.into());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
