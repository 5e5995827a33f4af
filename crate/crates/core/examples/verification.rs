// The self-check suite that `springer verify` runs.

use springer::verify::{run_verification, VerifyConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let summary = run_verification(&VerifyConfig {
        max_n: 4,
        fields: vec![2, 3],
    })?;
    for c in &summary.criteria {
        println!("{} {} {}: {}", c.id, if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    if !summary.all_passed() {
        return Err("verification failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
