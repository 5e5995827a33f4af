// Complete flag varieties: class, Betti numbers and point counts.

use springer::finfield::{count_complete_flags, fixed_flag_class, PrimeField};
use springer::grothendieck::flag_class;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for m in 1..=4 {
        let class = flag_class(m);
        let betti: Vec<String> = class.poincare()?.iter().map(|b| b.to_string()).collect();
        print!("Fl({m}) = {class}; betti [{}]", betti.join(","));
        for t in [2, 3] {
            let count = count_complete_flags(m, PrimeField::new(t)?)?;
            assert_eq!(class.specialize(t as u64), count.into());
            print!("; {count} points over F_{t}");
        }
        println!();
    }
    // The same recursion counts flags fixed by any nilpotent.
    println!("fixed flags of type (2,1,1): {}", fixed_flag_class(&[2, 1, 1]));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
