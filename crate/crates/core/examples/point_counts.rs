// Counting F_t-points of single components and recovering their class by
// interpolation.

use springer::finfield::{count_component_points, PrimeField};
use springer::tableau::{enumerate_standard, TwoColumnTableau};
use springer::verify::interpolate;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for t in enumerate_standard(3, 2)? {
        let mut counts = Vec::new();
        for order in [2, 3] {
            counts.push(count_component_points(&t, PrimeField::new(order)?)?);
        }
        println!("{}  points over F_2, F_3: {:?}", t.psi_string(), counts);
        assert_eq!(counts, vec![9, 16]);
    }

    let t = TwoColumnTableau::from_psi(&[2, 2, 1, 1])?;
    let xs = [2, 3, 5];
    let mut ys = Vec::new();
    for &x in &xs {
        ys.push(count_component_points(&t, PrimeField::new(x as u32)?)? as i128);
    }
    let poly = interpolate(&xs, &ys).ok_or("counts are not an integer polynomial")?;
    println!("{}: counts {ys:?} fit coefficients {poly:?}", t.psi_string());
    assert_eq!(poly, vec![1, 2, 1]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
