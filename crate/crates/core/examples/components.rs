// Irreducible components of a two-block Springer fiber: one per standard
// tableau, each a tower of P^1-bundles and isomorphisms.

use springer::tableau::enumerate_standard;
use springer::tower::{closed_conditions, motive_of, normalize, tower_of};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (p, q) = (3, 2);
    let tableaux = enumerate_standard(p, q)?;
    println!("type ({p},{q}): {} components", tableaux.len());
    for t in &tableaux {
        let tower = tower_of(t);
        let class = motive_of(t);
        assert_eq!(tower.q(), q);
        println!("{}  psi {}  tower {}  class {}", t, t.psi_string(), tower, class);
        let nf = normalize(t);
        println!("    normal form {nf}");
        for c in closed_conditions(&nf, (p, q))?.constraints {
            println!("    {c}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
