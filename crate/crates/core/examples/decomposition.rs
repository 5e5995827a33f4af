// Ordered pairs, their induced tableaux, and decompositions of tableaux with
// more than two columns.

use springer::tableau::{all_decompositions, decompose, induced_tableau, OrderedPair, Tableau, DEFAULT_SEARCH_BOUND};
use springer::tower::decomposable_class;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let first = OrderedPair::from_map(&[(1, 1), (2, 1), (3, 2), (4, 2), (5, 3)])?;
    let t = induced_tableau(&first);
    println!("{t}: young {}, standard {}", t.is_young(), t.is_standard());

    let second = OrderedPair::from_map(&[(1, 2), (4, 2), (2, 3), (5, 1), (3, 1)])?;
    let t = induced_tableau(&second);
    println!("{t}: young {}, standard {}", t.is_young(), t.is_standard());

    let t: Tableau = serde_json::from_str(r#"{"columns": [[5,3],[4,1],[2]]}"#)?;
    let d = decompose(&t)?.ok_or("expected a decomposition")?;
    println!("witness: {}", serde_json::to_string(&d)?);
    println!("class {}", decomposable_class(&t, &d)?);
    println!("{} witnesses in all", all_decompositions(&t, DEFAULT_SEARCH_BOUND)?.len());

    let column: Tableau = serde_json::from_str(r#"{"columns": [[3,2,1]]}"#)?;
    assert!(decompose(&column)?.is_none());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
