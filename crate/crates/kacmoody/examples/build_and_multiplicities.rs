//! Build the truncated algebra of a hyperbolic matrix and compare the root
//! multiplicities with the independent recursion oracle.
//!
//! Run with `cargo run --release --example build_and_multiplicities`.

use kacmoody::engine::{GradedAlgebra, PetersonTable};
use kacmoody::gcm::Gcm;

fn main() {
    let height = 8;
    let gcm = Gcm::new(vec![vec![2, -3], vec![-3, 2]]).unwrap();
    let symm = gcm.symmetrize().unwrap();

    let started = std::time::Instant::now();
    let algebra = GradedAlgebra::build(&gcm, &symm, height).unwrap();
    println!(
        "built [[2,-3],[-3,2]] to height {height} in {:?}",
        started.elapsed()
    );

    let oracle = PetersonTable::up_to(&gcm, &symm, height).unwrap();
    println!("\n degree      dim   oracle   basis");
    for degree in algebra.positive_degrees() {
        let space = algebra.space(&degree).unwrap();
        let words: Vec<String> = space.trees.iter().map(|t| t.render('e')).collect();
        let oracle_dim = oracle.mult(&degree).unwrap_or(0);
        assert_eq!(space.dim() as u64, oracle_dim, "oracle disagreement");
        println!(
            "  {degree:<9} {:<5} {:<8} {}",
            space.dim(),
            oracle_dim,
            if words.len() > 3 {
                format!("{}, ... ({} words)", words[0], words.len())
            } else {
                words.join(", ")
            }
        );
    }

    let total: usize = algebra
        .positive_degrees()
        .iter()
        .map(|d| algebra.space(d).unwrap().dim())
        .sum();
    println!("\ntotal dimension of the positive part: {total}");
}
