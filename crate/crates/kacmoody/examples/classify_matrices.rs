//! Validate generalised Cartan matrices, compute the symmetrisation
//! `A = DB`, and classify subdiagrams as finite, affine, or indefinite.
//!
//! Run with `cargo run --example classify_matrices`.

use kacmoody::exact::rat_to_string;
use kacmoody::gcm::Gcm;

fn main() {
    let candidates: Vec<(&str, Vec<Vec<i64>>)> = vec![
        ("rank-2 finite", vec![vec![2, -1], vec![-1, 2]]),
        ("rank-2 affine", vec![vec![2, -2], vec![-2, 2]]),
        ("rank-2 indefinite", vec![vec![2, -3], vec![-3, 2]]),
        ("asymmetric", vec![vec![2, -4], vec![-1, 2]]),
        (
            "rank-3 with an affine face",
            vec![vec![2, -2, -1], vec![-2, 2, -1], vec![-1, -1, 2]],
        ),
        ("violates the zero pattern", vec![vec![2, -1], vec![0, 2]]),
        (
            "not symmetrisable",
            vec![vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -2, 2]],
        ),
    ];
    for (label, matrix) in candidates {
        println!("== {label}: {matrix:?}");
        let gcm = match Gcm::new(matrix) {
            Ok(g) => g,
            Err(e) => {
                println!("   rejected: {e}");
                continue;
            }
        };
        match gcm.symmetrize() {
            Ok(s) => {
                let d: Vec<String> = s.d.iter().map(rat_to_string).collect();
                println!("   symmetriser d = ({})", d.join(", "));
            }
            Err(e) => {
                println!("   {e}");
                continue;
            }
        }
        let full: Vec<usize> = (0..gcm.rank()).collect();
        for (component, kind) in gcm.classify_subdiagram(&full).unwrap() {
            let ids: Vec<usize> = component.iter().map(|i| i + 1).collect();
            println!("   component {ids:?}: {kind}");
        }
        // every proper connected subdiagram, classified
        for start in 0..gcm.rank() {
            for end in start..gcm.rank() {
                let subset: Vec<usize> = (start..=end).collect();
                if subset.len() == gcm.rank() {
                    continue;
                }
                let classes = gcm.classify_subdiagram(&subset).unwrap();
                for (component, kind) in classes {
                    if component.len() > 1 {
                        let ids: Vec<usize> = component.iter().map(|i| i + 1).collect();
                        println!("   subdiagram {ids:?}: {kind}");
                    }
                }
            }
        }
    }
}
