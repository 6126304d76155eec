//! Enumerate positive roots of a hyperbolic matrix, classify lattice
//! vectors, reduce them to the fundamental cone, and walk root strings.
//!
//! Run with `cargo run --example enumerate_roots`.

use kacmoody::exact::rat_to_string;
use kacmoody::gcm::Gcm;
use kacmoody::roots::{classify_root, disjointify, enumerate_positive_roots, root_string};
use kacmoody::rootvec::RootVector;

fn main() {
    let gcm = Gcm::new(vec![vec![2, -3], vec![-3, 2]]).unwrap();
    let symm = gcm.symmetrize().unwrap();

    println!("positive roots of [[2,-3],[-3,2]] up to height 6:");
    for (root, class) in enumerate_positive_roots(&gcm, &symm, 6).unwrap() {
        println!(
            "  {root}  {:?}  norm {}  cone rep {} via word {:?}",
            class.kind,
            rat_to_string(&symm.norm(&root).unwrap()),
            class.orbit_rep,
            class.word.0.iter().map(|i| i + 1).collect::<Vec<_>>(),
        );
    }

    let alpha = RootVector(vec![1, 0]);
    let beta = RootVector(vec![2, 2]);
    let string = root_string(&gcm, &symm, &alpha, &beta).unwrap();
    println!(
        "\nroot string of {beta} through {alpha}: p = {}, q = {}, case {}",
        string.p, string.q, string.case
    );

    // a vector that reduction exposes as a non-root
    let probe = RootVector(vec![2, 1]);
    let class = classify_root(&gcm, &symm, &probe);
    println!(
        "\n{probe} classifies as {:?} (witness {})",
        class.kind, class.orbit_rep
    );

    // support disjointification on a block-diagonal matrix: an affine block
    // and a hyperbolic block, the second root moved out of the cone
    let blocks = Gcm::new(vec![
        vec![2, -2, 0, 0],
        vec![-2, 2, 0, 0],
        vec![0, 0, 2, -3],
        vec![0, 0, -3, 2],
    ])
    .unwrap();
    let bs = blocks.symmetrize().unwrap();
    let moved = RootVector(vec![0, 0, 2, 1]); // the image of (0,0,1,1) under s_3
    let (word, reps) =
        disjointify(&blocks, &bs, &[RootVector(vec![1, 1, 0, 0]), moved.clone()]).unwrap();
    println!(
        "\ndisjointify [(1,1,0,0), {moved}]: word {:?} moves them to {} and {}",
        word.0.iter().map(|i| i + 1).collect::<Vec<_>>(),
        reps[0],
        reps[1]
    );
}
