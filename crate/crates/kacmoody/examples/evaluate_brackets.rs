//! Parse bracket expressions and evaluate brackets, the Chevalley
//! involution, reflection automorphisms, and dual constants in the rank-3
//! algebra with an affine face.
//!
//! Run with `cargo run --example evaluate_brackets`.

use kacmoody::engine::{parse_element, GradedAlgebra};
use kacmoody::exact::rat_to_string;
use kacmoody::gcm::Gcm;

fn main() {
    let gcm = Gcm::new(vec![vec![2, -2, -1], vec![-2, 2, -1], vec![-1, -1, 2]]).unwrap();
    let symm = gcm.symmetrize().unwrap();
    let g = GradedAlgebra::build(&gcm, &symm, 6).unwrap();

    let y = parse_element(&g, "[e3,[e2,e1]] + 2*[e2,[e3,e1]]").unwrap();
    println!("y          = {}", y.render(&g));
    println!("deg y      = {:?}", y.degrees());

    let f1y = g.bracket(&parse_element(&g, "f1").unwrap(), &y).unwrap();
    println!("[f1, y]    = {}", f1y.render(&g));

    let x = g.simple_reflection_star(0, &y).unwrap();
    println!("s1* y      = {}", x.render(&g));
    println!("deg s1* y  = {:?}", x.degrees());

    let ystar = g.omega(&y);
    println!("omega(y)   = {}", ystar.render(&g));

    let pairing = g.bracket(&ystar, &x).unwrap();
    println!("[omega(y), s1* y] = {}", pairing.render(&g));

    let c = g.dual_constant(&y).unwrap();
    println!(
        "dual constant of y: [omega(y), y] = {} * (dual Cartan vector of deg y)",
        rat_to_string(&c)
    );

    // the center is trivial here; the affine rank-2 matrix has a null line
    println!("center dimension: {}", g.center().len());
    let aff = Gcm::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
    let aff_symm = aff.symmetrize().unwrap();
    let aff_algebra = GradedAlgebra::build(&aff, &aff_symm, 4).unwrap();
    let center = aff_algebra.center();
    println!(
        "affine center: {}",
        center
            .iter()
            .map(|c| c.render(&aff_algebra))
            .collect::<Vec<_>>()
            .join(", ")
    );
}
