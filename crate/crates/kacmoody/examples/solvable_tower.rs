//! A solvable but non-nilpotent graded subalgebra of the affine rank-2
//! algebra: the null-root line acting on a tower of real root spaces, and
//! the effect of adjoining the scaling derivation.
//!
//! Run with `cargo run --example solvable_tower`.

use kacmoody::engine::{parse_element, GradedAlgebra};
use kacmoody::gcm::Gcm;
use kacmoody::subalgebra::{
    fixture_generators, series, solvability_verdict, span_closure, DegreePattern, SeriesKind,
    SubalgebraFixture,
};

fn main() {
    let gcm = Gcm::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
    let symm = gcm.symmetrize().unwrap();
    let g = GradedAlgebra::build(&gcm, &symm, 10).unwrap();

    // L = g_delta + sum_{n >= 0} g_{n delta + alpha_1}
    let fixture = SubalgebraFixture {
        generators: vec![],
        patterns: vec![
            DegreePattern {
                base_degree: vec![1, 1],
                step_degree: None,
                component: "full".into(),
                from: 0,
            },
            DegreePattern {
                base_degree: vec![1, 0],
                step_degree: Some(vec![1, 1]),
                component: "full".into(),
                from: 0,
            },
        ],
    };
    let gens = fixture_generators(&g, &fixture).unwrap();
    let l = span_closure(&g, &gens).unwrap();
    println!(
        "tower dimension {} ({} boundary events at the height bound)",
        l.closure.total_dim(),
        l.boundary_events.len()
    );
    let lower = series(&g, &l, SeriesKind::LowerCentral, 8).unwrap();
    for (n, profile) in lower.steps.iter().enumerate().skip(1).take(4) {
        let degrees: Vec<String> = profile.iter().map(|(d, _)| d.to_string()).collect();
        println!("  lower central step {n}: {}", degrees.join(" "));
    }
    println!("  verdict: {:?}", lower.verdict);

    // adjoin the derivation scaling the tower: the derived series now drops
    // to the second tower level in two steps
    let mut extended = gens;
    extended.push(parse_element(&g, "d2").unwrap());
    let lhat = span_closure(&g, &extended).unwrap();
    let derived = series(&g, &lhat, SeriesKind::Derived, 8).unwrap();
    for (n, profile) in derived.steps.iter().enumerate().take(4) {
        let degrees: Vec<String> = profile.iter().map(|(d, _)| d.to_string()).collect();
        println!("extended tower derived step {n}: {}", degrees.join(" "));
    }
    let verdict = solvability_verdict(&g, &lhat, 8).unwrap();
    println!(
        "Cartan condition holds: {}; affine subdiagram present: {}",
        verdict.cartan_condition.holds, verdict.diagram_has_affine_subdiagram
    );
}
