//! A three-dimensional nilpotent graded subalgebra: closure, decomposition,
//! structure conditions, series, and the abelian canonical form of its
//! positive imaginary line.
//!
//! Run with `cargo run --example heisenberg_subalgebra`.

use kacmoody::engine::{parse_element, GradedAlgebra};
use kacmoody::gcm::Gcm;
use kacmoody::subalgebra::{
    abelian_canonical_form, check_locally_finite_structure, decompose, series, span_closure,
    SeriesKind,
};

fn main() {
    let gcm = Gcm::new(vec![vec![2, -2, -1], vec![-2, 2, -1], vec![-1, -1, 2]]).unwrap();
    let symm = gcm.symmetrize().unwrap();
    let g = GradedAlgebra::build(&gcm, &symm, 6).unwrap();

    let y = parse_element(&g, "[e3,[e2,e1]] + 2*[e2,[e3,e1]]").unwrap();
    let x = g.simple_reflection_star(0, &y).unwrap();
    let ystar = g.omega(&y);
    let e1 = parse_element(&g, "e1").unwrap();

    let l = span_closure(&g, &[e1, x.clone(), ystar]).unwrap();
    println!("closure dimension: {}", l.closure.total_dim());
    for (deg, dim) in l.closure.profile() {
        println!("  degree {deg}: dim {dim}");
    }

    let d = decompose(&g, &l);
    println!(
        "decomposition: |Psi| = {}, dim L0 = {}, imaginary degrees {:?} / {:?}",
        d.psi.len(),
        d.l0.len(),
        d.im_plus.iter().map(|(v, _)| v.clone()).collect::<Vec<_>>(),
        d.im_minus
            .iter()
            .map(|(v, _)| v.clone())
            .collect::<Vec<_>>(),
    );

    let structure = check_locally_finite_structure(&g, &l).unwrap();
    println!("structure conditions hold: {}", structure.all_hold);

    for kind in [SeriesKind::Derived, SeriesKind::LowerCentral] {
        let report = series(&g, &l, kind, 8).unwrap();
        println!("{kind:?} series verdict: {:?}", report.verdict);
    }

    // the positive imaginary line alone is abelian; its canonical form is a
    // single anisotropic line moved into the fundamental cone
    let line = span_closure(&g, &[x]).unwrap();
    let form = abelian_canonical_form(&g, &line).unwrap();
    println!(
        "canonical form: word {:?}, anisotropic degrees {:?}",
        form.word.0.iter().map(|i| i + 1).collect::<Vec<_>>(),
        form.anisotropic
            .iter()
            .map(|(d, _)| d.clone())
            .collect::<Vec<_>>(),
    );
}
