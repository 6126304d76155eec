//! Integration tests for graded subalgebras: closure, decomposition,
//! structure conditions, series, canonical forms, and solvability verdicts.

use kacmoody::engine::{parse_element, GradedAlgebra};
use kacmoody::gcm::Gcm;
use kacmoody::rootvec::RootVector;
use kacmoody::subalgebra::{
    abelian_canonical_form, check_locally_finite_structure, decided, decompose, fixture_generators,
    psi_analysis, series, solvability_verdict, span_closure, SeriesKind, SeriesVerdict,
    SubalgebraError, SubalgebraFixture,
};

fn algebra(m: &[&[i64]], h: i64) -> GradedAlgebra {
    let a = Gcm::new(m.iter().map(|r| r.to_vec()).collect()).unwrap();
    let s = a.symmetrize().unwrap();
    GradedAlgebra::build(&a, &s, h).unwrap()
}

fn rv(v: &[i64]) -> RootVector {
    RootVector(v.to_vec())
}

/// The three-dimensional nilpotent subalgebra of the rank-3 fixture:
/// span(e1, x, omega(y)) with x the reflected partner of y.
fn heisenberg(g: &GradedAlgebra) -> kacmoody::subalgebra::GradedSubalgebra {
    let y = parse_element(g, "[e3,[e2,e1]] + 2*[e2,[e3,e1]]").unwrap();
    let x = g.simple_reflection_star(0, &y).unwrap();
    let ystar = g.omega(&y);
    let e1 = parse_element(g, "e1").unwrap();
    span_closure(g, &[e1, x, ystar]).unwrap()
}

#[test]
fn single_generator_closure() {
    let g = algebra(&[&[2, -1], &[-1, 2]], 3);
    let l = span_closure(&g, &[parse_element(&g, "e1").unwrap()]).unwrap();
    assert_eq!(l.closure.total_dim(), 1);
    assert!(l.boundary_events.is_empty());
}

#[test]
fn non_homogeneous_generators_are_rejected() {
    let g = algebra(&[&[2, -1], &[-1, 2]], 3);
    let x = parse_element(&g, "e1 + e2").unwrap();
    assert!(matches!(
        span_closure(&g, &[x]),
        Err(SubalgebraError::NotHomogeneous(_))
    ));
}

#[test]
fn heisenberg_fixture_is_three_dimensional_and_closed() {
    let g = algebra(&[&[2, -2, -1], &[-2, 2, -1], &[-1, -1, 2]], 6);
    let l = heisenberg(&g);
    assert_eq!(l.closure.total_dim(), 3);
    assert!(l.boundary_events.is_empty());
    let d = decompose(&g, &l);
    assert!(d.l0.is_empty());
    assert_eq!(d.psi, vec![rv(&[1, 0, 0])]);
    assert_eq!(d.im_plus.len(), 1);
    assert_eq!(d.im_plus[0].0, rv(&[2, 1, 1]));
    assert_eq!(d.im_minus.len(), 1);
    assert_eq!(d.im_minus[0].0, rv(&[-1, -1, -1]));
    // graded dimensions add up degree by degree
    let total: usize = d.l0.len()
        + d.psi.len()
        + d.im_plus.iter().map(|(_, b)| b.len()).sum::<usize>()
        + d.im_minus.iter().map(|(_, b)| b.len()).sum::<usize>();
    assert_eq!(total, l.closure.total_dim());
}

#[test]
fn heisenberg_fixture_structure_and_series() {
    let g = algebra(&[&[2, -2, -1], &[-2, 2, -1], &[-1, -1, 2]], 6);
    let l = heisenberg(&g);
    let report = check_locally_finite_structure(&g, &l).unwrap();
    assert!(report.all_hold, "{report:?}");

    let lower = series(&g, &l, SeriesKind::LowerCentral, 10).unwrap();
    assert_eq!(lower.verdict, SeriesVerdict::TerminatesAtStep(2));
    assert!(lower.certified);
    assert_eq!(lower.steps[1], vec![(rv(&[1, 0, 0]), 1)], "L^1 = C e_1");

    let derived = series(&g, &l, SeriesKind::Derived, 10).unwrap();
    assert_eq!(derived.verdict, SeriesVerdict::TerminatesAtStep(2));

    let verdict = solvability_verdict(&g, &l, 10).unwrap();
    assert_eq!(decided(&verdict.derived), Some(true), "solvable");
    assert_eq!(verdict.solvable_iff_l2_nilpotent, Some(true));
    assert!(verdict.cartan_condition.holds);
}

#[test]
fn profiles_dominate_their_successors() {
    let g = algebra(&[&[2, -2, -1], &[-2, 2, -1], &[-1, -1, 2]], 6);
    let l = heisenberg(&g);
    for kind in [SeriesKind::Derived, SeriesKind::LowerCentral] {
        let report = series(&g, &l, kind, 10).unwrap();
        for w in report.steps.windows(2) {
            let dim = |p: &Vec<(RootVector, usize)>| p.iter().map(|(_, d)| d).sum::<usize>();
            assert!(dim(&w[1]) <= dim(&w[0]));
        }
    }
}

#[test]
fn sl2_fixture_is_not_solvable() {
    let g = algebra(&[&[2, -1], &[-1, 2]], 3);
    let gens = ["e1", "f1", "h1"]
        .iter()
        .map(|t| parse_element(&g, t).unwrap())
        .collect::<Vec<_>>();
    let l = span_closure(&g, &gens).unwrap();
    assert_eq!(l.closure.total_dim(), 3);
    let derived = series(&g, &l, SeriesKind::Derived, 16).unwrap();
    assert!(derived.stabilized);
    assert!(derived.certified);
    assert_eq!(decided(&derived), Some(false), "an sl2 copy never resolves");
    let verdict = solvability_verdict(&g, &l, 16).unwrap();
    assert_eq!(
        verdict.solvable_iff_l2_nilpotent,
        Some(true),
        "both sides false"
    );
    assert!(!verdict.cartan_condition.holds, "h lies in [L,L] and acts");
}

#[test]
fn psi_analysis_cases() {
    let g = algebra(&[&[2, -1], &[-1, 2]], 3);
    let a1 = rv(&[1, 0]);
    let a2 = rv(&[0, 1]);
    let r = psi_analysis(&g, &[a1.clone()]).unwrap();
    assert!(r.psi_s.is_empty());
    assert_eq!(r.psi_n, vec![a1.clone()]);
    assert!(r.closed);
    assert_eq!(r.h_s_dim, 0);

    let r = psi_analysis(&g, &[a1.clone(), -a1.clone()]).unwrap();
    assert_eq!(r.psi_s.len(), 2);
    assert!(r.closed);
    assert_eq!(r.h_s_dim, 1);

    let r = psi_analysis(&g, &[a1.clone(), a2.clone()]).unwrap();
    assert!(!r.closed, "alpha_1 + alpha_2 is a root outside the set");
    assert!(r.witness.is_some());

    // the highest root of the rank-2 finite system is real
    assert!(psi_analysis(&g, &[rv(&[1, 1])]).is_ok());
    let aff = algebra(&[&[2, -2], &[-2, 2]], 4);
    assert!(matches!(
        psi_analysis(&aff, &[rv(&[1, 1])]),
        Err(SubalgebraError::NotRealRoot(_))
    ));
}

#[test]
fn affine_tower_lower_central_profiles() {
    // L = g_delta + sum_{n >= 0} g_{n delta + alpha_1} inside the affine
    // rank-2 algebra: the lower central series walks up the tower
    let g = algebra(&[&[2, -2], &[-2, 2]], 10);
    let fixture = SubalgebraFixture {
        generators: vec![],
        patterns: vec![
            kacmoody::subalgebra::DegreePattern {
                base_degree: vec![1, 1],
                step_degree: None,
                component: "full".into(),
                from: 0,
            },
            kacmoody::subalgebra::DegreePattern {
                base_degree: vec![1, 0],
                step_degree: Some(vec![1, 1]),
                component: "full".into(),
                from: 0,
            },
        ],
    };
    let gens = fixture_generators(&g, &fixture).unwrap();
    let l = span_closure(&g, &gens).unwrap();
    // within height 10: delta plus the tower n delta + alpha_1 for n <= 4
    assert_eq!(l.closure.total_dim(), 6);
    assert!(!l.boundary_events.is_empty(), "the tower runs off the top");

    let lower = series(&g, &l, SeriesKind::LowerCentral, 8).unwrap();
    // L^n = g_{Psi_n} within the truncation, for n = 1..4
    for n in 1..=4usize {
        let expected: Vec<(RootVector, usize)> =
            (n as i64..=4).map(|k| (rv(&[k + 1, k]), 1usize)).collect();
        assert_eq!(lower.steps[n], expected, "L^{n} = g_(Psi_{n})");
    }
    assert!(
        !matches!(lower.verdict, SeriesVerdict::TerminatesAtStep(_)),
        "the tower is not nilpotent at this truncation"
    );

    // the structure conditions must fail: real spaces do not commute with
    // the imaginary line
    let report = check_locally_finite_structure(&g, &l).unwrap();
    assert!(!report.real_commutes_with_imaginary.holds);
}

#[test]
fn extended_affine_tower_derived_series() {
    // adjoining the derivation that scales the tower: Lhat = C d + L;
    // its first derived algebra is g_delta + Psi_1, the second is g_{Psi_2}
    let g = algebra(&[&[2, -2], &[-2, 2]], 10);
    let fixture = SubalgebraFixture {
        generators: vec!["d2".into()],
        patterns: vec![
            kacmoody::subalgebra::DegreePattern {
                base_degree: vec![1, 1],
                step_degree: None,
                component: "full".into(),
                from: 0,
            },
            kacmoody::subalgebra::DegreePattern {
                base_degree: vec![1, 0],
                step_degree: Some(vec![1, 1]),
                component: "full".into(),
                from: 0,
            },
        ],
    };
    let gens = fixture_generators(&g, &fixture).unwrap();
    let l = span_closure(&g, &gens).unwrap();
    assert_eq!(l.closure.total_dim(), 7);

    let derived = series(&g, &l, SeriesKind::Derived, 8).unwrap();
    // Lhat^(1) = g_delta + g_{Psi_1}
    let mut expected1 = vec![(rv(&[1, 1]), 1usize)];
    expected1.extend((1..=4).map(|k| (rv(&[k + 1, k]), 1usize)));
    expected1.sort();
    assert_eq!(derived.steps[1], expected1);
    // Lhat^(2) = g_{Psi_2}
    let expected2: Vec<(RootVector, usize)> = (2..=4).map(|k| (rv(&[k + 1, k]), 1usize)).collect();
    assert_eq!(derived.steps[2], expected2);

    let verdict = solvability_verdict(&g, &l, 8).unwrap();
    // the Cartan condition fails: d2 is not in [L,L], but h coming from the
    // tower brackets... in fact h ∩ [L,L] = 0 here, so it holds vacuously
    assert!(verdict.cartan_condition.holds);
    assert!(verdict.diagram_has_affine_subdiagram);
    assert_eq!(
        verdict.solvable_iff_l1_nilpotent, None,
        "the affine biconditional is not asserted on affine diagrams"
    );
}

#[test]
fn abelian_canonical_forms() {
    // single anisotropic line in the rank-3 fixture
    let g = algebra(&[&[2, -2, -1], &[-2, 2, -1], &[-1, -1, 2]], 6);
    let y = parse_element(&g, "[e3,[e2,e1]] + 2*[e2,[e3,e1]]").unwrap();
    let x = g.simple_reflection_star(0, &y).unwrap();
    let l = span_closure(&g, &[x]).unwrap();
    let form = abelian_canonical_form(&g, &l).unwrap();
    assert_eq!(form.anisotropic.len(), 1);
    assert!(form.isotropic.is_empty());
    // the line moves into the fundamental cone: (2,1,1) reduces to (1,1,1)
    assert_eq!(form.anisotropic[0].0, rv(&[1, 1, 1]));
    assert_eq!(
        g.symmetrization().norm(&form.anisotropic[0].0).unwrap(),
        kacmoody::exact::rat(-2)
    );

    // isotropic block: g_delta + g_{2 delta} in the affine algebra
    let aff = algebra(&[&[2, -2], &[-2, 2]], 8);
    let fixture = SubalgebraFixture {
        generators: vec![],
        patterns: vec![
            kacmoody::subalgebra::DegreePattern {
                base_degree: vec![1, 1],
                step_degree: None,
                component: "full".into(),
                from: 0,
            },
            kacmoody::subalgebra::DegreePattern {
                base_degree: vec![2, 2],
                step_degree: None,
                component: "full".into(),
                from: 0,
            },
        ],
    };
    let gens = fixture_generators(&aff, &fixture).unwrap();
    let l = span_closure(&aff, &gens).unwrap();
    let form = abelian_canonical_form(&aff, &l).unwrap();
    assert!(form.anisotropic.is_empty());
    assert_eq!(form.isotropic.len(), 1);
    assert_eq!(form.isotropic[0].0, rv(&[1, 1]));
    assert_eq!(form.isotropic[0].1.len(), 2, "two levels in the block");
    assert!(form.word.is_empty());

    // two independent lines with negatively-paired degrees are not abelian
    let y2 = parse_element(&g, "[e3,[e2,e1]] + 2*[e2,[e3,e1]]").unwrap();
    let x2 = g.simple_reflection_star(0, &y2).unwrap();
    let both = span_closure(&g, &[y2, x2]);
    match both {
        Ok(l2) => {
            assert!(matches!(
                abelian_canonical_form(&g, &l2),
                Err(SubalgebraError::NotAbelian(_, _))
            ));
        }
        Err(e) => panic!("closure failed: {e}"),
    }
}

#[test]
fn canonical_form_rejects_real_content() {
    let g = algebra(&[&[2, -1], &[-1, 2]], 3);
    let l = span_closure(&g, &[parse_element(&g, "e1").unwrap()]).unwrap();
    assert!(matches!(
        abelian_canonical_form(&g, &l),
        Err(SubalgebraError::NotInNimPlus(_))
    ));
}

#[test]
fn extended_tower_decomposition_has_a_cartan_line() {
    let g = algebra(&[&[2, -2], &[-2, 2]], 10);
    let fixture = SubalgebraFixture {
        generators: vec!["d2".into()],
        patterns: vec![
            kacmoody::subalgebra::DegreePattern {
                base_degree: vec![1, 1],
                step_degree: None,
                component: "full".into(),
                from: 0,
            },
            kacmoody::subalgebra::DegreePattern {
                base_degree: vec![1, 0],
                step_degree: Some(vec![1, 1]),
                component: "full".into(),
                from: 0,
            },
        ],
    };
    let gens = fixture_generators(&g, &fixture).unwrap();
    let l = span_closure(&g, &gens).unwrap();
    let d = decompose(&g, &l);
    assert_eq!(d.l0.len(), 1, "the derivation line");
    assert_eq!(d.im_plus.len(), 1, "the null-root line");
    assert_eq!(d.psi.len(), 5, "tower levels 0..4");
    // the structure conditions fail exactly as expected: the tower levels do
    // not commute with the null-root line
    let report = check_locally_finite_structure(&g, &l).unwrap();
    assert!(!report.real_commutes_with_imaginary.holds);
    assert!(report.psi_closed.holds);
}

#[test]
fn closed_real_sets_split_into_symmetric_and_nilpotent_parts() {
    // in the rank-2 finite system, {a1, -a1, a2, a1+a2} is closed; its
    // symmetric part carries one coroot line and the rest is the nilpotent
    // part
    let g = algebra(&[&[2, -1], &[-1, 2]], 3);
    let psi = vec![rv(&[1, 0]), rv(&[-1, 0]), rv(&[0, 1]), rv(&[1, 1])];
    let analysis = psi_analysis(&g, &psi).unwrap();
    assert!(analysis.closed);
    assert_eq!(analysis.psi_s.len(), 2);
    assert_eq!(analysis.psi_n.len(), 2);
    assert_eq!(analysis.h_s_dim, 1);
}
