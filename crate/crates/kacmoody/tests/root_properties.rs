//! Property sweeps for the root-system layer: sign lemmas, orthogonality of
//! real roots bracketing imaginary ones into real strings, support
//! containment under cone reduction, Weyl invariance, and the
//! multiplicity/classification equivalence. Exhaustive over all lattice
//! vectors inside the stated height bounds.

use kacmoody::engine::{GradedAlgebra, PetersonTable};
use kacmoody::exact::Rat;
use kacmoody::gcm::{Gcm, Symmetrization};
use kacmoody::roots::{
    self, apply_word, check_height_coordinate_lemma, classify_root, in_fundamental_cone,
    reduce_min_height, RootKind,
};
use kacmoody::rootvec::{RootVector, WeylWord};
use num::Zero;
use proptest::prelude::*;

fn gcm(m: &[&[i64]]) -> (Gcm, Symmetrization) {
    let a = Gcm::new(m.iter().map(|r| r.to_vec()).collect()).unwrap();
    let s = a.symmetrize().unwrap();
    (a, s)
}

fn test_matrices() -> Vec<Vec<Vec<i64>>> {
    vec![
        vec![vec![2, -1], vec![-1, 2]],
        vec![vec![2, -2], vec![-2, 2]],
        vec![vec![2, -3], vec![-3, 2]],
        vec![vec![2, -2, -1], vec![-2, 2, -1], vec![-1, -1, 2]],
    ]
}

fn positive_roots(a: &Gcm, s: &Symmetrization, h: i64) -> Vec<(RootVector, RootKind)> {
    roots::enumerate_positive_roots(a, s, h)
        .unwrap()
        .into_iter()
        .map(|(v, c)| (v, c.kind))
        .collect()
}

#[test]
fn imaginary_pairs_pair_nonpositively() {
    // (alpha | beta) <= 0 for positive imaginary pairs; strictly negative
    // when the sum is a root, unless proportional isotropic; and a strictly
    // negative pairing forces the sum to be a root
    let mut checked = 0;
    for m in test_matrices() {
        let (a, s) = gcm(&m.iter().map(|r| r.as_slice()).collect::<Vec<_>>());
        let all = positive_roots(&a, &s, 8);
        let imaginary: Vec<&RootVector> = all
            .iter()
            .filter(|(_, k)| k.is_imaginary())
            .map(|(v, _)| v)
            .collect();
        for alpha in &imaginary {
            for beta in &imaginary {
                let form = s.bilinear(alpha, beta).unwrap();
                assert!(form <= Rat::zero(), "({alpha}|{beta}) = {form} > 0");
                let sum = *alpha + *beta;
                let sum_kind = classify_root(&a, &s, &sum).kind;
                let both_isotropic = alpha.proportional(beta)
                    && classify_root(&a, &s, alpha).kind == RootKind::ImaginaryIsotropic;
                if sum_kind.is_root() && !both_isotropic {
                    assert!(form < Rat::zero(), "root sum needs ({alpha}|{beta}) < 0");
                }
                if form < Rat::zero() {
                    assert!(
                        sum_kind.is_imaginary() && sum.is_positive(),
                        "negative pairing must give an imaginary positive sum at {alpha}, {beta}"
                    );
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn imaginary_between_real_neighbours_is_orthogonal() {
    // beta imaginary positive, gamma real, beta +- gamma both real forces
    // (beta | gamma) = 0
    for m in test_matrices() {
        let (a, s) = gcm(&m.iter().map(|r| r.as_slice()).collect::<Vec<_>>());
        let all = positive_roots(&a, &s, 8);
        let mut cases = 0;
        for (beta, kb) in &all {
            if !kb.is_imaginary() {
                continue;
            }
            for (gamma, kg) in &all {
                if !kg.is_real() {
                    continue;
                }
                for signed in [gamma.clone(), -gamma.clone()] {
                    let plus = classify_root(&a, &s, &(beta + &signed)).kind;
                    let minus = classify_root(&a, &s, &(beta - &signed)).kind;
                    if plus.is_real() && minus.is_real() {
                        cases += 1;
                        assert!(
                            s.bilinear(beta, &signed).unwrap().is_zero(),
                            "({beta}|{signed}) must vanish"
                        );
                    }
                }
            }
        }
        let _ = cases; // some matrices have no qualifying pair; others do
    }
}

#[test]
fn isotropic_cone_images_control_real_supports() {
    // alpha real, beta isotropic imaginary positive with (alpha|beta) >= 0:
    // after moving beta into the cone, the image of alpha has support inside
    // the image of beta, or their supports fall apart
    for m in test_matrices() {
        let (a, s) = gcm(&m.iter().map(|r| r.as_slice()).collect::<Vec<_>>());
        let diagram = a.diagram();
        let all = positive_roots(&a, &s, 8);
        for (beta, kb) in &all {
            if *kb != RootKind::ImaginaryIsotropic {
                continue;
            }
            let (cone, word) = reduce_min_height(&a, beta).unwrap();
            for (gamma, kg) in &all {
                if !kg.is_real() {
                    continue;
                }
                for alpha in [gamma.clone(), -gamma.clone()] {
                    if s.bilinear(&alpha, beta).unwrap() < Rat::zero() {
                        continue;
                    }
                    let moved = apply_word(&a, &word, &alpha).unwrap();
                    if !moved.is_positive() {
                        // the containment claim concerns images that stay in
                        // the positive cone; a negative image can touch the
                        // support from outside
                        continue;
                    }
                    let sa: Vec<usize> = moved.support();
                    let sb: Vec<usize> = cone.support();
                    let contained = sa.iter().all(|i| sb.contains(i));
                    let union: Vec<usize> = {
                        let mut u = sa.clone();
                        u.extend(&sb);
                        u.sort_unstable();
                        u.dedup();
                        u
                    };
                    let connected = diagram.is_connected_subset(&union);
                    assert!(
                        contained || !connected,
                        "support of {moved} neither inside {cone} nor separated"
                    );
                }
            }
        }
    }
}

#[test]
fn classification_is_weyl_invariant() {
    for m in test_matrices() {
        let (a, s) = gcm(&m.iter().map(|r| r.as_slice()).collect::<Vec<_>>());
        let all = positive_roots(&a, &s, 6);
        for (v, kind) in &all {
            for i in 0..a.rank() {
                let moved = roots::reflect(&a, i, v).unwrap();
                let moved_kind = classify_root(&a, &s, &moved).kind;
                // the form is invariant
                assert_eq!(s.norm(v).unwrap(), s.norm(&moved).unwrap());
                match kind {
                    RootKind::RealPositive | RootKind::RealNegative => {
                        assert!(moved_kind.is_real());
                    }
                    RootKind::ImaginaryIsotropic | RootKind::ImaginaryAnisotropic => {
                        assert_eq!(moved_kind, *kind, "imaginary kinds are stable");
                    }
                    RootKind::NotARoot => unreachable!(),
                }
            }
        }
    }
}

#[test]
fn multiplicity_positive_exactly_on_roots() {
    // classification agrees with the graded build and with the recursion
    // oracle on every lattice point of bounded height
    for m in test_matrices() {
        let h = if m.len() == 3 { 6 } else { 8 };
        let (a, s) = gcm(&m.iter().map(|r| r.as_slice()).collect::<Vec<_>>());
        let g = GradedAlgebra::build(&a, &s, h).unwrap();
        let table = PetersonTable::up_to(&a, &s, h).unwrap();
        for height in 1..=h {
            for beta in lattice_points(a.rank(), height) {
                let is_root = classify_root(&a, &s, &beta).kind.is_root();
                let built = g.mult(&beta).unwrap();
                let oracle = table.mult(&beta).unwrap_or(0);
                assert_eq!(built as u64, oracle, "oracle disagreement at {beta}");
                assert_eq!(built > 0, is_root, "classification mismatch at {beta}");
            }
        }
    }
}

#[test]
fn height_coordinate_lemma_random_words() {
    for m in test_matrices() {
        let (a, s) = gcm(&m.iter().map(|r| r.as_slice()).collect::<Vec<_>>());
        let cone_roots: Vec<RootVector> = positive_roots(&a, &s, 8)
            .into_iter()
            .filter(|(v, k)| k.is_imaginary() && in_fundamental_cone(&a, v).unwrap())
            .map(|(v, _)| v)
            .collect();
        // deterministic word pool over the alphabet
        let n = a.rank();
        let mut words = vec![vec![], vec![0], vec![n - 1]];
        for len in 2..=5usize {
            let mut w = Vec::new();
            for t in 0..len {
                w.push((t * (len + 1) + 1) % n);
            }
            words.push(w.clone());
            w.reverse();
            words.push(w);
        }
        for alpha in &cone_roots {
            for i in 0..n {
                if a.pairing(alpha, i).unwrap() == 0 {
                    continue;
                }
                for w in &words {
                    assert!(
                        check_height_coordinate_lemma(&a, &s, alpha, i, &WeylWord(w.clone()))
                            .unwrap(),
                        "height-coordinate predicate failed at {alpha}, i={i}, {w:?}"
                    );
                }
            }
        }
    }
}

fn lattice_points(n: usize, height: i64) -> Vec<RootVector> {
    let mut out = Vec::new();
    fn rec(n: usize, at: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<RootVector>) {
        if at == n - 1 {
            cur[at] = left;
            out.push(RootVector(cur.clone()));
            return;
        }
        for x in 0..=left {
            cur[at] = x;
            rec(n, at + 1, left - x, cur, out);
        }
        cur[at] = 0;
    }
    let mut cur = vec![0i64; n];
    rec(n, 0, height, &mut cur, &mut out);
    out
}

// randomised structural laws over small symmetrisable matrices

fn arbitrary_gcm() -> impl Strategy<Value = Vec<Vec<i64>>> {
    let entry = prop_oneof![
        Just((0i64, 0i64)),
        Just((-1, -1)),
        Just((-2, -1)),
        Just((-1, -2)),
        Just((-2, -2)),
        Just((-3, -1)),
        Just((-1, -3)),
    ];
    proptest::collection::vec(entry, 3).prop_map(|offdiag| {
        // rank 3 with prescribed opposite pairs (12, 13, 23)
        let (a12, a21) = offdiag[0];
        let (a13, a31) = offdiag[1];
        let (a23, a32) = offdiag[2];
        vec![vec![2, a12, a13], vec![a21, 2, a23], vec![a31, a32, 2]]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symmetrisation_factors_the_matrix(m in arbitrary_gcm()) {
        let a = Gcm::new(m).unwrap();
        if let Ok(s) = a.symmetrize() {
            for i in 0..3 {
                for j in 0..3 {
                    prop_assert_eq!(
                        &s.d[i] * &s.b[i][j],
                        kacmoody::exact::rat(a.entry(i, j))
                    );
                    prop_assert_eq!(s.b[i][j].clone(), s.b[j][i].clone());
                }
            }
            let min = s.d.iter().min().unwrap();
            prop_assert!(min <= &kacmoody::exact::rat(1));
        }
    }

    #[test]
    fn reflections_are_involutive_and_form_invariant(
        m in arbitrary_gcm(),
        coords in proptest::collection::vec(0i64..4, 3),
        i in 0usize..3,
    ) {
        let a = Gcm::new(m).unwrap();
        let Ok(s) = a.symmetrize() else { return Ok(()); };
        let v = RootVector(coords);
        let w = roots::reflect(&a, i, &v).unwrap();
        prop_assert_eq!(roots::reflect(&a, i, &w).unwrap(), v.clone());
        prop_assert_eq!(s.norm(&v).unwrap(), s.norm(&w).unwrap());
    }

    #[test]
    fn coroot_pairing_consistency(
        m in arbitrary_gcm(),
        coords in proptest::collection::vec(0i64..4, 3),
        i in 0usize..3,
    ) {
        // <beta, alpha_i^vee> = 2 (beta | alpha_i) / (alpha_i | alpha_i)
        let a = Gcm::new(m).unwrap();
        let Ok(s) = a.symmetrize() else { return Ok(()); };
        let v = RootVector(coords);
        let lhs = kacmoody::exact::rat(a.pairing(&v, i).unwrap());
        let alpha_i = RootVector::simple(3, i);
        let rhs = kacmoody::exact::rat(2) * s.bilinear(&v, &alpha_i).unwrap()
            / s.norm(&alpha_i).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn reduction_words_stay_inside_the_support() {
    // for an imaginary positive root, the greedy reduction word only uses
    // letters from the root's support
    for m in test_matrices() {
        let (a, s) = gcm(&m.iter().map(|r| r.as_slice()).collect::<Vec<_>>());
        for (beta, kind) in positive_roots(&a, &s, 8) {
            if !kind.is_imaginary() {
                continue;
            }
            let (_, word) = reduce_min_height(&a, &beta).unwrap();
            let support = beta.support();
            for letter in word.0 {
                assert!(
                    support.contains(&letter),
                    "reduction of {beta} used letter {letter} outside its support"
                );
            }
        }
    }
}

#[test]
fn multiplicities_are_weyl_invariant() {
    for m in test_matrices() {
        let h = if m.len() == 3 { 6 } else { 8 };
        let (a, s) = gcm(&m.iter().map(|r| r.as_slice()).collect::<Vec<_>>());
        let g = GradedAlgebra::build(&a, &s, h).unwrap();
        for (beta, _) in positive_roots(&a, &s, h) {
            for i in 0..a.rank() {
                let moved = roots::reflect(&a, i, &beta).unwrap();
                if moved.height().abs() > h {
                    continue;
                }
                assert_eq!(
                    g.mult(&beta).unwrap(),
                    g.mult(&moved).unwrap(),
                    "multiplicity must be constant along the orbit of {beta}"
                );
            }
        }
    }
}

#[test]
fn root_string_cases_have_their_stated_shapes() {
    // the five string cases constrain where the real members sit
    for m in test_matrices() {
        let (a, s) = gcm(&m.iter().map(|r| r.as_slice()).collect::<Vec<_>>());
        let all = positive_roots(&a, &s, 7);
        let reals: Vec<RootVector> = all
            .iter()
            .filter(|(_, k)| k.is_real())
            .map(|(v, _)| v.clone())
            .collect();
        for alpha in &reals {
            for (beta, _) in &all {
                let string = roots::root_string(&a, &s, alpha, beta).unwrap();
                let members: Vec<(i64, bool)> = (-string.p..=string.q)
                    .map(|t| {
                        let v = beta + &alpha.scaled(t);
                        (t, classify_root(&a, &s, &v).kind.is_real())
                    })
                    .collect();
                let real_positions: Vec<i64> = members
                    .iter()
                    .filter(|(_, r)| *r)
                    .map(|(t, _)| *t)
                    .collect();
                match string.case {
                    1 => assert!(real_positions.is_empty()),
                    2 => {
                        assert_eq!(real_positions, vec![0], "a lone real member is beta itself");
                        assert_eq!(
                            (string.p, string.q),
                            (0, 0),
                            "and the string is a singleton"
                        );
                    }
                    3 => {
                        if beta.proportional(alpha) {
                            // the collinear string {-alpha, alpha} skips zero
                            assert_eq!(real_positions.len(), 2);
                        } else {
                            assert_eq!(
                                real_positions,
                                vec![-string.p, string.q],
                                "two reals sit at the endpoints of {beta} through {alpha}"
                            );
                        }
                    }
                    4 => {
                        assert_eq!(real_positions.len() as i64, string.p + string.q + 1);
                        assert_eq!(string.p + string.q, 2, "three reals fill the string");
                    }
                    5 => assert_eq!(
                        real_positions,
                        vec![-string.p, -string.p + 1, string.q - 1, string.q]
                    ),
                    other => panic!("impossible case {other}"),
                }
            }
        }
    }
}
