//! Lattice-level root combinatorics, independent of the Lie algebra.
//!
//! Membership and classification go through Weyl-orbit reduction: a sign-pure
//! positive vector is reflected towards minimal height until it reaches a
//! simple root (real), an element of the fundamental cone
//! `K0 = {alpha >= 0 : <alpha, alpha_i^vee> <= 0 for all i}` (imaginary when
//! the support is connected), or leaves the positive cone (not a root).
//! Reduction always picks the smallest index with positive pairing, so
//! witnesses are reproducible.

use crate::gcm::{Gcm, GcmError, Symmetrization};
use crate::rootvec::{RootVector, WeylWord};
use num::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("vector {0} is not sign-pure")]
    NotSignPure(RootVector),
    #[error("alpha = {0} is not a real root")]
    AlphaNotReal(RootVector),
    #[error("beta = {0} is not a root")]
    BetaNotRoot(RootVector),
    #[error("input {0} is not a positive imaginary root")]
    NotImaginaryPositive(usize),
    #[error("inputs {0} and {1} sum to a root")]
    SumIsRoot(usize, usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("height bound {requested} exceeds the configured cap {cap}")]
    HeightBoundTooLarge { requested: i64, cap: i64 },
    #[error(transparent)]
    Gcm(#[from] GcmError),
}

/// Which part of the root system a lattice vector lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootKind {
    NotARoot,
    RealPositive,
    RealNegative,
    ImaginaryIsotropic,
    ImaginaryAnisotropic,
}

impl RootKind {
    pub fn is_root(self) -> bool {
        self != RootKind::NotARoot
    }

    pub fn is_real(self) -> bool {
        matches!(self, RootKind::RealPositive | RootKind::RealNegative)
    }

    pub fn is_imaginary(self) -> bool {
        matches!(
            self,
            RootKind::ImaginaryIsotropic | RootKind::ImaginaryAnisotropic
        )
    }
}

/// Classification of a lattice vector, with the reduction witness: applying
/// `word` (letters left to right) to the input yields `orbit_rep` up to the
/// overall sign of the input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootClass {
    pub kind: RootKind,
    pub orbit_rep: RootVector,
    pub word: WeylWord,
}

/// The set `(beta + Z alpha) ∩ Delta` for real `alpha`: unbroken with
/// endpoints `beta - p alpha` and `beta + q alpha`, and `p - q = <beta,
/// alpha^vee>`. `case` is 1..5 by the number of real roots in the string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootString {
    pub p: i64,
    pub q: i64,
    pub case: u8,
}

/// Applies the simple reflection `s_i`: `beta - <beta, alpha_i^vee> alpha_i`.
pub fn reflect(a: &Gcm, i: usize, beta: &RootVector) -> Result<RootVector, RootError> {
    let pairing = a.pairing(beta, i)?;
    let mut v = beta.clone();
    v.0[i] -= pairing;
    Ok(v)
}

/// Applies a word letter by letter, left to right.
pub fn apply_word(a: &Gcm, word: &WeylWord, beta: &RootVector) -> Result<RootVector, RootError> {
    let mut v = beta.clone();
    for &i in &word.0 {
        v = reflect(a, i, &v)?;
    }
    Ok(v)
}

/// True when all coroot pairings of `v` are nonpositive (`v` lies in the
/// fundamental cone `K0`).
pub fn in_fundamental_cone(a: &Gcm, v: &RootVector) -> Result<bool, RootError> {
    for i in 0..a.rank() {
        if a.pairing(v, i)? > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Greedy height reduction of a sign-pure positive vector: while some index
/// has positive pairing, reflect at the smallest such index. Stops at a
/// simple root, at a fundamental-cone element, or at the first vector with a
/// negative coordinate (a non-root witness).
pub fn reduce_min_height(a: &Gcm, beta: &RootVector) -> Result<(RootVector, WeylWord), RootError> {
    a.check_dim(beta)?;
    if !beta.is_positive() {
        return Err(RootError::NotSignPure(beta.clone()));
    }
    let mut v = beta.clone();
    let mut word = Vec::new();
    loop {
        if v.0.iter().any(|&x| x < 0) || v.height() == 1 {
            return Ok((v, WeylWord(word)));
        }
        let mut chosen = None;
        for i in 0..a.rank() {
            if a.pairing(&v, i)? > 0 {
                chosen = Some(i);
                break;
            }
        }
        match chosen {
            None => return Ok((v, WeylWord(word))),
            Some(i) => {
                v = reflect(a, i, &v)?;
                word.push(i);
            }
        }
    }
}

/// Total classification of a lattice vector.
pub fn classify_root(a: &Gcm, s: &Symmetrization, beta: &RootVector) -> RootClass {
    assert_eq!(beta.rank(), a.rank(), "coordinate vector has wrong length");
    if beta.is_zero() || !beta.is_sign_pure() {
        return RootClass {
            kind: RootKind::NotARoot,
            orbit_rep: beta.clone(),
            word: WeylWord::identity(),
        };
    }
    let negative = beta.is_negative();
    let abs = if negative {
        -beta.clone()
    } else {
        beta.clone()
    };
    let (rep, word) = reduce_min_height(a, &abs).expect("sign-pure positive by construction");
    let kind = if rep.0.iter().any(|&x| x < 0) {
        RootKind::NotARoot
    } else if rep.height() == 1 {
        if negative {
            RootKind::RealNegative
        } else {
            RootKind::RealPositive
        }
    } else {
        // fundamental-cone element: a root iff the support is connected
        if !a.diagram().is_connected_subset(&rep.support()) {
            RootKind::NotARoot
        } else {
            let norm = s.norm(&rep).expect("dimensions checked");
            if norm.is_zero() {
                RootKind::ImaginaryIsotropic
            } else {
                RootKind::ImaginaryAnisotropic
            }
        }
    };
    let orbit_rep = if negative && kind.is_root() {
        -rep
    } else {
        rep
    };
    RootClass {
        kind,
        orbit_rep,
        word,
    }
}

/// Default cap for the enumeration resource guard.
pub const DEFAULT_MAX_HEIGHT: i64 = 64;

/// All positive roots of height at most `h`, sorted by (height, coordinates),
/// each with its classification. Closure under adding one simple root is
/// exhaustive: every positive root of height >= 2 is a positive root plus a
/// simple root.
pub fn enumerate_positive_roots(
    a: &Gcm,
    s: &Symmetrization,
    h: i64,
) -> Result<Vec<(RootVector, RootClass)>, RootError> {
    enumerate_positive_roots_capped(a, s, h, DEFAULT_MAX_HEIGHT)
}

pub fn enumerate_positive_roots_capped(
    a: &Gcm,
    s: &Symmetrization,
    h: i64,
    cap: i64,
) -> Result<Vec<(RootVector, RootClass)>, RootError> {
    if h > cap {
        return Err(RootError::HeightBoundTooLarge { requested: h, cap });
    }
    if h < 1 {
        return Ok(Vec::new());
    }
    let n = a.rank();
    let mut out: Vec<(RootVector, RootClass)> = Vec::new();
    let mut level: Vec<RootVector> = (0..n).map(|i| RootVector::simple(n, i)).collect();
    let mut height = 1;
    while height <= h && !level.is_empty() {
        for v in &level {
            out.push((v.clone(), classify_root(a, s, v)));
        }
        let mut next: BTreeSet<RootVector> = BTreeSet::new();
        for v in &level {
            for i in 0..n {
                let mut c = v.clone();
                c.0[i] += 1;
                if classify_root(a, s, &c).kind.is_root() {
                    next.insert(c);
                }
            }
        }
        level = next.into_iter().collect();
        height += 1;
    }
    out.sort_by_key(|(v, _)| (v.height(), v.0.clone()));
    Ok(out)
}

/// The coroot pairing `<beta, alpha^vee> = 2(beta|alpha)/(alpha|alpha)` for a
/// real root `alpha`; always an integer.
pub fn coroot_pairing(
    s: &Symmetrization,
    beta: &RootVector,
    alpha: &RootVector,
) -> Result<i64, RootError> {
    let num = crate::exact::rat(2) * s.bilinear(beta, alpha)?;
    let den = s.norm(alpha)?;
    let val = num / den;
    if !val.denom().is_one() {
        return Err(RootError::PreconditionViolated(format!(
            "coroot pairing of {beta} against {alpha} is not an integer"
        )));
    }
    i64::try_from(val.numer())
        .map_err(|_| RootError::PreconditionViolated("coroot pairing overflow".into()))
}

/// Root string of a root `beta` through a real root `alpha`.
pub fn root_string(
    a: &Gcm,
    s: &Symmetrization,
    alpha: &RootVector,
    beta: &RootVector,
) -> Result<RootString, RootError> {
    if !classify_root(a, s, alpha).kind.is_real() {
        return Err(RootError::AlphaNotReal(alpha.clone()));
    }
    if !classify_root(a, s, beta).kind.is_root() {
        return Err(RootError::BetaNotRoot(beta.clone()));
    }
    let pairing = coroot_pairing(s, beta, alpha)?;
    let (p, q);
    if beta == alpha {
        // string {-alpha, alpha}: the scan must jump over 0
        p = 2;
        q = 0;
    } else if *beta == -alpha.clone() {
        p = 0;
        q = 2;
    } else {
        let mut k = 0i64;
        while classify_root(a, s, &(beta - &alpha.scaled(k + 1)))
            .kind
            .is_root()
        {
            k += 1;
        }
        p = k;
        q = p - pairing;
    }
    debug_assert!(q >= 0, "root string must extend to beta + q alpha");
    // count real members for the case split
    let reals = (-p..=q)
        .filter(|&t| {
            classify_root(a, s, &(beta + &alpha.scaled(t)))
                .kind
                .is_real()
        })
        .count();
    let case = match reals {
        0 => 1,
        1 => 2,
        2 => 3,
        3 => 4,
        4 => 5,
        other => {
            return Err(RootError::PreconditionViolated(format!(
                "root string with {other} real members"
            )))
        }
    };
    Ok(RootString { p, q, case })
}

/// Greedy reduction word for any nonzero nonnegative vector (it need not be a
/// root); nonnegativity is preserved whenever the vector is a sum of positive
/// imaginary roots, since each summand stays a positive root along the way.
fn reduce_vector_word(a: &Gcm, v: &RootVector) -> Result<(RootVector, WeylWord), RootError> {
    let mut cur = v.clone();
    let mut word = Vec::new();
    loop {
        let mut chosen = None;
        for i in 0..a.rank() {
            if a.pairing(&cur, i)? > 0 {
                chosen = Some(i);
                break;
            }
        }
        match chosen {
            None => return Ok((cur, WeylWord(word))),
            Some(i) => {
                cur = reflect(a, i, &cur)?;
                word.push(i);
            }
        }
    }
}

/// Moves a family of positive imaginary roots with pairwise non-root sums
/// into the fundamental cone by one common Weyl word, so that their supports
/// become distinct connected components of their union.
pub fn disjointify(
    a: &Gcm,
    s: &Symmetrization,
    betas: &[RootVector],
) -> Result<(WeylWord, Vec<RootVector>), RootError> {
    for (t, b) in betas.iter().enumerate() {
        let class = classify_root(a, s, b);
        if !(class.kind.is_imaginary() && b.is_positive()) {
            return Err(RootError::NotImaginaryPositive(t + 1));
        }
    }
    for i in 0..betas.len() {
        for j in i + 1..betas.len() {
            let sum = &betas[i] + &betas[j];
            if classify_root(a, s, &sum).kind.is_root() {
                return Err(RootError::SumIsRoot(i + 1, j + 1));
            }
        }
    }
    let mut word = WeylWord::identity();
    let mut reps: Vec<RootVector> = betas.to_vec();
    if reps.len() == 1 {
        let (rep, w) = reduce_min_height(a, &reps[0])?;
        reps[0] = rep;
        word = word.extended(&w);
    } else {
        // first pair: reduce the (non-root) sum; both images land in the cone
        // with supports in different components
        let sum = &reps[0] + &reps[1];
        let (_, w) = reduce_vector_word(a, &sum)?;
        for r in reps.iter_mut() {
            *r = apply_word(a, &w, r)?;
        }
        word = word.extended(&w);
        // remaining roots one at a time; the greedy word only touches the
        // support of the root being reduced, which is already separated from
        // the settled ones
        for t in 2..reps.len() {
            let (rep, w) = reduce_min_height(a, &reps[t])?;
            let before: Vec<RootVector> = reps[..t].to_vec();
            for r in reps.iter_mut() {
                *r = apply_word(a, &w, r)?;
            }
            if reps[..t] != before[..] {
                return Err(RootError::PreconditionViolated(
                    "disjointification word moved an already-settled root".into(),
                ));
            }
            debug_assert_eq!(reps[t], rep);
            word = word.extended(&w);
        }
    }
    // contract checks: cone membership, disjoint and mutually non-adjacent supports
    let diagram = a.diagram();
    for (t, r) in reps.iter().enumerate() {
        if !in_fundamental_cone(a, r)? {
            return Err(RootError::PreconditionViolated(format!(
                "image {t} left the fundamental cone"
            )));
        }
    }
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            let si = reps[i].support();
            let sj = reps[j].support();
            let crossing = si
                .iter()
                .any(|&u| sj.iter().any(|&v| u == v || diagram.has_edge(u, v)));
            if crossing {
                return Err(RootError::PreconditionViolated(format!(
                    "supports of images {i} and {j} are connected"
                )));
            }
        }
    }
    Ok((word, reps))
}

/// Matrix of the group element named by a word (letters applied left to
/// right), acting on coordinate columns.
fn word_matrix(a: &Gcm, word: &WeylWord) -> Vec<Vec<i64>> {
    let n = a.rank();
    let mut m: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for &letter in &word.0 {
        // left-multiply by S_letter: row `letter` -= sum_k a_{letter,k} row(k)
        let correction: Vec<i64> = (0..n)
            .map(|j| (0..n).map(|k| a.entry(letter, k) * m[k][j]).sum())
            .collect();
        for j in 0..n {
            m[letter][j] -= correction[j];
        }
    }
    m
}

/// Support of the group element named by a word: the letter set of any
/// reduced decomposition. Computed by peeling descents off the matrix.
pub fn word_support(a: &Gcm, word: &WeylWord) -> Result<BTreeSet<usize>, RootError> {
    let n = a.rank();
    let mut m = word_matrix(a, word);
    let mut support = BTreeSet::new();
    let identity: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut guard = 0usize;
    while m != identity {
        // a descent: g(alpha_i) is a negative root, i.e. column i has a
        // negative entry
        let i = (0..n)
            .find(|&i| (0..n).any(|r| m[r][i] < 0))
            .ok_or_else(|| {
                RootError::PreconditionViolated("non-identity element with no descent".into())
            })?;
        support.insert(i);
        // g <- g s_i on columns: col_j -= a_{ij} col_i for j != i, col_i negates
        let col_i: Vec<i64> = (0..n).map(|r| m[r][i]).collect();
        for j in 0..n {
            if j == i {
                continue;
            }
            let c = a.entry(i, j);
            if c != 0 {
                for (r, &ci) in col_i.iter().enumerate() {
                    m[r][j] -= c * ci;
                }
            }
        }
        for (r, &ci) in col_i.iter().enumerate() {
            m[r][i] = -ci;
        }
        guard += 1;
        if guard > word.0.len() + 1 {
            return Err(RootError::PreconditionViolated(
                "descent peeling failed to terminate".into(),
            ));
        }
    }
    Ok(support)
}

/// Test predicate: if reflecting by `word` preserves the `i`-th coordinate of
/// a fundamental-cone imaginary root with `<alpha, alpha_i^vee> != 0`, then
/// `i` does not lie in the support of the group element.
pub fn check_height_coordinate_lemma(
    a: &Gcm,
    s: &Symmetrization,
    alpha: &RootVector,
    i: usize,
    word: &WeylWord,
) -> Result<bool, RootError> {
    if i >= a.rank() {
        return Err(RootError::IndexOutOfRange(i + 1));
    }
    let class = classify_root(a, s, alpha);
    if !(class.kind.is_imaginary() && alpha.is_positive() && in_fundamental_cone(a, alpha)?) {
        return Err(RootError::PreconditionViolated(format!(
            "{alpha} is not a fundamental-cone positive imaginary root"
        )));
    }
    if a.pairing(alpha, i)? == 0 {
        return Err(RootError::PreconditionViolated(format!(
            "<{alpha}, alpha_{}^vee> = 0",
            i + 1
        )));
    }
    let moved = apply_word(a, word, alpha)?;
    if moved.0[i] != alpha.0[i] {
        return Ok(true); // implication is vacuous
    }
    Ok(!word_support(a, word)?.contains(&i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn gcm(m: &[&[i64]]) -> (Gcm, Symmetrization) {
        let a = Gcm::new(m.iter().map(|r| r.to_vec()).collect()).unwrap();
        let s = a.symmetrize().unwrap();
        (a, s)
    }

    fn rv(v: &[i64]) -> RootVector {
        RootVector(v.to_vec())
    }

    #[test]
    fn pairing_values() {
        let (a, _) = gcm(&[&[2, -2, -1], &[-2, 2, -1], &[-1, -1, 2]]);
        assert_eq!(a.pairing(&rv(&[1, 0, 0]), 0).unwrap(), 2);
        assert_eq!(a.pairing(&rv(&[1, 1, 1]), 0).unwrap(), -1);
        let (aff, _) = gcm(&[&[2, -2], &[-2, 2]]);
        assert_eq!(aff.pairing(&rv(&[1, 1]), 0).unwrap(), 0);
    }

    #[test]
    fn reflections() {
        let (a2, _) = gcm(&[&[2, -1], &[-1, 2]]);
        assert_eq!(reflect(&a2, 0, &rv(&[1, 0])).unwrap(), rv(&[-1, 0]));
        assert_eq!(reflect(&a2, 0, &rv(&[1, 1])).unwrap(), rv(&[0, 1]));
        let (p3, _) = gcm(&[&[2, -2, -1], &[-2, 2, -1], &[-1, -1, 2]]);
        assert_eq!(reflect(&p3, 0, &rv(&[1, 1, 1])).unwrap(), rv(&[2, 1, 1]));
        // involutive
        let v = rv(&[3, 1, 2]);
        assert_eq!(reflect(&p3, 1, &reflect(&p3, 1, &v).unwrap()).unwrap(), v);
    }

    #[test]
    fn reduction_witnesses() {
        let (aff, _) = gcm(&[&[2, -2], &[-2, 2]]);
        let (rep, word) = reduce_min_height(&aff, &rv(&[2, 1])).unwrap();
        assert_eq!(rep, rv(&[0, 1]));
        assert_eq!(word, WeylWord(vec![0]));

        let (hyp, _) = gcm(&[&[2, -3], &[-3, 2]]);
        let (rep, word) = reduce_min_height(&hyp, &rv(&[1, 1])).unwrap();
        assert_eq!(rep, rv(&[1, 1]));
        assert!(word.is_empty());

        let (rep, word) = reduce_min_height(&hyp, &rv(&[1, 0])).unwrap();
        assert_eq!(rep, rv(&[1, 0]));
        assert!(word.is_empty());

        assert!(matches!(
            reduce_min_height(&hyp, &rv(&[1, -1])),
            Err(RootError::NotSignPure(_))
        ));
    }

    #[test]
    fn classification() {
        let (a2, s2) = gcm(&[&[2, -1], &[-1, 2]]);
        assert_eq!(
            classify_root(&a2, &s2, &rv(&[1, 1])).kind,
            RootKind::RealPositive
        );
        assert_eq!(
            classify_root(&a2, &s2, &rv(&[2, 1])).kind,
            RootKind::NotARoot
        );
        assert_eq!(
            classify_root(&a2, &s2, &rv(&[-1, -1])).kind,
            RootKind::RealNegative
        );
        assert_eq!(
            classify_root(&a2, &s2, &rv(&[0, 0])).kind,
            RootKind::NotARoot
        );
        assert_eq!(
            classify_root(&a2, &s2, &rv(&[1, -1])).kind,
            RootKind::NotARoot
        );

        let (hyp, sh) = gcm(&[&[2, -3], &[-3, 2]]);
        let c = classify_root(&hyp, &sh, &rv(&[1, 1]));
        assert_eq!(c.kind, RootKind::ImaginaryAnisotropic);
        assert_eq!(sh.norm(&rv(&[1, 1])).unwrap(), rat(-2));

        let (aff, sa) = gcm(&[&[2, -2], &[-2, 2]]);
        assert_eq!(
            classify_root(&aff, &sa, &rv(&[3, 3])).kind,
            RootKind::ImaginaryIsotropic
        );
        // 2 alpha_1 is never a root
        assert_eq!(
            classify_root(&aff, &sa, &rv(&[2, 0])).kind,
            RootKind::NotARoot
        );
    }

    #[test]
    fn disconnected_cone_elements_are_not_roots() {
        // two affine blocks: (1,1,1,1) has disconnected support in the cone
        let (a, s) = gcm(&[
            &[2, -2, 0, 0],
            &[-2, 2, 0, 0],
            &[0, 0, 2, -2],
            &[0, 0, -2, 2],
        ]);
        assert_eq!(
            classify_root(&a, &s, &rv(&[1, 1, 1, 1])).kind,
            RootKind::NotARoot
        );
        assert_eq!(
            classify_root(&a, &s, &rv(&[1, 1, 0, 0])).kind,
            RootKind::ImaginaryIsotropic
        );
    }

    #[test]
    fn enumeration_small_systems() {
        let (a2, s2) = gcm(&[&[2, -1], &[-1, 2]]);
        let roots = enumerate_positive_roots(&a2, &s2, 3).unwrap();
        let coords: Vec<RootVector> = roots.iter().map(|(v, _)| v.clone()).collect();
        assert_eq!(coords, vec![rv(&[0, 1]), rv(&[1, 0]), rv(&[1, 1])]);

        let (aff, sa) = gcm(&[&[2, -2], &[-2, 2]]);
        let roots = enumerate_positive_roots(&aff, &sa, 4).unwrap();
        let coords: Vec<RootVector> = roots.iter().map(|(v, _)| v.clone()).collect();
        assert_eq!(
            coords,
            vec![
                rv(&[0, 1]),
                rv(&[1, 0]),
                rv(&[1, 1]),
                rv(&[1, 2]),
                rv(&[2, 1]),
                rv(&[2, 2]),
            ]
        );
        assert!(matches!(
            enumerate_positive_roots_capped(&a2, &s2, 100, 64),
            Err(RootError::HeightBoundTooLarge { .. })
        ));
    }

    #[test]
    fn height_one_is_simple_roots_only() {
        let (hyp, sh) = gcm(&[&[2, -3], &[-3, 2]]);
        let roots = enumerate_positive_roots(&hyp, &sh, 1).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|(_, c)| c.kind == RootKind::RealPositive));
    }

    #[test]
    fn root_strings() {
        let (a2, s2) = gcm(&[&[2, -1], &[-1, 2]]);
        let st = root_string(&a2, &s2, &rv(&[1, 0]), &rv(&[1, 0])).unwrap();
        assert_eq!((st.p, st.q, st.case), (2, 0, 3));
        let st = root_string(&a2, &s2, &rv(&[1, 0]), &rv(&[0, 1])).unwrap();
        assert_eq!((st.p, st.q), (0, 1));

        let (aff, sa) = gcm(&[&[2, -2], &[-2, 2]]);
        let st = root_string(&aff, &sa, &rv(&[1, 0]), &rv(&[1, 1])).unwrap();
        assert_eq!((st.p, st.q), (1, 1));

        assert!(matches!(
            root_string(&aff, &sa, &rv(&[1, 1]), &rv(&[1, 0])),
            Err(RootError::AlphaNotReal(_))
        ));
        assert!(matches!(
            root_string(&aff, &sa, &rv(&[1, 0]), &rv(&[2, 0])),
            Err(RootError::BetaNotRoot(_))
        ));
    }

    #[test]
    fn string_unbrokenness_and_pairing_identity() {
        let (hyp, sh) = gcm(&[&[2, -3], &[-3, 2]]);
        let roots = enumerate_positive_roots(&hyp, &sh, 6).unwrap();
        let reals: Vec<RootVector> = roots
            .iter()
            .filter(|(_, c)| c.kind.is_real())
            .map(|(v, _)| v.clone())
            .collect();
        for alpha in &reals {
            for (beta, _) in &roots {
                if beta.proportional(alpha) {
                    continue;
                }
                let st = root_string(&hyp, &sh, alpha, beta).unwrap();
                assert_eq!(
                    st.p - st.q,
                    coroot_pairing(&sh, beta, alpha).unwrap(),
                    "p - q must equal the coroot pairing"
                );
                for t in -st.p..=st.q {
                    let member = beta + &alpha.scaled(t);
                    assert!(
                        classify_root(&hyp, &sh, &member).kind.is_root(),
                        "string of {beta} through {alpha} broken at {t}"
                    );
                }
                assert!(!classify_root(&hyp, &sh, &(beta + &alpha.scaled(st.q + 1)))
                    .kind
                    .is_root());
            }
        }
    }

    #[test]
    fn disjointify_contract() {
        // single root reduces to the cone
        let (aff, sa) = gcm(&[&[2, -2], &[-2, 2]]);
        let delta = rv(&[1, 1]);
        let (word, reps) = disjointify(&aff, &sa, &[delta.clone()]).unwrap();
        assert!(word.is_empty());
        assert_eq!(reps, vec![delta.clone()]);

        // block-diagonal: two affine null roots are already separated
        let (blocks, sb) = gcm(&[
            &[2, -2, 0, 0],
            &[-2, 2, 0, 0],
            &[0, 0, 2, -2],
            &[0, 0, -2, 2],
        ]);
        let b1 = rv(&[1, 1, 0, 0]);
        let b2 = rv(&[0, 0, 1, 1]);
        let (word, reps) = disjointify(&blocks, &sb, &[b1.clone(), b2.clone()]).unwrap();
        assert!(word.is_empty());
        assert_eq!(reps, vec![b1.clone(), b2.clone()]);

        // a Weyl-moved copy still comes back to the cone
        let moved = apply_word(&blocks, &WeylWord(vec![0, 1]), &b1).unwrap();
        let (_, reps) = disjointify(&blocks, &sb, &[moved, b2.clone()]).unwrap();
        assert_eq!(reps, vec![b1, b2]);

        // proportional isotropic roots sum to a root
        assert!(matches!(
            disjointify(&aff, &sa, &[delta.clone(), delta.clone()]),
            Err(RootError::SumIsRoot(1, 2))
        ));
        // a real root is rejected
        assert!(matches!(
            disjointify(&aff, &sa, &[rv(&[1, 0])]),
            Err(RootError::NotImaginaryPositive(1))
        ));
    }

    #[test]
    fn word_support_reduces_words() {
        let (a2, _) = gcm(&[&[2, -1], &[-1, 2]]);
        // s1 s1 is the identity
        assert!(word_support(&a2, &WeylWord(vec![0, 0])).unwrap().is_empty());
        // s1 s2 s1 = s2 s1 s2 has support {0, 1}
        let sup = word_support(&a2, &WeylWord(vec![0, 1, 0])).unwrap();
        assert_eq!(sup.into_iter().collect::<Vec<_>>(), vec![0, 1]);
        // braid-equal words have equal support
        let sup2 = word_support(&a2, &WeylWord(vec![1, 0, 1])).unwrap();
        assert_eq!(sup2.into_iter().collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn height_coordinate_predicate() {
        let (hyp, sh) = gcm(&[&[2, -3], &[-3, 2]]);
        let alpha = rv(&[1, 1]);
        assert!(
            check_height_coordinate_lemma(&hyp, &sh, &alpha, 0, &WeylWord::identity()).unwrap()
        );
        assert!(
            check_height_coordinate_lemma(&hyp, &sh, &alpha, 0, &WeylWord(vec![1, 0, 1])).unwrap()
        );
        // precondition: pairing must be nonzero
        let (aff, sa) = gcm(&[&[2, -2], &[-2, 2]]);
        assert!(matches!(
            check_height_coordinate_lemma(&aff, &sa, &rv(&[1, 1]), 0, &WeylWord::identity()),
            Err(RootError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn minimal_height_representative_is_unique() {
        // re-running the reduction from any orbit point reaches the same cone element
        let (hyp, _sh) = gcm(&[&[2, -3], &[-3, 2]]);
        let base = rv(&[1, 1]);
        for word in [
            vec![0],
            vec![1],
            vec![0, 1],
            vec![1, 0, 1],
            vec![0, 1, 0, 1],
        ] {
            let moved = apply_word(&hyp, &WeylWord(word), &base).unwrap();
            let (rep, _) = reduce_min_height(&hyp, &moved).unwrap();
            assert_eq!(rep, base);
        }
    }
}
