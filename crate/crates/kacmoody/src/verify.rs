//! Structural verification suites: exhaustive-at-truncation sweeps of the
//! bracket non-vanishing, vanishing classification, dimension comparison,
//! ad-power chains, free/Heisenberg dichotomy, orthogonal real pairs, and
//! exact regression fixtures, producing deterministic machine-readable
//! reports.
//!
//! Quantifier discipline: statements over all nonzero complex vectors are
//! checked (a) exactly on basis vectors and pairwise sums of basis vectors,
//! (b) on seeded pseudo-random rational points, and (c) exactly through a
//! polynomial pencil rank argument when the relevant multiplicity is at most
//! two. Reports label how many cases each regime contributed. Pairs whose
//! required degrees leave the height bound are skipped and counted, never
//! silently dropped.

use crate::engine::{Element, EngineError, GradedAlgebra};
use crate::exact::{rat, Rat};
use crate::linalg::RatSpan;
use crate::polyutil::pencil_rank_never_below;
use crate::roots::{self, RootKind};
use crate::rootvec::RootVector;
use crate::subalgebra::{self, SeriesKind, SeriesVerdict};
use num::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;

/// Default RNG seed for sampled checks.
pub const DEFAULT_SEED: u64 = 0x4B4D;
/// Default number of sampled pairs per qualifying degree pair.
pub const DEFAULT_SAMPLES: usize = 200;

#[derive(Debug, Clone, Serialize)]
pub struct VerifyParams {
    pub height: i64,
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            height: 8,
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub gcm: Vec<Vec<i64>>,
    pub params: VerifyParams,
    pub cases_checked: usize,
    pub skipped_truncation: usize,
    /// How many cases each checking regime contributed.
    pub regimes: BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
    pub verdict: Verdict,
}

struct ReportBuilder {
    suite: String,
    gcm: Vec<Vec<i64>>,
    params: VerifyParams,
    cases: usize,
    skipped: usize,
    regimes: BTreeMap<String, usize>,
    violations: Vec<Violation>,
}

impl ReportBuilder {
    fn new(suite: &str, g: &GradedAlgebra, params: &VerifyParams) -> Self {
        ReportBuilder {
            suite: suite.to_string(),
            gcm: g.gcm().matrix().clone(),
            params: params.clone(),
            cases: 0,
            skipped: 0,
            regimes: BTreeMap::new(),
            violations: Vec::new(),
        }
    }

    fn case(&mut self, regime: &str) {
        self.cases += 1;
        *self.regimes.entry(regime.to_string()).or_insert(0) += 1;
    }

    fn skip(&mut self) {
        self.skipped += 1;
    }

    fn violation(&mut self, inputs: String, expected: &str, actual: String) {
        self.violations.push(Violation {
            inputs,
            expected: expected.to_string(),
            actual,
        });
    }

    fn finish(mut self) -> VerificationReport {
        self.violations.sort();
        let verdict = if !self.violations.is_empty() {
            Verdict::Fail
        } else if self.cases == 0 {
            Verdict::Inconclusive
        } else {
            Verdict::Pass
        };
        VerificationReport {
            suite: self.suite,
            gcm: self.gcm,
            params: self.params,
            cases_checked: self.cases,
            skipped_truncation: self.skipped,
            regimes: self.regimes,
            violations: self.violations,
            verdict,
        }
    }
}

/// All root degrees of both signs with |height| within the bound, sorted by
/// (height, coordinates).
fn signed_root_degrees(g: &GradedAlgebra) -> Vec<RootVector> {
    let mut out = Vec::new();
    for d in g.positive_degrees() {
        out.push(-d.clone());
        out.push(d);
    }
    out.sort_by_key(|d| (d.height(), d.0.clone()));
    out
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    let p: i64 = rng.gen_range(-9..=9);
    let q: i64 = rng.gen_range(1..=3);
    Rat::new(p.into(), q.into())
}

fn random_coords(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Rat> {
    loop {
        let v: Vec<Rat> = (0..dim).map(|_| random_rat(rng)).collect();
        if v.iter().any(|c| !c.is_zero()) {
            return v;
        }
    }
}

fn proportional_coords(a: &[Rat], b: &[Rat]) -> bool {
    // both nonzero; proportional iff all 2x2 minors vanish
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if &a[i] * &b[j] != &a[j] * &b[i] {
                return false;
            }
        }
    }
    true
}

/// Coordinates of a homogeneous bracket value at its expected degree; the
/// zero degree flattens Cartan and derivation parts.
fn value_coords(g: &GradedAlgebra, value: &Element, target: &RootVector) -> Vec<Rat> {
    if target.is_zero() {
        let mut v = value.cartan().to_vec();
        v.extend_from_slice(value.deriv());
        v
    } else {
        match value.coords_at(target) {
            Some(c) => c.clone(),
            None => vec![Rat::zero(); g.mult(target).unwrap_or(0)],
        }
    }
}

/// Bracket non-vanishing sweep: for every ordered pair of root degrees with
/// strictly negative form pairing, all brackets of nonzero vectors on
/// distinct lines must be nonzero. CLI name `theorem-a`.
pub fn nonzero_bracket_suite(g: &GradedAlgebra, params: &VerifyParams) -> VerificationReport {
    let mut report = ReportBuilder::new("theorem-a", g, params);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let degrees = signed_root_degrees(g);
    let symm = g.symmetrization();
    for alpha in &degrees {
        for beta in &degrees {
            let form = symm.bilinear(alpha, beta).expect("rank checked");
            if form >= Rat::zero() {
                continue;
            }
            let m_alpha = g.dim_basis(alpha);
            let m_beta = g.dim_basis(beta);
            if alpha == beta && m_alpha == 1 {
                continue; // every pair of nonzero vectors shares the line
            }
            let target = alpha + beta;
            if target.height().abs() > g.height() {
                report.skip();
                continue;
            }
            let same_degree = alpha == beta;
            // (i) exact points: basis vectors and pairwise sums
            let exact_points = |dim: usize| -> Vec<Vec<Rat>> {
                let mut pts = Vec::new();
                for k in 0..dim {
                    let mut v = vec![Rat::zero(); dim];
                    v[k] = rat(1);
                    pts.push(v);
                }
                for k in 0..dim {
                    for l in k + 1..dim {
                        let mut v = vec![Rat::zero(); dim];
                        v[k] = rat(1);
                        v[l] = rat(1);
                        pts.push(v);
                    }
                }
                pts
            };
            let xs = exact_points(m_alpha);
            let ys = exact_points(m_beta);
            for xc in &xs {
                for yc in &ys {
                    if same_degree && proportional_coords(xc, yc) {
                        continue;
                    }
                    let x = Element::from_term(g.rank(), alpha.clone(), xc.clone());
                    let y = Element::from_term(g.rank(), beta.clone(), yc.clone());
                    let z = g.bracket(&x, &y).expect("degrees inside the bound");
                    report.case("basis-exact");
                    if z.is_zero() {
                        report.violation(
                            format!("alpha={alpha}, beta={beta}, x={xc:?}, y={yc:?}"),
                            "[x, y] != 0",
                            "0".into(),
                        );
                    }
                }
            }
            // (ii) seeded random points
            for _ in 0..params.samples {
                let xc = random_coords(&mut rng, m_alpha);
                let mut yc = random_coords(&mut rng, m_beta);
                if same_degree {
                    let mut guard = 0;
                    while proportional_coords(&xc, &yc) {
                        yc = random_coords(&mut rng, m_beta);
                        guard += 1;
                        if guard > 64 {
                            break;
                        }
                    }
                    if proportional_coords(&xc, &yc) {
                        continue;
                    }
                }
                let x = Element::from_term(g.rank(), alpha.clone(), xc.clone());
                let y = Element::from_term(g.rank(), beta.clone(), yc.clone());
                let z = g.bracket(&x, &y).expect("degrees inside the bound");
                report.case("sampled");
                if z.is_zero() {
                    report.violation(
                        format!("alpha={alpha}, beta={beta}, x={xc:?}, y={yc:?}"),
                        "[x, y] != 0",
                        "0".into(),
                    );
                }
            }
            // (iii) exact generic check for multiplicity at most two
            if m_alpha <= 2 {
                let target_dim = if target.is_zero() {
                    2 * g.rank()
                } else {
                    g.mult(&target).unwrap_or(0)
                };
                // matrices of ad(b_k): columns indexed by the beta basis
                let mut mats: Vec<Vec<Vec<Rat>>> = Vec::new();
                for k in 0..m_alpha {
                    let mut m = vec![vec![Rat::zero(); m_beta]; target_dim];
                    for l in 0..m_beta {
                        let z = g
                            .bracket(&g.basis_element(alpha, k), &g.basis_element(beta, l))
                            .expect("degrees inside the bound");
                        let coords = value_coords(g, &z, &target);
                        for (r, c) in coords.iter().enumerate() {
                            m[r][l] = c.clone();
                        }
                    }
                    mats.push(m);
                }
                let required = if same_degree { m_beta - 1 } else { m_beta };
                let ok = if m_alpha == 1 {
                    crate::linalg::rank_rat(&mats[0]) >= required
                } else {
                    pencil_rank_never_below(&mats[0], &mats[1], required)
                };
                report.case("generic-exact");
                if !ok {
                    report.violation(
                        format!("alpha={alpha}, beta={beta}"),
                        &format!("ad x has rank >= {required} on the beta space for all nonzero x"),
                        "rank drops for some x".into(),
                    );
                }
            }
        }
    }
    report.finish()
}

/// Vanishing classification: for positive imaginary pairs the bracket space
/// is zero exactly when the sum is not a root or the degrees are
/// proportional isotropic; for a real degree against any root degree, zero
/// exactly when the sum is not a root. CLI name `bracket-zero`.
pub fn bracket_vanishing_suite(g: &GradedAlgebra, params: &VerifyParams) -> VerificationReport {
    let mut report = ReportBuilder::new("bracket-zero", g, params);
    let symm = g.symmetrization();
    let degrees = signed_root_degrees(g);
    let classify = |d: &RootVector| roots::classify_root(g.gcm(), symm, d).kind;
    for alpha in &degrees {
        for beta in &degrees {
            let ka = classify(alpha);
            let kb = classify(beta);
            let target = alpha + beta;
            if target.is_zero() {
                continue;
            }
            let imaginary_pair =
                ka.is_imaginary() && kb.is_imaginary() && alpha.is_positive() && beta.is_positive();
            let real_left = ka.is_real();
            if !(imaginary_pair || real_left) {
                continue;
            }
            if target.height().abs() > g.height() {
                report.skip();
                continue;
            }
            let sum_is_root = classify(&target).is_root();
            let mut span = RatSpan::new(if target.is_zero() {
                2 * g.rank()
            } else {
                g.mult(&target).unwrap_or(0).max(1)
            });
            let mut all_zero = true;
            for k in 0..g.dim_basis(alpha) {
                for l in 0..g.dim_basis(beta) {
                    let z = g
                        .bracket(&g.basis_element(alpha, k), &g.basis_element(beta, l))
                        .expect("inside bound");
                    if !z.is_zero() {
                        all_zero = false;
                        span.push_generator(&value_coords(g, &z, &target));
                    }
                }
            }
            let expected_zero = if imaginary_pair {
                let proportional_isotropic = alpha.proportional(beta)
                    && ka == RootKind::ImaginaryIsotropic
                    && kb == RootKind::ImaginaryIsotropic;
                // a one-dimensional space brackets to zero against itself by
                // antisymmetry alone; the nonvanishing statement quantifies
                // over independent lines and is vacuous there
                let same_line_only = alpha == beta && g.dim_basis(alpha) == 1;
                !sum_is_root || proportional_isotropic || same_line_only
            } else {
                !sum_is_root
            };
            report.case(if imaginary_pair {
                "imaginary-pair"
            } else {
                "real-left"
            });
            if all_zero != expected_zero {
                report.violation(
                    format!("alpha={alpha}, beta={beta}"),
                    &format!("bracket space zero: {expected_zero}"),
                    format!("bracket space zero: {all_zero} (dim {})", span.rank()),
                );
            }
        }
    }
    report.finish()
}

/// Dimension comparison for nonvanishing imaginary brackets, plus the
/// monotonicity sweep for symmetric rank-2 matrices. CLI name
/// `dim-corollary`.
pub fn bracket_dimension_suite(g: &GradedAlgebra, params: &VerifyParams) -> VerificationReport {
    let mut report = ReportBuilder::new("dim-corollary", g, params);
    let symm = g.symmetrization();
    let positives = g.positive_degrees();
    let imaginary: Vec<&RootVector> = positives
        .iter()
        .filter(|d| roots::classify_root(g.gcm(), symm, d).kind.is_imaginary())
        .collect();
    for (i, alpha) in imaginary.iter().enumerate() {
        for beta in imaginary.iter().skip(i + 1) {
            let target = *alpha + *beta;
            if target.height() > g.height() {
                report.skip();
                continue;
            }
            let m_alpha = g.mult(alpha).unwrap();
            let m_beta = g.mult(beta).unwrap();
            let m_target = g.mult(&target).unwrap_or(0);
            let mut span = RatSpan::new(m_target.max(1));
            for k in 0..m_alpha {
                for l in 0..m_beta {
                    let z = g
                        .bracket(&g.basis_element(alpha, k), &g.basis_element(beta, l))
                        .expect("inside bound");
                    if !z.is_zero() {
                        span.push_generator(&value_coords(g, &z, &target));
                    }
                }
            }
            if span.rank() == 0 {
                continue; // vanishing pairs belong to the other suite
            }
            report.case("dimension");
            let dim = span.rank();
            let max = m_alpha.max(m_beta);
            let min = m_alpha.min(m_beta);
            let ok = dim >= max && ((dim == max) == (min == 1));
            if !ok {
                report.violation(
                    format!("alpha={alpha} (mult {m_alpha}), beta={beta} (mult {m_beta})"),
                    "dim [g_a, g_b] >= max, equality iff min = 1",
                    format!("dim = {dim}"),
                );
            }
        }
    }
    // monotonicity along adding alpha_1 + alpha_2 for symmetric rank-2
    // matrices of non-finite type, where that shift is an imaginary vector
    if g.rank() == 2 && g.gcm().entry(0, 1) == g.gcm().entry(1, 0) && g.gcm().entry(0, 1) <= -2 {
        let shift = RootVector(vec![1, 1]);
        for alpha in &positives {
            let up = alpha + &shift;
            if up.height() > g.height() {
                report.skip();
                continue;
            }
            report.case("monotonicity");
            let low = g.mult(alpha).unwrap();
            let high = g.mult(&up).unwrap();
            if low > high {
                report.violation(
                    format!("alpha={alpha}"),
                    "mult(alpha) <= mult(alpha + a1 + a2)",
                    format!("{low} > {high}"),
                );
            }
        }
    }
    report.finish()
}

/// Ad-power chains: whenever a positive or real root vector fails to
/// commute with a positive imaginary vector, the whole iterated-bracket
/// chain within the truncation stays nonzero. CLI name `ad-power`.
pub fn ad_power_suite(g: &GradedAlgebra, params: &VerifyParams) -> VerificationReport {
    let mut report = ReportBuilder::new("ad-power", g, params);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let symm = g.symmetrization();
    let degrees = signed_root_degrees(g);
    let alphas: Vec<&RootVector> = degrees
        .iter()
        .filter(|d| d.is_positive() || roots::classify_root(g.gcm(), symm, d).kind.is_real())
        .collect();
    let betas: Vec<&RootVector> = degrees
        .iter()
        .filter(|d| d.is_positive() && roots::classify_root(g.gcm(), symm, d).kind.is_imaginary())
        .collect();
    for alpha in &alphas {
        for beta in &betas {
            if (alpha.height() + beta.height()).abs() > g.height() {
                report.skip();
                continue;
            }
            let n_max = (g.height() - alpha.height()) / beta.height();
            let m_alpha = g.dim_basis(alpha);
            let m_beta = g.dim_basis(beta);
            let mut pairs: Vec<(Vec<Rat>, Vec<Rat>, &str)> = Vec::new();
            for k in 0..m_alpha {
                for l in 0..m_beta {
                    let mut xc = vec![Rat::zero(); m_alpha];
                    xc[k] = rat(1);
                    let mut yc = vec![Rat::zero(); m_beta];
                    yc[l] = rat(1);
                    pairs.push((xc, yc, "chain-basis"));
                }
            }
            for _ in 0..3 {
                pairs.push((
                    random_coords(&mut rng, m_alpha),
                    random_coords(&mut rng, m_beta),
                    "chain-sampled",
                ));
            }
            for (xc, yc, regime) in pairs {
                let x = Element::from_term(g.rank(), (*alpha).clone(), xc.clone());
                let y = Element::from_term(g.rank(), (*beta).clone(), yc.clone());
                let first = g.bracket(&x, &y).expect("inside bound");
                if first.is_zero() {
                    continue; // hypothesis [x, y] != 0 fails; nothing to check
                }
                report.case(regime);
                let mut z = x.clone();
                for n in 1..=n_max {
                    z = g.bracket(&y, &z).expect("chain stays inside the bound");
                    if z.is_zero() {
                        report.violation(
                            format!("alpha={alpha}, beta={beta}, x={xc:?}, y={yc:?}"),
                            "(ad y)^n x != 0 within the truncation",
                            format!("zero at n = {n}"),
                        );
                        break;
                    }
                }
            }
        }
    }
    report.finish()
}

/// Free / Heisenberg dichotomy along imaginary rays. CLI name
/// `free-heisenberg`.
pub fn free_heisenberg_suite(g: &GradedAlgebra, params: &VerifyParams) -> VerificationReport {
    let mut report = ReportBuilder::new("free-heisenberg", g, params);
    let symm = g.symmetrization();
    // ray representatives: minimal-height root on each imaginary ray
    let mut rays: BTreeMap<RootVector, RootVector> = BTreeMap::new();
    for d in g.positive_degrees() {
        if roots::classify_root(g.gcm(), symm, &d).kind.is_imaginary() {
            let prim = d.primitive();
            rays.entry(prim)
                .and_modify(|best| {
                    if d.height() < best.height() {
                        *best = d.clone();
                    }
                })
                .or_insert(d.clone());
        }
    }
    for (_, rep) in rays {
        let kind = roots::classify_root(g.gcm(), symm, &rep).kind;
        let order = g.height() / rep.height();
        if kind == RootKind::ImaginaryAnisotropic {
            if order < 2 {
                report.case("witt-vacuous");
                continue;
            }
            // graded dimensions along the ray and minimal generator counts
            let dims: Vec<usize> = (1..=order)
                .map(|n| g.mult(&rep.scaled(n)).unwrap())
                .collect();
            let mut generated: Vec<usize> = vec![0; order as usize + 1];
            for n in 2..=order {
                let mut span = RatSpan::new(g.mult(&rep.scaled(n)).unwrap().max(1));
                for p in 1..n {
                    let q = n - p;
                    let dp = rep.scaled(p);
                    let dq = rep.scaled(q);
                    for k in 0..g.mult(&dp).unwrap() {
                        for l in 0..g.mult(&dq).unwrap() {
                            let z = g
                                .bracket(&g.basis_element(&dp, k), &g.basis_element(&dq, l))
                                .expect("inside bound");
                            if !z.is_zero() {
                                span.push_generator(&value_coords(g, &z, &rep.scaled(n)));
                            }
                        }
                    }
                }
                generated[n as usize] = span.rank();
            }
            // Witt identity: prod (1 - t^n)^{dims[n]} = 1 - sum g_n t^n
            // to order `order`, where g_n = dims[n] - generated[n]
            let order_u = order as usize;
            let mut product = vec![0i64; order_u + 1];
            product[0] = 1;
            for (n, &dim) in dims.iter().enumerate() {
                let n = n + 1;
                for _ in 0..dim {
                    // multiply by (1 - t^n), truncated
                    let mut next = product.clone();
                    for (k, slot) in next.iter_mut().enumerate().take(order_u + 1) {
                        if k >= n {
                            *slot -= product[k - n];
                        }
                    }
                    product = next;
                }
            }
            let mut expected = vec![0i64; order_u + 1];
            expected[0] = 1;
            for n in 1..=order_u {
                let gens = dims[n - 1] as i64 - generated[n] as i64;
                expected[n] = -gens;
            }
            report.case("witt-identity");
            if product != expected {
                report.violation(
                    format!("ray of {rep}"),
                    &format!("Witt series {expected:?}"),
                    format!("{product:?}"),
                );
            }
        } else {
            // isotropic ray: a two-sided Heisenberg tower
            let sharp = g.alpha_sharp(&rep);
            for n in 1..=order {
                for m in 1..=order {
                    let dn = rep.scaled(n);
                    let dm = -rep.scaled(m);
                    let mut span = RatSpan::new(2 * g.rank());
                    let mut nonzero = false;
                    let mut outside = false;
                    for k in 0..g.dim_basis(&dn) {
                        for l in 0..g.dim_basis(&dm) {
                            let z = g
                                .bracket(&g.basis_element(&dn, k), &g.basis_element(&dm, l))
                                .expect("inside bound");
                            if z.is_zero() {
                                continue;
                            }
                            nonzero = true;
                            if !z.terms().is_empty() {
                                outside = true;
                            }
                            let mut coords = z.cartan().to_vec();
                            coords.extend_from_slice(z.deriv());
                            span.push_generator(&coords);
                        }
                    }
                    report.case("heisenberg");
                    if n == m {
                        let mut sharp_coords = sharp.cartan().to_vec();
                        sharp_coords.extend_from_slice(sharp.deriv());
                        let good =
                            nonzero && !outside && span.rank() == 1 && span.contains(&sharp_coords);
                        if !good {
                            report.violation(
                                format!("ray of {rep}, n = m = {n}"),
                                "[g_n, g_-n] spans exactly the dual Cartan line",
                                format!(
                                    "nonzero={nonzero}, span dim {}, outside h: {outside}",
                                    span.rank()
                                ),
                            );
                        }
                    } else if nonzero {
                        report.violation(
                            format!("ray of {rep}, n = {n}, m = {m}"),
                            "[g_n, g_-m] = 0 for n != m",
                            "nonzero".into(),
                        );
                    }
                }
            }
        }
    }
    report.finish()
}

/// Orthogonal real pairs with imaginary sums: the generated subalgebra is
/// not solvable and the double bracket does not vanish. CLI name `lemma-54`.
pub fn orthogonal_real_pair_suite(g: &GradedAlgebra, params: &VerifyParams) -> VerificationReport {
    let mut report = ReportBuilder::new("lemma-54", g, params);
    let symm = g.symmetrization();
    let degrees = signed_root_degrees(g);
    let reals: Vec<&RootVector> = degrees
        .iter()
        .filter(|d| roots::classify_root(g.gcm(), symm, d).kind.is_real())
        .collect();
    for alpha in &reals {
        for gamma in &reals {
            report.case("enumerated");
            let beta = *alpha + *gamma;
            if !beta.is_positive() {
                continue;
            }
            let kb = roots::classify_root(g.gcm(), symm, &beta).kind;
            if !kb.is_imaginary() {
                continue;
            }
            let fa = symm.bilinear(alpha, &beta).expect("rank");
            let fg = symm.bilinear(gamma, &beta).expect("rank");
            if !fa.is_zero() || !fg.is_zero() {
                continue;
            }
            // qualifying pair
            let double_deg = &(*alpha + *alpha) + *gamma;
            if double_deg.height().abs() > g.height() {
                report.skip();
                continue;
            }
            let ea = match g.real_root_vector(alpha) {
                Ok(e) => e,
                Err(EngineError::TruncationExceeded { .. }) => {
                    report.skip();
                    continue;
                }
                Err(e) => panic!("real root vector failed: {e}"),
            };
            let eg = match g.real_root_vector(gamma) {
                Ok(e) => e,
                Err(EngineError::TruncationExceeded { .. }) => {
                    report.skip();
                    continue;
                }
                Err(e) => panic!("real root vector failed: {e}"),
            };
            report.case("double-bracket");
            let inner = g.bracket(&ea, &eg).expect("inside bound");
            let double = g.bracket(&ea, &inner).expect("inside bound");
            if double.is_zero() {
                report.violation(
                    format!("alpha={alpha}, gamma={gamma}"),
                    "[e_a, [e_a, e_c]] != 0",
                    "0".into(),
                );
            }
            // the derived series of the generated subalgebra must not
            // terminate within the truncation
            match subalgebra::span_closure(g, &[ea, eg]) {
                Ok(l) => {
                    let derived = subalgebra::series(g, &l, SeriesKind::Derived, 16)
                        .expect("series computes");
                    report.case("derived-series");
                    if let SeriesVerdict::TerminatesAtStep(k) = derived.verdict {
                        report.violation(
                            format!("alpha={alpha}, gamma={gamma}"),
                            "derived series does not terminate",
                            format!("terminates at step {k}"),
                        );
                    }
                }
                Err(e) => panic!("closure failed: {e}"),
            }
        }
    }
    report.finish()
}

/// Exact regression fixtures on the rank-3 matrix and the affine rank-2
/// matrix. CLI name `regressions`.
pub fn regression_suite(params: &VerifyParams) -> Result<VerificationReport, EngineError> {
    use crate::engine::parse_element;
    let a3 = crate::gcm::Gcm::new(vec![vec![2, -2, -1], vec![-2, 2, -1], vec![-1, -1, 2]])?;
    let s3 = a3.symmetrize()?;
    let g3 = GradedAlgebra::build(&a3, &s3, 6)?;
    let mut report = ReportBuilder::new("regressions", &g3, params);

    let y = parse_element(&g3, "[e3,[e2,e1]] + 2*[e2,[e3,e1]]")?;
    report.case("exact");
    if y.is_zero() {
        report.violation("y".into(), "nonzero", "0".into());
    }
    let f1y = g3.bracket(&parse_element(&g3, "f1")?, &y)?;
    report.case("exact");
    if !f1y.is_zero() {
        report.violation("[f1, y]".into(), "0", f1y.render(&g3));
    }
    let x = g3.simple_reflection_star(0, &y)?;
    let x_expected = parse_element(&g3, "[[e1,e3],[e1,e2]] + [e3,[e1,[e2,e1]]]")?;
    report.case("exact");
    if x != x_expected {
        report.violation(
            "s_1^* y".into(),
            "[[e1,e3],[e1,e2]] + [e3,[e1,[e2,e1]]]",
            x.render(&g3),
        );
    }
    let e1x = g3.bracket(&parse_element(&g3, "e1")?, &x)?;
    report.case("exact");
    if !e1x.is_zero() {
        report.violation("[e1, x]".into(), "0", e1x.render(&g3));
    }
    let ystar = g3.omega(&y);
    let ystar_expected = parse_element(&g3, "-[f3,[f2,f1]] - 2*[f2,[f3,f1]]")?;
    report.case("exact");
    if ystar != ystar_expected {
        report.violation(
            "omega(y)".into(),
            "-[f3,[f2,f1]] - 2*[f2,[f3,f1]]",
            ystar.render(&g3),
        );
    }
    let pairing = g3.bracket(&ystar, &x)?;
    let minus24e1 = parse_element(&g3, "-24*e1")?;
    report.case("exact");
    if pairing != minus24e1 {
        report.violation("[omega(y), x]".into(), "-24*e1", pairing.render(&g3));
    }
    // the three-dimensional subalgebra: closed, nilpotent of class exactly 2
    let e1 = parse_element(&g3, "e1")?;
    match subalgebra::span_closure(&g3, &[e1, x.clone(), ystar.clone()]) {
        Ok(l) => {
            report.case("exact");
            if l.closure.total_dim() != 3 {
                report.violation(
                    "span(e1, x, omega(y))".into(),
                    "three-dimensional and closed",
                    format!("dimension {}", l.closure.total_dim()),
                );
            }
            let lower = subalgebra::series(&g3, &l, SeriesKind::LowerCentral, 8)
                .map_err(|e| EngineError::Internal(format!("{e}")))?;
            report.case("exact");
            if lower.verdict != SeriesVerdict::TerminatesAtStep(2) {
                report.violation(
                    "lower central series of the Heisenberg fixture".into(),
                    "terminates exactly at step 2",
                    format!("{:?}", lower.verdict),
                );
            }
            let structure = subalgebra::check_locally_finite_structure(&g3, &l)
                .map_err(|e| EngineError::Internal(format!("{e}")))?;
            report.case("exact");
            if !structure.all_hold {
                report.violation(
                    "structure conditions of the Heisenberg fixture".into(),
                    "all hold",
                    format!("{structure:?}"),
                );
            }
        }
        Err(e) => return Err(EngineError::Internal(format!("{e}"))),
    }

    // affine tower: L^n = g_{Psi_n} within truncation; extended tower has
    // second derived algebra g_{Psi_2}
    let a2 = crate::gcm::Gcm::new(vec![vec![2, -2], vec![-2, 2]])?;
    let s2 = a2.symmetrize()?;
    let g2 = GradedAlgebra::build(&a2, &s2, 10)?;
    let tower = subalgebra::SubalgebraFixture {
        generators: vec![],
        patterns: vec![
            subalgebra::DegreePattern {
                base_degree: vec![1, 1],
                step_degree: None,
                component: "full".into(),
                from: 0,
            },
            subalgebra::DegreePattern {
                base_degree: vec![1, 0],
                step_degree: Some(vec![1, 1]),
                component: "full".into(),
                from: 0,
            },
        ],
    };
    let gens = subalgebra::fixture_generators(&g2, &tower)
        .map_err(|e| EngineError::Internal(format!("{e}")))?;
    let l =
        subalgebra::span_closure(&g2, &gens).map_err(|e| EngineError::Internal(format!("{e}")))?;
    let lower = subalgebra::series(&g2, &l, SeriesKind::LowerCentral, 8)
        .map_err(|e| EngineError::Internal(format!("{e}")))?;
    for n in 1..=4usize {
        let expected: Vec<(RootVector, usize)> = (n as i64..=4)
            .map(|k| (RootVector(vec![k + 1, k]), 1usize))
            .collect();
        report.case("exact");
        if lower.steps[n] != expected {
            report.violation(
                format!("affine tower lower central step {n}"),
                "the tower spaces from level n upward",
                format!("{:?}", lower.steps[n]),
            );
        }
    }
    let mut extended_gens = gens.clone();
    extended_gens.push(parse_element(&g2, "d2")?);
    let lhat = subalgebra::span_closure(&g2, &extended_gens)
        .map_err(|e| EngineError::Internal(format!("{e}")))?;
    let derived = subalgebra::series(&g2, &lhat, SeriesKind::Derived, 8)
        .map_err(|e| EngineError::Internal(format!("{e}")))?;
    let expected2: Vec<(RootVector, usize)> = (2i64..=4)
        .map(|k| (RootVector(vec![k + 1, k]), 1usize))
        .collect();
    report.case("exact");
    if derived.steps.len() < 3 || derived.steps[2] != expected2 {
        report.violation(
            "extended tower second derived step".into(),
            "the tower spaces from level 2 upward",
            format!("{:?}", derived.steps.get(2)),
        );
    }
    Ok(report.finish())
}
