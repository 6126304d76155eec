//! Graded subalgebras: bracket closure within the truncation, the
//! decomposition into Cartan part, real-root part, and imaginary parts,
//! closed-set analysis of real roots, abelian canonical forms, and
//! derived/lower-central series with truncation-aware verdicts.
//!
//! Truncation honesty: a series step counts as terminated only when the
//! vanishing provably cannot be an artifact of the height bound, i.e. no
//! bracket needed along the way was skipped for leaving the computed range.

use crate::engine::{Element, EngineError, GradedAlgebra, Homogeneity};
use crate::exact::Rat;
use crate::linalg::RatSpan;
use crate::roots::{self, RootError, RootKind};
use crate::rootvec::{RootVector, WeylWord};
use num::Zero;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SubalgebraError {
    #[error("generator {0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("{0} is not a real root")]
    NotRealRoot(RootVector),
    #[error("subspace is not abelian: degrees {0} and {1} pair negatively under the form")]
    NotAbelian(RootVector, RootVector),
    #[error("component at {0} lies outside the positive imaginary part")]
    NotInNimPlus(RootVector),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// Degree-indexed family of subspaces. The zero degree holds Cartan and
/// derivation coordinates (length `2n`); a root degree holds coordinates
/// over the basis of its root space.
#[derive(Debug, Clone)]
pub struct GradedSubspace {
    n: usize,
    spans: BTreeMap<RootVector, RatSpan>,
}

impl GradedSubspace {
    pub fn new(n: usize) -> Self {
        GradedSubspace {
            n,
            spans: BTreeMap::new(),
        }
    }

    fn flat_coords(&self, _g: &GradedAlgebra, x: &Element) -> Option<(RootVector, Vec<Rat>)> {
        match x.homogeneity()? {
            Homogeneity::DegreeZero => {
                let mut coords = x.cartan().to_vec();
                coords.extend_from_slice(x.deriv());
                Some((RootVector::zero(self.n), coords))
            }
            Homogeneity::Root(deg) => x.coords_at(&deg).map(|c| (deg.clone(), c.clone())),
        }
    }

    /// Inserts a homogeneous element; `true` when the span grew.
    pub fn insert(&mut self, g: &GradedAlgebra, x: &Element) -> bool {
        if x.is_zero() {
            return false;
        }
        let Some((deg, coords)) = self.flat_coords(g, x) else {
            panic!("graded subspace insert needs a homogeneous element");
        };
        let ncols = coords.len();
        self.spans
            .entry(deg)
            .or_insert_with(|| RatSpan::new(ncols))
            .push_generator(&coords)
    }

    pub fn contains(&self, g: &GradedAlgebra, x: &Element) -> bool {
        if x.is_zero() {
            return true;
        }
        let Some((deg, coords)) = self.flat_coords(g, x) else {
            return false;
        };
        self.spans
            .get(&deg)
            .is_some_and(|span| span.contains(&coords))
    }

    pub fn dim_at(&self, deg: &RootVector) -> usize {
        self.spans.get(deg).map_or(0, |s| s.rank())
    }

    pub fn degrees(&self) -> Vec<RootVector> {
        self.spans
            .keys()
            .filter(|d| self.dim_at(d) > 0)
            .cloned()
            .collect()
    }

    pub fn total_dim(&self) -> usize {
        self.spans.values().map(|s| s.rank()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.total_dim() == 0
    }

    /// Echelonised basis as elements, per degree, in degree order.
    pub fn basis_elements(&self, _g: &GradedAlgebra) -> Vec<Element> {
        let n = self.n;
        let mut out = Vec::new();
        for (deg, span) in &self.spans {
            for row in span.basis_rows() {
                if deg.is_zero() {
                    let mut e = Element::zero(n);
                    for i in 0..n {
                        if !row[i].is_zero() {
                            e.add_scaled(&Element::coroot(n, i), &row[i]);
                        }
                        if !row[n + i].is_zero() {
                            e.add_scaled(&Element::derivation(n, i), &row[n + i]);
                        }
                    }
                    out.push(e);
                } else {
                    out.push(Element::from_term(n, deg.clone(), row.clone()));
                }
            }
        }
        out.retain(|e| !e.is_zero());
        out
    }

    /// Sorted `(degree, dimension)` pairs.
    pub fn profile(&self) -> Vec<(RootVector, usize)> {
        self.spans
            .iter()
            .filter(|(_, s)| s.rank() > 0)
            .map(|(d, s)| (d.clone(), s.rank()))
            .collect()
    }
}

/// A graded subalgebra: homogeneous generators together with the bracket
/// closure computed inside the height bound. Bracket pairs whose product
/// degree leaves the computed range are recorded as boundary events, not
/// errors.
#[derive(Debug, Clone)]
pub struct GradedSubalgebra {
    pub generators: Vec<Element>,
    pub closure: GradedSubspace,
    /// Degree pairs whose bracket left the computed height range.
    pub boundary_events: Vec<(RootVector, RootVector)>,
}

/// Smallest graded subspace containing the generators and closed under all
/// brackets that stay inside the truncation.
pub fn span_closure(
    g: &GradedAlgebra,
    generators: &[Element],
) -> Result<GradedSubalgebra, SubalgebraError> {
    for x in generators {
        if !x.is_zero() && x.homogeneity().is_none() {
            return Err(SubalgebraError::NotHomogeneous(format!("{x}")));
        }
    }
    let mut closure = GradedSubspace::new(g.rank());
    let mut items: Vec<Element> = Vec::new();
    let mut boundary = Vec::new();
    let mut queue: std::collections::VecDeque<(usize, usize)> = Default::default();
    let push_item = |x: &Element,
                     closure: &mut GradedSubspace,
                     items: &mut Vec<Element>,
                     queue: &mut std::collections::VecDeque<(usize, usize)>| {
        if closure.insert(g, x) {
            let new_idx = items.len();
            items.push(x.clone());
            for old in 0..new_idx {
                queue.push_back((old, new_idx));
            }
        }
    };
    for x in generators {
        if !x.is_zero() {
            push_item(x, &mut closure, &mut items, &mut queue);
        }
    }
    while let Some((i, j)) = queue.pop_front() {
        let (a, b) = (items[i].clone(), items[j].clone());
        match g.bracket(&a, &b) {
            Ok(z) => push_item(&z, &mut closure, &mut items, &mut queue),
            Err(EngineError::TruncationExceeded { .. }) => {
                let da = a
                    .degrees()
                    .first()
                    .cloned()
                    .unwrap_or(RootVector::zero(g.rank()));
                let db = b
                    .degrees()
                    .first()
                    .cloned()
                    .unwrap_or(RootVector::zero(g.rank()));
                boundary.push((da, db));
            }
            Err(other) => return Err(SubalgebraError::Engine(other)),
        }
    }
    boundary.sort();
    boundary.dedup();
    Ok(GradedSubalgebra {
        generators: generators.to_vec(),
        closure,
        boundary_events: boundary,
    })
}

/// The four graded constituents of a subalgebra: Cartan part, real-root
/// part, and the two imaginary parts.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub l0: Vec<Element>,
    pub psi: Vec<RootVector>,
    pub im_plus: Vec<(RootVector, Vec<Element>)>,
    pub im_minus: Vec<(RootVector, Vec<Element>)>,
}

pub fn decompose(g: &GradedAlgebra, l: &GradedSubalgebra) -> Decomposition {
    let mut psi = Vec::new();
    let mut im_plus = Vec::new();
    let mut im_minus = Vec::new();
    let mut l0 = Vec::new();
    for deg in l.closure.degrees() {
        if deg.is_zero() {
            l0 = l
                .closure
                .basis_elements(g)
                .into_iter()
                .filter(|e| e.has_cartan_part())
                .collect();
            continue;
        }
        let kind = roots::classify_root(g.gcm(), g.symmetrization(), &deg).kind;
        let basis: Vec<Element> = l
            .closure
            .basis_elements(g)
            .into_iter()
            .filter(|e| e.degrees() == vec![deg.clone()])
            .collect();
        match kind {
            RootKind::RealPositive | RootKind::RealNegative => psi.push(deg),
            RootKind::ImaginaryIsotropic | RootKind::ImaginaryAnisotropic => {
                if deg.is_positive() {
                    im_plus.push((deg, basis));
                } else {
                    im_minus.push((deg, basis));
                }
            }
            RootKind::NotARoot => unreachable!("nonzero space at a non-root degree"),
        }
    }
    Decomposition {
        l0,
        psi,
        im_plus,
        im_minus,
    }
}

/// Split of a set of real roots into its symmetric and nilpotent parts, with
/// the closed-set check.
#[derive(Debug, Clone, Serialize)]
pub struct PsiAnalysis {
    pub psi_s: Vec<RootVector>,
    pub psi_n: Vec<RootVector>,
    pub closed: bool,
    /// A pair violating closedness, if any.
    pub witness: Option<(RootVector, RootVector)>,
    /// Dimension of the span of the coroots of the symmetric part.
    pub h_s_dim: usize,
}

pub fn psi_analysis(g: &GradedAlgebra, psi: &[RootVector]) -> Result<PsiAnalysis, SubalgebraError> {
    for alpha in psi {
        let class = roots::classify_root(g.gcm(), g.symmetrization(), alpha);
        if !class.kind.is_real() {
            return Err(SubalgebraError::NotRealRoot(alpha.clone()));
        }
    }
    let set: std::collections::BTreeSet<&RootVector> = psi.iter().collect();
    let mut psi_s = Vec::new();
    let mut psi_n = Vec::new();
    for alpha in psi {
        if set.contains(&-alpha.clone()) {
            psi_s.push(alpha.clone());
        } else {
            psi_n.push(alpha.clone());
        }
    }
    let mut closed = true;
    let mut witness = None;
    'outer: for a in psi {
        for b in psi {
            let sum = a + b;
            if sum.is_zero() {
                continue;
            }
            if roots::classify_root(g.gcm(), g.symmetrization(), &sum)
                .kind
                .is_root()
                && !set.contains(&sum)
            {
                closed = false;
                witness = Some((a.clone(), b.clone()));
                break 'outer;
            }
        }
    }
    // span of the coroots 2 alpha^sharp / (alpha|alpha)
    let n = g.rank();
    let mut span = RatSpan::new(n);
    for alpha in &psi_s {
        let sharp = g.alpha_sharp(alpha);
        let norm = g.symmetrization().norm(alpha).map_err(EngineError::Gcm)?;
        let coords: Vec<Rat> = sharp
            .cartan()
            .iter()
            .map(|c| c * crate::exact::rat(2) / norm.clone())
            .collect();
        span.push_generator(&coords);
    }
    Ok(PsiAnalysis {
        psi_s,
        psi_n,
        closed,
        witness,
        h_s_dim: span.rank(),
    })
}

/// Outcome of one structural condition: checked and skipped pair counts and
/// the first violation witness.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionCheck {
    pub holds: bool,
    pub checked: usize,
    pub skipped_truncation: usize,
    pub witness: Option<String>,
}

impl ConditionCheck {
    fn new() -> Self {
        ConditionCheck {
            holds: true,
            checked: 0,
            skipped_truncation: 0,
            witness: None,
        }
    }

    fn fail(&mut self, witness: String) {
        if self.holds {
            self.holds = false;
            self.witness = Some(witness);
        }
    }
}

/// Report of the locally-finite structure conditions for a graded
/// subalgebra: the real-root set is closed, both imaginary parts are
/// abelian, real root spaces commute with them, and mixed imaginary
/// brackets fall back into the Cartan-plus-real part.
#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub psi_closed: ConditionCheck,
    pub im_plus_abelian: ConditionCheck,
    pub im_minus_abelian: ConditionCheck,
    pub real_commutes_with_imaginary: ConditionCheck,
    pub mixed_imaginary_in_l0_psi: ConditionCheck,
    pub all_hold: bool,
}

pub fn check_locally_finite_structure(
    g: &GradedAlgebra,
    l: &GradedSubalgebra,
) -> Result<StructureReport, SubalgebraError> {
    let d = decompose(g, l);
    let mut psi_closed = ConditionCheck::new();
    let analysis = psi_analysis(g, &d.psi)?;
    psi_closed.checked = d.psi.len() * d.psi.len();
    if !analysis.closed {
        let (a, b) = analysis.witness.clone().unwrap();
        psi_closed.fail(format!("{a} + {b} is a root outside the set"));
    }

    let bracket_pairs =
        |left: &[(RootVector, Vec<Element>)],
         right: &[(RootVector, Vec<Element>)],
         same_family: bool,
         check: &mut ConditionCheck,
         verdict: &mut dyn FnMut(&Element, &mut ConditionCheck, &Element, &Element)|
         -> Result<(), SubalgebraError> {
            for (i, (da, basis_a)) in left.iter().enumerate() {
                for (j, (db, basis_b)) in right.iter().enumerate() {
                    if same_family && j < i {
                        continue;
                    }
                    if (da.height() + db.height()).abs() > g.height() {
                        check.skipped_truncation += basis_a.len() * basis_b.len();
                        continue;
                    }
                    for (ka, x) in basis_a.iter().enumerate() {
                        for (kb, y) in basis_b.iter().enumerate() {
                            if same_family && i == j && kb <= ka {
                                continue;
                            }
                            let z = g.bracket(x, y).map_err(SubalgebraError::Engine)?;
                            check.checked += 1;
                            verdict(&z, check, x, y);
                        }
                    }
                }
            }
            Ok(())
        };

    let mut im_plus_abelian = ConditionCheck::new();
    bracket_pairs(
        &d.im_plus,
        &d.im_plus,
        true,
        &mut im_plus_abelian,
        &mut |z, check, x, y| {
            if !z.is_zero() {
                check.fail(format!("[{}, {}] != 0", x.render(g), y.render(g)));
            }
        },
    )?;
    let mut im_minus_abelian = ConditionCheck::new();
    bracket_pairs(
        &d.im_minus,
        &d.im_minus,
        true,
        &mut im_minus_abelian,
        &mut |z, check, x, y| {
            if !z.is_zero() {
                check.fail(format!("[{}, {}] != 0", x.render(g), y.render(g)));
            }
        },
    )?;

    // real root spaces against both imaginary parts
    let mut real_commutes = ConditionCheck::new();
    let real_spaces: Vec<(RootVector, Vec<Element>)> = d
        .psi
        .iter()
        .map(|alpha| {
            let basis = l
                .closure
                .basis_elements(g)
                .into_iter()
                .filter(|e| e.degrees() == vec![alpha.clone()])
                .collect();
            (alpha.clone(), basis)
        })
        .collect();
    for family in [&d.im_plus, &d.im_minus] {
        bracket_pairs(
            &real_spaces,
            family,
            false,
            &mut real_commutes,
            &mut |z, check, x, y| {
                if !z.is_zero() {
                    check.fail(format!("[{}, {}] != 0", x.render(g), y.render(g)));
                }
            },
        )?;
    }

    // mixed imaginary brackets must land in the Cartan-plus-real part:
    // no imaginary component in the result
    let mut mixed = ConditionCheck::new();
    bracket_pairs(
        &d.im_plus,
        &d.im_minus,
        false,
        &mut mixed,
        &mut |z, check, x, y| {
            for deg in z.degrees() {
                let kind = roots::classify_root(g.gcm(), g.symmetrization(), &deg).kind;
                if kind.is_imaginary() {
                    check.fail(format!(
                        "[{}, {}] has an imaginary component at {deg}",
                        x.render(g),
                        y.render(g)
                    ));
                }
            }
        },
    )?;

    let all_hold = psi_closed.holds
        && im_plus_abelian.holds
        && im_minus_abelian.holds
        && real_commutes.holds
        && mixed.holds;
    Ok(StructureReport {
        psi_closed,
        im_plus_abelian,
        im_minus_abelian,
        real_commutes_with_imaginary: real_commutes,
        mixed_imaginary_in_l0_psi: mixed,
        all_hold,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

/// Truncation-aware verdict for a series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SeriesVerdict {
    /// The step is exactly zero and no bracket along the way was lost to the
    /// height bound, so the vanishing is not a truncation artifact.
    TerminatesAtStep(usize),
    /// Still nonzero when the computation stopped (stabilised or out of
    /// steps).
    NonzeroAtTruncation(usize),
    /// The step vanished within the truncation, but earlier brackets left
    /// the computed range, so termination cannot be certified.
    ZeroAtTruncationUncertified(usize),
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Graded dimension profiles of the successive steps, starting with the
    /// subalgebra itself at index 0.
    pub steps: Vec<Vec<(RootVector, usize)>>,
    pub verdict: SeriesVerdict,
    /// True when two consecutive steps were equal (the series can never
    /// reach zero).
    pub stabilized: bool,
    /// True when no bracket along the whole computation was lost to the
    /// height bound, so the profiles are the true ones.
    pub certified: bool,
}

/// Derived series `S_{k+1} = [S_k, S_k]` or lower central series
/// `S_{k+1} = [L, S_k]`, with profiles and a truncation-aware verdict.
pub fn series(
    g: &GradedAlgebra,
    l: &GradedSubalgebra,
    kind: SeriesKind,
    max_steps: usize,
) -> Result<SeriesReport, SubalgebraError> {
    assert!(max_steps >= 1);
    let ambient = l.closure.basis_elements(g);
    let mut steps = vec![l.closure.profile()];
    let mut lost_brackets = !l.boundary_events.is_empty();
    let mut current = ambient.clone();
    let mut current_profile = l.closure.profile();
    for k in 1..=max_steps {
        let mut next_space = GradedSubspace::new(g.rank());
        let mut step_lost = false;
        let left: &[Element] = match kind {
            SeriesKind::Derived => &current,
            SeriesKind::LowerCentral => &ambient,
        };
        for x in left {
            for y in &current {
                match g.bracket(x, y) {
                    Ok(z) => {
                        if !z.is_zero() {
                            next_space.insert(g, &z);
                        }
                    }
                    Err(EngineError::TruncationExceeded { .. }) => step_lost = true,
                    Err(other) => return Err(SubalgebraError::Engine(other)),
                }
            }
        }
        lost_brackets |= step_lost;
        let profile = next_space.profile();
        steps.push(profile.clone());
        if next_space.is_empty() {
            let verdict = if lost_brackets {
                SeriesVerdict::ZeroAtTruncationUncertified(k)
            } else {
                SeriesVerdict::TerminatesAtStep(k)
            };
            return Ok(SeriesReport {
                kind,
                steps,
                verdict,
                stabilized: false,
                certified: !lost_brackets,
            });
        }
        if profile == current_profile {
            // descending chain stalled at a nonzero space
            return Ok(SeriesReport {
                kind,
                steps,
                verdict: SeriesVerdict::NonzeroAtTruncation(k),
                stabilized: true,
                certified: !lost_brackets,
            });
        }
        current = next_space.basis_elements(g);
        current_profile = profile;
    }
    Ok(SeriesReport {
        kind,
        steps,
        verdict: SeriesVerdict::NonzeroAtTruncation(max_steps),
        stabilized: false,
        certified: !lost_brackets,
    })
}

/// A subalgebra built from precomputed spaces (for series of derived
/// pieces); boundary events are inherited.
fn subalgebra_from_space(
    g: &GradedAlgebra,
    space: &GradedSubspace,
    boundary: &[(RootVector, RootVector)],
) -> GradedSubalgebra {
    GradedSubalgebra {
        generators: space.basis_elements(g),
        closure: space.clone(),
        boundary_events: boundary.to_vec(),
    }
}

/// One step of the derived series as a graded space, with a flag for lost
/// brackets.
fn derived_step(
    g: &GradedAlgebra,
    items: &[Element],
) -> Result<(GradedSubspace, bool), SubalgebraError> {
    let mut out = GradedSubspace::new(g.rank());
    let mut lost = false;
    for x in items {
        for y in items {
            match g.bracket(x, y) {
                Ok(z) => {
                    if !z.is_zero() {
                        out.insert(g, &z);
                    }
                }
                Err(EngineError::TruncationExceeded { .. }) => lost = true,
                Err(other) => return Err(SubalgebraError::Engine(other)),
            }
        }
    }
    Ok((out, lost))
}

#[derive(Debug, Clone, Serialize)]
pub struct SolvabilityReport {
    pub derived: SeriesReport,
    /// Lower central series of the first derived subalgebra `[L, L]`.
    pub l1_lower_central: SeriesReport,
    /// Lower central series of the second derived subalgebra.
    pub l2_lower_central: SeriesReport,
    /// `[h ∩ [L,L], L] = 0`.
    pub cartan_condition: ConditionCheck,
    /// Solvable iff the second derived subalgebra is nilpotent, whenever
    /// both sides are decidable at this truncation.
    pub solvable_iff_l2_nilpotent: Option<bool>,
    /// Solvable iff `[L,L]` is nilpotent; stated only when the diagram has
    /// no affine subdiagram, where it is expected to hold.
    pub solvable_iff_l1_nilpotent: Option<bool>,
    pub diagram_has_affine_subdiagram: bool,
}

/// Evaluates solvability, the nilpotency of the first and second derived
/// subalgebras, and the Cartan condition, with the consistency statements
/// between them.
pub fn solvability_verdict(
    g: &GradedAlgebra,
    l: &GradedSubalgebra,
    max_steps: usize,
) -> Result<SolvabilityReport, SubalgebraError> {
    let derived = series(g, l, SeriesKind::Derived, max_steps)?;
    let ambient = l.closure.basis_elements(g);
    let (l1_space, lost1) = derived_step(g, &ambient)?;
    let mut boundary1 = l.boundary_events.clone();
    if lost1 {
        boundary1.push((RootVector::zero(g.rank()), RootVector::zero(g.rank())));
    }
    let l1 = subalgebra_from_space(g, &l1_space, &boundary1);
    let l1_lower_central = series(g, &l1, SeriesKind::LowerCentral, max_steps)?;
    let (l2_space, lost2) = derived_step(g, &l1.closure.basis_elements(g))?;
    let mut boundary2 = boundary1.clone();
    if lost2 {
        boundary2.push((RootVector::zero(g.rank()), RootVector::zero(g.rank())));
    }
    let l2 = subalgebra_from_space(g, &l2_space, &boundary2);
    let l2_lower_central = series(g, &l2, SeriesKind::LowerCentral, max_steps)?;

    // [h ∩ L^1, L] = 0; degree-0 brackets never leave the truncation
    let mut cartan_condition = ConditionCheck::new();
    let zero_deg = RootVector::zero(g.rank());
    if l1.closure.dim_at(&zero_deg) > 0 {
        let h_basis: Vec<Element> = l1
            .closure
            .basis_elements(g)
            .into_iter()
            .filter(|e| e.has_cartan_part())
            .collect();
        for h in &h_basis {
            for x in &ambient {
                let z = g.bracket(h, x).map_err(SubalgebraError::Engine)?;
                cartan_condition.checked += 1;
                if !z.is_zero() {
                    cartan_condition.fail(format!("[{}, {}] != 0", h.render(g), x.render(g)));
                }
            }
        }
    }

    let solvable = decided(&derived);
    let l1_nilp = decided(&l1_lower_central);
    let l2_nilp = decided(&l2_lower_central);
    let solvable_iff_l2_nilpotent = match (solvable, l2_nilp) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let diagram_has_affine_subdiagram = has_affine_subdiagram(g);
    let solvable_iff_l1_nilpotent = if diagram_has_affine_subdiagram {
        None
    } else {
        match (solvable, l1_nilp) {
            (Some(a), Some(b)) => Some(a == b),
            _ => None,
        }
    };
    Ok(SolvabilityReport {
        derived,
        l1_lower_central,
        l2_lower_central,
        cartan_condition,
        solvable_iff_l2_nilpotent,
        solvable_iff_l1_nilpotent,
        diagram_has_affine_subdiagram,
    })
}

/// `Some(true)` = terminates, `Some(false)` = provably never terminates
/// (stabilised nonzero with nothing lost to the height bound), `None` =
/// undecided at this truncation.
pub fn decided(report: &SeriesReport) -> Option<bool> {
    match report.verdict {
        SeriesVerdict::TerminatesAtStep(_) => Some(true),
        SeriesVerdict::NonzeroAtTruncation(_) => {
            if report.stabilized && report.certified {
                Some(false)
            } else {
                None
            }
        }
        SeriesVerdict::ZeroAtTruncationUncertified(_) => None,
    }
}

/// True when some nonempty subdiagram is of affine type.
pub fn has_affine_subdiagram(g: &GradedAlgebra) -> bool {
    let n = g.rank();
    for mask in 1u32..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let classes = g.gcm().classify_subdiagram(&subset).expect("nonempty");
        if classes
            .iter()
            .any(|(_, t)| *t == crate::gcm::SubdiagramType::Affine)
        {
            return true;
        }
    }
    false
}

/// Levels of one isotropic block: the degree at each occupied multiple of
/// the primitive ray vector, with the transported basis there.
pub type IsotropicLevels = Vec<(RootVector, Vec<Element>)>;

/// Canonical form of an abelian graded subspace of the positive imaginary
/// part: one Weyl word moves it to a sum of anisotropic lines and isotropic
/// blocks whose supports are distinct connected components of their union.
#[derive(Debug, Clone)]
pub struct AbelianCanonicalForm {
    pub word: WeylWord,
    /// Fundamental-cone anisotropic degrees, one line each.
    pub anisotropic: Vec<(RootVector, Element)>,
    /// Primitive isotropic cone degrees with their levels.
    pub isotropic: Vec<(RootVector, IsotropicLevels)>,
}

pub fn abelian_canonical_form(
    g: &GradedAlgebra,
    l: &GradedSubalgebra,
) -> Result<AbelianCanonicalForm, SubalgebraError> {
    let degrees = l.closure.degrees();
    for deg in &degrees {
        let kind = roots::classify_root(g.gcm(), g.symmetrization(), deg).kind;
        if !(deg.is_positive() && kind.is_imaginary()) {
            return Err(SubalgebraError::NotInNimPlus(deg.clone()));
        }
    }
    // abelian-ness is decided by the form: distinct lines at degrees pairing
    // strictly negatively always bracket nonzero, and everything else
    // vanishes for degrees inside the positive imaginary part
    let symm = g.symmetrization();
    for a in &degrees {
        for b in &degrees {
            if a >= b {
                continue;
            }
            let form = symm.bilinear(a, b).map_err(EngineError::Gcm)?;
            if form < Rat::zero() {
                return Err(SubalgebraError::NotAbelian(a.clone(), b.clone()));
            }
        }
    }
    for a in &degrees {
        let kind = roots::classify_root(g.gcm(), g.symmetrization(), a).kind;
        if kind == RootKind::ImaginaryAnisotropic && l.closure.dim_at(a) >= 2 {
            return Err(SubalgebraError::NotAbelian(a.clone(), a.clone()));
        }
    }
    // sanity: brackets available inside the truncation must vanish
    let items = l.closure.basis_elements(g);
    for (i, x) in items.iter().enumerate() {
        for y in items.iter().skip(i + 1) {
            if let Ok(z) = g.bracket(x, y) {
                if !z.is_zero() {
                    let da = x.degrees()[0].clone();
                    let db = y.degrees()[0].clone();
                    return Err(SubalgebraError::NotAbelian(da, db));
                }
            }
        }
    }
    // group the degrees into rays and disjointify one representative per ray
    let mut rays: BTreeMap<RootVector, Vec<RootVector>> = BTreeMap::new();
    for deg in &degrees {
        rays.entry(deg.primitive()).or_default().push(deg.clone());
    }
    let reps: Vec<RootVector> = rays
        .values()
        .map(|members| members.iter().min_by_key(|d| d.height()).unwrap().clone())
        .collect();
    let (word, _) = roots::disjointify(g.gcm(), symm, &reps)?;
    let mut anisotropic = Vec::new();
    let mut isotropic = Vec::new();
    for (prim, members) in &rays {
        let kind = roots::classify_root(g.gcm(), g.symmetrization(), prim).kind;
        let moved_prim = roots::apply_word(g.gcm(), &word, prim)?;
        if kind == RootKind::ImaginaryAnisotropic {
            // a single line (several anisotropic multiples on one ray would
            // have failed the form check)
            assert_eq!(members.len(), 1);
            let basis = l
                .closure
                .basis_elements(g)
                .into_iter()
                .filter(|e| e.degrees() == vec![members[0].clone()])
                .collect::<Vec<_>>();
            let line = g.weyl_star(&word, &basis[0])?;
            let deg = roots::apply_word(g.gcm(), &word, &members[0])?;
            anisotropic.push((deg, line));
        } else {
            let mut levels = Vec::new();
            for m in members {
                let moved = roots::apply_word(g.gcm(), &word, m)?;
                let basis: Vec<Element> = l
                    .closure
                    .basis_elements(g)
                    .into_iter()
                    .filter(|e| e.degrees() == vec![m.clone()])
                    .map(|e| g.weyl_star(&word, &e))
                    .collect::<Result<_, _>>()?;
                levels.push((moved, basis));
            }
            isotropic.push((moved_prim, levels));
        }
    }
    Ok(AbelianCanonicalForm {
        word,
        anisotropic,
        isotropic,
    })
}

/// Fixture format for subalgebras: explicit homogeneous generator
/// expressions plus degree-pattern rules expanded inside the truncation.
#[derive(Debug, Clone, serde::Deserialize, Serialize)]
pub struct SubalgebraFixture {
    #[serde(default)]
    pub generators: Vec<String>,
    #[serde(default)]
    pub patterns: Vec<DegreePattern>,
}

/// Full root spaces along an arithmetic progression of degrees:
/// `base + k * step` for `k >= from`, expanded while the height fits.
#[derive(Debug, Clone, serde::Deserialize, Serialize)]
pub struct DegreePattern {
    pub base_degree: Vec<i64>,
    #[serde(default)]
    pub step_degree: Option<Vec<i64>>,
    #[serde(default = "default_component")]
    pub component: String,
    #[serde(default)]
    pub from: i64,
}

fn default_component() -> String {
    "full".to_string()
}

/// Expands a fixture into homogeneous generators against an algebra.
pub fn fixture_generators(
    g: &GradedAlgebra,
    fixture: &SubalgebraFixture,
) -> Result<Vec<Element>, SubalgebraError> {
    let mut out = Vec::new();
    for text in &fixture.generators {
        out.push(crate::engine::parse_element(g, text).map_err(SubalgebraError::Engine)?);
    }
    for pattern in &fixture.patterns {
        if pattern.component != "full" {
            return Err(SubalgebraError::Engine(EngineError::Internal(format!(
                "unsupported pattern component `{}`",
                pattern.component
            ))));
        }
        let base = RootVector(pattern.base_degree.clone());
        let step = pattern
            .step_degree
            .clone()
            .map(RootVector)
            .unwrap_or_else(|| RootVector::zero(g.rank()));
        let mut k = pattern.from;
        loop {
            let deg = &base + &step.scaled(k);
            if deg.height().abs() > g.height() {
                break;
            }
            let dim = g.mult(&deg).map_err(SubalgebraError::Engine)?;
            for idx in 0..dim {
                out.push(g.basis_element(&deg, idx));
            }
            if step.is_zero() {
                break;
            }
            k += 1;
            if step.height() == 0 {
                break; // a zero-height step would never leave the range
            }
        }
    }
    Ok(out)
}
