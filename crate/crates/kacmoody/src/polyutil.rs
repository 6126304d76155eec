//! Univariate polynomials over the rationals and the pencil kernel test.
//!
//! For a pencil `s M1 + t M2` of linear maps, deciding whether some nonzero
//! `(s : t)` has a nontrivial kernel over the complex numbers reduces to a
//! diagonalisation of the polynomial matrix `M2 + t M1` over Q[t], whose
//! finite points cover every ratio except `(1 : 0)`; that last ratio is
//! `M1` alone and is checked separately. After unimodular row and column operations
//! the matrix is diagonal, the generic rank is the number of nonzero
//! diagonal entries, and the rank drops at some complex point exactly when
//! a diagonal entry has positive degree.

use crate::exact::Rat;
use num::Zero;

/// Dense coefficient list, low degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(pub Vec<Rat>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly(vec![c])
        }
    }

    /// `a + b t`.
    pub fn linear(a: Rat, b: Rat) -> Self {
        let mut p = Poly(vec![a, b]);
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.0.last(), Some(c) if c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn sub_scaled_shift(&mut self, other: &Poly, c: &Rat, shift: usize) {
        // self -= c * t^shift * other
        if other.is_zero() || c.is_zero() {
            return;
        }
        let need = other.0.len() + shift;
        if self.0.len() < need {
            self.0.resize(need, Rat::zero());
        }
        for (k, oc) in other.0.iter().enumerate() {
            self.0[k + shift] = &self.0[k + shift] - &(c * oc);
        }
        self.trim();
    }

    /// Remainder of `self` modulo `d` (Euclid).
    pub fn rem(&self, d: &Poly) -> Poly {
        assert!(!d.is_zero());
        let mut r = self.clone();
        let dd = d.degree().unwrap();
        let lead = d.0[dd].clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = &r.0[rd] / &lead;
            r.sub_scaled_shift(d, &c, rd - dd);
        }
        r
    }
}

/// Diagonalises a polynomial matrix by unimodular row/column operations and
/// returns the nonzero diagonal entries.
pub fn diagonalize(mut m: Vec<Vec<Poly>>) -> Vec<Poly> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut k = 0;
    loop {
        if k >= rows || k >= cols {
            break;
        }
        // locate a nonzero entry of minimal degree in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if m[i][j].is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some((i, j)),
                    Some((pi, pj)) => {
                        if m[i][j].degree() < m[pi][pj].degree() {
                            pivot = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }
        // clear row and column k with remainders; restart if a smaller
        // degree appears
        let mut clean = true;
        for i in k + 1..rows {
            if m[i][k].is_zero() {
                continue;
            }
            let r = reduce_entry(&mut m, i, k, true);
            if !r {
                clean = false;
            }
        }
        for j in k + 1..cols {
            if m[k][j].is_zero() {
                continue;
            }
            let r = reduce_entry(&mut m, k, j, false);
            if !r {
                clean = false;
            }
        }
        if !clean {
            continue; // smaller-degree remainders appeared; re-pivot
        }
        diag.push(m[k][k].clone());
        k += 1;
    }
    diag
}

/// Subtracts the right multiple of the pivot row/column to replace entry
/// `(i, j)` by its remainder modulo the pivot. Returns `true` when the entry
/// was cleared to zero.
fn reduce_entry(m: &mut [Vec<Poly>], i: usize, j: usize, row_op: bool) -> bool {
    let k = if row_op { j } else { i };
    let pivot = m[k][k].clone();
    let entry = m[i][j].clone();
    let pd = pivot.degree().unwrap();
    let lead = pivot.0[pd].clone();
    // long division of entry by pivot, applied to the whole row/column
    let mut quotient_applied = false;
    let mut current = entry;
    while let Some(ed) = current.degree() {
        if ed < pd {
            break;
        }
        let c = &current.0[ed] / &lead;
        let shift = ed - pd;
        if row_op {
            // row_i -= c t^shift row_k
            for col in 0..m[0].len() {
                let source = m[k][col].clone();
                m[i][col].sub_scaled_shift(&source, &c, shift);
            }
        } else {
            for row in 0..m.len() {
                let source = m[row][k].clone();
                m[row][j].sub_scaled_shift(&source, &c, shift);
            }
        }
        quotient_applied = true;
        current = m[i][j].clone();
    }
    let _ = quotient_applied;
    m[i][j].is_zero()
}

/// Analysis of a linear pencil `s M1 + t M2` (rows x cols, rationals).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PencilRank {
    /// Rank over the function field (rank at all but finitely many points).
    pub generic_rank: usize,
    /// Number of diagonal invariants with positive degree; each complex
    /// point can drop the rank by at most this count.
    pub nonconstant_invariants: usize,
    /// Rank of `M1` alone, the one ratio the dehomogenisation misses.
    pub rank_at_infinity: usize,
}

/// Diagonalises `M2 + t M1` and reports where the pencil can lose rank.
pub fn pencil_rank(m1: &[Vec<Rat>], m2: &[Vec<Rat>]) -> PencilRank {
    let rows = m1.len();
    let cols = if rows == 0 { 0 } else { m1[0].len() };
    let mut m = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut row = Vec::with_capacity(cols);
        for j in 0..cols {
            row.push(Poly::linear(m2[i][j].clone(), m1[i][j].clone()));
        }
        m.push(row);
    }
    let diag = diagonalize(m);
    let generic_rank = diag.len();
    let nonconstant_invariants = diag.iter().filter(|p| !p.is_constant()).count();
    let rank_at_infinity = crate::linalg::rank_rat(m1);
    PencilRank {
        generic_rank,
        nonconstant_invariants,
        rank_at_infinity,
    }
}

/// True when `rank(s M1 + t M2) >= required` for every `(s, t) != (0, 0)`
/// over the complex numbers. Sound always; complete whenever the generic
/// rank equals `required`, which is the regime of the injectivity checks.
pub fn pencil_rank_never_below(m1: &[Vec<Rat>], m2: &[Vec<Rat>], required: usize) -> bool {
    if required == 0 {
        return true;
    }
    if m1.is_empty() || m1[0].is_empty() {
        return false;
    }
    let analysis = pencil_rank(m1, m2);
    // finite points of M2 + t M1 cover everything except M1 itself; at any
    // finite point the rank is at least generic - nonconstant
    analysis.rank_at_infinity >= required
        && analysis.generic_rank >= required + analysis.nonconstant_invariants
}
