//! Exact linear algebra over dense integer and rational vectors.
//!
//! Echelonisation of spanning sets is fraction-free (integer-preserving
//! cross-multiplication with primitive renormalisation), which keeps
//! coefficient growth in check; coordinate extraction against a finished
//! echelon is done with exact rational back-substitution.

use crate::exact::{make_primitive, max_bits, Int, Rat};
use num::Zero;

/// Row echelon of an integer span, kept primitive row by row.
///
/// Rows are ordered by pivot column. Each row's pivot entry is positive and
/// the row has content one, so a given subspace has a unique representation
/// up to the echelon shape.
#[derive(Debug, Clone, Default)]
pub struct IntEchelon {
    pub ncols: usize,
    pub rows: Vec<Vec<Int>>,
    pub pivots: Vec<usize>,
}

impl IntEchelon {
    pub fn new(ncols: usize) -> Self {
        IntEchelon {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Eliminates `v` against the echelon by cross-multiplication. The result
    /// spans the same coset ray as the true residue (it may be scaled by a
    /// positive rational), which is all that membership and independence
    /// tests need.
    pub fn reduce_ray(&self, v: &mut [Int]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let a = row[p].clone();
            let b = v[p].clone();
            for j in 0..self.ncols {
                v[j] = &v[j] * &a - &row[j] * &b;
            }
            make_primitive(v);
        }
    }

    /// Inserts `v` if independent of the current span. Returns `true` when
    /// the rank grew.
    pub fn insert(&mut self, mut v: Vec<Int>) -> bool {
        assert_eq!(v.len(), self.ncols);
        self.reduce_ray(&mut v);
        let pivot = match v.iter().position(|x| !x.is_zero()) {
            Some(p) => p,
            None => return false,
        };
        make_primitive(&mut v);
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.rows.insert(at, v);
        self.pivots.insert(at, pivot);
        true
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        let mut w = v.to_vec();
        self.reduce_ray(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Largest entry bit size over all rows (resource guard hook).
    pub fn max_entry_bits(&self) -> u64 {
        self.rows.iter().map(|r| max_bits(r)).max().unwrap_or(0)
    }

    /// Exact rational elimination of `v` against the echelon rows; unlike
    /// `reduce_ray` this returns the true coset representative
    /// `v - (combination of rows)`.
    pub fn reduce_exact(&self, v: &mut [Rat]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = &v[p] / Rat::from_integer(row[p].clone());
            for j in p..self.ncols {
                if !row[j].is_zero() {
                    v[j] = &v[j] - &c * Rat::from_integer(row[j].clone());
                }
            }
        }
    }
}

/// Rational reduced row echelon (Gauss-Jordan) of a span that remembers how
/// each echelon row was formed from the inserted generators, so that
/// arbitrary vectors of the span can be written as exact combinations of
/// those generators.
#[derive(Debug, Clone)]
pub struct RatSpan {
    pub ncols: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
    /// `rows[i] = sum_j transform[i][j] * generator_j`
    transform: Vec<Vec<Rat>>,
    ngens: usize,
}

impl RatSpan {
    pub fn new(ncols: usize) -> Self {
        RatSpan {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
            transform: Vec::new(),
            ngens: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a generator; returns `true` if it enlarged the span. The echelon
    /// is kept fully reduced: every pivot column is zero in all other rows.
    pub fn push_generator(&mut self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ncols);
        let mut w = v.to_vec();
        let mut combo = vec![Rat::zero(); self.ngens + 1];
        combo[self.ngens] = Rat::from_integer(Int::from(1));
        for t in self.transform.iter_mut() {
            t.push(Rat::zero());
        }
        self.ngens += 1;
        for ((row, &p), t) in self.rows.iter().zip(&self.pivots).zip(&self.transform) {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for j in 0..self.ncols {
                if !row[j].is_zero() {
                    w[j] = &w[j] - &c * &row[j];
                }
            }
            for j in 0..self.ngens {
                if !t[j].is_zero() {
                    combo[j] = &combo[j] - &c * &t[j];
                }
            }
        }
        let pivot = match w.iter().position(|x| !x.is_zero()) {
            Some(p) => p,
            None => return false,
        };
        let lead = w[pivot].clone();
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x = &*x / &lead;
            }
        }
        for x in combo.iter_mut() {
            if !x.is_zero() {
                *x = &*x / &lead;
            }
        }
        // eliminate the new pivot column from all existing rows
        for i in 0..self.rows.len() {
            if self.rows[i][pivot].is_zero() {
                continue;
            }
            let c = self.rows[i][pivot].clone();
            for j in 0..self.ncols {
                if !w[j].is_zero() {
                    self.rows[i][j] = &self.rows[i][j] - &c * &w[j];
                }
            }
            for j in 0..self.ngens {
                if !combo[j].is_zero() {
                    self.transform[i][j] = &self.transform[i][j] - &c * &combo[j];
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.rows.insert(at, w);
        self.pivots.insert(at, pivot);
        self.transform.insert(at, combo);
        true
    }

    /// Writes `v` as a combination of the generators, if it lies in the span.
    pub fn express(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let mut w = v.to_vec();
        let mut coeffs = vec![Rat::zero(); self.ngens];
        for ((row, &p), t) in self.rows.iter().zip(&self.pivots).zip(&self.transform) {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for j in 0..self.ncols {
                if !row[j].is_zero() {
                    w[j] = &w[j] - &c * &row[j];
                }
            }
            for j in 0..self.ngens {
                if !t[j].is_zero() {
                    coeffs[j] = &coeffs[j] + &c * &t[j];
                }
            }
        }
        if w.iter().all(|x| x.is_zero()) {
            Some(coeffs)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for j in 0..self.ncols {
                if !row[j].is_zero() {
                    w[j] = &w[j] - &c * &row[j];
                }
            }
        }
        w.iter().all(|x| x.is_zero())
    }

    /// Echelonised basis rows of the span, in pivot order.
    pub fn basis_rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }
}

/// Exact determinant by fraction-free Bareiss elimination.
pub fn det_int(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::from(1);
    }
    let mut a: Vec<Vec<Int>> = m.to_vec();
    let mut sign = 1i64;
    let mut prev = Int::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = Int::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Rank of a rational matrix.
pub fn rank_rat(rows: &[Vec<Rat>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut span = RatSpan::new(rows[0].len());
    for r in rows {
        span.push_generator(r);
    }
    span.rank()
}

/// Basis of the right null space `{x : M x = 0}` of a rational matrix given
/// by rows. Deterministic: free columns are processed in increasing order.
pub fn nullspace_rat(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut span = RatSpan::new(ncols);
    for r in rows {
        span.push_generator(r);
    }
    let pivot_cols: Vec<usize> = span.pivots.clone();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut x = vec![Rat::zero(); ncols];
        x[free] = Rat::from_integer(Int::from(1));
        // back-substitute pivot coordinates
        for (row, &p) in span.rows.iter().zip(&span.pivots).rev() {
            if p == free {
                continue;
            }
            let mut s = Rat::zero();
            for j in 0..ncols {
                if j != p && !row[j].is_zero() && !x[j].is_zero() {
                    s = &s + &row[j] * &x[j];
                }
            }
            x[p] = -s; // pivot entry is 1 after normalisation
        }
        basis.push(x);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn iv(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn rv(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = IntEchelon::new(3);
        assert!(e.insert(iv(&[2, 4, 6])));
        assert!(e.insert(iv(&[0, 1, 1])));
        assert!(!e.insert(iv(&[2, 6, 8])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&iv(&[1, 2, 3])));
        assert!(!e.contains(&iv(&[0, 0, 1])));
    }

    #[test]
    fn exact_reduction_is_a_coset_representative() {
        let mut e = IntEchelon::new(3);
        e.insert(iv(&[1, 1, 0]));
        let mut v = rv(&[3, 1, 1]);
        e.reduce_exact(&mut v);
        // v - 3*(1,1,0) = (0,-2,1)
        assert_eq!(v, rv(&[0, -2, 1]));
    }

    #[test]
    fn rat_span_expresses_members() {
        let mut s = RatSpan::new(3);
        s.push_generator(&rv(&[1, 2, 0]));
        s.push_generator(&rv(&[0, 1, 1]));
        let c = s.express(&rv(&[2, 5, 1])).unwrap();
        assert_eq!(c, rv(&[2, 1]));
        assert!(s.express(&rv(&[0, 0, 1])).is_none());
    }

    #[test]
    fn bareiss_determinant() {
        let m = vec![iv(&[2, -1]), iv(&[-1, 2])];
        assert_eq!(det_int(&m), int(3));
        let m = vec![iv(&[2, -2]), iv(&[-2, 2])];
        assert_eq!(det_int(&m), int(0));
        let m = vec![iv(&[2, -2, -1]), iv(&[-2, 2, -1]), iv(&[-1, -1, 2])];
        assert_eq!(det_int(&m), int(-8));
    }

    #[test]
    fn nullspace_of_affine_cartan_matrix() {
        let rows = vec![rv(&[2, -2]), rv(&[-2, 2])];
        let ns = nullspace_rat(&rows, 2);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0][0], ns[0][1]);
    }
}
