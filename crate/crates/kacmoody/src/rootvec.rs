//! Integer coordinate vectors over the simple roots, and Weyl-group words.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A lattice vector `sum_i n_i alpha_i`, written by its coordinate vector
/// over the simple roots.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn zero(n: usize) -> Self {
        RootVector(vec![0; n])
    }

    /// The i-th simple root (0-based index).
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        RootVector(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Sum of coordinates.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Indices (0-based) of nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_nonpositive(&self) -> bool {
        self.0.iter().all(|&x| x <= 0)
    }

    /// Nonzero with all coordinates of one sign.
    pub fn is_sign_pure(&self) -> bool {
        !self.is_zero() && (self.is_nonnegative() || self.is_nonpositive())
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.is_nonnegative()
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.is_nonpositive()
    }

    pub fn scaled(&self, k: i64) -> Self {
        RootVector(self.0.iter().map(|&x| x * k).collect())
    }

    /// Greatest common divisor of the coordinates (0 for the zero vector).
    pub fn coordinate_gcd(&self) -> i64 {
        self.0
            .iter()
            .fold(0i64, |g, &x| num::integer::gcd(g, x.abs()))
    }

    /// The primitive vector on the same ray (positive direction preserved).
    pub fn primitive(&self) -> Self {
        let g = self.coordinate_gcd();
        if g <= 1 {
            self.clone()
        } else {
            RootVector(self.0.iter().map(|&x| x / g).collect())
        }
    }

    /// True when `other` is a positive integer multiple of `self` or vice versa.
    pub fn proportional(&self, other: &RootVector) -> bool {
        self.primitive() == other.primitive() || self.primitive() == -other.primitive().clone()
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector(self.0.iter().map(|&x| -x).collect())
    }
}

/// A word in the simple reflections, stored as 0-based generator indices.
///
/// Letters act left to right: the word `[i, j]` sends `v` to `s_j(s_i(v))`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Set of letters appearing in the word (not reduced; see
    /// `roots::word_support` for the support of the group element).
    pub fn letters(&self) -> Vec<usize> {
        let mut l = self.0.clone();
        l.sort_unstable();
        l.dedup();
        l
    }

    pub fn extended(&self, other: &WeylWord) -> WeylWord {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        WeylWord(w)
    }

    pub fn reversed(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().copied().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heights_and_supports() {
        let v = RootVector(vec![2, 0, 1]);
        assert_eq!(v.height(), 3);
        assert_eq!(v.support(), vec![0, 2]);
        assert!(v.is_sign_pure() && v.is_positive());
        assert!(!RootVector(vec![1, -1]).is_sign_pure());
        assert!(!RootVector::zero(2).is_sign_pure());
    }

    #[test]
    fn rays_and_primitives() {
        let v = RootVector(vec![2, 4]);
        assert_eq!(v.primitive(), RootVector(vec![1, 2]));
        assert!(v.proportional(&RootVector(vec![1, 2])));
        assert!(v.proportional(&RootVector(vec![-1, -2])));
        assert!(!v.proportional(&RootVector(vec![1, 1])));
    }
}
