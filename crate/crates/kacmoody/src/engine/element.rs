//! Formal elements of the truncated algebra: finite sums of root-space
//! components plus Cartan (coroot) and derivation parts, over exact
//! rationals.

use crate::exact::{rat_to_string, Rat};
use crate::rootvec::RootVector;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// What a homogeneous element can look like.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Homogeneity {
    /// A single root-space component of the given (signed) degree.
    Root(RootVector),
    /// Concentrated in the Cartan subalgebra and derivations (degree 0).
    DegreeZero,
}

/// A finite formal sum of root-space components, a coroot vector, and a
/// derivation vector. Coordinates at a positive degree refer to the basis of
/// that root space; at a negative degree to the mirrored basis over the `f`
/// generators. Zero coordinate vectors are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    n: usize,
    terms: BTreeMap<RootVector, Vec<Rat>>,
    cartan: Vec<Rat>,
    deriv: Vec<Rat>,
}

impl Element {
    pub fn zero(n: usize) -> Self {
        Element {
            n,
            terms: BTreeMap::new(),
            cartan: vec![Rat::zero(); n],
            deriv: vec![Rat::zero(); n],
        }
    }

    pub fn from_term(n: usize, degree: RootVector, coords: Vec<Rat>) -> Self {
        let mut e = Element::zero(n);
        if !coords.iter().all(|c| c.is_zero()) {
            e.terms.insert(degree, coords);
        }
        e
    }

    /// The generator `e_i` (0-based index).
    pub fn generator_e(n: usize, i: usize) -> Self {
        Element::from_term(n, RootVector::simple(n, i), vec![Rat::one()])
    }

    /// The generator `f_i` (0-based index).
    pub fn generator_f(n: usize, i: usize) -> Self {
        Element::from_term(n, -RootVector::simple(n, i), vec![Rat::one()])
    }

    /// The coroot `alpha_i^vee` (0-based index).
    pub fn coroot(n: usize, i: usize) -> Self {
        let mut e = Element::zero(n);
        e.cartan[i] = Rat::one();
        e
    }

    /// The derivation `d_i` (0-based index).
    pub fn derivation(n: usize, i: usize) -> Self {
        let mut e = Element::zero(n);
        e.deriv[i] = Rat::one();
        e
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
            && self.cartan.iter().all(|c| c.is_zero())
            && self.deriv.iter().all(|c| c.is_zero())
    }

    pub fn terms(&self) -> &BTreeMap<RootVector, Vec<Rat>> {
        &self.terms
    }

    pub fn cartan(&self) -> &[Rat] {
        &self.cartan
    }

    pub fn deriv(&self) -> &[Rat] {
        &self.deriv
    }

    pub fn coords_at(&self, deg: &RootVector) -> Option<&Vec<Rat>> {
        self.terms.get(deg)
    }

    pub fn has_cartan_part(&self) -> bool {
        self.cartan.iter().any(|c| !c.is_zero()) || self.deriv.iter().any(|c| !c.is_zero())
    }

    /// Degrees of the nonzero root-space components.
    pub fn degrees(&self) -> Vec<RootVector> {
        self.terms.keys().cloned().collect()
    }

    /// Homogeneity check: exactly one root component and no degree-zero part,
    /// or a pure degree-zero element. The zero element is not homogeneous in
    /// a useful sense and yields `None`.
    pub fn homogeneity(&self) -> Option<Homogeneity> {
        if self.is_zero() {
            return None;
        }
        match (self.terms.len(), self.has_cartan_part()) {
            (0, true) => Some(Homogeneity::DegreeZero),
            (1, false) => Some(Homogeneity::Root(self.terms.keys().next().unwrap().clone())),
            _ => None,
        }
    }

    pub fn add_term(&mut self, degree: RootVector, coords: Vec<Rat>, scale: &Rat) {
        if coords.iter().all(|c| c.is_zero()) || scale.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(degree.clone())
            .or_insert_with(|| vec![Rat::zero(); coords.len()]);
        for (t, c) in entry.iter_mut().zip(&coords) {
            *t = &*t + &(c * scale);
        }
        if entry.iter().all(|c| c.is_zero()) {
            self.terms.remove(&degree);
        }
    }

    pub fn add_scaled(&mut self, other: &Element, scale: &Rat) {
        if scale.is_zero() {
            return;
        }
        for (deg, coords) in &other.terms {
            self.add_term(deg.clone(), coords.clone(), scale);
        }
        for i in 0..self.n {
            self.cartan[i] = &self.cartan[i] + &(&other.cartan[i] * scale);
            self.deriv[i] = &self.deriv[i] + &(&other.deriv[i] * scale);
        }
    }

    pub fn plus(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &Rat::one());
        out
    }

    pub fn minus(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &-Rat::one());
        out
    }

    pub fn scaled(&self, c: &Rat) -> Element {
        let mut out = Element::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    pub fn negated(&self) -> Element {
        self.scaled(&-Rat::one())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

/// Renders one basis coordinate as `coeff*name` with sign folding.
fn push_term(out: &mut String, coeff: &Rat, name: &str) {
    let negative = coeff.is_negative();
    let abs = if negative {
        -coeff.clone()
    } else {
        coeff.clone()
    };
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else if negative {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    if abs.is_one() {
        out.push_str(name);
    } else {
        out.push_str(&format!("{}*{}", rat_to_string(&abs), name));
    }
}

impl Element {
    /// Canonical printing against an algebra's bases. The output parses back
    /// to an equal element.
    pub fn render(&self, algebra: &super::GradedAlgebra) -> String {
        let mut out = String::new();
        for (deg, coords) in &self.terms {
            let negative = deg.is_negative();
            let abs = if negative { -deg.clone() } else { deg.clone() };
            let space = algebra
                .space(&abs)
                .expect("element component outside computed spaces");
            for (k, c) in coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let name = space.trees[k].render(if negative { 'f' } else { 'e' });
                push_term(&mut out, c, &name);
            }
        }
        for (i, c) in self.cartan.iter().enumerate() {
            if !c.is_zero() {
                push_term(&mut out, c, &format!("h{}", i + 1));
            }
        }
        for (i, c) in self.deriv.iter().enumerate() {
            if !c.is_zero() {
                push_term(&mut out, c, &format!("d{}", i + 1));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // degree profile only; full basis names need the algebra (see render)
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, coords) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "<deg {deg}: ")?;
            for (k, c) in coords.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", rat_to_string(c))?;
            }
            write!(f, ">")?;
        }
        if self.has_cartan_part() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "<h:")?;
            for c in &self.cartan {
                write!(f, " {}", rat_to_string(c))?;
            }
            write!(f, "; d:")?;
            for c in &self.deriv {
                write!(f, " {}", rat_to_string(c))?;
            }
            write!(f, ">")?;
        }
        Ok(())
    }
}
