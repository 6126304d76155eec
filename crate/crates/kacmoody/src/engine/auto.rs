//! Automorphisms and distinguished elements: the Chevalley involution, the
//! reflection automorphisms `exp(ad f_i) exp(ad e_i) exp(ad f_i)`, canonical
//! real-root vectors, the form-dual Cartan elements, and the center.

use super::{Element, EngineError, GradedAlgebra};
use crate::exact::{rat, Rat};
use crate::linalg::nullspace_rat;
use crate::roots::{self, RootError};
use crate::rootvec::{RootVector, WeylWord};
use num::{One, Zero};

impl GradedAlgebra {
    /// The Chevalley involution: `e_i -> -f_i`, `f_i -> -e_i`, `h -> -h`.
    /// On a basis bracket word of height `h` this is `(-1)^h` times the
    /// mirrored word, so it acts coordinate-wise.
    pub fn omega(&self, x: &Element) -> Element {
        let n = self.rank();
        let mut out = Element::zero(n);
        for (deg, coords) in x.terms() {
            let h = deg.height().abs();
            let sign = if h % 2 == 0 { rat(1) } else { rat(-1) };
            out.add_term(-deg.clone(), coords.clone(), &sign);
        }
        for i in 0..n {
            if !x.cartan()[i].is_zero() {
                out.add_scaled(&Element::coroot(n, i), &-x.cartan()[i].clone());
            }
            if !x.deriv()[i].is_zero() {
                out.add_scaled(&Element::derivation(n, i), &-x.deriv()[i].clone());
            }
        }
        out
    }

    /// `exp(ad g) x` where `g` is `e_i` or `f_i`; locally nilpotent on every
    /// graded component, with the nilpotency degree bounded by the root
    /// string through `alpha_i`.
    fn exp_ad_generator(
        &self,
        i: usize,
        positive: bool,
        x: &Element,
    ) -> Result<Element, EngineError> {
        let n = self.rank();
        let g = if positive {
            Element::generator_e(n, i)
        } else {
            Element::generator_f(n, i)
        };
        let alpha_i = RootVector::simple(n, i);
        let mut out = Element::zero(n);
        // componentwise: each graded piece has its own chain length
        let mut components: Vec<Element> = Vec::new();
        for (deg, coords) in x.terms() {
            components.push(Element::from_term(n, deg.clone(), coords.clone()));
        }
        let mut zero_part = Element::zero(n);
        for j in 0..n {
            if !x.cartan()[j].is_zero() {
                zero_part.add_scaled(&Element::coroot(n, j), &x.cartan()[j].clone());
            }
            if !x.deriv()[j].is_zero() {
                zero_part.add_scaled(&Element::derivation(n, j), &x.deriv()[j].clone());
            }
        }
        if !zero_part.is_zero() {
            components.push(zero_part);
        }
        for comp in components {
            let cap = match comp.homogeneity() {
                Some(super::element::Homogeneity::DegreeZero) | None => 2,
                Some(super::element::Homogeneity::Root(deg)) => {
                    let string =
                        roots::root_string(self.gcm(), self.symmetrization(), &alpha_i, &deg)
                            .map_err(EngineError::Root)?;
                    if positive {
                        string.q
                    } else {
                        string.p
                    }
                }
            };
            let mut term = comp.clone();
            let mut factorial = Rat::one();
            out.add_scaled(&term, &Rat::one());
            for k in 1..=cap {
                term = self.bracket(&g, &term)?;
                if term.is_zero() {
                    break;
                }
                factorial = factorial * rat(k);
                out.add_scaled(&term, &(Rat::one() / factorial.clone()));
            }
        }
        Ok(out)
    }

    /// The reflection automorphism
    /// `s_i^* = exp(ad f_i) exp(ad e_i) exp(ad f_i)`; maps the space at
    /// `alpha` onto the space at `s_i(alpha)` and restricts to the dual
    /// reflection on the Cartan subalgebra.
    pub fn simple_reflection_star(&self, i: usize, x: &Element) -> Result<Element, EngineError> {
        if i >= self.rank() {
            return Err(EngineError::Root(RootError::IndexOutOfRange(i + 1)));
        }
        let step1 = self.exp_ad_generator(i, false, x)?;
        let step2 = self.exp_ad_generator(i, true, &step1)?;
        self.exp_ad_generator(i, false, &step2)
    }

    /// Left-to-right composition of reflection automorphisms along a word.
    pub fn weyl_star(&self, word: &WeylWord, x: &Element) -> Result<Element, EngineError> {
        let mut cur = x.clone();
        for &i in &word.0 {
            cur = self.simple_reflection_star(i, &cur)?;
        }
        Ok(cur)
    }

    /// A canonical nonzero vector in the one-dimensional space of a real
    /// root: the reflection automorphisms along the reversed reduction word
    /// applied to the Chevalley generator of the minimal representative.
    /// Fixed only up to sign by the theory; comparisons should use spans.
    pub fn real_root_vector(&self, alpha: &RootVector) -> Result<Element, EngineError> {
        let class = roots::classify_root(self.gcm(), self.symmetrization(), alpha);
        if !class.kind.is_real() {
            return Err(EngineError::Root(RootError::AlphaNotReal(alpha.clone())));
        }
        if alpha.height().abs() > self.height() {
            return Err(EngineError::HeightExceedsTruncation {
                degree: alpha.clone(),
                height: self.height(),
            });
        }
        let positive = alpha.is_positive();
        let abs = if positive {
            alpha.clone()
        } else {
            -alpha.clone()
        };
        let (rep, word) = roots::reduce_min_height(self.gcm(), &abs).map_err(EngineError::Root)?;
        let i = rep.support()[0];
        let n = self.rank();
        let seed = if positive {
            Element::generator_e(n, i)
        } else {
            Element::generator_f(n, i)
        };
        self.weyl_star(&word.reversed(), &seed)
    }

    /// The Cartan element `alpha^sharp` dual to a lattice vector under the
    /// invariant form: `alpha^sharp = sum_i (n_i / d_i) alpha_i^vee`.
    pub fn alpha_sharp(&self, alpha: &RootVector) -> Element {
        let n = self.rank();
        let mut out = Element::zero(n);
        for i in 0..n {
            if alpha.0[i] != 0 {
                let c = rat(alpha.0[i]) / self.symmetrization().d[i].clone();
                out.add_scaled(&Element::coroot(n, i), &c);
            }
        }
        out
    }

    /// The unique `c` with `[omega(x), x] = c * alpha^sharp` for a nonzero
    /// homogeneous `x` of root degree `alpha`. Nonzero by nondegeneracy of
    /// the invariant form; proportionality failure would contradict
    /// `[g_{-alpha}, g_alpha] = C alpha^sharp` and panics.
    pub fn dual_constant(&self, x: &Element) -> Result<Rat, EngineError> {
        if x.is_zero() {
            return Err(EngineError::ZeroElement);
        }
        let deg = match x.homogeneity() {
            Some(super::element::Homogeneity::Root(d)) => d,
            _ => return Err(EngineError::NotHomogeneous),
        };
        let pair = self.bracket(&self.omega(x), x)?;
        let sharp = self.alpha_sharp(&deg);
        // solve pair = c * sharp on Cartan coordinates
        let mut c: Option<Rat> = None;
        for i in 0..self.rank() {
            let s = &sharp.cartan()[i];
            let p = &pair.cartan()[i];
            if s.is_zero() {
                assert!(p.is_zero(), "dual pairing escapes the coroot line");
                continue;
            }
            let ratio = p / s;
            match &c {
                None => c = Some(ratio),
                Some(prev) => assert_eq!(prev, &ratio, "dual pairing escapes the coroot line"),
            }
        }
        assert!(
            pair.terms().is_empty() && pair.deriv().iter().all(|d| d.is_zero()),
            "dual pairing has components outside the Cartan subalgebra"
        );
        Ok(c.expect("root degree has nonempty support"))
    }

    /// Basis of the center of the derived algebra: Cartan vectors
    /// annihilated by every simple root.
    pub fn center(&self) -> Vec<Element> {
        let n = self.rank();
        // <alpha_j, sum_i c_i alpha_i^vee> = sum_i a_{ij} c_i
        let rows: Vec<Vec<Rat>> = (0..n)
            .map(|j| (0..n).map(|i| rat(self.gcm().entry(i, j))).collect())
            .collect();
        nullspace_rat(&rows, n)
            .into_iter()
            .map(|coeffs| {
                let mut e = Element::zero(n);
                for (i, c) in coeffs.iter().enumerate() {
                    e.add_scaled(&Element::coroot(n, i), c);
                }
                e
            })
            .collect()
    }
}
