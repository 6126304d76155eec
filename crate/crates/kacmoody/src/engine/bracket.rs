//! Bracket evaluation on elements.
//!
//! The primitive data are the left-multiplication maps `[e_i, -]` between
//! positive root spaces, recorded during the build. Everything else is
//! obtained by Jacobi rewriting over the basis bracket trees:
//!
//! * `[[a,b], y] = [a,[b,y]] - [b,[a,y]]` peels the left argument;
//! * `[e_i, [c,d]] = [[e_i,c],d] + [c,[e_i,d]]` peels a mirrored right
//!   argument, bottoming out at `[f_j, e_i] = delta_ij alpha_i^vee`;
//! * the mirrored side reuses the positive structure constants, since the
//!   Chevalley involution is an isomorphism onto it;
//! * the Cartan subalgebra and derivations act diagonally by
//!   `<degree, h>`.
//!
//! Results for basis pairs are memoised, so sweeps over many element pairs
//! cost one recursion per distinct basis pair.

use super::{Element, EngineError, GradedAlgebra};
use crate::exact::Rat;
use crate::rootvec::RootVector;
use crate::words::BracketTree;
use num::Zero;

impl GradedAlgebra {
    /// The pairing `<deg, h>` of a degree against a Cartan-plus-derivation
    /// vector: coroots act through the Cartan matrix, derivations pick out
    /// height coordinates.
    fn degree_action(&self, cartan: &[Rat], deriv: &[Rat], deg: &RootVector) -> Rat {
        let n = self.rank();
        let mut s = Rat::zero();
        for i in 0..n {
            if !cartan[i].is_zero() {
                let pairing: i64 = (0..n).map(|j| self.gcm().entry(i, j) * deg.0[j]).sum();
                s += &cartan[i] * crate::exact::rat(pairing);
            }
            if !deriv[i].is_zero() {
                s += &deriv[i] * crate::exact::rat(deg.0[i]);
            }
        }
        s
    }

    /// The Lie bracket `[x, y]`, bilinear over all components.
    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element, EngineError> {
        let n = self.rank();
        let mut out = Element::zero(n);
        if x == y {
            return Ok(out);
        }
        // Cartan/derivation action on root components
        if x.has_cartan_part() {
            for (deg, coords) in y.terms() {
                let scale = self.degree_action(x.cartan(), x.deriv(), deg);
                out.add_term(deg.clone(), coords.clone(), &scale);
            }
        }
        if y.has_cartan_part() {
            for (deg, coords) in x.terms() {
                let scale = -self.degree_action(y.cartan(), y.deriv(), deg);
                out.add_term(deg.clone(), coords.clone(), &scale);
            }
        }
        // root components against each other
        for (d1, c1) in x.terms() {
            for (d2, c2) in y.terms() {
                for (k, a) in c1.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (l, b) in c2.iter().enumerate() {
                        if b.is_zero() {
                            continue;
                        }
                        if d1 == d2 && k == l {
                            continue; // [b, b] = 0, independent of truncation
                        }
                        let basis = self.bracket_basis(d1, k, d2, l)?;
                        out.add_scaled(&basis, &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Bracket of two basis vectors, memoised on the (signed degree, index)
    /// pair.
    fn bracket_basis(
        &self,
        d1: &RootVector,
        k: usize,
        d2: &RootVector,
        l: usize,
    ) -> Result<Element, EngineError> {
        let key = (d1.clone(), k, d2.clone(), l);
        if let Some(hit) = self.memo_get(&key) {
            return Ok(hit);
        }
        let result = match (d1.is_positive(), d2.is_positive()) {
            (true, true) => self.basis_pos_pos(d1, k, d2, l)?,
            (false, false) => {
                // mirror: same structure constants at negated degrees
                let pos = self.bracket_basis(&-d1.clone(), k, &-d2.clone(), l)?;
                mirror_to_negative(pos)
            }
            (true, false) => self.basis_mixed(d1, k, d2, l)?,
            (false, true) => self.basis_mixed(d2, l, d1, k)?.negated(),
        };
        self.memo_put(key, result.clone());
        Ok(result)
    }

    fn basis_pos_pos(
        &self,
        d1: &RootVector,
        k: usize,
        d2: &RootVector,
        l: usize,
    ) -> Result<Element, EngineError> {
        let target = d1 + d2;
        if target.height() > self.height() {
            return Err(EngineError::TruncationExceeded {
                degree: target,
                height: self.height(),
            });
        }
        if self.dim_at(&target) == 0 {
            return Ok(Element::zero(self.rank()));
        }
        match self.tree_at(d1, k).clone() {
            BracketTree::Leaf(_) => Err(EngineError::Internal(format!(
                "missing primitive bracket data at {d1} -> {target}"
            ))),
            BracketTree::Node(a, b) => {
                // [[a,b], y] = [a,[b,y]] - [b,[a,y]]
                let ea = self.eval_tree(&a, true)?;
                let eb = self.eval_tree(&b, true)?;
                let yl = self.basis_element(d2, l);
                let t1 = self.bracket(&ea, &self.bracket(&eb, &yl)?)?;
                let t2 = self.bracket(&eb, &self.bracket(&ea, &yl)?)?;
                Ok(t1.minus(&t2))
            }
        }
    }

    /// `[x, y]` with `x` a positive basis vector and `y` a mirrored one.
    fn basis_mixed(
        &self,
        dpos: &RootVector,
        k: usize,
        dneg: &RootVector,
        l: usize,
    ) -> Result<Element, EngineError> {
        let n = self.rank();
        let abs = -dneg.clone();
        let tpos = self.tree_at(dpos, k).clone();
        let tneg = self.tree_at(&abs, l).clone();
        match (&tpos, &tneg) {
            (BracketTree::Leaf(i), BracketTree::Leaf(j)) => {
                if i == j {
                    // [e_i, f_i] = -alpha_i^vee under [f_i, e_i] = alpha_i^vee
                    Ok(Element::coroot(n, *i as usize).negated())
                } else {
                    Ok(Element::zero(n))
                }
            }
            (BracketTree::Node(a, b), _) => {
                let ea = self.eval_tree(a, true)?;
                let eb = self.eval_tree(b, true)?;
                let yl = self.basis_element(dneg, l);
                let t1 = self.bracket(&ea, &self.bracket(&eb, &yl)?)?;
                let t2 = self.bracket(&eb, &self.bracket(&ea, &yl)?)?;
                Ok(t1.minus(&t2))
            }
            (BracketTree::Leaf(_), BracketTree::Node(c, d)) => {
                // [x, [c,d]] = [[x,c], d] + [c, [x,d]]
                let ec = self.eval_tree(c, false)?;
                let ed = self.eval_tree(d, false)?;
                let xk = self.basis_element(dpos, k);
                let t1 = self.bracket(&self.bracket(&xk, &ec)?, &ed)?;
                let t2 = self.bracket(&ec, &self.bracket(&xk, &ed)?)?;
                Ok(t1.plus(&t2))
            }
        }
    }

    /// The basis vector `l` of the space at a signed degree, as an element.
    pub fn basis_element(&self, deg: &RootVector, l: usize) -> Element {
        let n = self.rank();
        let dim = self.dim_at(deg);
        let mut coords = vec![Rat::zero(); dim];
        coords[l] = crate::exact::rat(1);
        Element::from_term(n, deg.clone(), coords)
    }

    /// Evaluates a bracket tree into quotient coordinates; `positive` selects
    /// the `e` or `f` interpretation of the leaves.
    fn eval_tree(&self, tree: &BracketTree, positive: bool) -> Result<Element, EngineError> {
        let n = self.rank();
        match tree {
            BracketTree::Leaf(i) => Ok(if positive {
                Element::generator_e(n, *i as usize)
            } else {
                Element::generator_f(n, *i as usize)
            }),
            BracketTree::Node(a, b) => {
                let ea = self.eval_tree(a, positive)?;
                let eb = self.eval_tree(b, positive)?;
                self.bracket(&ea, &eb)
            }
        }
    }
}

/// Transports an element of the positive side to the mirrored side: same
/// coordinates at negated degrees. Only valid for outputs of positive-side
/// brackets, which have no Cartan part unless zero.
fn mirror_to_negative(x: Element) -> Element {
    let n = x.rank();
    let mut out = Element::zero(n);
    for (deg, coords) in x.terms() {
        out.add_term(-deg.clone(), coords.clone(), &crate::exact::rat(1));
    }
    out
}
