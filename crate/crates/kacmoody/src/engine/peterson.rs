//! Independent root-multiplicity oracle via the standard recursion on the
//! invariant form.
//!
//! With `c_beta := sum_{k >= 1, k | beta} mult(beta/k) / k` and the Weyl
//! vector fixed by `(rho | alpha_i) = (alpha_i | alpha_i) / 2`, positive
//! degrees satisfy
//!
//! ```text
//! (beta | beta - 2 rho) c_beta
//!     = sum_{b' + b'' = beta, b', b'' > 0} (b' | b'') c_{b'} c_{b''}
//! ```
//!
//! seeded by multiplicity one at the simple roots. The division is exact for
//! every non-simple positive degree we evaluate; a vanishing denominator is
//! reported, never skipped. This path shares nothing with the graded build,
//! so agreement between the two is a genuine cross-check.

use super::EngineError;
use crate::exact::{rat, Rat};
use crate::gcm::{Gcm, Symmetrization};
use crate::rootvec::RootVector;
use num::{One, Zero};
use std::collections::BTreeMap;

/// Multiplicities of all positive degrees up to a height bound.
#[derive(Debug, Clone)]
pub struct PetersonTable {
    mults: BTreeMap<RootVector, u64>,
}

impl PetersonTable {
    /// Runs the recursion for every positive degree of height at most `h`.
    pub fn up_to(a: &Gcm, s: &Symmetrization, h: i64) -> Result<Self, EngineError> {
        let n = a.rank();
        let mut mults: BTreeMap<RootVector, u64> = BTreeMap::new();
        let mut c: BTreeMap<RootVector, Rat> = BTreeMap::new();
        // norms of simple roots, for (beta | 2 rho)
        let simple_norms: Vec<Rat> = (0..n).map(|i| s.b[i][i].clone()).collect();
        for height in 1..=h {
            for beta in super::compositions(n, height) {
                if height == 1 {
                    mults.insert(beta.clone(), 1);
                    c.insert(beta, Rat::one());
                    continue;
                }
                let norm = s.norm(&beta).map_err(EngineError::Gcm)?;
                let two_rho: Rat = (0..n)
                    .map(|i| rat(beta.0[i]) * simple_norms[i].clone())
                    .fold(Rat::zero(), |acc, x| acc + x);
                let denom = norm - two_rho;
                let mut rhs = Rat::zero();
                for left in proper_subvectors(&beta) {
                    let right = &beta - &left;
                    let (Some(cl), Some(cr)) = (c.get(&left), c.get(&right)) else {
                        continue;
                    };
                    let form = s.bilinear(&left, &right).map_err(EngineError::Gcm)?;
                    rhs += form * cl * cr;
                }
                if denom.is_zero() {
                    // A vanishing denominator certifies a non-root: reflecting
                    // a real root towards a simple root strictly increases the
                    // denominator to its value 0 at height one, and imaginary
                    // roots have (beta|beta) <= 0 < (beta|2rho). The equation
                    // is then vacuous (rhs must also vanish) and the
                    // multiplicity is 0; a nonzero rhs is a genuine failure.
                    if !rhs.is_zero() {
                        return Err(EngineError::DenominatorZero(beta));
                    }
                    let mut c_beta = Rat::zero();
                    let g = beta.coordinate_gcd();
                    for k in 2..=g {
                        if g % k == 0 {
                            let part = RootVector(beta.0.iter().map(|&x| x / k).collect());
                            let sub = mults.get(&part).copied().unwrap_or(0);
                            c_beta += Rat::new(sub.into(), k.into());
                        }
                    }
                    mults.insert(beta.clone(), 0);
                    c.insert(beta, c_beta);
                    continue;
                }
                let c_beta = rhs / denom;
                // peel the divisor contributions to isolate the multiplicity
                let mut m = c_beta.clone();
                let g = beta.coordinate_gcd();
                for k in 2..=g {
                    if g % k == 0 {
                        let part = RootVector(beta.0.iter().map(|&x| x / k).collect());
                        let sub = mults.get(&part).copied().unwrap_or(0);
                        m -= Rat::new(sub.into(), k.into());
                    }
                }
                if !m.denom().is_one() || m < Rat::zero() {
                    return Err(EngineError::Internal(format!(
                        "multiplicity recursion produced a non-integer at {beta}"
                    )));
                }
                let m_int = u64::try_from(m.numer()).map_err(|_| {
                    EngineError::Internal(format!("multiplicity overflow at {beta}"))
                })?;
                mults.insert(beta.clone(), m_int);
                c.insert(beta, c_beta);
            }
        }
        Ok(PetersonTable { mults })
    }

    pub fn mult(&self, beta: &RootVector) -> Option<u64> {
        self.mults.get(beta).copied()
    }
}

/// Multiplicity of one sign-pure positive degree.
pub fn peterson_multiplicity(
    a: &Gcm,
    s: &Symmetrization,
    beta: &RootVector,
) -> Result<u64, EngineError> {
    if !beta.is_positive() {
        return Err(EngineError::Root(crate::roots::RootError::NotSignPure(
            beta.clone(),
        )));
    }
    let table = PetersonTable::up_to(a, s, beta.height())?;
    Ok(table.mult(beta).unwrap_or(0))
}

/// All nonzero vectors strictly dominated by `beta` (componentwise <=,
/// excluding 0 and `beta` itself).
fn proper_subvectors(beta: &RootVector) -> Vec<RootVector> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; beta.rank()];
    loop {
        // increment odometer
        let mut pos = 0;
        loop {
            if pos == beta.rank() {
                return out;
            }
            if cur[pos] < beta.0[pos] {
                cur[pos] += 1;
                break;
            }
            cur[pos] = 0;
            pos += 1;
        }
        let v = RootVector(cur.clone());
        if !v.is_zero() && v != *beta {
            out.push(v);
        }
    }
}
