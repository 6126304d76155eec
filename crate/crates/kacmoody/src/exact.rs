//! Exact scalar arithmetic: arbitrary-precision integers and rationals.
//!
//! Every number that leaves this crate is an exact rational, serialised as a
//! decimal-free string `"p/q"` (or `"p"` when the denominator is one). No
//! floating point exists anywhere in the computation path.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Shorthand for an integer scalar.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Shorthand for a rational scalar.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(int(n))
}

/// Rational `p/q` from machine integers. Panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(int(p), int(q))
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise.
pub fn rat_to_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses the canonical `"p"` / `"p/q"` form (optional leading `-`).
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<Int>().ok().map(Rat::from_integer),
        Some((p, q)) => {
            let p = p.trim().parse::<Int>().ok()?;
            let q = q.trim().parse::<Int>().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rat::new(p, q))
            }
        }
    }
}

/// Greatest common divisor of a slice, ignoring zeros; zero for an all-zero slice.
pub fn content(v: &[Int]) -> Int {
    let mut g = Int::zero();
    for x in v {
        if !x.is_zero() {
            g = num::Integer::gcd(&g, x);
        }
    }
    g
}

/// Divides a vector by its content and normalises the leading nonzero entry to
/// be positive. No-op on the zero vector.
pub fn make_primitive(v: &mut [Int]) {
    let g = content(v);
    if g.is_zero() {
        return;
    }
    let lead_neg = v
        .iter()
        .find(|x| !x.is_zero())
        .map(|x| x.sign() == Sign::Minus)
        .unwrap_or(false);
    let g = if lead_neg { -g } else { g };
    if g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
}

/// Maximum bit size over the entries, as a coefficient-growth guard.
pub fn max_bits(v: &[Int]) -> u64 {
    v.iter().map(|x| x.magnitude().bits()).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-22/7"] {
            let x = rat_from_str(s).unwrap();
            assert_eq!(rat_to_string(&x), s);
        }
        assert_eq!(rat_from_str("4/2").map(|x| rat_to_string(&x)).unwrap(), "2");
        assert!(rat_from_str("1/0").is_none());
        assert!(rat_from_str("a").is_none());
    }

    #[test]
    fn primitive_normalisation() {
        let mut v = vec![int(-4), int(6), int(-2)];
        make_primitive(&mut v);
        assert_eq!(v, vec![int(2), int(-3), int(1)]);
        let mut z = vec![int(0), int(0)];
        make_primitive(&mut z);
        assert_eq!(z, vec![int(0), int(0)]);
    }
}
