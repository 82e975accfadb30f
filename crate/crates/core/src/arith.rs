//! Shared exact-arithmetic aliases and small helpers.
//!
//! Everything in this crate computes over arbitrary-precision integers and
//! rationals; floating point is never used.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Fractional part in `[0, 1)`.
pub fn frac(r: &Rat) -> Rat {
    let f = r - r.floor();
    debug_assert!(!f.is_negative() && f < Rat::one());
    f
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

pub fn lcm(a: &Int, b: &Int) -> Int {
    num_integer::Integer::lcm(a, b)
}

pub fn gcd(a: &Int, b: &Int) -> Int {
    num_integer::Integer::gcd(a, b)
}

/// gcd of the absolute values of a slice; 0 for an all-zero slice.
pub fn content(v: &[Int]) -> Int {
    let mut g = Int::zero();
    for x in v {
        g = gcd(&g, x);
    }
    g
}

/// Parse "p/q" or "p" into an exact rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: Int = p.trim().parse().ok()?;
        let q: Int = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        Some(Rat::new(p, q))
    } else {
        let p: Int = s.parse().ok()?;
        Some(Rat::from_integer(p))
    }
}

/// Render a rational as "p/q", or "p" when integral.
pub fn show_rat(r: &Rat) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
