//! Exact arithmetic primitives: arbitrary-precision rationals, the sawtooth
//! function, and points of the boundary circle Q ∪ {∞}.
//!
//! Every kernel in this crate computes over these types; no floating point
//! appears anywhere.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision reduced fraction. `num_rational` keeps the denominator
/// positive and the pair coprime on construction, so structural equality is
/// exact equality.
pub type Rational = num_rational::BigRational;

/// Greatest common divisor, nonnegative; `gcd(0, 0) = 0`.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::gcd(a, b)
}

/// Sign of an integer as -1, 0, or +1, with `sign(0) = 0`.
pub fn sign(n: &BigInt) -> i32 {
    match n.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Greatest integer ≤ x; `floor_q(-1/2) = -1`.
pub fn floor_q(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// Sawtooth function: `x - floor(x) - 1/2` off the integers, `0` on integers.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        return Rational::zero();
    }
    x - x.floor() - Rational::new(BigInt::one(), BigInt::from(2))
}

/// Convenience constructor from machine integers.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Reduced fraction n/d. Panics on d = 0 (use [`parse_rational`] for input).
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse "p/q" or "n" into a reduced rational. Rejects zero denominators.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let make = |num: &str, den: Option<&str>| -> Result<Rational> {
        let n =
            BigInt::from_str(num).map_err(|_| Error::Parse(format!("invalid integer {num:?}")))?;
        let d = match den {
            Some(d) => {
                BigInt::from_str(d).map_err(|_| Error::Parse(format!("invalid integer {d:?}")))?
            }
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Rational::new(n, d))
    };
    match s.split_once('/') {
        Some((n, d)) => make(n, Some(d)),
        None => make(s, None),
    }
}

/// A point of the boundary circle of the upper half-plane: a rational or ∞.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundaryPoint {
    Finite(Rational),
    Infinity,
}

impl BoundaryPoint {
    pub fn finite(x: Rational) -> Self {
        BoundaryPoint::Finite(x)
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, BoundaryPoint::Infinity)
    }

    /// Total order used for cyclic-order tests: reals in their usual order,
    /// with ∞ greatest.
    pub fn circle_cmp(&self, other: &BoundaryPoint) -> std::cmp::Ordering {
        use BoundaryPoint::*;
        match (self, other) {
            (Infinity, Infinity) => std::cmp::Ordering::Equal,
            (Infinity, Finite(_)) => std::cmp::Ordering::Greater,
            (Finite(_), Infinity) => std::cmp::Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryPoint::Finite(x) => write!(f, "{x}"),
            BoundaryPoint::Infinity => write!(f, "inf"),
        }
    }
}

/// Parse "p/q", "n", or "inf"/"oo" into a boundary point.
pub fn parse_boundary_point(s: &str) -> Result<BoundaryPoint> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("inf") || t.eq_ignore_ascii_case("infinity") || t == "oo" {
        return Ok(BoundaryPoint::Infinity);
    }
    Ok(BoundaryPoint::Finite(parse_rational(t)?))
}
