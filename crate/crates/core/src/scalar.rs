//! Scalar abstraction over exact rationals and binary64 floats.
//!
//! All identity checks in this crate are exact algebraic statements, so the
//! default scalar is an arbitrary-precision rational and tolerances do not
//! apply. Floats exist for ingesting external data; for them the same
//! operations fall back to the tolerances passed in by the caller.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar.
pub type Rat = BigRational;

/// Absolute threshold under which a float counts as zero in pattern checks.
pub const DEFAULT_ZERO_TOL: f64 = 1e-9;

/// Relative threshold (against the largest diagonal entry) for accepting a
/// float pivot as positive.
pub const DEFAULT_PIVOT_REL_TOL: f64 = 1e-12;

pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// True when arithmetic is exact and tolerances are ignored.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn abs(&self) -> Self;
    fn to_f64(&self) -> f64;

    /// Zero test for pattern membership: exact when `EXACT`, `|x| <= tol`
    /// otherwise.
    fn is_zero_within(&self, tol: f64) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.abs().to_f64() <= tol
        }
    }

    /// Pivot acceptance: strictly positive when `EXACT`, above the absolute
    /// threshold otherwise.
    fn is_positive_pivot(&self, threshold: f64) -> bool {
        if Self::EXACT {
            *self > Self::zero()
        } else {
            self.to_f64() > threshold
        }
    }

    /// Equality: exact when `EXACT`, relative comparison otherwise.
    fn approx_eq(&self, other: &Self, rel_tol: f64) -> bool {
        if Self::EXACT {
            self == other
        } else {
            let a = self.to_f64();
            let b = other.to_f64();
            let scale = a.abs().max(b.abs());
            scale == 0.0 || (a - b).abs() <= rel_tol * scale.max(1.0)
        }
    }
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn zero() -> Self {
        <Rat as Zero>::zero()
    }

    fn one() -> Self {
        <Rat as One>::one()
    }

    fn from_int(v: i64) -> Self {
        Rat::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Rat::new(BigInt::from(num), BigInt::from(den))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

/// Shorthand for an exact integer rational.
pub fn rat(v: i64) -> Rat {
    <Rat as Scalar>::from_int(v)
}

/// Shorthand for an exact `num/den` rational (reduced automatically).
pub fn ratio(num: i64, den: i64) -> Rat {
    <Rat as Scalar>::from_ratio(num, den)
}

/// Canonical string form of a rational: `p` when the denominator is one,
/// `p/q` in lowest terms otherwise.
pub fn rat_to_string(v: &Rat) -> String {
    if v.denom() == &BigInt::from(1) {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Parses `p` or `p/q` into a rational.
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if Zero::is_zero(&den) {
                None
            } else {
                Some(Rat::new(num, den))
            }
        }
        None => {
            let num: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(num))
        }
    }
}
