//! Numeric kernel shared by every matrix and map in the crate.
//!
//! A value lives either in exact rational arithmetic ([`Rational`]) or in
//! binary floating point (`f64`). Generic code is written once against the
//! [`Scalar`] trait; comparisons go through [`Scalar::is_negligible`] so that
//! exact values are compared with zero tolerance and floats with the bound
//! produced by a [`Tolerance`].

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number `p/q` with `q > 0` and `gcd(p, q) = 1`.
pub type Rational = num_rational::BigRational;

/// Relative/absolute tolerance pair used for every floating-point comparison.
///
/// A float `x` is treated as zero against a reference magnitude `scale` when
/// `|x| <= max(rel * scale, abs)`. Exact scalars ignore the tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Tolerance {
    pub const DEFAULT_REL: f64 = 1e-9;
    pub const DEFAULT_ABS: f64 = 1e-12;

    pub const fn new(rel: f64, abs: f64) -> Self {
        Self { rel, abs }
    }

    /// Tolerance with the given relative part and the default absolute floor.
    pub fn relative(rel: f64) -> Self {
        Self { rel, abs: Self::DEFAULT_ABS.min(rel) }
    }

    pub fn bound(&self, scale: f64) -> f64 {
        (self.rel * scale.abs()).max(self.abs)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::new(Self::DEFAULT_REL, Self::DEFAULT_ABS)
    }
}

/// Field operations plus the handful of conversions the algorithms need.
pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// `true` for exact arithmetic; decisions made in exact mode use no tolerance.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn to_f64(&self) -> f64;
    fn abs(&self) -> Self;

    /// Exact test against zero.
    fn is_zero(&self) -> bool;

    /// Zero test used by decisions: exact zero in exact mode, `|x| <= bound`
    /// in float mode.
    fn is_negligible(&self, bound: f64) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.to_f64().abs() <= bound
        }
    }

    /// Square root when it is representable in this scalar type.
    fn sqrt_exact(&self) -> Option<Self>;

    /// Parse one MapFile token in this arithmetic.
    fn parse_token(token: &str) -> Result<Self>;

    /// Rendering used by the MapFile writer; must round-trip through
    /// [`Scalar::parse_token`].
    fn to_token(&self) -> String;

    /// Validate a freshly constructed entry (finiteness for floats).
    fn check_finite(&self) -> Result<()> {
        Ok(())
    }

    fn from_ratio(p: i64, q: i64) -> Self {
        Self::from_i64(p) / Self::from_i64(q)
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
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn sqrt_exact(&self) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }
    fn parse_token(token: &str) -> Result<Self> {
        let value = if let Some((p, q)) = token.split_once('/') {
            let p: f64 = p.parse().map_err(|_| Error::BadToken(token.to_string()))?;
            let q: f64 = q.parse().map_err(|_| Error::BadToken(token.to_string()))?;
            if q == 0.0 {
                return Err(Error::BadToken(token.to_string()));
            }
            p / q
        } else {
            token.parse().map_err(|_| Error::BadToken(token.to_string()))?
        };
        value.check_finite()?;
        Ok(value)
    }
    fn to_token(&self) -> String {
        // 17 significant digits; the mantissa always carries a '.', which keeps
        // the token in float mode when read back.
        format!("{:.16e}", self)
    }
    fn check_finite(&self) -> Result<()> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(Error::NonFinite)
        }
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let (p, q) = (self.numer(), self.denom());
        let (rp, rq) = (p.sqrt(), q.sqrt());
        (&rp * &rp == *p && &rq * &rq == *q).then(|| Rational::new(rp, rq))
    }
    fn parse_token(token: &str) -> Result<Self> {
        if !is_exact_token(token) {
            return Err(Error::BadToken(token.to_string()));
        }
        Rational::from_str(token).map_err(|_| Error::BadToken(token.to_string()))
    }
    fn to_token(&self) -> String {
        self.to_string()
    }
}

/// `true` when the token is an integer or a `p/q` rational with integer parts.
pub fn is_exact_token(token: &str) -> bool {
    fn is_int(s: &str) -> bool {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    }
    match token.split_once('/') {
        Some((p, q)) => is_int(p) && is_int(q),
        None => is_int(token),
    }
}
