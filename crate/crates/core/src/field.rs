//! Base coefficient fields: the rationals and the two-element field.
//!
//! Everything in the engine is exact. Code that needs to be field-agnostic is
//! generic over [`Coefficient`]; the concrete field of a manifold is chosen at
//! load time from its document.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact rationals.
pub type Rational = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseField {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Z2")]
    IntegersMod2,
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Rationals => f.write_str("Q"),
            BaseField::IntegersMod2 => f.write_str("Z2"),
        }
    }
}

impl FromStr for BaseField {
    type Err = CoefficientParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "Q" | "q" | "rationals" => Ok(BaseField::Rationals),
            "Z2" | "z2" | "F2" | "mod2" => Ok(BaseField::IntegersMod2),
            other => Err(CoefficientParseError(format!(
                "unknown base field `{other}`"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("cannot parse coefficient: {0}")]
pub struct CoefficientParseError(pub String);

/// An element of one of the supported base fields.
pub trait Coefficient:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const FIELD: BaseField;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse; `None` only for zero.
    fn inv(&self) -> Option<Self>;
    fn from_i64(n: i64) -> Self;
    /// Parses `p`, `-p` or `p/q`. Over Z2 the denominator must be odd.
    fn parse(s: &str) -> Result<Self, CoefficientParseError>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `(-1)^k` evaluated in the field.
    fn sign(odd: bool) -> Self {
        if odd {
            -Self::one()
        } else {
            Self::one()
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, CoefficientParseError> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| CoefficientParseError(format!("`{s}`")))?;
    let den = BigInt::from_str(den).map_err(|_| CoefficientParseError(format!("`{s}`")))?;
    if den.is_zero() {
        return Err(CoefficientParseError(format!("`{s}` has zero denominator")));
    }
    Ok(BigRational::new(num, den))
}

impl Coefficient for BigRational {
    const FIELD: BaseField = BaseField::Rationals;

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn parse(s: &str) -> Result<Self, CoefficientParseError> {
        parse_rational(s)
    }
}

/// The field with two elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2(pub bool);

impl fmt::Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Gf2 {
    type Output = Gf2;
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for Gf2 {
    type Output = Gf2;
    fn sub(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for Gf2 {
    type Output = Gf2;
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

impl Neg for Gf2 {
    type Output = Gf2;
    fn neg(self) -> Gf2 {
        self
    }
}

impl Coefficient for Gf2 {
    const FIELD: BaseField = BaseField::IntegersMod2;

    fn zero() -> Self {
        Gf2(false)
    }

    fn one() -> Self {
        Gf2(true)
    }

    fn is_zero(&self) -> bool {
        !self.0
    }

    fn inv(&self) -> Option<Self> {
        self.0.then_some(*self)
    }

    fn from_i64(n: i64) -> Self {
        Gf2(n.is_odd())
    }

    fn parse(s: &str) -> Result<Self, CoefficientParseError> {
        let r = parse_rational(s)?;
        if r.denom().is_even() {
            return Err(CoefficientParseError(format!(
                "`{s}` has an even denominator and is undefined over Z2"
            )));
        }
        Ok(Gf2(r.numer().abs().is_odd()))
    }
}
