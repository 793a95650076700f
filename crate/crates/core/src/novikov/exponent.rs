use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::field::CoefficientParseError;

/// An exponent of the series variable `s`: an exact rational in symplectic-area units.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exponent(Ratio<i64>);

impl Exponent {
    pub const ZERO: Exponent = Exponent(Ratio::new_raw(0, 1));

    pub fn new(numer: i64, denom: i64) -> Self {
        Exponent(Ratio::new(numer, denom))
    }

    pub fn integer(n: i64) -> Self {
        Exponent(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// `self / unit` when it is an integer.
    pub fn integer_multiple_of(&self, unit: Exponent) -> Option<i64> {
        if unit.is_zero() {
            return None;
        }
        let q = self.0 / unit.0;
        q.is_integer().then(|| q.to_integer())
    }

    /// Positive generator of the subgroup of Q generated by `values`, or zero if they all vanish.
    pub fn group_generator<I: IntoIterator<Item = Exponent>>(values: I) -> Exponent {
        values.into_iter().fold(Exponent::ZERO, |acc, v| {
            if v.is_zero() {
                return acc;
            }
            if acc.is_zero() {
                return Exponent(v.0.abs());
            }
            let den = acc.denom().lcm(&v.denom());
            let a = acc.numer() * (den / acc.denom());
            let b = v.numer() * (den / v.denom());
            Exponent::new(a.gcd(&b), den)
        })
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Exponent {
    type Err = CoefficientParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || CoefficientParseError(format!("`{s}` is not an exact rational"));
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: i64 = n.parse().map_err(|_| bad())?;
        let d: i64 = d.parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        Ok(Exponent::new(n, d))
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for Exponent {
    type Output = Exponent;
    fn add(self, rhs: Exponent) -> Exponent {
        Exponent(self.0 + rhs.0)
    }
}

impl Sub for Exponent {
    type Output = Exponent;
    fn sub(self, rhs: Exponent) -> Exponent {
        Exponent(self.0 - rhs.0)
    }
}

impl Neg for Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        Exponent(-self.0)
    }
}

impl Mul<i64> for Exponent {
    type Output = Exponent;
    fn mul(self, rhs: i64) -> Exponent {
        Exponent(self.0 * rhs)
    }
}

/// Value of the valuation ν: an exponent, or −∞ for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    NegInfinity,
    Finite(Exponent),
}

impl Valuation {
    pub fn finite(self) -> Option<Exponent> {
        match self {
            Valuation::Finite(e) => Some(e),
            Valuation::NegInfinity => None,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::NegInfinity, Valuation::NegInfinity) => Ordering::Equal,
            (Valuation::NegInfinity, _) => Ordering::Less,
            (_, Valuation::NegInfinity) => Ordering::Greater,
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::NegInfinity,
        }
    }
}

impl Neg for Valuation {
    type Output = Valuation;
    /// Only meaningful for finite values; −∞ stays −∞.
    fn neg(self) -> Valuation {
        match self {
            Valuation::Finite(a) => Valuation::Finite(-a),
            Valuation::NegInfinity => Valuation::NegInfinity,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::NegInfinity => f.write_str("-inf"),
            Valuation::Finite(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_order() {
        let a: Exponent = "-1/10".parse().unwrap();
        let b: Exponent = "2/-20".parse().unwrap();
        assert_eq!(a, b);
        assert!(a < Exponent::ZERO);
        assert_eq!((a + a).to_string(), "-1/5");
        assert!("1/0".parse::<Exponent>().is_err());
    }

    #[test]
    fn generator_of_half_periods() {
        let g = Exponent::group_generator([Exponent::new(1, 20)]);
        assert_eq!(g, Exponent::new(1, 20));
        let g =
            Exponent::group_generator([Exponent::new(1, 4), Exponent::new(1, 6), Exponent::ZERO]);
        assert_eq!(g, Exponent::new(1, 12));
        assert_eq!(Exponent::group_generator([Exponent::ZERO]), Exponent::ZERO);
    }

    #[test]
    fn valuation_neg_infinity_is_absorbing_and_minimal() {
        let x = Valuation::Finite(Exponent::integer(-100));
        assert!(Valuation::NegInfinity < x);
        assert_eq!(Valuation::NegInfinity + x, Valuation::NegInfinity);
        assert_eq!(x + Valuation::NegInfinity, Valuation::NegInfinity);
    }

    #[test]
    fn integer_multiples() {
        let d = Exponent::new(1, 10);
        assert_eq!(Exponent::new(-1, 5).integer_multiple_of(d), Some(-2));
        assert_eq!(Exponent::new(1, 20).integer_multiple_of(d), None);
    }
}
