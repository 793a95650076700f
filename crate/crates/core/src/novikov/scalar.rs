use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Exponent, KgSeries, Valuation};
use crate::field::Coefficient;

/// An element of the Novikov ring Λ = K_G[q, q⁻¹], stored by q-degree.
///
/// `deg(s) = 0` and `deg(q) = 1`, so the component at key `m` is the degree-`m` part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NovikovScalar<F> {
    components: BTreeMap<i64, KgSeries<F>>,
}

impl<F: Coefficient> Default for NovikovScalar<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Coefficient> NovikovScalar<F> {
    pub fn zero() -> Self {
        NovikovScalar {
            components: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_series(KgSeries::one(), 0)
    }

    /// `series · q^degree`.
    pub fn from_series(series: KgSeries<F>, degree: i64) -> Self {
        let mut x = Self::zero();
        x.add_component(degree, series);
        x
    }

    /// `c · s^alpha · q^degree`.
    pub fn monomial(c: F, alpha: Exponent, degree: i64) -> Self {
        Self::from_series(KgSeries::monomial(c, alpha), degree)
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, Exponent::ZERO, 0)
    }

    fn add_component(&mut self, degree: i64, series: KgSeries<F>) {
        let merged = match self.components.remove(&degree) {
            Some(old) => &old + &series,
            None => series,
        };
        if !merged.is_zero() {
            self.components.insert(degree, merged);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Components in increasing q-degree.
    pub fn components(&self) -> impl DoubleEndedIterator<Item = (i64, &KgSeries<F>)> + '_ {
        self.components.iter().map(|(d, s)| (*d, s))
    }

    pub fn component(&self, degree: i64) -> KgSeries<F> {
        self.components.get(&degree).cloned().unwrap_or_default()
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.components.keys().copied()
    }

    /// The q-degree when exactly one component is present.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.components.keys();
        match (it.next(), it.next()) {
            (Some(d), None) => Some(*d),
            _ => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.components.values().all(KgSeries::is_exact)
    }

    pub fn scale_series(&self, f: &KgSeries<F>) -> Self {
        let mut out = Self::zero();
        for (d, s) in &self.components {
            out.add_component(*d, s * f);
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero();
        for (d, s) in &self.components {
            out.add_component(*d, s.scale(c));
        }
        out
    }

    /// ν(λ): the largest s-exponent over all q-components.
    pub fn valuation(&self) -> Valuation {
        self.components
            .values()
            .map(KgSeries::valuation)
            .max()
            .unwrap_or(Valuation::NegInfinity)
    }

    /// Inverse of a monomial `c s^α q^m`, if `self` is one.
    pub fn monomial_inverse(&self) -> Option<Self> {
        let degree = self.homogeneous_degree()?;
        let series = &self.components[&degree];
        if series.len() != 1 || !series.is_exact() {
            return None;
        }
        let (alpha, c) = series.leading()?;
        Some(Self::monomial(c.inv()?, -alpha, -degree))
    }
}

impl<'a, F: Coefficient> Add<&'a NovikovScalar<F>> for &'a NovikovScalar<F> {
    type Output = NovikovScalar<F>;

    fn add(self, rhs: &'a NovikovScalar<F>) -> NovikovScalar<F> {
        let mut out = self.clone();
        for (d, s) in &rhs.components {
            out.add_component(*d, s.clone());
        }
        out
    }
}

impl<F: Coefficient> Neg for &NovikovScalar<F> {
    type Output = NovikovScalar<F>;

    fn neg(self) -> NovikovScalar<F> {
        NovikovScalar {
            components: self.components.iter().map(|(d, s)| (*d, -s)).collect(),
        }
    }
}

impl<'a, F: Coefficient> Sub<&'a NovikovScalar<F>> for &'a NovikovScalar<F> {
    type Output = NovikovScalar<F>;

    fn sub(self, rhs: &'a NovikovScalar<F>) -> NovikovScalar<F> {
        self + &(-rhs)
    }
}

impl<'a, F: Coefficient> Mul<&'a NovikovScalar<F>> for &'a NovikovScalar<F> {
    type Output = NovikovScalar<F>;

    fn mul(self, rhs: &'a NovikovScalar<F>) -> NovikovScalar<F> {
        let mut out = NovikovScalar::zero();
        for (d1, s1) in &self.components {
            for (d2, s2) in &rhs.components {
                out.add_component(d1 + d2, s1 * s2);
            }
        }
        out
    }
}

impl<F: Coefficient> Add for NovikovScalar<F> {
    type Output = NovikovScalar<F>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<F: Coefficient> Sub for NovikovScalar<F> {
    type Output = NovikovScalar<F>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<F: Coefficient> Mul for NovikovScalar<F> {
    type Output = NovikovScalar<F>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<F: Coefficient> Neg for NovikovScalar<F> {
    type Output = NovikovScalar<F>;
    fn neg(self) -> Self {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type L = NovikovScalar<Rational>;

    fn mono(c: i64, n: i64, d: i64, m: i64) -> L {
        L::monomial(Rational::from_i64(c), Exponent::new(n, d), m)
    }

    #[test]
    fn monomial_product() {
        let x = mono(1, -1, 10, -2);
        assert_eq!(&x * &x, mono(1, -2, 10, -4));
    }

    #[test]
    fn unit() {
        let x = &mono(3, 1, 2, 1) + &mono(-1, -2, 1, -3);
        assert_eq!(&x * &L::one(), x);
    }

    #[test]
    fn valuation_is_max_over_components() {
        let x = &mono(1, -1, 1, 3) + &mono(1, 2, 1, -1);
        assert_eq!(x.valuation(), Valuation::Finite(Exponent::integer(2)));
        assert_eq!(L::zero().valuation(), Valuation::NegInfinity);
    }

    #[test]
    fn cancellation_prunes_components() {
        let x = mono(2, 1, 3, 5);
        assert!((&x - &x).is_zero());
    }

    #[test]
    fn monomial_inverse() {
        let x = mono(4, 3, 7, -2);
        let inv = x.monomial_inverse().unwrap();
        assert_eq!(&x * &inv, L::one());
        assert_eq!(inv.valuation(), -x.valuation());
        assert!((&x + &mono(1, 0, 1, 0)).monomial_inverse().is_none());
    }
}
