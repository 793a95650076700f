use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Exponent, NovikovError, Valuation};
use crate::field::Coefficient;

/// A generalized Laurent series `Σ z_α s^α` with finitely many nonzero terms.
///
/// Zero coefficients are never stored, so the zero series is the empty map.
/// Results of [`KgSeries::invert`] carry a `floor`: the series is only known
/// modulo terms of exponent `<= floor`, and every stored exponent lies strictly
/// above it. The floor propagates pessimistically through arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KgSeries<F> {
    terms: BTreeMap<Exponent, F>,
    floor: Option<Exponent>,
}

impl<F: Coefficient> Default for KgSeries<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Coefficient> KgSeries<F> {
    pub fn zero() -> Self {
        KgSeries {
            terms: BTreeMap::new(),
            floor: None,
        }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, Exponent::ZERO)
    }

    pub fn monomial(c: F, exponent: Exponent) -> Self {
        let mut s = Self::zero();
        if !c.is_zero() {
            s.terms.insert(exponent, c);
        }
        s
    }

    /// Sums like terms and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (Exponent, F)>>(terms: I) -> Self {
        let mut s = Self::zero();
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s
    }

    fn add_term(&mut self, e: Exponent, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(e, sum);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    fn with_floor(mut self, floor: Option<Exponent>) -> Self {
        if let Some(fl) = floor {
            self.terms = self.terms.split_off(&fl);
            self.terms.remove(&fl);
        }
        self.floor = floor;
        self
    }

    /// Stored terms, highest exponent first.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Exponent, &F)> + '_ {
        self.terms.iter().rev().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn floor(&self) -> Option<Exponent> {
        self.floor
    }

    pub fn is_exact(&self) -> bool {
        self.floor.is_none()
    }

    /// Exactly zero: no terms and no truncation.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.floor.is_none()
    }

    /// The stored terms as an exact finite series.
    pub fn without_floor(&self) -> Self {
        KgSeries {
            terms: self.terms.clone(),
            floor: None,
        }
    }

    pub fn coeff(&self, e: Exponent) -> F {
        self.terms.get(&e).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading(&self) -> Option<(Exponent, &F)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Largest exponent with a nonzero stored coefficient; −∞ when nothing is stored.
    pub fn valuation(&self) -> Valuation {
        self.leading()
            .map_or(Valuation::NegInfinity, |(e, _)| Valuation::Finite(e))
    }

    /// Upper bound on the true valuation, accounting for the unknown tail below the floor.
    fn valuation_bound(&self) -> Option<Exponent> {
        match (self.leading().map(|(e, _)| e), self.floor) {
            (Some(e), _) => Some(e),
            (None, fl) => fl,
        }
    }

    /// The coefficient of `s^0` (the map ȷ).
    pub fn coeff_at_zero(&self) -> Result<F, NovikovError> {
        if let Some(fl) = self.floor {
            if fl >= Exponent::ZERO {
                return Err(NovikovError::TruncationMasksZero { floor: fl });
            }
        }
        Ok(self.coeff(Exponent::ZERO))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return KgSeries {
                terms: BTreeMap::new(),
                floor: self.floor,
            };
        }
        KgSeries {
            terms: self
                .terms
                .iter()
                .map(|(e, z)| (*e, z.clone() * c.clone()))
                .collect(),
            floor: self.floor,
        }
    }

    /// Multiplication by `s^shift`.
    pub fn shift(&self, shift: Exponent) -> Self {
        KgSeries {
            terms: self
                .terms
                .iter()
                .map(|(e, z)| (*e + shift, z.clone()))
                .collect(),
            floor: self.floor.map(|f| f + shift),
        }
    }

    /// Inverse up to terms of exponent `<= floor` in `f·g − 1`.
    ///
    /// Factors the leading term `z_β s^β` and expands the geometric series in
    /// the strictly lower remainder. The returned series has floor
    /// `floor − β`, which makes the product with `self` carry floor `floor`.
    /// Monomials invert exactly.
    pub fn invert(&self, floor: Exponent) -> Result<Self, NovikovError> {
        if !self.is_exact() {
            return Err(NovikovError::TruncatedInversion);
        }
        let (beta, lead) = self.leading().ok_or(NovikovError::ZeroInversion)?;
        let lead_inv = lead.inv().ok_or(NovikovError::ZeroInversion)?;
        // f = lead · s^β · (1 + h), every exponent of h negative
        let h = KgSeries::from_terms(
            self.terms
                .iter()
                .rev()
                .skip(1)
                .map(|(e, c)| (*e - beta, c.clone() * lead_inv.clone())),
        );
        if h.is_empty() {
            return Ok(KgSeries::monomial(lead_inv, -beta));
        }
        let minus_h = -&h;
        let mut power = KgSeries::one().with_floor(Some(floor));
        let mut sum = power.clone();
        while !power.is_empty() {
            power = (&power * &minus_h).with_floor(Some(floor));
            sum = &sum + &power;
        }
        Ok(sum.scale(&lead_inv).shift(-beta))
    }
}

impl<'a, F: Coefficient> Add<&'a KgSeries<F>> for &'a KgSeries<F> {
    type Output = KgSeries<F>;

    fn add(self, rhs: &'a KgSeries<F>) -> KgSeries<F> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        let floor = self.floor.max(rhs.floor);
        out.with_floor(floor)
    }
}

impl<F: Coefficient> Neg for &KgSeries<F> {
    type Output = KgSeries<F>;

    fn neg(self) -> KgSeries<F> {
        KgSeries {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
            floor: self.floor,
        }
    }
}

impl<'a, F: Coefficient> Sub<&'a KgSeries<F>> for &'a KgSeries<F> {
    type Output = KgSeries<F>;

    fn sub(self, rhs: &'a KgSeries<F>) -> KgSeries<F> {
        self + &(-rhs)
    }
}

impl<'a, F: Coefficient> Mul<&'a KgSeries<F>> for &'a KgSeries<F> {
    type Output = KgSeries<F>;

    fn mul(self, rhs: &'a KgSeries<F>) -> KgSeries<F> {
        let mut out = KgSeries::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(*e1 + *e2, c1.clone() * c2.clone());
            }
        }
        // unknown tails: below floor(f) + ν(g) and below floor(g) + ν(f)
        let left = self.floor.zip(rhs.valuation_bound()).map(|(a, b)| a + b);
        let right = rhs.floor.zip(self.valuation_bound()).map(|(a, b)| a + b);
        out.with_floor(left.max(right))
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<F: Coefficient> $tr for KgSeries<F> {
            type Output = KgSeries<F>;
            fn $m(self, rhs: KgSeries<F>) -> KgSeries<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<F: Coefficient> Neg for KgSeries<F> {
    type Output = KgSeries<F>;
    fn neg(self) -> KgSeries<F> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf2, Rational};

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn e(n: i64, d: i64) -> Exponent {
        Exponent::new(n, d)
    }

    fn series(terms: &[(i64, i64, i64)]) -> KgSeries<Q> {
        KgSeries::from_terms(terms.iter().map(|&(c, n, d)| (e(n, d), q(c))))
    }

    #[test]
    fn additive_inverse_cancels() {
        let one = KgSeries::<Q>::one();
        let sum = &one + &(-&one);
        assert!(sum.is_zero());
    }

    #[test]
    fn like_terms_merge() {
        let f = series(&[(2, 3, 1), (1, -1, 1)]);
        let g = series(&[(1, -1, 1)]);
        assert_eq!(&f + &g, series(&[(2, 3, 1), (2, -1, 1)]));
    }

    #[test]
    fn characteristic_two_cancels() {
        let f = KgSeries::monomial(Gf2::one(), Exponent::integer(3));
        assert!((&f + &f).is_zero());
    }

    #[test]
    fn exponents_add_under_multiplication() {
        let f = series(&[(1, -1, 10)]);
        assert_eq!(&f * &f, series(&[(1, -1, 5)]));
        let a = series(&[(1, 0, 1), (1, -1, 1)]);
        let b = series(&[(1, 0, 1), (-1, -1, 1)]);
        assert_eq!(&a * &b, series(&[(1, 0, 1), (-1, -2, 1)]));
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(KgSeries::<Q>::zero().valuation(), Valuation::NegInfinity);
        assert_eq!(
            series(&[(2, 3, 1), (1, -1, 1)]).valuation(),
            Valuation::Finite(e(3, 1))
        );
        assert_eq!(
            series(&[(1, -1, 10)]).valuation(),
            Valuation::Finite(e(-1, 10))
        );
    }

    #[test]
    fn coeff_at_zero_reads_constant_term() {
        assert_eq!(
            series(&[(3, 0, 1), (2, -1, 1)]).coeff_at_zero().unwrap(),
            q(3)
        );
        assert_eq!(series(&[(1, 1, 2)]).coeff_at_zero().unwrap(), q(0));
    }

    #[test]
    fn coeff_at_zero_rejects_shallow_floor() {
        let f = series(&[(1, 0, 1), (-1, -1, 1)]);
        let g = f.invert(Exponent::integer(1)).unwrap();
        let prod = &f * &g;
        assert_eq!(
            prod.coeff_at_zero(),
            Err(NovikovError::TruncationMasksZero {
                floor: Exponent::integer(1)
            })
        );
    }

    #[test]
    fn invert_identity() {
        let one = KgSeries::<Q>::one();
        assert_eq!(one.invert(e(-3, 1)).unwrap(), one);
    }

    #[test]
    fn invert_geometric_series() {
        let f = series(&[(1, 0, 1), (-1, -1, 1)]);
        let g = f.invert(e(-7, 2)).unwrap();
        let expected: Vec<_> = [(0, 1), (-1, 1), (-2, 1), (-3, 1)]
            .iter()
            .map(|&(n, c)| (Exponent::integer(n), q(c)))
            .collect();
        let got: Vec<_> = g.terms().map(|(e, c)| (e, c.clone())).collect();
        assert_eq!(got, expected);
        assert_eq!(g.floor(), Some(e(-7, 2)));
        // residual of the exact product
        let residual = &(&f * &g.without_floor()) - &KgSeries::one();
        assert!(residual.valuation() <= Valuation::Finite(e(-7, 2)));
    }

    #[test]
    fn invert_monomial_exactly() {
        let f = KgSeries::monomial(q(2), e(1, 2));
        let g = f.invert(Exponent::integer(-5)).unwrap();
        assert_eq!(g, KgSeries::monomial(Q::new(1.into(), 2.into()), e(-1, 2)));
        assert!(g.is_exact());
    }

    #[test]
    fn invert_zero_fails() {
        assert_eq!(
            KgSeries::<Q>::zero().invert(e(-1, 1)),
            Err(NovikovError::ZeroInversion)
        );
    }

    #[test]
    fn product_with_inverse_has_unit_constant_term() {
        let f = series(&[(3, 1, 2), (1, 0, 1), (-2, -1, 3)]);
        let g = f.invert(e(-4, 1)).unwrap();
        let prod = &f * &g;
        assert_eq!(prod.floor(), Some(e(-4, 1)));
        assert_eq!(prod.coeff_at_zero().unwrap(), q(1));
        assert_eq!(prod.len(), 1);
    }

    #[test]
    fn addition_takes_the_larger_floor() {
        let f = series(&[(1, 0, 1), (-1, -1, 1)]);
        let a = f.invert(e(-2, 1)).unwrap();
        let b = f.invert(e(-5, 1)).unwrap();
        assert_eq!((&a + &b).floor(), Some(e(-2, 1)));
    }
}
