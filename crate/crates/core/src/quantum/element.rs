use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::field::Coefficient;
use crate::homology::{HomClass, ManifoldSpec, Side};
use crate::novikov::{Exponent, NovikovScalar, Valuation};

/// An element of QH_*(M) or QH_*(M,∂M): basis index → Λ coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QhElement<F> {
    side: Side,
    terms: BTreeMap<usize, NovikovScalar<F>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(i64),
    Mixed,
}

impl<F: Coefficient> QhElement<F> {
    pub fn zero(side: Side) -> Self {
        QhElement {
            side,
            terms: BTreeMap::new(),
        }
    }

    /// `e_index ⊗ 1`.
    pub fn basis(side: Side, index: usize) -> Self {
        Self::term(side, index, NovikovScalar::one())
    }

    /// `e_index ⊗ λ`.
    pub fn term(side: Side, index: usize, lambda: NovikovScalar<F>) -> Self {
        let mut x = Self::zero(side);
        x.add_term(index, lambda);
        x
    }

    /// `a ⊗ 1` for a classical class.
    pub fn from_class(a: &HomClass<F>) -> Self {
        let mut x = Self::zero(a.side());
        for (i, z) in a.terms() {
            x.add_term(i, NovikovScalar::constant(z.clone()));
        }
        x
    }

    pub fn add_term(&mut self, index: usize, lambda: NovikovScalar<F>) {
        let merged = match self.terms.remove(&index) {
            Some(old) => &old + &lambda,
            None => lambda,
        };
        if !merged.is_zero() {
            self.terms.insert(index, merged);
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &NovikovScalar<F>)> + '_ {
        self.terms.iter().map(|(i, l)| (*i, l))
    }

    pub fn coeff(&self, index: usize) -> NovikovScalar<F> {
        self.terms.get(&index).cloned().unwrap_or_default()
    }

    /// Λ-action `λ · x`.
    pub fn scale(&self, lambda: &NovikovScalar<F>) -> Self {
        let mut out = Self::zero(self.side);
        for (i, l) in &self.terms {
            out.add_term(*i, l * lambda);
        }
        out
    }

    /// The `s⁰ q⁰` coefficients as a classical class.
    pub fn classical_part(&self) -> HomClass<F> {
        HomClass::from_terms(
            self.side,
            self.terms
                .iter()
                .map(|(i, l)| (*i, l.component(0).coeff(Exponent::ZERO))),
        )
    }

    /// Degree under `deg(a ⊗ z s^α q^m) = deg(a) + m`.
    pub fn homogeneity(&self, spec: &ManifoldSpec<F>) -> Homogeneity {
        let mut seen = None;
        for (i, l) in &self.terms {
            for m in l.degrees() {
                let d = spec.degree(self.side, *i) as i64 + m;
                match seen {
                    None => seen = Some(d),
                    Some(prev) if prev != d => return Homogeneity::Mixed,
                    Some(_) => {}
                }
            }
        }
        seen.map_or(Homogeneity::Zero, Homogeneity::Degree)
    }

    /// ν(x): the largest valuation of a coefficient.
    pub fn valuation(&self) -> Valuation {
        self.terms
            .values()
            .map(NovikovScalar::valuation)
            .max()
            .unwrap_or(Valuation::NegInfinity)
    }
}

impl<'a, F: Coefficient> Add<&'a QhElement<F>> for &'a QhElement<F> {
    type Output = QhElement<F>;

    fn add(self, rhs: &'a QhElement<F>) -> QhElement<F> {
        assert_eq!(self.side, rhs.side, "adding classes from different sides");
        let mut out = self.clone();
        for (i, l) in &rhs.terms {
            out.add_term(*i, l.clone());
        }
        out
    }
}

impl<F: Coefficient> Neg for &QhElement<F> {
    type Output = QhElement<F>;

    fn neg(self) -> QhElement<F> {
        QhElement {
            side: self.side,
            terms: self.terms.iter().map(|(i, l)| (*i, -l)).collect(),
        }
    }
}

impl<'a, F: Coefficient> Sub<&'a QhElement<F>> for &'a QhElement<F> {
    type Output = QhElement<F>;

    fn sub(self, rhs: &'a QhElement<F>) -> QhElement<F> {
        self + &(-rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::homology::examples::blowup_b4;

    #[test]
    fn additive_inverse() {
        let lam = NovikovScalar::monomial(Rational::from_i64(3), Exponent::new(-1, 10), -2);
        let x =
            &QhElement::term(Side::Absolute, 1, lam.clone()) + &QhElement::basis(Side::Absolute, 0);
        let minus = x.scale(&NovikovScalar::constant(Rational::from_i64(-1)));
        assert!((&x + &minus).is_zero());
    }

    #[test]
    fn degrees() {
        let spec = blowup_b4::<Rational>(Exponent::new(1, 10)).unwrap();
        let lam = NovikovScalar::monomial(Rational::from_i64(1), Exponent::new(-1, 10), -2);
        let x = QhElement::term(Side::Absolute, 1, lam);
        assert_eq!(x.homogeneity(&spec), Homogeneity::Degree(0));
        assert_eq!(x.valuation(), Valuation::Finite(Exponent::new(-1, 10)));
        let y = &x + &QhElement::basis(Side::Absolute, 1);
        assert_eq!(y.homogeneity(&spec), Homogeneity::Mixed);
        assert_eq!(
            QhElement::<Rational>::zero(Side::Relative).valuation(),
            Valuation::NegInfinity
        );
    }
}
