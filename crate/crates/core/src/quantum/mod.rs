//! Quantum homology modules over Λ, the products ∗₁, ∗₂, ∗₃ and the pairings Δ, Π.

mod element;

pub use element::{Homogeneity, QhElement};

use thiserror::Error;

use crate::field::Coefficient;
use crate::homology::{ManifoldSpec, ProductKind, Side};
use crate::novikov::{KgSeries, NovikovError, NovikovScalar};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum QhError {
    #[error("side mismatch: {0}")]
    SideMismatch(String),
    #[error("degree error: {0}")]
    Degree(String),
    #[error(transparent)]
    Novikov(#[from] NovikovError),
}

/// The quantum products of one manifold, with all basis products precomputed.
pub struct QuantumHomology<'a, F> {
    spec: &'a ManifoldSpec<F>,
    tables: [Vec<Vec<QhElement<F>>>; 3],
}

impl<'a, F: Coefficient> QuantumHomology<'a, F> {
    pub fn new(spec: &'a ManifoldSpec<F>) -> Self {
        let tables = ProductKind::ALL.map(|kind| {
            (0..spec.rank())
                .map(|i| {
                    (0..spec.rank())
                        .map(|j| basis_product(spec, kind, i, j))
                        .collect()
                })
                .collect()
        });
        QuantumHomology { spec, tables }
    }

    pub fn spec(&self) -> &'a ManifoldSpec<F> {
        self.spec
    }

    /// Product of two basis classes (operands taken ⊗ 1).
    pub fn basis_product(&self, kind: ProductKind, i: usize, j: usize) -> &QhElement<F> {
        &self.tables[kind.index() as usize - 1][i][j]
    }

    /// Λ-bilinear extension of the basis products.
    pub fn product(
        &self,
        kind: ProductKind,
        a: &QhElement<F>,
        b: &QhElement<F>,
    ) -> Result<QhElement<F>, QhError> {
        let (left, right, out) = kind.signature();
        if a.side() != left || b.side() != right {
            return Err(QhError::SideMismatch(format!(
                "∗{} expects ({left}, {right}) operands, got ({}, {})",
                kind.index(),
                a.side(),
                b.side()
            )));
        }
        let mut acc = QhElement::zero(out);
        for (i, x) in a.terms() {
            for (j, y) in b.terms() {
                let lam = x * y;
                acc = &acc + &self.basis_product(kind, i, j).scale(&lam);
            }
        }
        Ok(acc)
    }

    /// `[M,∂M] ⊗ 1`.
    pub fn unit(&self) -> QhElement<F> {
        QhElement::basis(Side::Relative, self.spec.fundamental())
    }

    /// The `[pt]` coefficient series of a degree-0 absolute class.
    pub fn iota(&self, x: &QhElement<F>) -> Result<KgSeries<F>, QhError> {
        if x.side() != Side::Absolute {
            return Err(QhError::SideMismatch(
                "ι is defined on absolute classes".into(),
            ));
        }
        match x.homogeneity(self.spec) {
            Homogeneity::Zero | Homogeneity::Degree(0) => {}
            Homogeneity::Degree(d) => {
                return Err(QhError::Degree(format!("ι needs degree 0, got degree {d}")))
            }
            Homogeneity::Mixed => {
                return Err(QhError::Degree(
                    "ι needs a homogeneous class, got mixed degrees".into(),
                ))
            }
        }
        Ok(x.coeff(self.spec.point()).component(0))
    }

    /// `Δ_l(a, b) = ι(a ∗_l b)` for `l ∈ {1, 2}`.
    pub fn delta_pairing(
        &self,
        kind: ProductKind,
        a: &QhElement<F>,
        b: &QhElement<F>,
    ) -> Result<KgSeries<F>, QhError> {
        if kind == ProductKind::Three {
            return Err(QhError::SideMismatch(
                "Δ is defined for ∗₁ and ∗₂ only".into(),
            ));
        }
        let da = self.degree_of(a)?;
        let db = self.degree_of(b)?;
        if let (Some(da), Some(db)) = (da, db) {
            let top = self.spec.dim() as i64;
            if da + db != top {
                return Err(QhError::Degree(format!(
                    "Δ needs complementary degrees, got {da} + {db} ≠ {top}"
                )));
            }
        }
        self.iota(&self.product(kind, a, b)?)
    }

    /// `Π_l = ȷ ∘ Δ_l`.
    pub fn pi_pairing(
        &self,
        kind: ProductKind,
        a: &QhElement<F>,
        b: &QhElement<F>,
    ) -> Result<F, QhError> {
        Ok(self.delta_pairing(kind, a, b)?.coeff_at_zero()?)
    }

    fn degree_of(&self, x: &QhElement<F>) -> Result<Option<i64>, QhError> {
        match x.homogeneity(self.spec) {
            Homogeneity::Zero => Ok(None),
            Homogeneity::Degree(d) => Ok(Some(d)),
            Homogeneity::Mixed => Err(QhError::Degree("pairing needs homogeneous classes".into())),
        }
    }
}

/// `e_i ∗ e_j` from the A = 0 term and the table classes.
///
/// ∗₁ and ∗₂ expand in the absolute basis with coefficients `GW(e_i, e_j, e_k^∨)`;
/// ∗₃ expands in the relative basis with coefficients `GW_{A,1,3}(e_k, e_i, e_j)`.
fn basis_product<F: Coefficient>(
    spec: &ManifoldSpec<F>,
    kind: ProductKind,
    i: usize,
    j: usize,
) -> QhElement<F> {
    let out = kind.signature().2;
    let classes = spec.gamma_classes();
    let mut acc = QhElement::zero(out);
    for k in 0..spec.rank() {
        let (p, args, target) = match kind {
            ProductKind::One => (2, [i, j, spec.dual_of_absolute(k)], k),
            ProductKind::Two => (1, [i, j, spec.dual_of_absolute(k)], k),
            ProductKind::Three => (1, [k, i, j], spec.dual_of_absolute(k)),
        };
        let mut lam = NovikovScalar::constant(spec.gw_zero_basis(p, &args));
        for class in &classes {
            let v = spec.gw_lookup(class, p, args);
            if !v.is_zero() {
                let weight = NovikovScalar::monomial(v, -spec.omega(class), -2 * spec.c1(class));
                lam = &lam + &weight;
            }
        }
        acc.add_term(target, lam);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::homology::examples::{blowup_b4, EXCEPTIONAL, EXCEPTIONAL_DUAL, POINT};
    use crate::novikov::Exponent;

    fn setup() -> ManifoldSpec<Rational> {
        blowup_b4(Exponent::new(1, 10)).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn e_star_e() {
        let spec = setup();
        let qh = QuantumHomology::new(&spec);
        let e = spec.find(Side::Absolute, EXCEPTIONAL).unwrap();
        let pt = spec.find(Side::Absolute, POINT).unwrap();
        let mut want = QhElement::term(Side::Absolute, pt, NovikovScalar::constant(q(-1)));
        want.add_term(e, NovikovScalar::monomial(q(1), Exponent::new(-1, 10), -2));
        assert_eq!(qh.basis_product(ProductKind::One, e, e), &want);
    }

    #[test]
    fn iota_and_pairings() {
        let spec = setup();
        let qh = QuantumHomology::new(&spec);
        let e = QhElement::basis(
            Side::Absolute,
            spec.find(Side::Absolute, EXCEPTIONAL).unwrap(),
        );
        let ed = QhElement::basis(
            Side::Relative,
            spec.find(Side::Relative, EXCEPTIONAL_DUAL).unwrap(),
        );
        assert_eq!(
            qh.delta_pairing(ProductKind::Two, &e, &ed).unwrap(),
            KgSeries::one()
        );
        assert_eq!(qh.pi_pairing(ProductKind::Two, &e, &ed).unwrap(), q(1));
        let shifted = e.scale(&NovikovScalar::monomial(q(1), Exponent::new(1, 2), 0));
        assert_eq!(
            qh.pi_pairing(ProductKind::Two, &shifted, &ed).unwrap(),
            q(0)
        );
        let lifted = e.scale(&NovikovScalar::monomial(q(1), Exponent::ZERO, -2));
        assert_eq!(qh.iota(&lifted).unwrap(), KgSeries::zero());
    }

    #[test]
    fn rejects_wrong_sides_and_degrees() {
        let spec = setup();
        let qh = QuantumHomology::new(&spec);
        let e = QhElement::basis(Side::Absolute, 1);
        assert!(matches!(
            qh.product(ProductKind::Three, &e, &e),
            Err(QhError::SideMismatch(_))
        ));
        assert!(matches!(qh.iota(&e), Err(QhError::Degree(_))));
        assert!(matches!(qh.iota(&qh.unit()), Err(QhError::SideMismatch(_))));
        assert!(matches!(
            qh.delta_pairing(ProductKind::One, &e, &QhElement::basis(Side::Absolute, 0)),
            Err(QhError::Degree(_))
        ));
    }

    #[test]
    fn unit_degree() {
        let spec = setup();
        let qh = QuantumHomology::new(&spec);
        assert_eq!(qh.unit().homogeneity(&spec), Homogeneity::Degree(4));
    }
}
