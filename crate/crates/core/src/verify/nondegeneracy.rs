use crate::field::Coefficient;
use crate::homology::{ManifoldSpec, ProductKind, Side};
use crate::novikov::{Exponent, KgSeries, NovikovError, NovikovScalar};
use crate::quantum::{QhElement, QhError, QuantumHomology};
use crate::render::{format_element, format_series};

use super::random::random_normalized_series;
use super::suite::lattice_unit;
use super::{seeded_rng, Check, CheckBuilder, Witness};

/// `ν(f) − 10·ω_min`, with `ω_min = 1` when no generator has positive area.
pub fn default_floor<F: Coefficient>(spec: &ManifoldSpec<F>, f: &KgSeries<F>) -> Exponent {
    let step = spec.min_positive_omega().unwrap_or(Exponent::integer(1));
    let top = f.valuation().finite().unwrap_or(Exponent::ZERO);
    top - step * 10
}

/// Witness pairings `Π₂(e_i ⊗ f q^m, e_i^∨ ⊗ f⁻¹ q^{-m}) ≠ 0` and invertibility of the
/// classical pairing matrices.
///
/// `floor` overrides the per-series default inversion floor; a floor `≥ 0` cannot
/// certify the `s⁰` coefficient and is rejected.
pub fn check_nondegeneracy<F: Coefficient>(
    spec: &ManifoldSpec<F>,
    floor: Option<Exponent>,
    seed: u64,
) -> Result<Vec<Check>, QhError> {
    if let Some(fl) = floor {
        if fl >= Exponent::ZERO {
            return Err(NovikovError::TruncationMasksZero { floor: fl }.into());
        }
    }
    let qh = QuantumHomology::new(spec);
    let unit = lattice_unit(spec);
    let step = spec.min_positive_omega().unwrap_or(unit);
    let mut rng = seeded_rng(seed.wrapping_add(2));

    let mut b = CheckBuilder::new("nondegeneracy.witness");
    for i in 0..spec.rank() {
        let battery = [
            KgSeries::one(),
            KgSeries::from_terms([(Exponent::ZERO, F::one()), (-step, -F::one())]),
            random_normalized_series::<F, _>(&mut rng, unit, 4),
        ];
        for f in battery {
            let fl = floor.unwrap_or_else(|| default_floor(spec, &f));
            let f_inv = f.invert(fl)?;
            for m in [0, 1] {
                let a =
                    QhElement::term(Side::Absolute, i, NovikovScalar::from_series(f.clone(), m));
                let w = QhElement::term(
                    Side::Relative,
                    spec.dual_of_absolute(i),
                    NovikovScalar::from_series(f_inv.clone(), -m),
                );
                let delta = qh.delta_pairing(ProductKind::Two, &a, &w)?;
                let pi = delta.coeff_at_zero()?;
                b.case(!pi.is_zero(), || Witness {
                    inputs: vec![
                        format_element(spec, &a, None),
                        format_element(spec, &w, None),
                    ],
                    lhs: format!("Δ₂ = {}", format_series(&delta, None)),
                    rhs: "Π₂ ≠ 0".to_string(),
                });
            }
        }
    }
    let mut checks = vec![b.finish()];
    checks.push(matrix_check(
        spec,
        "nondegeneracy.classical_matrix",
        ProductKind::Two,
    ));
    if spec.bullet1_nondegenerate() {
        checks.push(matrix_check(
            spec,
            "nondegeneracy.pairing1",
            ProductKind::One,
        ));
    } else {
        checks.push(Check::skipped(
            "nondegeneracy.pairing1",
            "•₁ may be degenerate; set bullet1_nondegenerate to check Δ₁/Π₁",
        ));
    }
    Ok(checks)
}

/// The `[pt]` coefficients of `e_i • e_j^∨` (or `e_i •₁ e_j`) form an invertible matrix.
fn matrix_check<F: Coefficient>(spec: &ManifoldSpec<F>, id: &str, kind: ProductKind) -> Check {
    let n = spec.rank();
    let matrix: Vec<Vec<F>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let col = match kind {
                        ProductKind::Two => spec.dual_of_absolute(j),
                        _ => j,
                    };
                    spec.bullet_basis(kind, i, col).coeff(spec.point())
                })
                .collect()
        })
        .collect();
    let mut b = CheckBuilder::new(id);
    let r = rank(matrix.clone());
    b.case(r == n, || Witness {
        inputs: matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|z| z.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect(),
        lhs: format!("rank {r}"),
        rhs: format!("rank {n}"),
    });
    b.finish()
}

/// Rank by Gaussian elimination over the base field.
pub(crate) fn rank<F: Coefficient>(mut m: Vec<Vec<F>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone() * inv.clone();
                let pivot_row = m[r].clone();
                for (x, p) in m[i][c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                    *x = x.clone() - p.clone() * factor.clone();
                }
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf2, Rational};

    #[test]
    fn rank_over_q() {
        let q = |n| Rational::from_i64(n);
        assert_eq!(rank(vec![vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
        assert_eq!(rank(vec![vec![q(0), q(1)], vec![q(1), q(0)]]), 2);
    }

    #[test]
    fn rank_over_z2() {
        let g = |b| Gf2(b);
        assert_eq!(
            rank(vec![vec![g(true), g(true)], vec![g(true), g(true)]]),
            1
        );
    }
}
