use rand::Rng;

use crate::field::Coefficient;
use crate::novikov::{Exponent, KgSeries, NovikovScalar};

/// Finite series with up to `max_terms` terms on the lattice `unit·ℤ` in `[-8, 4]·unit`.
pub fn random_series<F: Coefficient, R: Rng>(
    rng: &mut R,
    unit: Exponent,
    max_terms: usize,
) -> KgSeries<F> {
    let n = rng.gen_range(0..=max_terms);
    KgSeries::from_terms((0..n).map(|_| {
        let e = unit * rng.gen_range(-8..=4);
        (e, F::from_i64(rng.gen_range(-3..=3)))
    }))
}

pub fn random_nonzero_series<F: Coefficient, R: Rng>(
    rng: &mut R,
    unit: Exponent,
    max_terms: usize,
) -> KgSeries<F> {
    loop {
        let f = random_series(rng, unit, max_terms.max(1));
        if !f.is_zero() {
            return f;
        }
    }
}

/// Nonzero series with leading exponent 0.
pub fn random_normalized_series<F: Coefficient, R: Rng>(
    rng: &mut R,
    unit: Exponent,
    max_terms: usize,
) -> KgSeries<F> {
    let f = random_nonzero_series::<F, R>(rng, unit, max_terms);
    let (lead, _) = f.leading().expect("nonzero");
    f.shift(-lead)
}

/// Scalar with up to three q-components in degrees `-3..=3`.
pub fn random_scalar<F: Coefficient, R: Rng>(rng: &mut R, unit: Exponent) -> NovikovScalar<F> {
    let parts = rng.gen_range(0..=3);
    (0..parts).fold(NovikovScalar::zero(), |acc, _| {
        let d = rng.gen_range(-3..=3);
        &acc + &NovikovScalar::from_series(random_series(rng, unit, 3), d)
    })
}

pub fn random_nonzero_scalar<F: Coefficient, R: Rng>(
    rng: &mut R,
    unit: Exponent,
) -> NovikovScalar<F> {
    loop {
        let x = random_scalar(rng, unit);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Homogeneous scalar of q-degree `degree`.
pub fn random_homogeneous_scalar<F: Coefficient, R: Rng>(
    rng: &mut R,
    unit: Exponent,
    degree: i64,
) -> NovikovScalar<F> {
    NovikovScalar::from_series(random_nonzero_series(rng, unit, 3), degree)
}

/// `c · s^α q^m` with `c ≠ 0`.
pub fn random_monomial<F: Coefficient, R: Rng>(rng: &mut R, unit: Exponent) -> NovikovScalar<F> {
    loop {
        let c = F::from_i64(rng.gen_range(-3..=3));
        if !c.is_zero() {
            return NovikovScalar::monomial(c, unit * rng.gen_range(-8..=8), rng.gen_range(-3..=3));
        }
    }
}
