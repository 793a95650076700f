//! Exact arithmetic for the generalized Laurent series field K_G and the
//! Novikov ring Λ = K_G[q, q⁻¹], together with the valuation ν.

mod exponent;
mod scalar;
mod series;

pub use exponent::{Exponent, Valuation};
pub use scalar::NovikovScalar;
pub use series::KgSeries;

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NovikovError {
    #[error("cannot invert the zero series")]
    ZeroInversion,
    #[error("inversion requires an exactly known (untruncated) series")]
    TruncatedInversion,
    #[error("series is truncated at s^{floor}, which hides the s^0 coefficient")]
    TruncationMasksZero { floor: Exponent },
}
