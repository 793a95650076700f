//! The axiom suite: every asserted identity of the quantum products as a pass/fail check.

mod nondegeneracy;
pub mod random;
mod report;
mod suite;

pub use nondegeneracy::{check_nondegeneracy, default_floor};
pub use report::{Check, CheckBuilder, Status, VerificationReport, Witness};
pub use suite::{run_axiom_suite, run_full_suite};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
