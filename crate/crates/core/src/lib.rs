//! Exact quantum homology of compact convex symplectic manifolds.
//!
//! A manifold is described by declared homology data ([`homology::ManifoldSpec`]):
//! absolute and relative bases, the three intersection products, the map j*,
//! the group Γ and a finite table of Gromov-Witten invariants. From this the
//! crate builds the quantum products ∗₁, ∗₂, ∗₃ over the Novikov ring
//! Λ = K_G[q, q⁻¹] ([`quantum`]) and checks their axioms ([`verify`]).
//! All arithmetic is exact.

pub mod field;
pub mod homology;
pub mod novikov;
pub mod quantum;
pub mod render;
pub mod verify;

pub use field::{BaseField, Coefficient, Gf2, Rational};
pub use homology::{HomClass, ManifoldSpec, ProductKind, Side, SpecError};
pub use novikov::{Exponent, KgSeries, NovikovScalar, Valuation};
pub use quantum::{QhElement, QhError, QuantumHomology};
