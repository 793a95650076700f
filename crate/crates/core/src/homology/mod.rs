//! Declared homology data of a manifold: bases, intersection products, the
//! map j*, the group Γ and the finite table of Gromov-Witten invariants.

mod constraints;
pub mod document;
pub mod examples;
mod gw;
mod spec;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::Coefficient;

pub use constraints::validate_gw_constraints;
pub use spec::{GammaGenerator, GwEntry, ManifoldSpec};

/// Which homology a class lives in: `H_*(M)` or `H_*(M, ∂M)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    Absolute,
    Relative,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Absolute => f.write_str("absolute"),
            Side::Relative => f.write_str("relative"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisClass {
    pub name: String,
    pub degree: u32,
    pub side: Side,
}

/// The three classical products and their quantum deformations.
///
/// `One`: abs × abs → abs, `Two`: abs × rel → abs, `Three`: rel × rel → rel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProductKind {
    One,
    Two,
    Three,
}

impl ProductKind {
    pub const ALL: [ProductKind; 3] = [ProductKind::One, ProductKind::Two, ProductKind::Three];

    pub fn from_index(i: u8) -> Option<Self> {
        match i {
            1 => Some(ProductKind::One),
            2 => Some(ProductKind::Two),
            3 => Some(ProductKind::Three),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            ProductKind::One => 1,
            ProductKind::Two => 2,
            ProductKind::Three => 3,
        }
    }

    /// (left operand, right operand, result).
    pub fn signature(self) -> (Side, Side, Side) {
        match self {
            ProductKind::One => (Side::Absolute, Side::Absolute, Side::Absolute),
            ProductKind::Two => (Side::Absolute, Side::Relative, Side::Absolute),
            ProductKind::Three => (Side::Relative, Side::Relative, Side::Relative),
        }
    }

    /// Products whose two operands live on the same side.
    pub fn is_symmetric(self) -> bool {
        !matches!(self, ProductKind::Two)
    }

    pub fn subscript(self) -> &'static str {
        match self {
            ProductKind::One => "₁",
            ProductKind::Two => "₂",
            ProductKind::Three => "₃",
        }
    }
}

/// A class in Γ, as integer coordinates over the declared generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GammaClass(pub Vec<i64>);

impl GammaClass {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == 0)
    }
}

impl fmt::Display for GammaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A homology class with base-field coefficients over one side's basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomClass<F> {
    side: Side,
    coeffs: BTreeMap<usize, F>,
}

impl<F: Coefficient> HomClass<F> {
    pub fn zero(side: Side) -> Self {
        HomClass {
            side,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(side: Side, index: usize) -> Self {
        Self::from_terms(side, [(index, F::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, F)>>(side: Side, terms: I) -> Self {
        let mut c = Self::zero(side);
        for (i, z) in terms {
            c.add_term(i, z);
        }
        c
    }

    pub fn add_term(&mut self, index: usize, z: F) {
        if z.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&index) {
            Some(old) => old + z,
            None => z,
        };
        if !sum.is_zero() {
            self.coeffs.insert(index, sum);
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &F)> + '_ {
        self.coeffs.iter().map(|(i, z)| (*i, z))
    }

    pub fn coeff(&self, index: usize) -> F {
        self.coeffs.get(&index).cloned().unwrap_or_else(F::zero)
    }

    pub fn scale(&self, z: &F) -> Self {
        Self::from_terms(
            self.side,
            self.terms().map(|(i, c)| (i, c.clone() * z.clone())),
        )
    }

    /// Sum of two classes on the same side.
    pub fn plus(&self, other: &Self) -> Self {
        debug_assert_eq!(self.side, other.side);
        let mut out = self.clone();
        for (i, z) in other.terms() {
            out.add_term(i, z.clone());
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("validation failed [{rule}]: {detail}")]
    Validation { rule: &'static str, detail: String },
    #[error("side mismatch: {0}")]
    SideMismatch(String),
    #[error("arity error: {0}")]
    Arity(String),
}

impl SpecError {
    pub(crate) fn validation(rule: &'static str, detail: impl Into<String>) -> Self {
        SpecError::Validation {
            rule,
            detail: detail.into(),
        }
    }
}
