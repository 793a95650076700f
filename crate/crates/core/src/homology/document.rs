//! JSON schema of manifold documents.
//!
//! Rationals are strings `"p/q"` (or `"p"`). Maps keyed by class name are
//! sorted, so a document written by [`ManifoldSpec::to_document`] is canonical:
//! parsing and re-serializing it reproduces it byte for byte.
//!
//! [`ManifoldSpec::to_document`]: super::ManifoldSpec::to_document

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::SpecError;
use crate::field::BaseField;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub name: String,
    /// Real dimension 2n.
    pub dim: u32,
    pub field: BaseField,
    pub absolute_basis: Vec<AbsoluteBasisDecl>,
    pub relative_basis: Vec<RelativeBasisDecl>,
    pub bullet1: Vec<BulletDecl>,
    pub bullet2: Vec<BulletDecl>,
    pub bullet3: Vec<BulletDecl>,
    /// Absolute class name → image under j* (missing rows are zero).
    pub jstar: BTreeMap<String, BTreeMap<String, String>>,
    pub gamma_generators: Vec<GammaDecl>,
    pub gw_table: Vec<GwDecl>,
    /// Opt in to the Δ₁/Π₁ nondegeneracy check.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub bullet1_nondegenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AbsoluteBasisDecl {
    pub name: String,
    pub degree: u32,
}

/// A relative basis class together with the absolute class it is Kronecker dual to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelativeBasisDecl {
    pub name: String,
    pub degree: u32,
    pub dual_of: String,
}

/// One entry `left • right = result` of an intersection-product table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BulletDecl {
    pub left: String,
    pub right: String,
    pub result: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GammaDecl {
    pub name: String,
    pub c1: i64,
    pub omega: String,
}

/// `GW_{class, p, 3}(args) = value`; the first `p` args are absolute classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GwDecl {
    pub class: Vec<i64>,
    pub p: usize,
    pub args: Vec<String>,
    pub value: String,
}

impl SpecDocument {
    pub fn from_json(text: &str) -> Result<Self, SpecError> {
        serde_json::from_str(text).map_err(|e| SpecError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }
}
