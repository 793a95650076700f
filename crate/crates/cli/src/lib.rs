//! Commands of the `qh` binary, as functions from inputs to rendered output and exit status.

use std::fmt::Write as _;

use qhomology::homology::document::SpecDocument;
use qhomology::homology::examples::{blowup_b4_document, blowup_dtstar_document};
use qhomology::homology::validate_gw_constraints;
use qhomology::novikov::NovikovError;
use qhomology::render::{render_report, render_table, Format, RenderOptions};
use qhomology::verify::{run_full_suite, Check};
use qhomology::{
    BaseField, Coefficient, Exponent, Gf2, ManifoldSpec, ProductKind, QuantumHomology, Rational,
    SpecError,
};
use serde_json::json;
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown example `{0}` (expected blowup_b4 or blowup_dtstar)")]
    UnknownExample(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Load(SpecError),
    #[error("{0}")]
    Invalid(SpecError),
    #[error("{0}")]
    Engine(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Engine(_) => EXIT_FAILURE,
            _ => EXIT_USAGE,
        }
    }
}

/// Rendered output and the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

pub fn cmd_example(
    name: &str,
    delta: &str,
    genus: Option<i64>,
    field: BaseField,
) -> Result<String, CliError> {
    let delta: Exponent = delta
        .parse()
        .map_err(|e| CliError::BadParams(format!("--delta: {e}")))?;
    if !delta.is_positive() {
        return Err(CliError::BadParams(format!(
            "--delta must be positive, got {delta}"
        )));
    }
    let doc = match name {
        "blowup_b4" => {
            if genus.is_some() {
                return Err(CliError::BadParams("blowup_b4 takes no --genus".into()));
            }
            blowup_b4_document(delta, field)
        }
        "blowup_dtstar" => {
            let g =
                genus.ok_or_else(|| CliError::BadParams("blowup_dtstar needs --genus".into()))?;
            let g = u32::try_from(g).map_err(|_| {
                CliError::BadParams(format!("--genus must be a non-negative integer, got {g}"))
            })?;
            blowup_dtstar_document(g, delta, field)
        }
        other => return Err(CliError::UnknownExample(other.to_string())),
    }
    .map_err(|e| CliError::BadParams(e.to_string()))?;
    match field {
        BaseField::Rationals => canonical::<Rational>(&doc),
        BaseField::IntegersMod2 => canonical::<Gf2>(&doc),
    }
}

fn canonical<F: Coefficient>(doc: &SpecDocument) -> Result<String, CliError> {
    Ok(ManifoldSpec::<F>::from_document(doc)
        .map_err(CliError::Invalid)?
        .to_json())
}

pub fn read_spec_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_string(),
        message: e.to_string(),
    })
}

fn parse_document(text: &str) -> Result<SpecDocument, CliError> {
    SpecDocument::from_json(text).map_err(CliError::Load)
}

/// Runs `body` with the spec loaded over the document's own field.
macro_rules! with_spec {
    ($doc:expr, |$spec:ident| $body:expr) => {
        match $doc.field {
            BaseField::Rationals => {
                let $spec =
                    ManifoldSpec::<Rational>::from_document(&$doc).map_err(CliError::Invalid)?;
                $body
            }
            BaseField::IntegersMod2 => {
                let $spec = ManifoldSpec::<Gf2>::from_document(&$doc).map_err(CliError::Invalid)?;
                $body
            }
        }
    };
}

pub fn cmd_validate(text: &str, opts: &RenderOptions) -> Result<Outcome, CliError> {
    let doc = parse_document(text)?;
    let loaded = match doc.field {
        BaseField::Rationals => {
            ManifoldSpec::<Rational>::from_document(&doc).map(|s| validation_summary(&s))
        }
        BaseField::IntegersMod2 => {
            ManifoldSpec::<Gf2>::from_document(&doc).map(|s| validation_summary(&s))
        }
    };
    let (warnings, checks, error) = match loaded {
        Ok((w, c)) => (w, c, None),
        Err(e) => (Vec::new(), Vec::new(), Some(e)),
    };
    let valid = error.is_none() && !checks.iter().any(Check::is_fail);
    let stdout = match opts.format {
        Format::Json => {
            let doc = json!({
                "name": doc.name,
                "valid": valid,
                "error": error.as_ref().map(|e| e.to_string()),
                "warnings": warnings,
                "checks": checks,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            match &error {
                Some(e) => writeln!(out, "invalid: {}: {e}", doc.name).unwrap(),
                None => writeln!(
                    out,
                    "{}: {}",
                    if valid { "valid" } else { "invalid" },
                    doc.name
                )
                .unwrap(),
            }
            for w in &warnings {
                writeln!(out, "warning: {w}").unwrap();
            }
            for c in &checks {
                writeln!(out, "{:<4} {} ({} cases)", c.status, c.id, c.cases).unwrap();
                if let Some(w) = &c.witness {
                    writeln!(out, "     inputs: {}", w.inputs.join("; ")).unwrap();
                    writeln!(out, "     lhs: {}", w.lhs).unwrap();
                    writeln!(out, "     rhs: {}", w.rhs).unwrap();
                }
            }
            out
        }
    };
    Ok(Outcome {
        stdout,
        code: if valid { EXIT_OK } else { EXIT_FAILURE },
    })
}

fn validation_summary<F: Coefficient>(spec: &ManifoldSpec<F>) -> (Vec<String>, Vec<Check>) {
    (spec.warnings().to_vec(), validate_gw_constraints(spec))
}

pub fn cmd_table(text: &str, kind: u8, opts: &RenderOptions) -> Result<Outcome, CliError> {
    let kind = ProductKind::from_index(kind)
        .ok_or_else(|| CliError::BadParams(format!("--kind must be 1, 2 or 3, got {kind}")))?;
    let doc = parse_document(text)?;
    let stdout = with_spec!(doc, |spec| render_table(
        &QuantumHomology::new(&spec),
        kind,
        opts
    ));
    Ok(Outcome {
        stdout,
        code: EXIT_OK,
    })
}

pub fn cmd_check(
    text: &str,
    seed: u64,
    scalars: usize,
    floor: Option<&str>,
    opts: &RenderOptions,
) -> Result<Outcome, CliError> {
    let floor: Option<Exponent> = floor
        .map(|f| {
            f.parse()
                .map_err(|e| CliError::BadParams(format!("--floor: {e}")))
        })
        .transpose()?;
    if let Some(fl) = floor.filter(|f| *f >= Exponent::ZERO) {
        return Err(CliError::BadParams(format!(
            "--floor: {}",
            NovikovError::TruncationMasksZero { floor: fl }
        )));
    }
    let doc = parse_document(text)?;
    with_spec!(doc, |spec| {
        let report = run_full_suite(&spec, seed, scalars, floor)
            .map_err(|e| CliError::Engine(e.to_string()))?;
        Ok(Outcome {
            stdout: render_report(&report, opts),
            code: if report.passed() {
                EXIT_OK
            } else {
                EXIT_FAILURE
            },
        })
    })
}
