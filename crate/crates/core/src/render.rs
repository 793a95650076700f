//! Text and JSON renderings of scalars, classes, product tables and reports.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::json;

use crate::field::{Coefficient, CoefficientParseError};
use crate::homology::{ManifoldSpec, ProductKind};
use crate::novikov::{Exponent, KgSeries, NovikovScalar};
use crate::quantum::{QhElement, QuantumHomology};
use crate::verify::{Status, VerificationReport};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = CoefficientParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(CoefficientParseError(format!("unknown format `{s}`"))),
        }
    }
}

/// A named exponent, e.g. `δ = 1/10`, used to print exponents as its multiples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisplayUnit {
    pub name: String,
    pub value: Exponent,
}

impl FromStr for DisplayUnit {
    type Err = CoefficientParseError;

    /// Parses `name=p/q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, value) = s
            .split_once('=')
            .ok_or_else(|| CoefficientParseError(format!("expected name=p/q, got `{s}`")))?;
        let value: Exponent = value.parse()?;
        if !value.is_positive() || name.trim().is_empty() {
            return Err(CoefficientParseError(format!(
                "expected a name and a positive value, got `{s}`"
            )));
        }
        Ok(DisplayUnit {
            name: name.trim().to_string(),
            value,
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RenderOptions {
    pub format: Format,
    pub display_unit: Option<DisplayUnit>,
}

pub fn format_exponent(e: Exponent, unit: Option<&DisplayUnit>) -> String {
    if let Some(u) = unit {
        if let Some(k) = e.integer_multiple_of(u.value) {
            return match k {
                0 => "0".to_string(),
                1 => u.name.clone(),
                -1 => format!("-{}", u.name),
                k => format!("{k}{}", u.name),
            };
        }
    }
    e.to_string()
}

/// One monomial `coef · basis ⊗ s^(α) q^(m)`; `basis` may be empty for bare scalars.
fn monomial<F: Coefficient>(
    c: &F,
    basis: &str,
    alpha: Exponent,
    m: i64,
    unit: Option<&DisplayUnit>,
) -> String {
    let mut vars = Vec::new();
    if !alpha.is_zero() {
        vars.push(format!("s^({})", format_exponent(alpha, unit)));
    }
    if m != 0 {
        vars.push(format!("q^({m})"));
    }
    match (basis.is_empty(), vars.is_empty()) {
        (true, true) => c.to_string(),
        (true, false) => format!("{c} · {}", vars.join(" ")),
        (false, true) => format!("{c} · {basis}"),
        (false, false) => format!("{c} · {basis} ⊗ {}", vars.join(" ")),
    }
}

fn truncation(floor: Exponent, basis: &str, m: i64, unit: Option<&DisplayUnit>) -> String {
    let mut s = format!("O(s^({}))", format_exponent(floor, unit));
    match (basis.is_empty(), m) {
        (true, 0) => {}
        (true, m) => write!(s, " · q^({m})").unwrap(),
        (false, 0) => write!(s, " · {basis}").unwrap(),
        (false, m) => write!(s, " · {basis} ⊗ q^({m})").unwrap(),
    }
    s
}

fn join_signed(parts: Vec<String>) -> String {
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, p) in parts.into_iter().enumerate() {
        match (k, p.strip_prefix('-')) {
            (0, _) => out.push_str(&p),
            (_, Some(rest)) => write!(out, " - {rest}").unwrap(),
            (_, None) => write!(out, " + {p}").unwrap(),
        }
    }
    out
}

fn series_parts<F: Coefficient>(
    f: &KgSeries<F>,
    basis: &str,
    m: i64,
    unit: Option<&DisplayUnit>,
) -> Vec<String> {
    let mut parts: Vec<String> = f
        .terms()
        .map(|(e, c)| monomial(c, basis, e, m, unit))
        .collect();
    if let Some(fl) = f.floor() {
        parts.push(truncation(fl, basis, m, unit));
    }
    parts
}

pub fn format_series<F: Coefficient>(f: &KgSeries<F>, unit: Option<&DisplayUnit>) -> String {
    join_signed(series_parts(f, "", 0, unit))
}

pub fn format_scalar<F: Coefficient>(x: &NovikovScalar<F>, unit: Option<&DisplayUnit>) -> String {
    join_signed(
        x.components()
            .rev()
            .flat_map(|(m, f)| series_parts(f, "", m, unit))
            .collect(),
    )
}

pub fn format_element<F: Coefficient>(
    spec: &ManifoldSpec<F>,
    x: &QhElement<F>,
    unit: Option<&DisplayUnit>,
) -> String {
    let mut parts = Vec::new();
    for (i, lam) in x.terms() {
        let basis = spec.class_name(x.side(), i);
        for (m, f) in lam.components().rev() {
            parts.extend(series_parts(f, basis, m, unit));
        }
    }
    join_signed(parts)
}

#[derive(Serialize)]
struct JsonTerm {
    basis: String,
    coef: String,
    s: String,
    q: i64,
}

#[derive(Serialize)]
struct JsonTruncation {
    basis: String,
    floor: String,
    q: i64,
}

#[derive(Serialize)]
struct JsonElement {
    side: String,
    terms: Vec<JsonTerm>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    truncations: Vec<JsonTruncation>,
}

fn element_json<F: Coefficient>(spec: &ManifoldSpec<F>, x: &QhElement<F>) -> JsonElement {
    let mut terms = Vec::new();
    let mut truncations = Vec::new();
    for (i, lam) in x.terms() {
        let basis = spec.class_name(x.side(), i).to_string();
        for (m, f) in lam.components().rev() {
            for (e, c) in f.terms() {
                terms.push(JsonTerm {
                    basis: basis.clone(),
                    coef: c.to_string(),
                    s: e.to_string(),
                    q: m,
                });
            }
            if let Some(fl) = f.floor() {
                truncations.push(JsonTruncation {
                    basis: basis.clone(),
                    floor: fl.to_string(),
                    q: m,
                });
            }
        }
    }
    JsonElement {
        side: x.side().to_string(),
        terms,
        truncations,
    }
}

/// Full basis × basis table of one product, in declaration order.
pub fn render_table<F: Coefficient>(
    qh: &QuantumHomology<'_, F>,
    kind: ProductKind,
    opts: &RenderOptions,
) -> String {
    let spec = qh.spec();
    let (left, right, _) = kind.signature();
    let unit = opts.display_unit.as_ref();
    let star = format!("∗{}", kind.subscript());
    match opts.format {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "# {} over {}: {star}", spec.name(), spec.field()).unwrap();
            for i in 0..spec.rank() {
                for j in 0..spec.rank() {
                    let x = qh.basis_product(kind, i, j);
                    writeln!(
                        out,
                        "{} {star} {} = {}",
                        spec.class_name(left, i),
                        spec.class_name(right, j),
                        format_element(spec, x, unit)
                    )
                    .unwrap();
                }
            }
            out
        }
        Format::Json => {
            let rows: Vec<_> = (0..spec.rank())
                .flat_map(|i| (0..spec.rank()).map(move |j| (i, j)))
                .map(|(i, j)| {
                    let x = qh.basis_product(kind, i, j);
                    json!({
                        "left": spec.class_name(left, i),
                        "right": spec.class_name(right, j),
                        "result": element_json(spec, x),
                        "text": format_element(spec, x, unit),
                    })
                })
                .collect();
            let doc = json!({
                "spec": spec.name(),
                "field": spec.field().to_string(),
                "kind": kind.index(),
                "rows": rows,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("tables serialize");
            s.push('\n');
            s
        }
    }
}

pub fn render_report(report: &VerificationReport, opts: &RenderOptions) -> String {
    match opts.format {
        Format::Json => report.to_json(),
        Format::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "# {} over {} (seed {})",
                report.spec, report.field, report.seed
            )
            .unwrap();
            for c in &report.checks {
                write!(out, "{:<4} {}", c.status, c.id).unwrap();
                if c.status != Status::Skipped {
                    write!(out, " ({} cases", c.cases).unwrap();
                    if c.failures > 0 {
                        write!(out, ", {} failed", c.failures).unwrap();
                    }
                    out.push(')');
                }
                out.push('\n');
                if let Some(note) = &c.note {
                    writeln!(out, "     note: {note}").unwrap();
                }
                if let Some(w) = &c.witness {
                    writeln!(out, "     inputs: {}", w.inputs.join("; ")).unwrap();
                    writeln!(out, "     lhs: {}", w.lhs).unwrap();
                    writeln!(out, "     rhs: {}", w.rhs).unwrap();
                }
            }
            let failed = report.failures().count();
            if failed == 0 {
                writeln!(out, "all {} checks passed or skipped", report.checks.len()).unwrap();
            } else {
                writeln!(out, "{failed} of {} checks failed", report.checks.len()).unwrap();
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::homology::examples::blowup_b4;
    use crate::homology::Side;

    fn delta() -> DisplayUnit {
        "δ=1/10".parse().unwrap()
    }

    #[test]
    fn exponents_as_multiples() {
        let u = delta();
        assert_eq!(format_exponent(Exponent::new(-1, 10), Some(&u)), "-δ");
        assert_eq!(format_exponent(Exponent::new(-1, 5), Some(&u)), "-2δ");
        assert_eq!(format_exponent(Exponent::new(1, 20), Some(&u)), "1/20");
        assert_eq!(format_exponent(Exponent::new(1, 20), None), "1/20");
    }

    #[test]
    fn element_text() {
        let spec = blowup_b4::<Rational>(Exponent::new(1, 10)).unwrap();
        let qh = QuantumHomology::new(&spec);
        let ee = qh.basis_product(ProductKind::One, 1, 1);
        assert_eq!(
            format_element(&spec, ee, Some(&delta())),
            "-1 · [pt] + 1 · E ⊗ s^(-δ) q^(-2)"
        );
        assert_eq!(
            format_element(&spec, &QhElement::zero(Side::Absolute), None),
            "0"
        );
    }

    #[test]
    fn truncated_series_text() {
        let f = KgSeries::<Rational>::from_terms([
            (Exponent::ZERO, Rational::from_i64(1)),
            (Exponent::integer(-1), Rational::from_i64(-1)),
        ]);
        let g = f.invert(Exponent::new(-5, 2)).unwrap();
        assert_eq!(
            format_series(&g, None),
            "1 + 1 · s^(-1) + 1 · s^(-2) + O(s^(-5/2))"
        );
    }

    #[test]
    fn bad_units() {
        assert!("δ".parse::<DisplayUnit>().is_err());
        assert!("δ=-1/10".parse::<DisplayUnit>().is_err());
    }
}
