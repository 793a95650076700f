//! Browser bindings: product tables, the axiom suite and series inversion.

use qhomology::homology::document::SpecDocument;
use qhomology::homology::examples::{blowup_b4_document, blowup_dtstar_document};
use qhomology::render::{
    format_series, render_report, render_table, DisplayUnit, Format, RenderOptions,
};
use qhomology::verify::run_full_suite;
use qhomology::{
    BaseField, Coefficient, Exponent, Gf2, KgSeries, ManifoldSpec, ProductKind, QuantumHomology,
    Rational,
};
use wasm_bindgen::prelude::*;

fn document(
    example: &str,
    delta: &str,
    genus: u32,
    field: &str,
) -> Result<(SpecDocument, Exponent), String> {
    let delta: Exponent = delta.parse().map_err(|e| format!("δ: {e}"))?;
    let field: BaseField = field.parse().map_err(|e| format!("field: {e}"))?;
    let doc = match example {
        "blowup_b4" => blowup_b4_document(delta, field),
        "blowup_dtstar" => blowup_dtstar_document(genus, delta, field),
        other => return Err(format!("unknown example `{other}`")),
    }
    .map_err(|e| e.to_string())?;
    Ok((doc, delta))
}

fn options(delta: Exponent, symbolic: bool) -> RenderOptions {
    RenderOptions {
        format: Format::Text,
        display_unit: symbolic.then(|| DisplayUnit {
            name: "δ".into(),
            value: delta,
        }),
    }
}

fn table_for<F: Coefficient>(
    doc: &SpecDocument,
    kind: ProductKind,
    opts: &RenderOptions,
) -> Result<String, String> {
    let spec = ManifoldSpec::<F>::from_document(doc).map_err(|e| e.to_string())?;
    Ok(render_table(&QuantumHomology::new(&spec), kind, opts))
}

fn report_for<F: Coefficient>(
    doc: &SpecDocument,
    seed: u64,
    scalars: usize,
) -> Result<String, String> {
    let spec = ManifoldSpec::<F>::from_document(doc).map_err(|e| e.to_string())?;
    let report = run_full_suite(&spec, seed, scalars, None).map_err(|e| e.to_string())?;
    Ok(render_report(&report, &RenderOptions::default()))
}

pub fn table_text(
    example: &str,
    delta: &str,
    genus: u32,
    field: &str,
    kind: u8,
    symbolic: bool,
) -> Result<String, String> {
    let kind = ProductKind::from_index(kind).ok_or_else(|| format!("no product ∗{kind}"))?;
    let (doc, delta) = document(example, delta, genus, field)?;
    let opts = options(delta, symbolic);
    match doc.field {
        BaseField::Rationals => table_for::<Rational>(&doc, kind, &opts),
        BaseField::IntegersMod2 => table_for::<Gf2>(&doc, kind, &opts),
    }
}

pub fn report_text(
    example: &str,
    delta: &str,
    genus: u32,
    field: &str,
    seed: u64,
    scalars: usize,
) -> Result<String, String> {
    let (doc, _) = document(example, delta, genus, field)?;
    match doc.field {
        BaseField::Rationals => report_for::<Rational>(&doc, seed, scalars),
        BaseField::IntegersMod2 => report_for::<Gf2>(&doc, seed, scalars),
    }
}

/// `terms` is a comma-separated list of `coefficient@exponent`, e.g. `1@0, -1@-1/10`.
pub fn inverse_text(terms: &str, floor: &str) -> Result<String, String> {
    let mut parsed = Vec::new();
    for t in terms.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (c, e) = t
            .split_once('@')
            .ok_or_else(|| format!("`{t}`: expected coefficient@exponent"))?;
        let c = Rational::parse(c.trim()).map_err(|e| format!("`{t}`: {e}"))?;
        let e: Exponent = e.trim().parse().map_err(|e| format!("`{t}`: {e}"))?;
        parsed.push((e, c));
    }
    let f = KgSeries::from_terms(parsed);
    let floor: Exponent = floor.trim().parse().map_err(|e| format!("floor: {e}"))?;
    let g = f.invert(floor).map_err(|e| e.to_string())?;
    let check = &(&f * &g.without_floor()) - &KgSeries::one();
    Ok(format!(
        "f     = {}\nf⁻¹   = {}\nν(f·f⁻¹ − 1) = {}\n",
        format_series(&f, None),
        format_series(&g, None),
        check.valuation()
    ))
}

#[wasm_bindgen]
pub fn product_table(
    example: &str,
    delta: &str,
    genus: u32,
    field: &str,
    kind: u8,
    symbolic: bool,
) -> Result<String, JsError> {
    table_text(example, delta, genus, field, kind, symbolic).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn axiom_report(
    example: &str,
    delta: &str,
    genus: u32,
    field: &str,
    seed: u32,
    scalars: u32,
) -> Result<String, JsError> {
    report_text(
        example,
        delta,
        genus,
        field,
        u64::from(seed),
        scalars as usize,
    )
    .map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn invert_series(terms: &str, floor: &str) -> Result<String, JsError> {
    inverse_text(terms, floor).map_err(|e| JsError::new(&e))
}
