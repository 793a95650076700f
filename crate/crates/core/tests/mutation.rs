use qhomology::homology::document::SpecDocument;
use qhomology::homology::examples::{blowup_b4_document, blowup_dtstar_document};
use qhomology::verify::run_full_suite;
use qhomology::{BaseField, Exponent, ManifoldSpec, Rational};

fn flipped(doc: &SpecDocument, row: usize) -> SpecDocument {
    let mut doc = doc.clone();
    let v = &mut doc.gw_table[row].value;
    *v = match v.strip_prefix('-') {
        Some(rest) => rest.to_string(),
        None => format!("-{v}"),
    };
    doc
}

fn assert_every_flip_caught(doc: &SpecDocument) {
    assert!(!doc.gw_table.is_empty());
    for row in 0..doc.gw_table.len() {
        let spec = ManifoldSpec::<Rational>::from_document(&flipped(doc, row)).unwrap();
        let report = run_full_suite(&spec, 11, 10, None).unwrap();
        let failed: Vec<_> = report.failures().collect();
        assert!(!failed.is_empty(), "flipping row {row} went unnoticed");
        assert!(failed.iter().all(|c| c.witness.is_some()));
    }
}

#[test]
fn b4_flips_are_caught() {
    let doc = blowup_b4_document(Exponent::new(1, 10), BaseField::Rationals).unwrap();
    assert_every_flip_caught(&doc);
}

#[test]
fn dtstar_flips_are_caught() {
    for g in 0..=2 {
        let doc = blowup_dtstar_document(g, Exponent::new(1, 10), BaseField::Rationals).unwrap();
        assert_every_flip_caught(&doc);
    }
}
