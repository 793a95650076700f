use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn qh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qh"))
        .args(args)
        .output()
        .expect("qh runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn example(dir: &TempDir, args: &[&str]) -> String {
    let mut all = vec!["example"];
    all.extend_from_slice(args);
    let out = qh(&all);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    write(dir, "spec.json", &stdout(&out))
}

fn edit(path: &str, f: impl FnOnce(&mut Value)) -> String {
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    f(&mut doc);
    let out = Path::new(path).with_file_name("edited.json");
    std::fs::write(&out, serde_json::to_string_pretty(&doc).unwrap()).unwrap();
    out.to_str().unwrap().to_string()
}

#[test]
fn example_round_trips() {
    let dir = TempDir::new().unwrap();
    let path = example(&dir, &["blowup_dtstar", "--delta", "1/10", "--genus", "1"]);
    let text = std::fs::read_to_string(&path).unwrap();
    let doc: Value = serde_json::from_str(&text).unwrap();
    let odd = doc["absolute_basis"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["degree"] == 1)
        .count();
    assert_eq!(odd, 2);
    assert_eq!(qh(&["validate", &path]).status.code(), Some(0));
    let reparsed = qh(&[
        "example",
        "blowup_dtstar",
        "--delta",
        "1/10",
        "--genus",
        "1",
    ]);
    assert_eq!(stdout(&reparsed), text);
}

#[test]
fn b4_pipeline_exits_zero() {
    let dir = TempDir::new().unwrap();
    let path = example(&dir, &["blowup_b4", "--delta", "1/10"]);
    for kind in ["1", "2", "3"] {
        assert_eq!(qh(&["table", &path, "--kind", kind]).status.code(), Some(0));
    }
    let check = qh(&["check", &path, "--seed", "3"]);
    assert_eq!(check.status.code(), Some(0), "{}", stdout(&check));
}

#[test]
fn z2_example_checks() {
    let dir = TempDir::new().unwrap();
    let path = example(&dir, &["blowup_b4", "--delta", "1/10", "--field", "Z2"]);
    assert!(std::fs::read_to_string(&path)
        .unwrap()
        .contains("\"field\": \"Z2\""));
    assert_eq!(qh(&["check", &path]).status.code(), Some(0));
}

#[test]
fn table_rows_with_unit() {
    let dir = TempDir::new().unwrap();
    let path = example(&dir, &["blowup_b4", "--delta", "1/10"]);
    let out = stdout(&qh(&["table", &path, "--kind", "2", "--unit", "δ=1/10"]));
    assert!(
        out.contains("E ∗₂ E^∨ = 1 · [pt] - 1 · E ⊗ s^(-δ) q^(-2)"),
        "{out}"
    );
    assert!(out.contains("[pt] ∗₂ E^∨ = 0"));
    assert!(out.contains("E ∗₂ [M,∂M] = 1 · E"));
}

#[test]
fn json_table_parses() {
    let dir = TempDir::new().unwrap();
    let path = example(&dir, &["blowup_b4", "--delta", "1/10"]);
    let out = stdout(&qh(&["--format", "json", "table", &path, "--kind", "1"]));
    let doc: Value = serde_json::from_str(&out).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    let ee = &rows[3]["result"]["terms"];
    assert_eq!(ee[1]["s"], "-1/10");
    assert_eq!(ee[1]["q"], -2);
}

#[test]
fn outputs_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let path = example(&dir, &["blowup_dtstar", "--delta", "1/7", "--genus", "2"]);
    for args in [
        vec!["check", path.as_str(), "--seed", "9"],
        vec!["--format", "json", "check", path.as_str(), "--seed", "9"],
        vec!["table", path.as_str(), "--kind", "3"],
    ] {
        assert_eq!(stdout(&qh(&args)), stdout(&qh(&args)));
    }
}

#[test]
fn mutated_spec_fails_with_witness() {
    let dir = TempDir::new().unwrap();
    let path = example(&dir, &["blowup_b4", "--delta", "1/10"]);
    let mutated = edit(&path, |doc| {
        let row = doc["gw_table"]
            .as_array_mut()
            .unwrap()
            .iter_mut()
            .find(|r| r["p"] == 3)
            .unwrap();
        row["value"] = Value::from("1");
    });
    let out = qh(&["check", &mutated]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
    assert!(stdout(&out).contains("lhs:"));
}

#[test]
fn malformed_json_reports_location() {
    let dir = TempDir::new().unwrap();
    let path = write(
        &dir,
        "bad.json",
        "{\n  \"name\": \"x\",\n  \"dim\": oops\n}",
    );
    let out = qh(&["validate", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn duality_degree_violation() {
    let dir = TempDir::new().unwrap();
    let path = example(&dir, &["blowup_b4", "--delta", "1/10"]);
    let bad = edit(&path, |doc| {
        doc["relative_basis"][0]["degree"] = Value::from(3)
    });
    let out = qh(&["validate", &bad]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(
        text.contains("duality.degree") && text.contains("E") && text.contains("E^∨"),
        "{text}"
    );
}

#[test]
fn zero_class_entry_rejected() {
    let dir = TempDir::new().unwrap();
    let path = example(&dir, &["blowup_b4", "--delta", "1/10"]);
    let bad = edit(&path, |doc| {
        doc["gw_table"][0]["class"] = serde_json::json!([0])
    });
    let out = qh(&["validate", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("A ≠ 0"));
}

#[test]
fn side_mismatch_rejected() {
    let dir = TempDir::new().unwrap();
    let path = example(&dir, &["blowup_b4", "--delta", "1/10"]);
    let bad = edit(&path, |doc| {
        let row = doc["gw_table"]
            .as_array_mut()
            .unwrap()
            .iter_mut()
            .find(|r| r["p"] == 3)
            .unwrap();
        row["args"][2] = Value::from("E^∨");
    });
    let out = qh(&["validate", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("side mismatch"));
}

#[test]
fn constraint_violation_fails_validate() {
    let dir = TempDir::new().unwrap();
    let path = example(&dir, &["blowup_b4", "--delta", "1/10"]);
    let bad = edit(&path, |doc| {
        doc["gw_table"]
            .as_array_mut()
            .unwrap()
            .push(serde_json::json!({
                "class": [1], "p": 1, "args": ["[pt]", "E^∨", "[M,∂M]"], "value": "1"
            }));
    });
    let out = qh(&["validate", &bad]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL gw.jstar_kernel"), "{text}");
    assert!(text.contains("FAIL gw.fundamental_class"), "{text}");
}

#[test]
fn dimension_condition_enforced() {
    let dir = TempDir::new().unwrap();
    let path = example(&dir, &["blowup_b4", "--delta", "1/10"]);
    let bad = edit(&path, |doc| {
        doc["gw_table"]
            .as_array_mut()
            .unwrap()
            .push(serde_json::json!({
                "class": [1], "p": 2, "args": ["[pt]", "E", "E^∨"], "value": "1"
            }));
    });
    let out = qh(&["validate", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("gw.dimension"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        qh(&[
            "example",
            "blowup_dtstar",
            "--delta",
            "1/10",
            "--genus",
            "-1"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        qh(&["example", "torus", "--delta", "1/10"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qh(&["example", "blowup_b4", "--delta", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qh(&["validate", "/nonexistent/spec.json"]).status.code(),
        Some(2)
    );
    assert_eq!(qh(&["bogus"]).status.code(), Some(2));
}

#[test]
fn floor_flag() {
    let dir = TempDir::new().unwrap();
    let path = example(&dir, &["blowup_b4", "--delta", "1/10"]);
    assert_eq!(
        qh(&["check", &path, "--floor", "-3/2"]).status.code(),
        Some(0)
    );
    let shallow = qh(&["check", &path, "--floor", "0"]);
    assert_eq!(shallow.status.code(), Some(2));
    assert!(stderr(&shallow).contains("s^0"), "{}", stderr(&shallow));
}
