use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn liecurv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liecurv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok_stdout(args: &[&str]) -> String {
    let out = liecurv(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn ok_json(args: &[&str]) -> Value {
    serde_json::from_str(&ok_stdout(args)).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn basis(part: &Value) -> Vec<Vec<f64>> {
    part["basis"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| {
            v.as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_f64().unwrap())
                .collect()
        })
        .collect()
}

#[test]
fn analyze_two_a2() {
    let r = ok_json(&["analyze", "--catalog", "2A_2", "-p", "a=1", "-p", "b=1"]);
    assert_eq!(r["curvature"]["locally_symmetric"], true);
    let z = &r["z_decomposition"];
    assert_eq!(z["exists"], true);
    let parts = z["parts"].as_array().unwrap();
    assert_eq!(parts.len(), 3);
    assert_eq!(parts[0]["dim"], 0);
    assert_eq!(
        basis(&parts[1]),
        vec![vec![1.0, 0.0, 0.0, 0.0], vec![0.0, 1.0, 0.0, 0.0]]
    );
    assert_eq!(
        basis(&parts[2]),
        vec![vec![0.0, 0.0, 1.0, 0.0], vec![0.0, 0.0, 0.0, 1.0]]
    );
    assert_eq!(z["brackets"]["(1,2)"], "zero");
}

#[test]
fn analyze_abelian_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "abelian4.json", r#"{"dim": 4, "brackets": []}"#);
    let r = ok_json(&["analyze", "--file", &f]);
    assert_eq!(r["curvature"]["scalar"], 0.0);
    assert!(r["curvature"]["sectional"]
        .as_object()
        .unwrap()
        .values()
        .all(|k| k == 0.0));
    assert_eq!(r["curvature"]["locally_symmetric"], true);
    assert_eq!(r["v_decomposition"]["exists"], false);
    assert!(r["v_decomposition"]["reason"].is_string());
    assert_eq!(r["irreducible_system"], Value::Array(vec![]));
}

#[test]
fn analyze_a33_reports_spectrum_and_no_z() {
    let r = ok_json(&["analyze", "--catalog", "A_{3,3}+A_1", "-p", "a=1", "-p", "b=1"]);
    let got: Vec<(f64, u64)> = r["spectrum"]["clusters"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["lambda"].as_f64().unwrap(), c["mult"].as_u64().unwrap()))
        .collect();
    let s2 = 2f64.sqrt();
    let expected = [
        (0.25, 2),
        ((-1.0 + s2) / 2.0, 1),
        (-1.0, 1),
        ((-1.0 - s2) / 2.0, 1),
        (-1.75, 1),
    ];
    assert_eq!(got.len(), expected.len());
    for ((l, m), (el, em)) in got.iter().zip(expected) {
        assert!((l - el).abs() < 1e-9);
        assert_eq!(*m, em);
    }
    assert_eq!(r["z_decomposition"]["exists"], false);
    assert!(r["z_decomposition"]["reason"].is_string());
}

#[test]
fn output_is_deterministic() {
    for format in ["json", "text", "csv"] {
        let args = [
            "analyze",
            "--catalog",
            "A_{4,6}",
            "-p",
            "alpha=2",
            "--format",
            format,
        ];
        assert_eq!(ok_stdout(&args), ok_stdout(&args));
    }
}

#[test]
fn emitted_algebra_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let emitted = ok_stdout(&[
        "analyze",
        "--catalog",
        "A_{3,9}+A_1",
        "-p",
        "a=0.7",
        "-p",
        "m=1.3",
        "--emit-algebra",
    ]);
    let f = write(dir.path(), "alg.json", &emitted);
    assert_eq!(ok_stdout(&["analyze", "--file", &f, "--emit-algebra"]), emitted);
    let direct = ok_stdout(&[
        "analyze",
        "--catalog",
        "A_{3,9}+A_1",
        "-p",
        "a=0.7",
        "-p",
        "m=1.3",
    ]);
    assert_eq!(ok_stdout(&["analyze", "--file", &f]), direct);
}

#[test]
fn stage_limits_the_report() {
    let r = ok_json(&["analyze", "--catalog", "su(2)", "--stage", "curvature"]);
    assert!(r.get("curvature").is_some());
    assert!(r.get("spectrum").is_none());
    let r = ok_json(&["analyze", "--catalog", "su(2)", "--stage", "spectrum"]);
    assert!(r.get("spectrum").is_some());
    assert!(r.get("v_decomposition").is_none());
}

#[test]
fn text_report() {
    let t = ok_stdout(&[
        "analyze",
        "--catalog",
        "A_2+2A_1",
        "-p",
        "b=1",
        "--format",
        "text",
    ]);
    assert!(t.contains("locally symmetric: false"));
    assert!(t.contains("Z0 (dim 1) = span{e3}"));
    assert!(t.contains("Z1 (dim 3) = span{e1, e2, e4}"));
}

#[test]
fn validation_failures_exit_2_with_json() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"dim": 3, "brackets": [{"i":1,"j":2,"k":1,"v":1},{"i":1,"j":3,"k":1,"v":1},{"i":2,"j":3,"k":2,"v":1}]}"#,
    );
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["analyze", "--file", &bad], "JacobiViolation"),
        (vec!["analyze", "--catalog", "nope"], "UnknownEntry"),
        (
            vec!["analyze", "--catalog", "A_{4,6}", "-p", "alpha=1"],
            "ConstraintViolation",
        ),
        (vec!["analyze", "--catalog", "su(2)", "-p", "a=x"], "Parse"),
        (vec!["analyze", "--file", "/nonexistent/alg.json"], "Io"),
        (
            vec!["sweep", "--catalog", "su(2)", "-p", "q=1,2"],
            "UnknownParameter",
        ),
    ];
    for (args, kind) in cases {
        let out = liecurv(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err: Value = serde_json::from_slice(&out.stderr).unwrap();
        assert_eq!(err["error"], kind, "{args:?}");
        assert!(err["message"].is_string());
    }
}

fn csv_rows(text: &str) -> Vec<csv::StringRecord> {
    csv::Reader::from_reader(text.as_bytes())
        .records()
        .map(|r| r.unwrap())
        .collect()
}

fn column(text: &str, name: &str) -> Vec<String> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let idx = rdr.headers().unwrap().iter().position(|h| h == name).unwrap();
    rdr.records().map(|r| r.unwrap()[idx].to_string()).collect()
}

#[test]
fn sweep_a2_plus_2a1() {
    let out = ok_stdout(&["sweep", "--catalog", "A_2+2A_1", "-p", "a=1", "-p", "b=0,0.5,1"]);
    assert_eq!(column(&out, "b"), ["0", "0.5", "1"]);
    assert_eq!(column(&out, "locally_symmetric"), ["true", "false", "false"]);
}

#[test]
fn sweep_without_parameters_has_one_row() {
    let out = ok_stdout(&["sweep", "--catalog", "4A_1"]);
    assert_eq!(csv_rows(&out).len(), 1);
}

#[test]
fn sweep_milnor_unimodular() {
    let r = ok_json(&[
        "sweep",
        "--catalog",
        "milnor-uni",
        "-p",
        "a=1",
        "-p",
        "b=1",
        "-p",
        "c=0,1",
        "--format",
        "json",
    ]);
    let rows = r.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|row| row["locally_symmetric"] == true));
}

#[test]
fn sweep_keeps_going_after_row_errors() {
    let out = ok_stdout(&["sweep", "--catalog", "A_{4,6}", "-p", "alpha=0.5,1,2"]);
    let errors = column(&out, "error");
    assert!(errors[0].is_empty());
    assert!(errors[1].starts_with("ConstraintViolation"));
    assert!(errors[2].is_empty());
}

#[test]
fn catalog_listing() {
    let text = ok_stdout(&["catalog", "list"]);
    assert!(text.contains("A_{4,12}"));
    assert!(text.contains("4A_1"));
    let r = ok_json(&["catalog", "list", "--format", "json"]);
    assert!(r.as_array().unwrap().len() >= 20);
}
