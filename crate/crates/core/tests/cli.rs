use std::path::PathBuf;
use std::process::Command;

use polyimage::cli::run;
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name).display().to_string()
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv: Vec<&str> = std::iter::once("polyimage").chain(args.iter().copied()).collect();
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn classify_gerono() {
    let (code, out, _) = call(&["classify", "--param", &fixture("gerono.json"), "--mode", "full"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["case_label"], "CASE2");
    assert_eq!(v["p_sphere1"], 1);
    assert_eq!(v["p_ball"], "infinity");
}

#[test]
fn classify_text_table() {
    let (code, out, _) = call(&["classify", "--param", &fixture("line.json"), "--mode", "arc", "--a", "-1", "--b", "1", "--text"]);
    assert_eq!(code, 0);
    assert!(out.contains("case        CASE1"));
    assert!(out.contains("S^k, k>=2   YES"));
}

#[test]
fn classify_is_deterministic() {
    let args = ["classify", "--param", &fixture("circle.json"), "--mode", "full"];
    let first = call(&args).1;
    for _ in 0..3 {
        assert_eq!(call(&args).1, first);
    }
}

#[test]
fn affine_document_matches_homogeneous() {
    let a = call(&["classify", "--param", &fixture("circle_affine.json"), "--mode", "full"]).1;
    let h = call(&["classify", "--param", &fixture("circle.json"), "--mode", "full"]).1;
    assert_eq!(a, h);
}

#[test]
fn sphere_witness_of_segment() {
    let (code, out, _) =
        call(&["witness", "--param", &fixture("line.json"), "--mode", "arc", "--a", "-1", "--b", "1", "--target", "sphere2"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["source"], "sphere");
    assert_eq!(v["k"], 2);
    assert_eq!(v["vars"], serde_json::json!(["x", "y", "z"]));
    assert_eq!(v["components"], serde_json::json!(["1*x^1", "0"]));
}

#[test]
fn witnesses_pass_check() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&str, &[&str], &str); 5] = [
        ("circle.json", &["--mode", "full"], "laurent"),
        ("circle.json", &["--mode", "full"], "circle"),
        ("gerono.json", &["--mode", "full"], "circle"),
        ("line.json", &["--mode", "arc", "--a", "-1", "--b", "1"], "interval"),
        ("parabola.json", &["--mode", "arc", "--a", "0", "--b", "2"], "interval"),
    ];
    for (i, (file, mode, target)) in cases.iter().enumerate() {
        let path = dir.path().join(format!("w{i}.json")).display().to_string();
        let mut args = vec!["witness", "--param"];
        let f = fixture(file);
        args.push(&f);
        args.extend_from_slice(mode);
        args.extend_from_slice(&["--target", target, "--out", &path]);
        assert_eq!(call(&args).0, 0, "{file} {target}");
        let (code, out, _) = call(&["check", "--witness", &path, "--param", &f]);
        assert_eq!(code, 0, "{file} {target}: {out}");
        assert_eq!(json(&out)["pass"], true);
    }
}

#[test]
fn laurent_conversions() {
    let dir = tempfile::tempdir().unwrap();
    let l = dir.path().join("l.json");
    std::fs::write(&l, r#"{"schema": 1, "kind": "laurent", "terms": [{"k": 2, "c": [1, 1, 0, 1]}]}"#).unwrap();
    let (code, out, _) = call(&["laurent", "to-real", "--in", &l.display().to_string()]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["components"], serde_json::json!(["2*x^2-1", "2*x^1*y^1"]));
    let g = dir.path().join("g.json");
    std::fs::write(&g, out).unwrap();
    let (code, out, _) = call(&["laurent", "from-real", "--in", &g.display().to_string()]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["terms"], serde_json::json!([{"k": 2, "c": [1, 1, 0, 1]}]));
}

#[test]
fn implicitize_gerono() {
    let (code, out, _) = call(&["implicitize", "--param", &fixture("gerono.json")]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["implicit"], "-1*x0^2*x1^2+1*x0^2*x2^2+1*x1^4");
}

#[test]
fn sample_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("line.csv");
    let (code, _, _) = call(&[
        "sample", "--param", &fixture("line.json"), "--mode", "arc", "--a", "-1", "--b", "1", "--n", "3", "--format", "csv",
        "--out", &csv.display().to_string(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x1,x2,param");
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("-1.0000000000000000e0,0.0000000000000000e0"));
    let svg = dir.path().join("g.svg");
    let (code, _, _) = call(&["sample", "--param", &fixture("gerono.json"), "--n", "500", "--format", "svg", "--out", &svg.display().to_string()]);
    assert_eq!(code, 0);
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
}

#[test]
fn rejections_exit_two() {
    let (code, out, _) = call(&["classify", "--param", &fixture("improper.json"), "--mode", "full"]);
    assert_eq!(code, 2);
    let v = json(&out);
    assert_eq!(v["reason"], "improper");
    assert_eq!(v["evidence"]["generic_fiber_degree"], 2);
    let (code, out, _) = call(&["witness", "--param", &fixture("circle.json"), "--mode", "full", "--target", "interval"]);
    assert_eq!(code, 2);
    assert_eq!(json(&out)["reason"], "classifier_no");
    assert_eq!(json(&out)["evidence"]["p_ball"], "infinity");
    let (code, out, _) = call(&["classify", "--param", &fixture("parabola.json"), "--mode", "arc", "--a", "-1", "--b", "1"]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = call(&["classify", "--param", &fixture("circle_affine.json"), "--mode", "arc", "--a", "-1", "--b", "1"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn usage_errors_exit_one() {
    let (code, _, err) = call(&["classify", "--param", "/nonexistent.json", "--mode", "full"]);
    assert_eq!(code, 1);
    assert_eq!(json(&err)["reason"], "io");
    assert_eq!(call(&["classify"]).0, 1);
    assert_eq!(call(&["classify", "--param", &fixture("line.json"), "--mode", "arc"]).0, 1);
    assert_eq!(call(&["frobnicate"]).0, 1);
}

#[test]
fn forced_witness_fails_check() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json");
    std::fs::write(&w, r#"{"schema": 1, "source": "interval", "vars": ["t"], "components": ["2*t", "t^2-1"]}"#).unwrap();
    let (code, out, _) = call(&["check", "--witness", &w.display().to_string(), "--param", &fixture("circle.json")]);
    assert_eq!(code, 2);
    let v = json(&out);
    assert_eq!(v["pass"], false);
    assert!(v["exact"]["failed"].is_string());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_polyimage");
    let ok = Command::new(bin).args(["classify", "--param", &fixture("line.json"), "--mode", "full"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["classify", "--param", &fixture("improper.json"), "--mode", "full"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let usage = Command::new(bin).args(["classify", "--bogus"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(1));
}
