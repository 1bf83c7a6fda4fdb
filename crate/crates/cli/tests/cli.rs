use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logflc")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = run(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["betti", "--space", "mbar", "--n", "5"]).status.code(), Some(0));
    // two primes cannot determine and confirm a degree-3 count
    assert_eq!(run(&["betti", "--space", "open", "--n", "6", "--primes", "5,7"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["betti", "--space", "open", "--n", "5", "--primes", "5,7,9"]).status.code(), Some(2));
    assert_eq!(run(&["bv", "normal-form", "--expr", "[x1,"]).status.code(), Some(2));
}

#[test]
fn json_reports_carry_a_format_tag() {
    let v = json(&["betti", "--space", "mbar", "--n", "5"]);
    assert_eq!(v["format"], "logflc-report/1");
    assert_eq!(v["command"], "betti");
    assert_eq!(v["pass"], true);
    assert_eq!(v["result"]["coefficients"], serde_json::json!([1, 0, 5, 0, 1]));
}

#[test]
fn output_is_deterministic() {
    for args in [&["purity", "--n", "5"][..], &["strata", "--n", "6", "--list"], &["bv", "dims", "--n", "4"]] {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn purity_table_shows_row_identities() {
    let out = run(&["purity", "--n", "5"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("15 − 10 + 1 = 6"), "{text}");
}

#[test]
fn bv_compose_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", r#"{"arity": 2, "expr": "[x1,x2]"}"#);
    let b = write(dir.path(), "b.json", r#"{"arity": 2, "expr": "x1*x2"}"#);
    let v = json(&["bv", "compose", "--expr-file", &a, "--slot", "1", "--with", &b]);
    assert_eq!(v["result"]["arity"], 3);
    let expr = v["result"]["expr"].as_str().unwrap();
    assert!(expr.contains("[x1,x3]*x2") || expr.contains("x2*[x1,x3]") || expr.contains("x1*[x2,x3]"), "{expr}");
    let bad = write(dir.path(), "bad.json", r#"{"expr": "x1"}"#);
    assert_eq!(run(&["bv", "compose", "--expr-file", &bad, "--slot", "1", "--with", &b]).status.code(), Some(2));
    assert_eq!(run(&["bv", "compose", "--expr-file", &a, "--slot", "3", "--with", &b]).status.code(), Some(2));
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let path = path.to_str().unwrap();
    let out = run(&["--format", "json", "--out", path, "acyclic", "--space", "p1", "--points", "4"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read(path).unwrap();
    let direct = run(&["--format", "json", "acyclic", "--space", "p1", "--points", "4"]);
    assert_eq!(written, direct.stdout);
}

#[test]
fn formality_report_passes() {
    let v = json(&["formality", "report", "--n", "3"]);
    assert_eq!(v["pass"], true);
}
