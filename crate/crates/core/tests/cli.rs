use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_polarforms"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run_with_report(args: &[&str], dir: &Path, file: &str) -> (Output, Value) {
    let path = dir.join(file);
    let out = bin()
        .args(args)
        .arg("--report")
        .arg(&path)
        .output()
        .expect("binary runs");
    let report = std::fs::read_to_string(&path)
        .map(|t| serde_json::from_str(&t).unwrap())
        .unwrap_or(Value::Null);
    (out, report)
}

#[test]
fn group_report_b2() {
    let dir = tempfile::tempdir().unwrap();
    let (out, r) = run_with_report(&["group", "--builtin", "B2"], dir.path(), "out.json");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(r["result"]["order"], 8);
    assert_eq!(r["result"]["num_reflections"], 4);
    assert_eq!(r["result"]["census"], serde_json::json!([1, 4, 3]));
    assert_eq!(r["inputs"]["builtin"], "B2");
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn decompose_s2_volume_form() {
    let out = bin()
        .args(["decompose", "--group", "S2", "--form", "(x1−x2) dx1^dx2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["result"]["coefficients"][0]["coefficient"], "-1/2");
}

#[test]
fn counterexample_z4() {
    let out = bin().args(["counterexample", "--builtin", "Z4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["result"]["conclusion"], "volume form not in pullback image");
}

#[test]
fn parse_errors_exit_two_with_position() {
    let out = bin()
        .args(["decompose", "--group", "S2", "--form", "x1 + * x2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 1, column"), "{err}");
}

#[test]
fn failed_check_exits_one() {
    let out = bin()
        .args(["counterexample", "--builtin", "Z4", "--generators", "x^2 + y^2; x", "--quiet"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
}

#[test]
fn files_and_builtins_agree() {
    let dir = tempfile::tempdir().unwrap();
    let b2 = data("b2.json");
    let (_, a) = run_with_report(&["invariants", "--group", b2.to_str().unwrap()], dir.path(), "a.json");
    let (_, b) = run_with_report(&["invariants", "--builtin", "B2"], dir.path(), "b.json");
    assert_eq!(a["result"]["generators"], b["result"]["generators"]);
    assert_eq!(a["result"]["constant"], b["result"]["constant"]);
}

#[test]
fn lift_from_action_file() {
    let action = data("so3_sym0.json");
    let out = bin()
        .args(["lift", "--action", action.to_str().unwrap(), "--form", "x1 dx1 + 3*x2 dx2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["result"]["lifted"], "(x1) dx1 + (3*x2) dx2 + (x3) dx3 + (x4) dx4 + (x5) dx5");
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["cartan", "--action", "SO2", "--samples", "5", "--seed", "11"];
    run_with_report(&args, dir.path(), "one.json");
    run_with_report(&args, dir.path(), "two.json");
    let one = std::fs::read(dir.path().join("one.json")).unwrap();
    let two = std::fs::read(dir.path().join("two.json")).unwrap();
    assert_eq!(one, two);
}

#[test]
fn form_read_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("form.txt");
    std::fs::write(&f, "x1 dx1 + x2 dx2\n").unwrap();
    let out = bin()
        .args(["cartan", "--action", "SO2", "--samples", "1", "--form", f.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["result"]["basic"], true);
}
