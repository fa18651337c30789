use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenarios").join(name)
}

fn wdwalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wdwalk")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn steinberg_cohomology() {
    let out = wdwalk(&["cohomology", "--scenario", path(&fixture("steinberg_gl2.json"))]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["outcome"], "ok");
    assert_eq!(v["cohomology"], json!({"gamma": 4, "h0": 1, "h1": 1, "h2": 0}));
}

#[test]
fn obstructed_cohomology_exits_zero() {
    let out = wdwalk(&["cohomology", "--scenario", path(&fixture("obstructed_gl3.json")), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["outcome"], "obstructed");
    assert_eq!(v["cohomology"]["h2"], 1);
}

#[test]
fn unobstruct_gl3_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let out = wdwalk(&["unobstruct", "--scenario", path(&fixture("obstructed_gl3.json")), "--out", path(&cert)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let c: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(c["final_phi"], json!([["2", "0", "0"], ["0", "8", "0"], ["0", "0", "1/4"]]));

    let out = wdwalk(&["verify", "--certificate", path(&cert)]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["details"]["valid"], true);
}

#[test]
fn unobstruct_embeds_certificate_without_out() {
    let out = wdwalk(&["unobstruct", "--scenario", path(&fixture("quarter_gl2.json"))]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["certificate"]["final_phi"], json!([["1/2", "0"], ["0", "1/2"]]));
}

#[test]
fn unobstruct_with_bad_candidates_fails() {
    let out = wdwalk(&["unobstruct", "--scenario", path(&fixture("quarter_gl2.json")), "--t-candidates", "1,-1"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["outcome"], "walk_failed");
    assert!(v["reason"].as_str().unwrap().starts_with("TrialExhausted"));
}

#[test]
fn validate_broken_condition2() {
    let out = wdwalk(&["validate", "--scenario", path(&fixture("broken_condition2.json"))]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["outcome"], "invalid");
    assert_eq!(v["details"]["violations"][0]["kind"], "Condition2");
}

#[test]
fn tangent_dimension() {
    let out = wdwalk(&["tangent", "--scenario", path(&fixture("obstructed_gl3.json"))]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["details"]["dimension"], 10);
    assert_eq!(v["details"]["basis"].as_array().unwrap().len(), 10);
}

#[test]
fn tampered_certificate_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    assert!(wdwalk(&["unobstruct", "--scenario", path(&fixture("quarter_gl2.json")), "--out", path(&cert)])
        .status
        .success());
    let mut c: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    c["final_phi"] = json!([["1", "0"], ["0", "1/4"]]);
    std::fs::write(&cert, serde_json::to_string(&c).unwrap()).unwrap();
    let out = wdwalk(&["verify", "--certificate", path(&cert)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["details"]["valid"], false);
}

#[test]
fn generate_is_deterministic_and_valid() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("s.json");
    let a = wdwalk(&["generate", "--seed", "7", "--n", "3", "--q", "9", "--template", "cyclic-2"]);
    assert!(a.status.success());
    let b = wdwalk(&["generate", "--seed", "7", "--n", "3", "--q", "9", "--template", "cyclic-2", "--out", path(&file)]);
    assert!(b.status.success());
    assert_eq!(a.stdout, std::fs::read(&file).unwrap());
    let out = wdwalk(&["validate", "--scenario", path(&file)]);
    assert!(out.status.success());
}

#[test]
fn unreadable_input_is_an_error_object() {
    let out = wdwalk(&["cohomology", "--scenario", "/nonexistent/scenario.json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["error"]["kind"], "Io");
}

#[test]
fn infeasible_generation_is_an_error_object() {
    let out = wdwalk(&["generate", "--seed", "1", "--n", "1", "--template", "cyclic-3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["error"]["kind"], "GenerationInfeasible");
}
