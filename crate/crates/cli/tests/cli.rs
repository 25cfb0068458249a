//! End-to-end runs of the `semidirect` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_semidirect"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.json"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn json_report(file: &Path) -> (Value, i32) {
    let out = run(&["run", path_str(file), "--format", "json"]);
    (serde_json::from_slice(&out.stdout).unwrap(), out.status.code().unwrap())
}

const SCALARS: &str = r#"{"name": "Q", "dim": 1, "mult": [{"i": 0, "j": 0, "k": 0, "c": "1"}]}"#;

#[test]
fn version_and_usage() {
    let out = run(&["--version"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("semidirect "));
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["run"]).status.code(), Some(1));
    assert_eq!(run(&["selftest", "--cases", "many"]).status.code(), Some(1));
}

#[test]
fn validate_exit_codes() {
    let dir = TempDir::new().unwrap();
    assert_eq!(run(&["validate", path_str(&fixture("m2"))]).status.code(), Some(0));
    assert_eq!(run(&["validate", path_str(&dir.path().join("missing.json"))]).status.code(), Some(1));
    let malformed = write(&dir, "malformed.json", "{\"algebras\": [");
    assert_eq!(run(&["validate", path_str(&malformed)]).status.code(), Some(1));
    let bad_rational = write(
        &dir,
        "rational.json",
        r#"{"algebras": [{"name": "Q", "dim": 1, "mult": [{"i": 0, "j": 0, "k": 0, "c": "1/0"}]}]}"#,
    );
    assert_eq!(run(&["validate", path_str(&bad_rational)]).status.code(), Some(1));
    let nonassociative = write(
        &dir,
        "nonassoc.json",
        r#"{"algebras": [{"name": "bad", "dim": 2, "mult": [
            {"i": 0, "j": 0, "k": 1, "c": "1"}, {"i": 0, "j": 1, "k": 0, "c": "1"}]}]}"#,
    );
    let out = run(&["validate", path_str(&nonassociative)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("associativity"), "{out:?}");
    let bad_module = write(
        &dir,
        "module.json",
        &format!(
            r#"{{"algebras": [{SCALARS}],
                "modules": [{{"name": "M", "over": "Q", "dim": 1,
                             "left": [{{"i": 0, "p": 0, "q": 0, "c": "2"}}]}}]}}"#
        ),
    );
    assert_eq!(run(&["validate", path_str(&bad_module)]).status.code(), Some(2));
}

#[test]
fn json_reports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    for name in ["t-q-q", "nonzero-tau1", "m2"] {
        let a = dir.path().join(format!("{name}-a.json"));
        let b = dir.path().join(format!("{name}-b.json"));
        for out in [&a, &b] {
            let status = run(&["run", path_str(&fixture(name)), "--format", "json", "--out", path_str(out)]).status;
            assert_eq!(status.code(), Some(0), "{name}");
        }
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap(), "{name}");
        let text = run(&["run", path_str(&fixture(name))]);
        assert_eq!(text.stdout, run(&["run", path_str(&fixture(name))]).stdout);
    }
}

#[test]
fn h1_of_m2_is_zero() {
    let (report, code) = json_report(&fixture("m2"));
    assert_eq!(code, 0);
    let h1 = report["jobs"].as_array().unwrap().iter().find(|j| j["job"] == "h1 M2").unwrap();
    assert_eq!(h1["result"]["h1_dim"], 0);
    assert_eq!(h1["result"]["z1_dim"], 3);
    // Z¹(M2) = N¹(M2): both bases are the same rref rows of string rationals.
    let z1 = report["jobs"][1]["result"]["basis"].clone();
    let n1 = report["jobs"][2]["result"]["basis"].clone();
    assert_eq!(z1, n1);
    assert!(z1[0][0].is_string());
}

#[test]
fn dual_number_lau_product_verifies_the_c_plus_i_quotient() {
    let (report, code) = json_report(&fixture("dual-lau"));
    assert_eq!(code, 0);
    let job = report["jobs"].as_array().unwrap().iter().find(|j| j["job"] == "verify 4.4 P").unwrap();
    assert_eq!(job["result"]["verdict"], "verified");
    assert_eq!(job["result"]["lhs_dim"], 1);
    assert_eq!(job["result"]["rhs_dim"], 1);
}

#[test]
fn failed_hypotheses_are_named() {
    // Every quotient theorem assumes τ1 = 0 for all derivations; this product violates it.
    let dir = TempDir::new().unwrap();
    let body = std::fs::read_to_string(fixture("nonzero-tau1"))
        .unwrap()
        .replace(r#""id": "3.1""#, r#""id": "4.2""#);
    let (report, code) = json_report(&write(&dir, "gated.json", &body));
    assert_eq!(code, 0);
    let job = report["jobs"].as_array().unwrap().iter().find(|j| j["job"] == "verify 4.2 P").unwrap();
    assert_eq!(job["result"]["verdict"], "hypotheses-not-met");
    let failed: Vec<&Value> = job["result"]["hypotheses"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|h| h["holds"] == false)
        .collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|h| h["name"].as_str().is_some_and(|n| !n.is_empty())));
}

#[test]
fn job_errors_are_collected() {
    let dir = TempDir::new().unwrap();
    let body = format!(
        r#"{{"algebras": [{SCALARS}],
            "jobs": [
              {{"cmd": "build", "kind": "alpha", "args": ["Q", "Q", [["2"]]], "as": "P"}},
              {{"cmd": "h1", "args": ["Q"]}},
              {{"cmd": "verify", "id": "5.4", "args": ["P"]}},
              {{"cmd": "inner-witness", "args": ["Q", [["1"]]]}}
            ]}}"#
    );
    let file = write(&dir, "errors.json", &body);
    let (report, code) = json_report(&file);
    assert_eq!(code, 2);
    let jobs = report["jobs"].as_array().unwrap();
    let status: Vec<&str> = jobs.iter().map(|j| j["status"].as_str().unwrap()).collect();
    assert_eq!(status, ["error", "ok", "error", "error"]);
    assert!(jobs[0]["error"].as_str().unwrap().contains("homomorphism"));
    assert_eq!(jobs[1]["result"]["h1_dim"], 0);
    assert_eq!(report["summary"]["errors"], 3);

    let text = run(&["run", path_str(&file)]);
    assert_eq!(text.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&text.stdout).contains("summary: 4 jobs, 3 errors, 0 MISMATCH"));
}

#[test]
fn unresolved_references_fail_validation() {
    let dir = TempDir::new().unwrap();
    let file = write(
        &dir,
        "unresolved.json",
        &format!(r#"{{"algebras": [{SCALARS}], "jobs": [{{"cmd": "verify", "id": "4.1", "args": ["P"]}}]}}"#),
    );
    assert_eq!(run(&["run", path_str(&file)]).status.code(), Some(2));
    let unknown_id = write(
        &dir,
        "unknown-id.json",
        &format!(r#"{{"algebras": [{SCALARS}], "jobs": [{{"cmd": "verify", "id": "9.9", "args": ["Q"]}}]}}"#),
    );
    assert_eq!(run(&["run", path_str(&unknown_id)]).status.code(), Some(1));
}

#[test]
fn every_fixture_runs_cleanly() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let (report, code) = json_report(&path);
        assert_eq!(code, 0, "{}", path.display());
        assert_eq!(report["summary"]["errors"], 0, "{}", path.display());
        assert_eq!(report["summary"]["mismatches"], 0, "{}", path.display());
    }
}

#[test]
fn selftest_command() {
    let a = run(&["selftest", "--seed", "7", "--max-dim", "2", "--cases", "12"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stdout));
    assert!(String::from_utf8_lossy(&a.stdout).contains("result: PASS"));
    let b = run(&["selftest", "--seed", "7", "--max-dim", "2", "--cases", "12"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(run(&["selftest", "--cases", "0"]).status.code(), Some(1));
    assert_eq!(run(&["selftest", "--max-dim", "0"]).status.code(), Some(1));
}
