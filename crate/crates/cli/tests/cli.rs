use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn specfac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specfac"))
        .args(args)
        .env_remove("SPECFAC_JOBS")
        .env_remove("SPECFAC_TOL_EIG")
        .env_remove("SPECFAC_TOL_ROOT")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    let text = String::from_utf8_lossy(&out.stdout);
    serde_json::from_str(text.trim()).unwrap_or_else(|e| panic!("{e}: {text}"))
}

#[test]
fn k2_is_its_own_factor() {
    let out = specfac(&["check", "--g6", "A_"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["has_factor"], true);
    assert_eq!(v["certificate"]["blocks"][0]["kind"], "P2");
}

#[test]
fn hub_family_has_hub_witness() {
    let out = specfac(&["check", "--family", "s=1,n1=17,i=2"]);
    assert_eq!(out.status.code(), Some(3));
    let v = json_of(&out);
    assert_eq!(v["has_factor"], false);
    assert_eq!(v["witness_S"], serde_json::json!([0]));
    assert_eq!(v["witness"]["isolated"], 2);
}

#[test]
fn claw_has_no_factor() {
    let out = specfac(&["check", "--g6", "Cs"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json_of(&out)["has_factor"], false);
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(specfac(&["check", "--g6", "A!"]).status.code(), Some(2));
    assert_eq!(specfac(&["check", "--family", "s=1,n1=2"]).status.code(), Some(2));
    assert_eq!(specfac(&["check", "--g6", "A_", "--family", "s=1,n1=0,i=1"]).status.code(), Some(2));
    assert_eq!(specfac(&["rho", "--g6", "A_", "--alpha", "1"]).status.code(), Some(2));
}

#[test]
fn oversize_check_needs_sampling() {
    let out = specfac(&["check", "--family", "s=1,n1=70,i=2"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--sample"));
    let out = specfac(&["check", "--family", "s=1,n1=70,i=2", "--sample", "4"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json_of(&out)["witness_S"], serde_json::json!([0]));
}

#[test]
fn rho_examples() {
    let v = json_of(&specfac(&["rho", "--family", "s=0,n1=10,i=0", "--alpha", "0.5"]));
    assert_eq!(v["rho_alpha"].as_f64().unwrap(), 9.0);
    assert_eq!((v["n"].as_u64(), v["m"].as_u64()), (Some(10), Some(45)));
    let v = json_of(&specfac(&["rho", "--family", "s=2,n1=0,i=4", "--alpha", "0"]));
    let want = (1.0 + 33f64.sqrt()) / 2.0;
    assert!((v["rho_alpha"].as_f64().unwrap() - want).abs() < 1e-12);
    let out = specfac(&["rho", "--g6", "B?", "--require-connected"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(specfac(&["rho", "--g6", "B?"]).status.code(), Some(0));
}

#[test]
fn tau_at_twenty() {
    let out = specfac(&["tau", "--n", "20", "--alpha", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert!((v["tau"].as_f64().unwrap() - 17.0066).abs() < 1e-4);
    assert_eq!(v["phi_coeffs"], serde_json::json!([1.0, -16.0, -19.0, 32.0]));
    assert_eq!(v["f_alpha"].as_f64(), Some(20.0));
    assert_eq!(v["extremal_attains"], true);
}

#[test]
fn tau_below_threshold_echoes_table() {
    let out = specfac(&["tau", "--n", "19", "--alpha", "0"]);
    assert_eq!(out.status.code(), Some(4));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("7/(1-alpha) + 3"), "{err}");
}

#[test]
fn tolerance_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_specfac"))
        .args(["verify", "--harness", "theorem1", "--n", "5"])
        .env("SPECFAC_TOL_EIG", "1e-7")
        .output()
        .unwrap();
    assert_eq!(json_of(&out)["notes"]["tolerances"]["eig"].as_f64(), Some(1e-7));
    // flags win over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_specfac"))
        .args(["--tol-eig", "1e-8", "verify", "--harness", "theorem1", "--n", "5"])
        .env("SPECFAC_TOL_EIG", "1e-7")
        .output()
        .unwrap();
    assert_eq!(json_of(&out)["notes"]["tolerances"]["eig"].as_f64(), Some(1e-8));
}

#[test]
fn verify_theorem1_reports_extremal() {
    let dir = tempfile::tempdir().unwrap();
    let out = specfac(&["verify", "--harness", "theorem1", "--n", "6", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["notes"]["n6"]["sharpness_witness"], "K2 v 4K1");
    let lines = std::fs::read_to_string(dir.path().join("theorem1.jsonl")).unwrap();
    for line in lines.lines() {
        let rec: Value = serde_json::from_str(line).unwrap();
        for key in ["harness", "params", "expected", "observed", "pass", "tol"] {
            assert!(rec.get(key).is_some(), "{key} missing in {line}");
        }
    }
    let csv = std::fs::read_to_string(dir.path().join("theorem1.csv")).unwrap();
    assert!(csv.starts_with("harness,checked,passed,failed,skipped,wall_ms"));
}

#[test]
fn verify_lemma_equivalence_to_eight() {
    let out = specfac(&["verify", "--harness", "lemma-equivalence", "--max-n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["notes"]["connected_counts"], serde_json::json!([1, 1, 2, 6, 21, 112, 853, 11117]));
}

#[test]
fn verify_failures_exit_three() {
    let out = specfac(&["verify", "--harness", "corollary3", "--n-list", "20"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json_of(&out)["pass"], false);
}

#[test]
fn verify_beyond_enumeration_is_capability_error() {
    assert_eq!(specfac(&["verify", "--harness", "theorem1", "--n", "12"]).status.code(), Some(4));
    assert_eq!(specfac(&["verify", "--harness", "theorem2", "--alpha", "0.9"]).status.code(), Some(4));
}

#[test]
fn batch_preserves_order() {
    let mut lines = Vec::new();
    for k in 2..40 {
        lines.push(if k % 3 == 0 { "bad".to_string() } else { specfac::graph6::encode(&specfac::graph::path(k).unwrap()).unwrap() });
    }
    let mut child = Command::new(env!("CARGO_BIN_EXE_specfac"))
        .args(["check", "--stdin", "--jobs", "4", "--no-certificate"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(lines.join("\n").as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let rows: Vec<Value> = String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), lines.len());
    for (k, (row, line)) in rows.iter().zip(&lines).enumerate() {
        assert_eq!(row["line"].as_u64(), Some(k as u64 + 1));
        assert_eq!(row["g6"].as_str(), Some(line.as_str()));
        if line == "bad" {
            assert!(row.get("error").is_some());
        } else {
            // paths P_k with k >= 2 all have factors
            assert_eq!(row["has_factor"], true, "{row}");
        }
    }
}

#[test]
fn batch_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.g6");
    std::fs::write(&path, "A_\nCs\n").unwrap();
    let out = specfac(&["check", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let rows: Vec<Value> = String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows[0]["has_factor"], true);
    assert_eq!(rows[1]["has_factor"], false);
}
