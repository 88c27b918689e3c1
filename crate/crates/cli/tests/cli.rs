//! End-to-end tests of the `toda` binary: grammar, file formats, exit codes
//! and byte-determinism of the exact outputs.

use std::process::{Command, Output};

fn toda(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toda"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn painleve_reports_zero_residual() {
    let out = toda(&["painleve", "--N", "1"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["residual_zero"], serde_json::json!(true));
    assert_eq!(doc["H_N1"][3], serde_json::json!("1/1"));
    // exact output is byte-identical across runs
    let again = toda(&["painleve", "--N", "1"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn darboux_roots_match_explicit_zeros() {
    let out = toda(&["darboux", "--N", "3", "--t", "0", "--roots"]);
    let doc = stdout_json(&out);
    let roots: Vec<f64> = serde_json::from_value(doc["roots"].clone()).unwrap();
    for (r, e) in roots.iter().zip([-4.0, 0.0, 4.0]) {
        assert!((r - e).abs() < 1e-8);
    }
    // exact coefficient block is deterministic
    let a = toda(&["darboux", "--N", "4"]);
    let b = toda(&["darboux", "--N", "4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn coeffs_exact_centrifugal() {
    let out = toda(&[
        "coeffs",
        "--potential",
        "centrifugal:alpha=1",
        "--t0",
        "1",
        "--order",
        "14",
        "--n",
        "2",
        "--exact",
    ]);
    let doc = stdout_json(&out);
    assert_eq!(doc["u"]["1"], serde_json::json!("3/1"));
    assert_eq!(doc["b"]["1"], serde_json::json!("-4/1"));
}

#[test]
fn spectrum_and_inverse_round_trip_via_files() {
    let dir = tempfile::tempdir().unwrap();
    let mpath = dir.path().join("m.json");
    std::fs::write(&mpath, r#"{"b":[0,0,0],"u":[2,2]}"#).unwrap();
    let out = toda(&["spectrum", "--file", mpath.to_str().unwrap()]);
    let sd = stdout_json(&out);
    let spath = dir.path().join("sd.json");
    std::fs::write(&spath, sd.to_string()).unwrap();
    let out = toda(&["inverse", "--file", spath.to_str().unwrap()]);
    let m = stdout_json(&out);
    let b: Vec<f64> = serde_json::from_value(m["b"].clone()).unwrap();
    let u: Vec<f64> = serde_json::from_value(m["u"].clone()).unwrap();
    for v in b {
        assert!(v.abs() < 1e-9);
    }
    for v in u {
        assert!((v - 2.0).abs() < 1e-9);
    }
}

#[test]
fn inverse_accepts_tau_form() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tau.json");
    std::fs::write(&path, r#"{"x_half":[2.0],"tau":[1.0],"parity":"even"}"#).unwrap();
    let out = toda(&["inverse", "--file", path.to_str().unwrap()]);
    let m = stdout_json(&out);
    let u: Vec<f64> = serde_json::from_value(m["u"].clone()).unwrap();
    assert!((u[0] - 4.0).abs() < 1e-9);
}

#[test]
fn simulate_writes_csv_and_diagnostics() {
    let dir = tempfile::tempdir().unwrap();
    let init = dir.path().join("init.json");
    std::fs::write(
        &init,
        r#"{"t":0.0,"closure":"molecule","b":[0,0,0],"u":[2,2]}"#,
    )
    .unwrap();
    let csv = dir.path().join("traj.csv");
    let out = toda(&[
        "simulate",
        "--init",
        init.to_str().unwrap(),
        "--t-end",
        "1",
        "--tol",
        "1e-10",
        "--out",
        csv.to_str().unwrap(),
        "--samples",
        "11",
    ]);
    let doc = stdout_json(&out);
    assert!(doc["hamiltonian_drift"].as_f64().unwrap() < 1e-8);
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("t,b_0,b_1,b_2,u_0,u_1"));
    assert!(header.contains("energy"));
    assert_eq!(lines.count(), 11);
}

#[test]
fn moments_exact_linear_track() {
    let out = toda(&[
        "moments",
        "--potential",
        "linear",
        "--t0",
        "0",
        "--order",
        "8",
        "--n",
        "4",
        "--exact",
    ]);
    let doc = stdout_json(&out);
    // c_3 = 4t at t0 = 0: jet coefficients [0, 4, 0, ...]
    assert_eq!(doc["c"]["3"][0], serde_json::json!("0/1"));
    assert_eq!(doc["c"]["3"][1], serde_json::json!("4/1"));
    // under-specified jet order is a validation error
    let out = toda(&[
        "moments",
        "--potential",
        "linear",
        "--t0",
        "0",
        "--order",
        "3",
        "--n",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn kdv_identifies_densities() {
    let out = toda(&["kdv", "--potential", "sech2:N=1", "--t0", "0.2", "--m", "6"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["identified"], serde_json::json!(true));
}

#[test]
fn verify_suite_exit_codes() {
    let out = toda(&["verify", "--suite", "darboux"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS criterion 1"));
    let out = toda(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn validation_errors_exit_one() {
    let out = toda(&[
        "coeffs",
        "--potential",
        "gaussian:w=1",
        "--t0",
        "0",
        "--order",
        "8",
        "--n",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    // pole of the centrifugal potential at t0 = 0
    let out = toda(&[
        "coeffs",
        "--potential",
        "centrifugal:alpha=1",
        "--t0",
        "0",
        "--order",
        "8",
        "--n",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
}
