//! End-to-end tests of the command-line interface: exit codes, envelope
//! shape, reproducibility.

use std::process::{Command, Output};

fn fejerstab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fejerstab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn coeffs_n2_matches_known_values() {
    let out = fejerstab(&["coeffs", "--n", "2"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["command"], "coeffs");
    assert_eq!(doc["params"]["n"], 2);
    let a0 = doc["result"]["a0"].as_array().unwrap();
    assert!((a0[0].as_f64().unwrap() - 0.666666666667).abs() < 1e-12);
    assert!((a0[1].as_f64().unwrap() - 0.333333333333).abs() < 1e-12);
    assert!((doc["result"]["extremal_value"].as_f64().unwrap() + 0.333333333333).abs() < 1e-12);
}

#[test]
fn coeffs_rejects_zero_n() {
    let out = fejerstab(&["coeffs", "--n", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn schur_optimal_n2() {
    let out = fejerstab(&["schur", "--optimal-n", "2"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert!((doc["result"]["k1"].as_f64().unwrap() - 1.0).abs() < 1e-6);
    assert!((doc["result"]["k2"].as_f64().unwrap() - 3.0).abs() < 1e-6);
    assert!((doc["result"]["phi"].as_f64().unwrap() - 4.0).abs() < 1e-6);
}

#[test]
fn schur_explicit_n1() {
    let out = fejerstab(&["schur", "--coeffs", "1"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert!((doc["result"]["k1"].as_f64().unwrap() - 1.0).abs() < 1e-6);
    assert!((doc["result"]["k2"].as_f64().unwrap() - 1.0).abs() < 1e-6);
}

#[test]
fn schur_rejects_non_normalized() {
    let out = fejerstab(&["schur", "--coeffs", "0.5,0.4"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("9.000000e-1"), "message echoes the measured sum: {err}");
}

#[test]
fn synthesize_example() {
    let out = fejerstab(&["synthesize", "--mu-star", "2"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["result"]["depth"], 1);
    let eps = doc["result"]["eps"].as_array().unwrap();
    assert!((eps[0].as_f64().unwrap() + 0.333333333333).abs() < 1e-12);
    assert!((eps[1].as_f64().unwrap() - 0.333333333333).abs() < 1e-12);
}

#[test]
fn synthesize_boundary_and_error() {
    let out = fejerstab(&["synthesize", "--mu-star", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["result"]["depth"], 2);

    let out = fejerstab(&["synthesize", "--mu-star", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn simulate_auto_control_converges() {
    let out = fejerstab(&[
        "simulate", "--map", "logistic", "--h", "3.8", "--x0", "0.76", "--steps", "1000",
        "--control", "auto",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["result"]["converged"], true);
    assert!((doc["result"]["target"].as_f64().unwrap() - 0.736842105263).abs() < 1e-9);
}

#[test]
fn simulate_open_loop_does_not_converge() {
    let out = fejerstab(&[
        "simulate", "--map", "logistic", "--h", "3.8", "--x0", "0.76", "--steps", "1000",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["result"]["converged"], false);
}

#[test]
fn simulate_stable_open_loop_csv() {
    let out = fejerstab(&[
        "simulate", "--map", "logistic", "--h", "2.5", "--x0", "0.3", "--steps", "200",
        "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# command=simulate"));
    assert_eq!(lines.next().unwrap(), "step,x,deviation");
    assert!(text.contains("# converged=true"));
    assert!(text.contains("# target=0.6"));
    assert!(!text.contains('\r'));
}

#[test]
fn sweep_produces_rows_and_validates_range() {
    let out = fejerstab(&[
        "sweep", "--h-min", "2.8", "--h-max", "3.2", "--h-steps", "5", "--transient", "50",
        "--keep", "4", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    // header + 5 * 4 data rows + echo line
    assert_eq!(text.lines().filter(|l| !l.starts_with('#') ).count(), 1 + 20);

    let out = fejerstab(&["sweep", "--h-min", "3", "--h-max", "2", "--h-steps", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn byte_identical_reruns() {
    let args = [
        "verify", "--n", "2", "--samples", "2000", "--polish-passes", "5", "--seed", "7",
    ];
    let a = fejerstab(&args);
    let b = fejerstab(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_reports_four_checks() {
    let out = fejerstab(&[
        "verify", "--n", "1", "--samples", "1000", "--polish-passes", "2",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["result"]["checks"].as_array().unwrap().len(), 4);
    assert_eq!(doc["result"]["all_pass"], true);

    let out = fejerstab(&["verify", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2));
}
