//! End-to-end tests of the command-line interface: output schemas, exit
//! codes and determinism.

use serde_json::Value;
use std::process::{Command, Output};

fn pointlike(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pointlike"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> Value {
    let out = pointlike(args);
    assert!(out.status.success(), "{args:?}: {:?}", out);
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn stdout_csv(args: &[&str]) -> Vec<String> {
    let out = pointlike(args);
    assert!(out.status.success(), "{args:?}: {:?}", out);
    String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(str::to_owned)
        .collect()
}

fn exit_code(args: &[&str]) -> (i32, String) {
    let out = pointlike(args);
    (
        out.status.code().expect("exit code"),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn smatrix_delta_at_unit_wavenumber() {
    let v = stdout_json(&["smatrix", "--family", "delta", "--param", "2", "--k", "1"]);
    assert_eq!(v["k"], 1.0);
    assert!((v["R"].as_f64().unwrap() - 0.5).abs() < 1e-14);
    assert!((v["T"].as_f64().unwrap() - 0.5).abs() < 1e-14);
    assert!(v["unitarity_residual"].as_f64().unwrap() <= 1e-12);
    assert!(v["generic_vs_closed_residual"].as_f64().unwrap() <= 1e-12);
    let a_plus_re = v["S"][0][0]["re"].as_f64().unwrap();
    let a_plus_im = v["S"][0][0]["im"].as_f64().unwrap();
    assert!((a_plus_re + 0.5).abs() < 1e-14 && (a_plus_im + 0.5).abs() < 1e-14);
}

#[test]
fn smatrix_flux_is_reflectionless() {
    let v = stdout_json(&["smatrix", "--family", "flux", "--param", "0.3", "--k", "1"]);
    assert_eq!(v["R"].as_f64().unwrap(), 0.0);
    assert!((v["T"].as_f64().unwrap() - 1.0).abs() < 1e-14);
}

#[test]
fn smatrix_zero_strength_is_the_free_line() {
    let v = stdout_json(&["smatrix", "--family", "delta", "--param", "0", "--k", "1"]);
    assert_eq!(v["S"][0][0]["re"].as_f64().unwrap(), 0.0);
    assert_eq!(v["S"][0][1]["re"].as_f64().unwrap(), 1.0);
    assert_eq!(v["S"][1][0]["re"].as_f64().unwrap(), 1.0);
    assert_eq!(v["S"][1][1]["re"].as_f64().unwrap(), 0.0);
}

#[test]
fn smatrix_json_round_trips() {
    let v = stdout_json(&[
        "smatrix",
        "--family",
        "delta-one",
        "--param",
        "1",
        "--k",
        "2",
    ]);
    let reencoded: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, reencoded);
    // scaling family: R = 16/25 independent of k
    assert!((v["R"].as_f64().unwrap() - 16.0 / 25.0).abs() < 1e-14);

    // parsing the emitted amplitudes recovers the library values bit-exactly
    let junction = pointlike::Canonical::DeltaOne { strength: 1.0 }
        .junction()
        .unwrap();
    let s = pointlike::smatrix(&junction, 2.0).unwrap();
    assert_eq!(v["S"][0][0]["re"].as_f64().unwrap(), s.a_plus().re);
    assert_eq!(v["S"][0][0]["im"].as_f64().unwrap(), s.a_plus().im);
    assert_eq!(v["S"][0][1]["re"].as_f64().unwrap(), s.b_plus().re);
    assert_eq!(v["S"][1][1]["re"].as_f64().unwrap(), s.a_minus().re);
}

#[test]
fn format_flags_cross_over() {
    // sweeps can emit json
    let v = stdout_json(&[
        "sweep", "--family", "delta", "--param", "2", "--kmin", "1", "--kmax", "2", "--steps", "3",
        "--format", "json",
    ]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!((rows[0]["R"].as_f64().unwrap() - 0.5).abs() < 1e-14);
    // scalar commands can emit csv
    let lines = stdout_csv(&["massjump", "--mu", "3", "--format", "csv"]);
    assert_eq!(lines[0], "mu,b,X2,delta_one_match_residual");
    let b: f64 = lines[1].split(',').nth(1).unwrap().parse().unwrap();
    assert!((b - 0.277350).abs() < 1e-6);
}

fn reflection_column(lines: &[String]) -> Vec<f64> {
    lines[1..]
        .iter()
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect()
}

#[test]
fn sweep_headers_and_monotonicity() {
    let lines = stdout_csv(&[
        "sweep", "--family", "delta", "--param", "2", "--kmin", "0.2", "--kmax", "5", "--steps",
        "9",
    ]);
    assert_eq!(lines[0], "k,R,T,unitarity_residual");
    assert_eq!(lines.len(), 10);
    let r = reflection_column(&lines);
    assert!(
        r.windows(2).all(|w| w[1] < w[0]),
        "delta R not decreasing: {r:?}"
    );

    let lines = stdout_csv(&[
        "sweep",
        "--family",
        "delta-prime",
        "--param",
        "2",
        "--kmin",
        "0.2",
        "--kmax",
        "5",
        "--steps",
        "9",
    ]);
    let r = reflection_column(&lines);
    assert!(
        r.windows(2).all(|w| w[1] > w[0]),
        "delta-prime R not increasing: {r:?}"
    );

    let lines = stdout_csv(&[
        "sweep",
        "--family",
        "delta-one",
        "--param",
        "1",
        "--kmin",
        "0.2",
        "--kmax",
        "5",
        "--steps",
        "9",
    ]);
    let r = reflection_column(&lines);
    assert!(
        r.iter().all(|&x| (x - 16.0 / 25.0).abs() < 1e-12),
        "delta-one R not constant: {r:?}"
    );
}

#[test]
fn regularize_deviations_decrease() {
    let lines = stdout_csv(&[
        "regularize",
        "--alpha",
        "0.25",
        "--epsilon",
        "1",
        "--widths",
        "1e-1,1e-2,1e-3",
    ]);
    assert_eq!(lines[0], "width,deviation,empirical_order");
    assert_eq!(lines.len(), 4);
    let deviations: Vec<f64> = lines[1..]
        .iter()
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert!(deviations.windows(2).all(|w| w[1] < w[0]));
    // first row has no order estimate
    assert!(lines[1].ends_with(','));
    assert!(!lines[2].ends_with(','));
}

#[test]
fn regularize_free_strip_and_quantized_flux() {
    let lines = stdout_csv(&[
        "regularize",
        "--alpha",
        "0",
        "--epsilon",
        "1",
        "--widths",
        "1e-2",
    ]);
    let deviation: f64 = lines[1].split(',').nth(1).unwrap().parse().unwrap();
    assert!(
        (deviation / 1e-2 - 1.0).abs() < 0.2,
        "deviation = {deviation}"
    );

    let lines = stdout_csv(&[
        "regularize",
        "--alpha",
        "1",
        "--epsilon",
        "1",
        "--widths",
        "1e-3",
    ]);
    let deviation: f64 = lines[1].split(',').nth(1).unwrap().parse().unwrap();
    assert!(deviation <= 2e-3, "deviation = {deviation}");
}

#[test]
fn massjump_values_and_errors() {
    let v = stdout_json(&["massjump", "--mu", "3"]);
    assert!((v["b"].as_f64().unwrap() - 0.277350).abs() < 1e-6);
    assert!(v["delta_one_match_residual"].as_f64().unwrap() <= 1e-10);
    assert!((v["M_massjump"][0][0]["re"].as_f64().unwrap() - 7.605551275463989).abs() < 1e-12);

    let v = stdout_json(&["massjump", "--mu", "1e6"]);
    assert!((v["X2"].as_f64().unwrap() - 2.0).abs() <= 1e-3);

    let (code, stderr) = exit_code(&["massjump", "--mu", "1"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("free parameter"), "stderr: {stderr}");

    // beyond double-precision depth the boundary matrices overflow and the
    // command reports it rather than emitting junk
    let (code, _) = exit_code(&["massjump", "--mu", "1e20"]);
    assert_eq!(code, 3);
}

#[test]
fn classify_families_and_raw_matrices() {
    let v = stdout_json(&["classify", "--family", "delta", "--param", "2"]);
    assert_eq!(v["label"], "pure-potential");
    assert_eq!(v["spin_pairing_ok"], false);
    assert_eq!(v["time_reversal_ok"], true);

    let v = stdout_json(&["classify", "--family", "flux", "--param", "0.3"]);
    assert_eq!(v["label"], "magnetic");

    // raw identity counts as free
    let v = stdout_json(&["classify", "--matrix", "1,0,0,0,0,0,1,0"]);
    assert_eq!(v["label"], "free");

    // a chart point mixing the strata is reported, not mislabeled
    let (code, stderr) = exit_code(&["classify", "--matrix", "1,0,1,0,1,0,2,0"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("canonical"), "stderr: {stderr}");
}

#[test]
fn table_is_live_and_deterministic() {
    let v = stdout_json(&["table"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0]["group"], "(1,0)");
    assert_eq!(rows[0]["label"], "δ-potential");
    assert_eq!(rows[2]["group"], "U(1)");
    assert_eq!(rows[2]["class"], "magnetic");
    assert_eq!(rows[3]["group"], "R+ x Z");
    assert_eq!(rows[3]["label"], "magnetic & mass jump");
    let pairing: Vec<bool> = rows
        .iter()
        .map(|r| r["spin_pairing"].as_bool().unwrap())
        .collect();
    assert_eq!(pairing, vec![false, false, true, true]);

    let first = pointlike(&["table"]);
    let second = pointlike(&["table"]);
    assert_eq!(first.stdout, second.stdout);

    let first = pointlike(&[
        "sweep", "--family", "delta", "--param", "2", "--kmin", "0.2", "--kmax", "5", "--steps",
        "20",
    ]);
    let second = pointlike(&[
        "sweep", "--family", "delta", "--param", "2", "--kmin", "0.2", "--kmax", "5", "--steps",
        "20",
    ]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn output_flag_writes_the_file() {
    let path = std::env::temp_dir().join("pointlike-cli-test-table.json");
    let _ = std::fs::remove_file(&path);
    let out = pointlike(&["table", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    let v: Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn usage_errors_exit_with_two() {
    let (code, _) = exit_code(&["smatrix", "--family", "delta", "--k", "1"]);
    assert_eq!(code, 2);
    let (code, stderr) = exit_code(&[
        "smatrix", "--family", "raw", "--matrix", "1,0,0", "--k", "1",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("8"), "stderr: {stderr}");
    let (code, _) = exit_code(&["classify"]);
    assert_eq!(code, 2);
    let (code, _) = exit_code(&[
        "sweep", "--family", "delta", "--param", "1", "--kmin", "2", "--kmax", "1", "--steps", "5",
    ]);
    assert_eq!(code, 2);
    let (code, _) = exit_code(&["nonsense"]);
    assert_eq!(code, 2);
}

#[test]
fn domain_errors_exit_with_three() {
    // non-symplectic raw matrix
    let (code, stderr) = exit_code(&[
        "smatrix",
        "--family",
        "raw",
        "--matrix",
        "2,0,0,0,0,0,1,0",
        "--k",
        "1",
    ]);
    assert_eq!(code, 3);
    assert!(stderr.contains("symplectic"), "stderr: {stderr}");
    // decoupling strength of the scaling family
    let (code, _) = exit_code(&[
        "smatrix",
        "--family",
        "delta-one",
        "--param",
        "2",
        "--k",
        "1",
    ]);
    assert_eq!(code, 3);
    // resolution guard of the integrator
    let (code, stderr) = exit_code(&[
        "regularize",
        "--alpha",
        "0.1",
        "--epsilon",
        "1",
        "--widths",
        "1e-2",
        "--steps",
        "10",
    ]);
    assert_eq!(code, 3);
    assert!(stderr.contains("resolution"), "stderr: {stderr}");
}
