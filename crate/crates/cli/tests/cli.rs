//! Binary-level behavior: output formats, exit codes, config merging, and
//! byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn steklov() -> Command {
    Command::new(env!("CARGO_BIN_EXE_steklov"))
}

fn run(args: &[&str]) -> Output {
    steklov().args(args).output().expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn sigma1_prints_closed_form_value() {
    let out = run(&["sigma1", "--space", "euclidean", "--dim", "3", "--r1", "1", "--r2", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout_str(&out), "5.0000000000000000e-1\n");
}

#[test]
fn unknown_flags_exit_one_with_usage() {
    let out = run(&["sigma1", "--space", "euclidean", "--dim", "3", "--frobnicate", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.to_lowercase().contains("usage"), "stderr: {err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn precondition_violations_exit_one() {
    // R2 beyond half the injectivity radius of the sphere.
    let out = run(&["sigma1", "--space", "sphere", "--dim", "2", "--r1", "0.3", "--r2", "1.6"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["sigma1", "--space", "nosuch", "--dim", "3", "--r1", "1", "--r2", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["sigma1", "--space", "euclidean", "--dim", "3", "--r1", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("--r2"), "stderr should name the missing flag: {err}");
}

#[test]
fn space_names_are_case_insensitive() {
    let a = run(&["sigma1", "--space", "SPHERE", "--dim", "2", "--r1", "0.3", "--r2", "1.2"]);
    let b = run(&["sigma1", "--space", "sphere", "--dim", "2", "--r1", "0.3", "--r2", "1.2"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn sweep_csv_shape_and_flags() {
    let out = run(&[
        "sweep", "--space", "sphere", "--dim", "2", "--r1", "0.3", "--r2", "1.2", "--steps", "5",
    ]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(
        lines[0],
        "space,m,k,R1,R2,d,N,D,D_alt,Q,sigma1_concentric,newton_residual,quad_err"
    );
    assert!(text.ends_with('\n'));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("quotient_below_concentric=true"), "stderr: {err}");
}

#[test]
fn sweep_json_parses_equal_to_csv() {
    let args_common = [
        "--space", "euclidean", "--dim", "3", "--r1", "1", "--r2", "2", "--steps", "4",
    ];
    let csv = run(&[&["sweep"], &args_common[..]].concat());
    let json = run(&[&["sweep", "--json"], &args_common[..]].concat());
    assert!(csv.status.success() && json.status.success());
    let csv = stdout_str(&csv);
    let json = stdout_str(&json);
    let csv_q: Vec<f64> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(9).unwrap().parse().unwrap())
        .collect();
    let json_q: Vec<f64> = json
        .lines()
        .filter(|l| l.contains("\"Q\""))
        .map(|l| {
            let tail = l.split("\"Q\": ").nth(1).unwrap();
            tail.split(',').next().unwrap().parse().unwrap()
        })
        .collect();
    assert_eq!(csv_q.len(), 4);
    assert_eq!(csv_q, json_q);
}

#[test]
fn config_file_supplies_values_and_flags_win() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join(format!("steklov-cli-test-{}.conf", std::process::id()));
    std::fs::write(&path, "space = euclidean\ndim = 3\nr1 = 1.0\nr2 = 2.0\n").unwrap();

    let from_config = run(&["sigma1", "--config", path.to_str().unwrap()]);
    assert!(from_config.status.success());
    assert_eq!(stdout_str(&from_config), "5.0000000000000000e-1\n");

    // The command line overrides r2 = 2 with r2 = 4; sigma drops to 1/12.
    let overridden = run(&["sigma1", "--config", path.to_str().unwrap(), "--r2", "4.0"]);
    assert!(overridden.status.success());
    let sigma: f64 = stdout_str(&overridden).trim().parse().unwrap();
    assert!((sigma - 1.0 / 12.0).abs() < 1e-12);

    std::fs::remove_file(&path).ok();
}

#[test]
fn mps_writes_scan_trace() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join(format!("steklov-trace-{}.csv", std::process::id()));
    let out = run(&[
        "mps", "--r1", "1", "--r2", "2", "--d", "0", "--basis", "8", "--scan", "60", "--trace",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let sigma: f64 = stdout_str(&out).trim().parse().unwrap();
    assert!((sigma - 1.0 / (2.0 * 2.0_f64.ln())).abs() < 1e-5);
    let trace = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = trace.lines().collect();
    assert_eq!(lines[0], "sigma,min_singular_value");
    assert_eq!(lines.len(), 61);
    std::fs::remove_file(&path).ok();
}

#[test]
fn repeated_invocations_are_byte_identical() {
    let args = [
        "sweep", "--space", "rh", "--dim", "3", "--r1", "0.5", "--r2", "1.5", "--steps", "4",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
}
