//! End-to-end checks of the command-line interface.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_scaling-lab"))
}

#[test]
fn simulate_emits_an_estimation_result() {
    let out = bin()
        .args([
            "simulate", "--protocol", "njz", "--n", "32", "--t", "1.0", "--gamma",
            "0.049087385212340526", // quarter fringe for n=32
            "--nu", "2000", "--seed", "7", "--repeats", "150",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["delta_gamma"].as_f64().unwrap() > 0.0);
    assert_eq!(v["gamma_est_samples"].as_array().unwrap().len(), 150);
}

#[test]
fn sweep_csv_feeds_the_fit_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("njz.csv");
    let out = bin()
        .args([
            "sweep", "--protocol", "njz", "--n-min", "10", "--n-max", "10000", "--points",
            "4", "--analytic", "--out",
        ])
        .arg(&csv)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let fit = bin().args(["fit", "--in"]).arg(&csv).output().unwrap();
    assert!(fit.status.success(), "{}", String::from_utf8_lossy(&fit.stderr));
    let v: serde_json::Value = serde_json::from_slice(&fit.stdout).unwrap();
    assert!((v["exponent"].as_f64().unwrap() + 1.5).abs() < 1e-10);
}

#[test]
fn bec_subcommand_reports_the_parameter_chain() {
    let out = bin()
        .args(["bec", "--preset", "rb87", "--d", "3", "--q", "2", "--n", "10000"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["couplings"]["gamma2"].as_f64().unwrap(), 0.0);
    assert!((v["scaling_exponent"].as_f64().unwrap() - 0.9).abs() < 1e-12);
    assert_eq!(v["eta"]["regime"].as_str().unwrap(), "ThomasFermi");
}

#[test]
fn interferometer_subcommand_decomposes_and_measures() {
    let out = bin()
        .args([
            "interferometer", "--n", "8", "--chi1", "0.05", "--chi2", "-0.05", "--chi12", "0",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["decomposition"]["quad"].as_f64().unwrap(), 0.0);
    // linear coupling 0.1 over unit time on 8 spins: fringe at cos(0.8),
    // sign-flipped by the output beamsplitter
    let expected = -4.0 * 0.8f64.cos();
    assert!((v["output_jz"]["mean"].as_f64().unwrap() - expected).abs() < 1e-10);
}

#[test]
fn invalid_config_exits_with_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args([
            "sweep", "--protocol", "njz", "--n-min", "10", "--n-max", "40", "--points", "4",
            "--analytic", "--out",
        ])
        .arg(dir.path().join("x.csv"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "span under a decade must be rejected");

    let fit = bin()
        .args(["fit", "--in", "/nonexistent/path.csv"])
        .output()
        .unwrap();
    assert_eq!(fit.status.code(), Some(2));
}

#[test]
fn degenerate_operating_point_exits_with_code_three() {
    // parity extremum: the estimator slope vanishes there
    let out = bin()
        .args([
            "simulate", "--protocol", "halfcat", "--n", "10", "--t", "1.0", "--gamma",
            "0.12566370614359174", // branch phase pi
            "--nu", "500", "--seed", "3", "--repeats", "120",
        ])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(3),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}
