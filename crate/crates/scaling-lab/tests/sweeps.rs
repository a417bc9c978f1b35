//! End-to-end sweep behavior: exact analytic slopes, Monte Carlo agreement,
//! noise ordering, and reproducibility.

use approx::assert_abs_diff_eq;
use scaling_lab::{
    run_sweep, EvalMode, LabError, NoiseModel, SweepConfig, SweepProtocol,
};

fn base_config(protocol: SweepProtocol, mode: EvalMode) -> SweepConfig {
    SweepConfig {
        protocol,
        n_grid: vec![16, 32, 64, 128, 256],
        t: 1.0,
        nu: 10_000,
        repeats: 200,
        mode,
        noise: NoiseModel::default(),
        seed: 99,
    }
}

#[test]
fn analytic_slopes_are_exact() {
    let mut config = base_config(SweepProtocol::Njz, EvalMode::Analytic);
    config.n_grid = vec![10, 100, 1_000, 10_000];
    let result = run_sweep(&config).unwrap();
    assert_abs_diff_eq!(result.exponent, -1.5, epsilon = 1e-12);
    assert!(result.exponent_stderr < 1e-12);

    config.protocol = SweepProtocol::HalfCat;
    let result = run_sweep(&config).unwrap();
    assert_abs_diff_eq!(result.exponent, -2.0, epsilon = 1e-12);
}

#[test]
fn monte_carlo_tracks_the_analytic_law() {
    let config = base_config(SweepProtocol::Njz, EvalMode::MonteCarlo);
    let result = run_sweep(&config).unwrap();
    assert!(
        (result.exponent + 1.5).abs() < 0.1,
        "exponent {}",
        result.exponent
    );
    for row in &result.rows {
        let analytic = 1.0 / (row.t * (row.n as f64).powf(1.5) * (row.nu as f64).sqrt());
        assert!(
            (row.delta_gamma - analytic).abs() < 3.0 * row.stderr,
            "n={}: {} vs {analytic} (stderr {})",
            row.n,
            row.delta_gamma,
            row.stderr
        );
    }
}

#[test]
fn noiseless_precision_decreases_monotonically() {
    for protocol in [SweepProtocol::HalfCat, SweepProtocol::Njz] {
        let result = run_sweep(&base_config(protocol, EvalMode::MonteCarlo)).unwrap();
        for pair in result.rows.windows(2) {
            assert!(
                pair[1].delta_gamma < pair[0].delta_gamma,
                "delta_gamma not decreasing between n={} and n={}",
                pair[0].n,
                pair[1].n
            );
        }
    }
}

#[test]
fn dephasing_never_improves_precision() {
    let clean = run_sweep(&base_config(SweepProtocol::Njz, EvalMode::MonteCarlo)).unwrap();
    let mut noisy_config = base_config(SweepProtocol::Njz, EvalMode::MonteCarlo);
    noisy_config.noise.dephasing_rate = 0.3;
    let noisy = run_sweep(&noisy_config).unwrap();
    for (c, d) in clean.rows.iter().zip(&noisy.rows) {
        assert!(
            d.delta_gamma >= c.delta_gamma - 3.0 * d.stderr,
            "n={}: noisy {} < clean {}",
            c.n,
            d.delta_gamma,
            c.delta_gamma
        );
    }
}

#[test]
fn identical_config_and_seed_reproduce_bitwise() {
    let config = base_config(SweepProtocol::Njz, EvalMode::MonteCarlo);
    let a = run_sweep(&config).unwrap();
    let b = run_sweep(&config).unwrap();
    assert_eq!(a.to_csv(), b.to_csv());
    assert_eq!(a.config_hash, b.config_hash);
    let mut other = base_config(SweepProtocol::Njz, EvalMode::MonteCarlo);
    other.seed = 100;
    assert_ne!(run_sweep(&other).unwrap().to_csv(), a.to_csv());
}

#[test]
fn degenerate_grids_are_rejected() {
    let mut config = base_config(SweepProtocol::Njz, EvalMode::Analytic);
    config.n_grid = vec![16, 32, 64]; // too few points
    assert!(matches!(
        run_sweep(&config),
        Err(LabError::InvalidConfig(_))
    ));
    config.n_grid = vec![16, 24, 32, 48]; // under a decade of span
    assert!(matches!(
        run_sweep(&config),
        Err(LabError::InvalidConfig(_))
    ));
    config.n_grid = vec![16, 16, 64, 256]; // not strictly increasing
    assert!(matches!(
        run_sweep(&config),
        Err(LabError::InvalidConfig(_))
    ));
}

#[test]
fn analytic_mode_rejects_sampled_noise_channels() {
    let mut config = base_config(SweepProtocol::Njz, EvalMode::Analytic);
    config.noise.loss_fraction = 0.1;
    assert!(matches!(
        run_sweep(&config),
        Err(LabError::InvalidConfig(_))
    ));
}

#[test]
fn number_drift_beyond_the_phase_bound_destroys_the_estimate() {
    use protocols::{evaluate_eq1_with, ProtocolKind, ProtocolSpec};
    use scaling_lab::apply_noise;
    use std::f64::consts::FRAC_PI_2;

    // accumulated phase 300 rad against the ambiguity bound n/dn = 100:
    // the per-estimate number drift swings the phase across whole fringes
    let n = 400usize;
    let phase = 300.0;
    let spec = ProtocolSpec::new(ProtocolKind::ProductNjz, n, 1.0, phase / n as f64, 100)
        .with_readout_phi(phase - FRAC_PI_2);
    let noise = NoiseModel {
        number_sigma: 0.01 * n as f64,
        ..Default::default()
    };
    let clean = evaluate_eq1_with(
        &spec,
        200,
        None,
        5,
        apply_noise(ProtocolKind::ProductNjz, &NoiseModel::default()).unwrap(),
    )
    .unwrap()
    .delta_gamma;
    let noisy = evaluate_eq1_with(
        &spec,
        200,
        None,
        6,
        apply_noise(ProtocolKind::ProductNjz, &noise).unwrap(),
    )
    .unwrap()
    .delta_gamma;
    assert!(
        noisy > 10.0 * clean,
        "expected collapse: noisy {noisy:e} vs clean {clean:e}"
    );
}
