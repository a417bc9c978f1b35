//! Statistical checks of the sampling models and estimators against the
//! closed-form precision formulas.

use approx::assert_abs_diff_eq;
use protocols::{
    estimate_gamma, evaluate_eq1, halfcat_precision, njz_moments, njz_precision, sample_outcomes,
    stream_seed, ProtocolKind, ProtocolSpec,
};
use std::f64::consts::{FRAC_PI_2, PI};

#[test]
fn njz_zero_coupling_pins_every_outcome() {
    let spec = ProtocolSpec::new(ProtocolKind::ProductNjz, 12, 1.0, 0.0, 50);
    let outcomes = sample_outcomes(&spec, 1).unwrap();
    assert!(outcomes.iter().all(|&o| o == 6.0));
}

#[test]
fn njz_quarter_fringe_statistics() {
    let n = 16;
    let spec = ProtocolSpec::at_mid_fringe(ProtocolKind::ProductNjz, n, 1.0, 100_000);
    let outcomes = sample_outcomes(&spec, 42).unwrap();
    let nu = outcomes.len() as f64;
    let mean = outcomes.iter().sum::<f64>() / nu;
    let var = outcomes.iter().map(|o| (o - mean).powi(2)).sum::<f64>() / nu;
    let sigma_mean = (n as f64 / 4.0 / nu).sqrt();
    assert!(mean.abs() < 5.0 * sigma_mean, "mean {mean} too far from 0");
    assert_abs_diff_eq!(var, n as f64 / 4.0, epsilon = 0.05 * n as f64 / 4.0);
}

#[test]
fn halfcat_mid_fringe_statistics() {
    // γtn²/4 = π/3 → mean parity 1/2
    let n = 10;
    let gamma = (PI / 3.0) * 4.0 / (n as f64).powi(2);
    let spec = ProtocolSpec::new(ProtocolKind::HalfCatJz2, n, 1.0, gamma, 100_000);
    let outcomes = sample_outcomes(&spec, 7).unwrap();
    let mean = outcomes.iter().sum::<f64>() / outcomes.len() as f64;
    let sigma = (0.75f64 / outcomes.len() as f64).sqrt();
    assert!((mean - 0.5).abs() < 5.0 * sigma, "parity mean {mean}");
}

#[test]
fn noiseless_inversion_recovers_gamma_exactly() {
    let n = 20;
    let spec = ProtocolSpec::at_mid_fringe(ProtocolKind::ProductNjz, n, 1.0, 1);
    let (exact_mean, _) = njz_moments(n, spec.t, spec.gamma_true);
    let est = estimate_gamma(&spec, &[exact_mean]).unwrap();
    assert_abs_diff_eq!(est, spec.gamma_true, epsilon = 1e-12);
}

#[test]
fn njz_monte_carlo_rms_matches_analytic() {
    let spec = ProtocolSpec::at_mid_fringe(ProtocolKind::ProductNjz, 64, 1.0, 10_000);
    let repeats = 400;
    let mut sq = 0.0;
    for r in 0..repeats {
        let outcomes = sample_outcomes(&spec, stream_seed(3, 0, r)).unwrap();
        let est = estimate_gamma(&spec, &outcomes).unwrap();
        sq += (est - spec.gamma_true).powi(2);
    }
    let rms = (sq / repeats as f64).sqrt();
    let analytic = njz_precision(spec.n, spec.t, spec.nu);
    assert!(
        (rms - analytic).abs() < 0.1 * analytic,
        "rms={rms:e}, analytic={analytic:e}"
    );
}

#[test]
fn halfcat_monte_carlo_rms_matches_analytic() {
    let spec = ProtocolSpec::at_mid_fringe(ProtocolKind::HalfCatJz2, 32, 1.0, 10_000);
    let repeats = 400;
    let mut sq = 0.0;
    for r in 0..repeats {
        let outcomes = sample_outcomes(&spec, stream_seed(4, 0, r)).unwrap();
        let est = estimate_gamma(&spec, &outcomes).unwrap();
        sq += (est - spec.gamma_true).powi(2);
    }
    let rms = (sq / repeats as f64).sqrt();
    let analytic = halfcat_precision(spec.n, spec.t, spec.nu).unwrap();
    assert!(
        (rms - analytic).abs() < 0.1 * analytic,
        "rms={rms:e}, analytic={analytic:e}"
    );
}

#[test]
fn eq1_matches_plain_rms_when_unbiased() {
    let spec = ProtocolSpec::at_mid_fringe(ProtocolKind::ProductNjz, 32, 1.0, 10_000);
    let result = evaluate_eq1(&spec, 200, None, 11).unwrap();
    let plain_rms = (result
        .gamma_est_samples
        .iter()
        .map(|g| (g - spec.gamma_true).powi(2))
        .sum::<f64>()
        / result.gamma_est_samples.len() as f64)
        .sqrt();
    assert!(
        (result.delta_gamma - plain_rms).abs() < 0.15 * plain_rms,
        "eq1={:e}, rms={plain_rms:e}",
        result.delta_gamma
    );
    assert!((result.slope - 1.0).abs() < 0.2, "slope={}", result.slope);
}

#[test]
fn quadrupling_trials_halves_the_deviation() {
    let base = ProtocolSpec::at_mid_fringe(ProtocolKind::ProductNjz, 32, 1.0, 4_000);
    let quad = ProtocolSpec { nu: 16_000, ..base };
    let d1 = evaluate_eq1(&base, 300, None, 5).unwrap().delta_gamma;
    let d4 = evaluate_eq1(&quad, 300, None, 6).unwrap().delta_gamma;
    assert!(
        (d1 / d4 - 2.0).abs() < 0.2,
        "ratio {} should be 2 within 10%",
        d1 / d4
    );
}

#[test]
fn equatorial_readout_axis_does_not_change_precision() {
    let base = ProtocolSpec::at_mid_fringe(ProtocolKind::ProductNjz, 48, 1.0, 10_000);
    let reference = evaluate_eq1(&base, 200, None, 21).unwrap().delta_gamma;
    for phi in [0.4, PI / 3.0, 1.2] {
        // keep the effective phase γtn - φ at mid-fringe
        let rotated = ProtocolSpec {
            gamma_true: (FRAC_PI_2 + phi) / (base.t * base.n as f64),
            ..base
        }
        .with_readout_phi(phi);
        let dg = evaluate_eq1(&rotated, 200, None, 22).unwrap().delta_gamma;
        assert!(
            (dg - reference).abs() < 0.2 * reference,
            "phi={phi}: {dg:e} vs {reference:e}"
        );
    }
}

#[test]
fn estimator_is_consistent_at_large_nu() {
    let spec = ProtocolSpec::at_mid_fringe(ProtocolKind::ProductNjz, 32, 1.0, 1_000_000);
    let repeats = 64u64;
    let mut acc = 0.0;
    for r in 0..repeats {
        let outcomes = sample_outcomes(&spec, stream_seed(9, 0, r)).unwrap();
        acc += estimate_gamma(&spec, &outcomes).unwrap();
    }
    let mean = acc / repeats as f64;
    let se = njz_precision(spec.n, spec.t, spec.nu) / (repeats as f64).sqrt();
    assert!(
        (mean - spec.gamma_true).abs() < 3.0 * se,
        "bias {:e} exceeds 3 standard errors {se:e}",
        mean - spec.gamma_true
    );
}

#[test]
fn jz2_sampled_estimation_brackets_truth() {
    let spec = ProtocolSpec::at_mid_fringe(ProtocolKind::ProductJz2, 32, 1.0, 2_000);
    let result = evaluate_eq1(&spec, 150, None, 31).unwrap();
    // The estimator must track the truth at the few-δγ level.
    let mean = result.gamma_est_samples.iter().sum::<f64>()
        / result.gamma_est_samples.len() as f64;
    assert!(
        (mean - spec.gamma_true).abs() < 5.0 * result.delta_gamma.max(1e-18),
        "mean={mean:e}, truth={:e}, dg={:e}",
        spec.gamma_true,
        result.delta_gamma
    );
    // And the Monte Carlo deviation must agree with exact error propagation.
    assert!(
        (result.delta_gamma - result.analytic_delta_gamma).abs()
            < 0.25 * result.analytic_delta_gamma,
        "mc={:e}, analytic={:e}",
        result.delta_gamma,
        result.analytic_delta_gamma
    );
}

#[test]
fn branch_guard_rejects_out_of_range_phase() {
    let n = 10;
    let gamma = 1.5 * PI / (1.0 * n as f64); // γtn = 1.5π > π
    let spec = ProtocolSpec::new(ProtocolKind::ProductNjz, n, 1.0, gamma, 100);
    let outcomes = sample_outcomes(&spec, 1).unwrap();
    assert!(estimate_gamma(&spec, &outcomes).is_err());
}

#[test]
fn njz_moments_agree_with_dicke_pipeline_at_scale() {
    use dicke_core::{BlochProduct, CollectiveHamiltonian, DickeState, Observable};
    let mut seed = 123456789u64;
    let mut next = || {
        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (seed >> 11) as f64 / (1u64 << 53) as f64
    };
    for case in 0..50 {
        let n = [8, 33, 100, 512][case % 4];
        let gamma = 2.0 * next() - 1.0;
        let t = 0.01 + next();
        let s = DickeState::embed_product(BlochProduct {
            n,
            beta: FRAC_PI_2,
            phi: 0.0,
        })
        .unwrap()
        .evolve(&CollectiveHamiltonian::linear(gamma), t);
        let (mean, var) = njz_moments(n, t, gamma);
        assert_abs_diff_eq!(s.expectation(Observable::Jx).unwrap(), mean, epsilon = 1e-10 * n as f64);
        assert_abs_diff_eq!(s.variance(Observable::Jx).unwrap(), var, epsilon = 1e-10 * n as f64);
    }
}
