use dicke_core::{BlochProduct, CollectiveHamiltonian, DickeState, Observable};
use num_complex::Complex64;

use crate::{ProtocolError, Result};

/// `δγ = 4/(tn²√ν)` for the half-cat parity protocol.
pub fn halfcat_precision(n: usize, t: f64, nu: usize) -> Result<f64> {
    if n % 2 != 0 || n < 2 {
        return Err(ProtocolError::OddHalfCat { n });
    }
    Ok(4.0 / (t * (n as f64).powi(2) * (nu as f64).sqrt()))
}

/// Mean parity of the X-product measurement on the first half of the cat,
/// `cos(γtn²/4)`, from the two-branch amplitude model.
///
/// The half-cat is `(|0..0> + |1..1>)|0..0>/√2`; under `J_z²` the two
/// branches sit at `J_z = ±n/4` shifted by the spectator half, and only the
/// relative branch phase `γtn²/4` is observable, so a 2-dimensional model is
/// exact. No 2^n vector is ever formed.
pub fn halfcat_signal(n: usize, t: f64, gamma: f64) -> Result<f64> {
    if n % 2 != 0 || n < 2 {
        return Err(ProtocolError::OddHalfCat { n });
    }
    let branch_phase = gamma * t * (n as f64).powi(2) / 4.0;
    Ok(branch_phase.cos())
}

/// Closed-form fringe of the pure `nJ_z` protocol:
/// `<J_x> = (n/2)cos(γtn)`, `Var J_x = (n/4)sin²(γtn)`.
pub fn njz_moments(n: usize, t: f64, gamma: f64) -> (f64, f64) {
    let phase = gamma * t * n as f64;
    let nf = n as f64;
    (nf / 2.0 * phase.cos(), nf / 4.0 * phase.sin().powi(2))
}

/// `δγ = 1/(tn^{3/2}√ν)` for the `nJ_z` protocol.
pub fn njz_precision(n: usize, t: f64, nu: usize) -> f64 {
    1.0 / (t * (n as f64).powf(1.5) * (nu as f64).sqrt())
}

/// `<J_y>` of the evolved product probe of the quadratic protocol.
pub fn jz2_jy_mean(n: usize, t: f64, gamma: f64, beta: f64) -> Result<f64> {
    let s = jz2_state(n, t, gamma, beta)?;
    Ok(s.expectation(Observable::Jy)?)
}

/// Single-trial error-propagation precision `ΔJ_y/|∂<J_y>/∂γ|` of the
/// product-state `J_z²` protocol, computed exactly in the Dicke basis.
///
/// The γ-derivative is taken analytically: differentiating the diagonal
/// phases `e^{-iγtm²}` inserts `-itm²` into the amplitude sum, so
/// `∂<J_y>/∂γ = 2·Re<∂_γ s|J_y|s>` with no finite differencing.
pub fn jz2_product_precision(n: usize, t: f64, gamma: f64, beta: f64) -> Result<f64> {
    if !(beta > 0.0 && beta <= std::f64::consts::FRAC_PI_2) {
        return Err(ProtocolError::InvalidSpec("beta must lie in (0, pi/2]".into()));
    }
    let s = jz2_state(n, t, gamma, beta)?;
    let applied = s.apply(Observable::Jy);
    let slope: f64 = s
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let m = i as f64 - n as f64 / 2.0;
            let ds = Complex64::new(0.0, -t * m * m) * a;
            2.0 * (ds.conj() * applied[i]).re
        })
        .sum();
    if slope.abs() < 1e-250 {
        return Err(ProtocolError::DegenerateOperatingPoint(format!(
            "|d<J_y>/dgamma| = {slope:e} at n={n}, gamma*t={:e}",
            gamma * t
        )));
    }
    let variance = s.variance(Observable::Jy)?;
    Ok(variance.sqrt() / slope.abs())
}

pub(crate) fn jz2_state(n: usize, t: f64, gamma: f64, beta: f64) -> Result<DickeState> {
    Ok(DickeState::embed_product(BlochProduct { n, beta, phi: 0.0 })?
        .evolve(&CollectiveHamiltonian::quadratic(gamma), t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use dicke_core::{BlochProduct, CollectiveHamiltonian, DickeState, Observable};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    #[test]
    fn halfcat_precision_substitutions() {
        assert_abs_diff_eq!(halfcat_precision(2, 1.0, 1).unwrap(), 1.0);
        assert_abs_diff_eq!(halfcat_precision(10, 1.0, 1).unwrap(), 0.04);
        assert_abs_diff_eq!(halfcat_precision(10, 2.0, 4).unwrap(), 0.01);
        assert!(halfcat_precision(7, 1.0, 1).is_err());
    }

    #[test]
    fn halfcat_signal_endpoints() {
        assert_abs_diff_eq!(halfcat_signal(6, 1.0, 0.0).unwrap(), 1.0);
        // half period: γtn²/4 = π
        let n = 6;
        let gamma = 4.0 * PI / (n as f64).powi(2);
        assert_abs_diff_eq!(halfcat_signal(n, 1.0, gamma).unwrap(), -1.0, epsilon = 1e-12);
    }

    #[test]
    fn njz_precision_substitutions() {
        assert_abs_diff_eq!(njz_precision(1, 1.0, 1), 1.0);
        assert_abs_diff_eq!(njz_precision(100, 1.0, 1), 1e-3, epsilon = 1e-18);
        assert_abs_diff_eq!(njz_precision(100, 1.0, 100), 1e-4, epsilon = 1e-18);
    }

    #[test]
    fn njz_moments_match_dicke_pipeline() {
        let (n, t, gamma) = (7, 1.0, 0.3 / 1.0);
        let s = DickeState::embed_product(BlochProduct {
            n,
            beta: FRAC_PI_2,
            phi: 0.0,
        })
        .unwrap()
        .evolve(&CollectiveHamiltonian::linear(gamma), t);
        let (mean, var) = njz_moments(n, t, gamma);
        assert_abs_diff_eq!(s.expectation(Observable::Jx).unwrap(), mean, epsilon = 1e-10);
        assert_abs_diff_eq!(s.variance(Observable::Jx).unwrap(), var, epsilon = 1e-10);
        // quarter fringe
        let (mean, var) = njz_moments(8, 1.0, FRAC_PI_2 / 8.0);
        assert_abs_diff_eq!(mean, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(var, 2.0, epsilon = 1e-12);
    }

    #[test]
    fn jz2_beta_quarter_pi_is_optimal() {
        let (n, t) = (48, 1.0);
        let gamma = 0.05 / (t * (n as f64).powi(2));
        let best = jz2_product_precision(n, t, gamma, FRAC_PI_4).unwrap();
        for step in 1..=9 {
            let beta = step as f64 * FRAC_PI_2 / 10.0;
            let dg = jz2_product_precision(n, t, gamma, beta).unwrap();
            assert!(
                dg >= best - 1e-12,
                "beta={beta}: {dg} beats pi/4 value {best}"
            );
        }
    }

    #[test]
    fn jz2_phase_dispersion_degrades_long_times() {
        let (n, t) = (64, 1.0);
        let small = jz2_product_precision(n, t, 0.05 / (n as f64).powi(2), FRAC_PI_4).unwrap();
        // γt large enough that quadratic phase dispersion dominates
        let large = jz2_product_precision(n, t, 0.5, FRAC_PI_4).unwrap();
        assert!(large > 10.0 * small, "small={small}, dispersed={large}");
    }
}
