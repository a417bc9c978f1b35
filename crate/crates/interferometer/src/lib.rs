//! Nonlinear Mach-Zehnder interferometer algebra for two boson modes.
//!
//! Two Kerr phase shifters (one per arm) and a cross-Kerr shifter at the
//! beam intersection imprint the Fock-state phase
//! `χ₁n₁² + χ₂n₂² + 2χ₁₂n₁n₂`. In the Schwinger representation
//! (`J_z = (n₁-n₂)/2`, `n = n₁+n₂`) this splits into a global `n²` phase, an
//! `nJ_z` coupling, and a `J_z²` coupling, which is how the device realizes
//! both linear-with-strength-n and quadratic collective couplings.

use dicke_core::{BlochProduct, CollectiveHamiltonian, DickeState, Observable};
use serde::{Deserialize, Serialize};

pub use dicke_core::DickeError;

/// Accumulated (time-integrated) phase-shifter strengths, in radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KerrConfig {
    /// Kerr coefficient of arm 1, multiplying `n₁²`.
    pub chi1: f64,
    /// Kerr coefficient of arm 2, multiplying `n₂²`.
    pub chi2: f64,
    /// Cross-Kerr coefficient, multiplying `2n₁n₂`.
    pub chi12: f64,
}

/// Coefficients of the Schwinger decomposition
/// `global·n² + linear·nJ_z + quad·J_z²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Decomposition {
    /// `(χ+χ₁₂)/2`, where `χ = (χ₁+χ₂)/2`. Pure overall phase.
    pub global: f64,
    /// `χ₁-χ₂`, the `nJ_z` strength (this is `γt` for the linear protocol).
    pub linear: f64,
    /// `2(χ-χ₁₂)`, the `J_z²` strength.
    pub quad: f64,
}

/// Post-readout first and second moments.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FringeMoments {
    pub mean: f64,
    pub variance: f64,
}

impl KerrConfig {
    pub fn new(chi1: f64, chi2: f64, chi12: f64) -> Self {
        Self { chi1, chi2, chi12 }
    }

    /// Average Kerr phase `χ = (χ₁+χ₂)/2`; derived, never stored.
    pub fn chi(&self) -> f64 {
        (self.chi1 + self.chi2) / 2.0
    }

    /// Total phase imprinted on the Fock state `|n₁, n₂>`.
    pub fn fock_phase(&self, n1: u64, n2: u64) -> f64 {
        let (n1, n2) = (n1 as f64, n2 as f64);
        self.chi1 * n1 * n1 + self.chi2 * n2 * n2 + 2.0 * self.chi12 * n1 * n2
    }

    pub fn decompose(&self) -> Decomposition {
        let chi = self.chi();
        Decomposition {
            global: (chi + self.chi12) / 2.0,
            linear: self.chi1 - self.chi2,
            quad: 2.0 * (chi - self.chi12),
        }
    }

    /// Packages the decomposition as a collective Hamiltonian for unit time.
    ///
    /// The global `n²` phase is kept in `c0` (rather than dropped) so that
    /// amplitude-level comparisons against the full two-mode evolution hold;
    /// it never affects observable statistics.
    pub fn to_hamiltonian(&self, n: usize) -> CollectiveHamiltonian {
        let d = self.decompose();
        CollectiveHamiltonian::new(d.global * (n as f64).powi(2), d.linear, d.quad)
    }
}

impl Decomposition {
    /// True when the configuration leaves a pure `nJ_z` coupling
    /// (`χ₁₂ = χ`, equivalently `quad = 0`).
    pub fn is_pure_linear(&self) -> bool {
        self.quad == 0.0
    }
}

/// Runs the full pipeline of the nonlinear interferometer.
///
/// The input beamsplitter prepares the coherent state at polar angle
/// `input_beta`, the shifters act for unit time, and the final 50/50
/// beamsplitter is `rotate_y(+π/2)`, which maps the equatorial component
/// `J_x` onto `-J_z`: a fringe that reads `<J_x> = (n/2)cos(...)` before the
/// beamsplitter appears as `<J_z> = -(n/2)cos(...)` in the output counts.
pub fn run_interferometer(
    n: usize,
    input_beta: f64,
    k: &KerrConfig,
    readout: Observable,
) -> Result<FringeMoments, DickeError> {
    let state = DickeState::embed_product(BlochProduct {
        n,
        beta: input_beta,
        phi: 0.0,
    })?
    .evolve(&k.to_hamiltonian(n), 1.0)
    .rotate_y(std::f64::consts::FRAC_PI_2);
    Ok(FringeMoments {
        mean: state.expectation(readout)?,
        variance: state.variance(readout)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn symmetric_config_is_pure_global_phase() {
        let d = KerrConfig::new(1.0, 1.0, 1.0).decompose();
        assert_eq!(d.global, 1.0);
        assert_eq!(d.linear, 0.0);
        assert_eq!(d.quad, 0.0);
        // fock phase is a perfect square (n₁+n₂)²
        let k = KerrConfig::new(1.0, 1.0, 1.0);
        assert_abs_diff_eq!(k.fock_phase(3, 4), 49.0, epsilon = 1e-12);
    }

    #[test]
    fn antisymmetric_kerr_gives_pure_linear_coupling() {
        let c = 0.37;
        let d = KerrConfig::new(c, -c, 0.0).decompose();
        assert_eq!(d.global, 0.0);
        assert_abs_diff_eq!(d.linear, 2.0 * c, epsilon = 1e-15);
        assert_eq!(d.quad, 0.0);
        assert!(d.is_pure_linear());
    }

    #[test]
    fn compensating_cross_kerr_cancels_quadratic_coupling() {
        let k = KerrConfig::new(0.9, 0.2, (0.9 + 0.2) / 2.0);
        let d = k.decompose();
        assert_eq!(d.quad, 0.0);
        assert_abs_diff_eq!(d.linear, 0.7, epsilon = 1e-15);
    }

    #[test]
    fn vacuum_fock_phase_is_zero() {
        assert_eq!(KerrConfig::new(0.3, -1.2, 0.8).fock_phase(0, 0), 0.0);
    }
}
