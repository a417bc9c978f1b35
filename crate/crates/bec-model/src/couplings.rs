//! Scattering couplings and the inelastic-loss time budget.

use serde::Serialize;

use crate::{BecError, Result, Species, HBAR};

/// Elastic couplings of the two-component condensate, all in J·m³.
///
/// γ₁ and γ₂ carry the same energy-volume units as the `g_ij`; they become
/// angular rates only after multiplication by the mode-volume factor η and
/// division by ħ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Couplings {
    pub g11: f64,
    pub g22: f64,
    pub g12: f64,
    /// Mean intra-state coupling `g = (g11 + g22)/2`.
    pub g: f64,
    /// Linear coupling `γ₁ = (g11 - g22)/2`.
    pub gamma1: f64,
    /// Quadratic coupling `γ₂ = g - g12`.
    pub gamma2: f64,
}

/// `couplings` computes `g_ij = 4πħ²a_ij/m` and the derived γ's.
///
/// γ₂ is evaluated from the scattering lengths first,
/// `γ₂ = ((a11 + a22)/2 - a12)·4πħ²/m`, so species whose length mean is
/// exactly the cross length give γ₂ = 0 with no floating-point residue.
pub fn couplings(sp: &Species) -> Couplings {
    let unit = 4.0 * std::f64::consts::PI * HBAR * HBAR / sp.mass;
    let g11 = unit * sp.a11;
    let g22 = unit * sp.a22;
    let g12 = unit * sp.a12;
    Couplings {
        g11,
        g22,
        g12,
        g: 0.5 * (g11 + g22),
        gamma1: unit * 0.5 * (sp.a11 - sp.a22),
        gamma2: unit * (0.5 * (sp.a11 + sp.a22) - sp.a12),
    }
}

/// Interrogation-time guidance from two-body loss.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TimeBudget {
    /// `Γ/(2γ₁)`, dimensionless.
    pub loss_ratio: f64,
    /// Signal phase `γ₁ηnt` accumulated while the loss phase `Γηt/2` stays
    /// below 1: `n·(2γ₁/Γ)` radians. Infinite for a lossless species.
    pub signal_phase_budget: f64,
}

pub fn time_budget(sp: &Species, n: f64) -> Result<TimeBudget> {
    let gamma1 = couplings(sp).gamma1;
    if gamma1 == 0.0 {
        return Err(BecError::ZeroGamma1);
    }
    if sp.gamma_loss == 0.0 {
        return Ok(TimeBudget {
            loss_ratio: 0.0,
            signal_phase_budget: f64::INFINITY,
        });
    }
    let loss_ratio = sp.gamma_loss / (2.0 * gamma1);
    Ok(TimeBudget {
        loss_ratio,
        signal_phase_budget: n / loss_ratio,
    })
}
