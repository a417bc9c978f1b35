//! Inverse effective mode volume `η = ∫|ψ|⁴` of the condensate.
//!
//! Below the first critical atom number the profile is the bare trap ground
//! state and η is constant; above it the Thomas-Fermi repulsion spreads the
//! cloud and η falls off as `n^{-d/(d+q)}`. At the second critical number the
//! peak density reaches the three-body-loss ceiling and the model stops.

use serde::Serialize;
use std::f64::consts::PI;

use crate::{couplings, BecError, Result, Species, TrapGeometry, HBAR};

/// Critical atom numbers of the trap/species combination.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum CriticalNumbers {
    /// Fully 3-dimensional trap: one crossover `n_c`, no density ceiling
    /// within the model.
    ThreeD { n_c: f64 },
    /// `d < 3`: Thomas-Fermi onset `n_L` and density ceiling `n_T`.
    LowerD { n_l: f64, n_t: f64 },
}

impl CriticalNumbers {
    /// Atom number where interactions start to reshape the cloud.
    pub fn kinetic_threshold(&self) -> f64 {
        match *self {
            CriticalNumbers::ThreeD { n_c } => n_c,
            CriticalNumbers::LowerD { n_l, .. } => n_l,
        }
    }

    /// Atom number where the peak density hits the loss ceiling.
    pub fn density_ceiling(&self) -> f64 {
        match *self {
            CriticalNumbers::ThreeD { .. } => f64::INFINITY,
            CriticalNumbers::LowerD { n_t, .. } => n_t,
        }
    }
}

/// `n_c = R0/a11` for `d = 3`; `n_L = (R0/a11)(s/R0)^D` and
/// `n_T = (s/a11)(R0/s)^{d(q+2)/q}` otherwise.
pub fn critical_numbers(tg: &TrapGeometry, sp: &Species) -> Result<CriticalNumbers> {
    tg.validate()?;
    sp.validate()?;
    if tg.d == 3 {
        return Ok(CriticalNumbers::ThreeD {
            n_c: tg.r0 / sp.a11,
        });
    }
    let dd = tg.transverse_dims() as i32;
    let n_l = tg.r0 / sp.a11 * (tg.s / tg.r0).powi(dd);
    let n_t = tg.s / sp.a11 * (tg.r0 / tg.s).powf(tg.d as f64 * (tg.q + 2.0) / tg.q);
    Ok(CriticalNumbers::LowerD { n_l, n_t })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EtaRegime {
    /// Bare-trap ground state; η frozen at its value at the crossover.
    Kinetic,
    /// Thomas-Fermi power law.
    ThomasFermi,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Eta {
    /// `∫|ψ|⁴` in m⁻³.
    pub value: f64,
    pub regime: EtaRegime,
    /// Longitudinal part of the chemical potential backing `value`, joules.
    pub lambda: f64,
}

/// Mode-volume factor at atom number `n`.
///
/// Errors when `n` is at or above the density ceiling. Hard-wall traps
/// (`q = ∞`) are outside the Thomas-Fermi chain and are rejected here.
pub fn eta(tg: &TrapGeometry, sp: &Species, n: f64) -> Result<Eta> {
    if !(n >= 1.0) {
        return Err(BecError::InvalidInput(format!("need n >= 1, got {n}")));
    }
    if tg.q.is_infinite() {
        return Err(BecError::InvalidInput(
            "hard-wall traps have no Thomas-Fermi profile; use scaling_exponent".into(),
        ));
    }
    let cn = critical_numbers(tg, sp)?;
    let ceiling = cn.density_ceiling();
    if n >= ceiling {
        return Err(BecError::OutOfModel { n, n_t: ceiling });
    }
    let threshold = cn.kinetic_threshold();
    if n < threshold {
        let (value, lambda) = thomas_fermi(tg, sp, threshold);
        Ok(Eta {
            value,
            regime: EtaRegime::Kinetic,
            lambda,
        })
    } else {
        let (value, lambda) = thomas_fermi(tg, sp, n);
        Ok(Eta {
            value,
            regime: EtaRegime::ThomasFermi,
            lambda,
        })
    }
}

/// Closed-form Thomas-Fermi η and longitudinal chemical potential λ.
///
/// The longitudinal profile solves `n·g_eff·|ψ_L|² = λ - ½kr^q` inside the
/// radius `R = (2λ/k)^{1/q}` where `g_eff = g11·∫|G|⁴` folds in the frozen
/// transverse Gaussian. Normalizing the profile fixes
/// `n·g_eff = Ω_d·(k/2)·R^{q+d}·q/(d(q+d))`, and `∫|ψ_L|⁴` then collapses to
/// `(2q/(2q+d))·λ/(n·g_eff)`, so `η = (2q/(2q+d))·λ/(n·g11)` with the
/// transverse factor cancelling.
fn thomas_fermi(tg: &TrapGeometry, sp: &Species, n: f64) -> (f64, f64) {
    let d = tg.d as f64;
    let q = tg.q;
    let g11 = couplings(sp).g11;
    let g_eff = g11 * transverse_eta(tg);
    let k = HBAR * HBAR / (sp.mass * tg.r0.powf(q + 2.0));
    let omega_d = match tg.d {
        1 => 2.0,
        2 => 2.0 * PI,
        _ => 4.0 * PI,
    };
    let r = (n * g_eff * d * (q + d) / (omega_d * 0.5 * k * q)).powf(1.0 / (q + d));
    let lambda = 0.5 * k * r.powf(q);
    let value = 2.0 * q / (2.0 * q + d) * lambda / (n * g11);
    (value, lambda)
}

/// `∫|G|⁴ = (2√π s)^{-D}` for the normalized transverse Gaussian of
/// half-width `s` in each of the `D` frozen dimensions.
pub(crate) fn transverse_eta(tg: &TrapGeometry) -> f64 {
    (2.0 * PI.sqrt() * tg.s).powi(-(tg.transverse_dims() as i32))
}
