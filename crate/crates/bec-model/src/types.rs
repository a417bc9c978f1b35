//! Trap geometry and atomic species inputs.

use serde::Serialize;

use crate::{couplings, BecError, Result};

/// Power-law trap `V = ½kr^q` confining `d` longitudinal dimensions; the
/// remaining `D = 3 - d` transverse dimensions stay frozen in a Gaussian
/// ground state of half-width `s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrapGeometry {
    /// Longitudinal dimensions, 1 to 3.
    pub d: u8,
    /// Trap hardness exponent, > 0 (`f64::INFINITY` for hard walls).
    pub q: f64,
    /// Longitudinal bare ground-state half-width in meters,
    /// `R0 = (ħ²/mk)^{1/(q+2)}`.
    pub r0: f64,
    /// Transverse ground-state half-width in meters; unused when `d = 3`.
    pub s: f64,
}

impl TrapGeometry {
    pub fn new(d: u8, q: f64, r0: f64, s: f64) -> Result<Self> {
        let tg = Self { d, q, r0, s };
        tg.validate()?;
        Ok(tg)
    }

    /// Transverse dimensions `D = 3 - d`.
    pub fn transverse_dims(&self) -> u8 {
        3 - self.d
    }

    pub fn validate(&self) -> Result<()> {
        if !(1..=3).contains(&self.d) {
            return Err(BecError::InvalidInput(format!(
                "d must be 1, 2 or 3, got {}",
                self.d
            )));
        }
        if !(self.q > 0.0) {
            return Err(BecError::InvalidInput(format!(
                "hardness q must be positive, got {}",
                self.q
            )));
        }
        if !(self.r0 > 0.0 && self.s > 0.0) {
            return Err(BecError::InvalidInput(
                "trap half-widths must be positive".into(),
            ));
        }
        Ok(())
    }

    /// Harmonic 3-dimensional trap with 10 μm ground-state half-width,
    /// 100 nm transverse width for lower-dimensional variants.
    pub fn rb87_default(d: u8, q: f64) -> Result<Self> {
        Self::new(d, q, 1.0e-5, 1.0e-7)
    }
}

/// Two-component atomic species: s-wave scattering lengths between the two
/// internal states and the atomic mass. `gamma_loss` is the inelastic
/// two-body loss parameter in the same energy-volume units as the elastic
/// couplings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Species {
    /// Intra-state scattering length of state 1, meters.
    pub a11: f64,
    /// Intra-state scattering length of state 2, meters.
    pub a22: f64,
    /// Inter-state scattering length, meters.
    pub a12: f64,
    /// Atomic mass, kg.
    pub mass: f64,
    /// Inelastic-collision parameter, J·m³ (0 for a lossless idealization).
    pub gamma_loss: f64,
}

impl Species {
    pub fn new(a11: f64, a22: f64, a12: f64, mass: f64, gamma_loss: f64) -> Result<Self> {
        let sp = Self {
            a11,
            a22,
            a12,
            mass,
            gamma_loss,
        };
        sp.validate()?;
        Ok(sp)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.a11 > 0.0 && self.a22 > 0.0 && self.a12 > 0.0) {
            return Err(BecError::InvalidInput(
                "scattering lengths must be positive".into(),
            ));
        }
        if !(self.mass > 0.0) {
            return Err(BecError::InvalidInput("mass must be positive".into()));
        }
        if self.gamma_loss < 0.0 {
            return Err(BecError::InvalidInput(
                "loss parameter must be nonnegative".into(),
            ));
        }
        Ok(())
    }

    /// Rb-87 hyperfine pair with scattering-length ratios
    /// `{a22 : a12 : a11} = {0.97 : 1 : 1.03}` around `a11 = 10 nm`.
    ///
    /// `a22` is constructed as `2·a12 - a11` so that the mean of the
    /// intra-state lengths equals `a12` bit-exactly, which makes the
    /// quadratic coupling γ₂ vanish identically for this species.
    /// The loss parameter is set so that `Γ/2γ₁ = 1/26`.
    pub fn rb87() -> Self {
        let a11 = 1.0e-8;
        let a12 = a11 / 1.03;
        let a22 = 2.0 * a12 - a11;
        let mut sp = Self {
            a11,
            a22,
            a12,
            mass: 1.443_160_6e-25,
            gamma_loss: 0.0,
        };
        sp.gamma_loss = couplings(&sp).gamma1 / 13.0;
        sp
    }
}
