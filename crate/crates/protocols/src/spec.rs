use serde::{Deserialize, Serialize};

use crate::{ProtocolError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProtocolKind {
    HalfCatJz2,
    ProductJz2,
    ProductNjz,
}

impl ProtocolKind {
    pub fn name(&self) -> &'static str {
        match self {
            ProtocolKind::HalfCatJz2 => "halfcat",
            ProtocolKind::ProductJz2 => "jz2",
            ProtocolKind::ProductNjz => "njz",
        }
    }
}

/// One metrology experiment: probe size, interrogation time, true coupling,
/// and trials per estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProtocolSpec {
    pub kind: ProtocolKind,
    pub n: usize,
    pub t: f64,
    pub gamma_true: f64,
    /// Trials averaged into a single estimate.
    pub nu: usize,
    /// Input polar angle (ProductJz2 only); the optimum is π/4.
    pub beta: Option<f64>,
    /// Azimuth of the equatorial readout axis (ProductNjz only); J_x is 0.
    #[serde(default)]
    pub readout_phi: f64,
}

impl ProtocolSpec {
    pub fn new(kind: ProtocolKind, n: usize, t: f64, gamma_true: f64, nu: usize) -> Self {
        Self {
            kind,
            n,
            t,
            gamma_true,
            nu,
            beta: None,
            readout_phi: 0.0,
        }
    }

    pub fn with_beta(mut self, beta: f64) -> Self {
        self.beta = Some(beta);
        self
    }

    pub fn with_readout_phi(mut self, phi: f64) -> Self {
        self.readout_phi = phi;
        self
    }

    /// The spec at the default well-conditioned operating point: mid-fringe
    /// (`γtn = π/2`, or `γtn²/4 = π/2` for the half-cat parity signal) for the
    /// fringe-inversion protocols, and small dispersion (`γtn² = 0.05`) for
    /// the quadratic product protocol.
    pub fn at_mid_fringe(kind: ProtocolKind, n: usize, t: f64, nu: usize) -> Self {
        let gamma = match kind {
            ProtocolKind::HalfCatJz2 => {
                2.0 * std::f64::consts::PI / (t * (n as f64).powi(2))
            }
            ProtocolKind::ProductJz2 => 0.05 / (t * (n as f64).powi(2)),
            ProtocolKind::ProductNjz => std::f64::consts::FRAC_PI_2 / (t * n as f64),
        };
        let mut spec = Self::new(kind, n, t, gamma, nu);
        if kind == ProtocolKind::ProductJz2 {
            spec.beta = Some(std::f64::consts::FRAC_PI_4);
        }
        spec
    }

    pub fn beta_or_default(&self) -> f64 {
        self.beta.unwrap_or(std::f64::consts::FRAC_PI_4)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(ProtocolError::InvalidSpec("n must be >= 1".into()));
        }
        if self.nu < 1 {
            return Err(ProtocolError::InvalidSpec("nu must be >= 1".into()));
        }
        if !(self.t > 0.0) {
            return Err(ProtocolError::InvalidSpec("t must be > 0".into()));
        }
        if self.kind == ProtocolKind::HalfCatJz2 && self.n % 2 != 0 {
            return Err(ProtocolError::OddHalfCat { n: self.n });
        }
        if self.kind == ProtocolKind::ProductJz2 {
            let beta = self.beta_or_default();
            if !(beta > 0.0 && beta <= std::f64::consts::FRAC_PI_2) {
                return Err(ProtocolError::InvalidSpec(
                    "beta must lie in (0, pi/2]".into(),
                ));
            }
        }
        Ok(())
    }
}

/// A single measurement outcome, serializable as a CSV row
/// `protocol,n,t,gamma_true,nu,outcome`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasurementRecord {
    pub protocol: &'static str,
    pub n: usize,
    pub t: f64,
    pub gamma_true: f64,
    pub nu: usize,
    pub outcome: f64,
}

impl MeasurementRecord {
    pub const CSV_HEADER: &'static str = "protocol,n,t,gamma_true,nu,outcome";

    pub fn rows(spec: &ProtocolSpec, outcomes: &[f64]) -> Vec<MeasurementRecord> {
        outcomes
            .iter()
            .map(|&outcome| MeasurementRecord {
                protocol: spec.kind.name(),
                n: spec.n,
                t: spec.t,
                gamma_true: spec.gamma_true,
                nu: spec.nu,
                outcome,
            })
            .collect()
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.protocol, self.n, self.t, self.gamma_true, self.nu, self.outcome
        )
    }
}
