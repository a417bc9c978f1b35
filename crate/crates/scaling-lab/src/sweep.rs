//! Precision sweeps over the probe size and exponent extraction.

use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::FRAC_PI_2;

use bec_model::{bec_hamiltonian, eta, HamiltonianOptions, Species, TrapGeometry, HBAR};
use protocols::{
    evaluate_eq1_with, halfcat_precision, jz2_product_precision, njz_precision, stream_seed,
    ProtocolError, ProtocolKind, ProtocolSpec,
};

use crate::{apply_noise, fit_exponent, njz_dephased_precision, LabError, NoiseModel, Result};

pub const CSV_HEADER: &str = "protocol,n,t,gamma_true,nu,repeats,delta_gamma,stderr,seed";

#[derive(Debug, Clone, Serialize)]
pub enum SweepProtocol {
    /// Parity readout of the half-cat probe under the quadratic coupling.
    HalfCat,
    /// Product probe under the linear coupling of strength n.
    Njz,
    /// Product probe under the bare quadratic coupling.
    Jz2,
    /// Linear-coupling protocol realized by a trapped condensate; the
    /// estimand is the collisional coupling γ₁ in J·m³.
    Bec {
        trap: TrapGeometry,
        species: Species,
    },
}

impl SweepProtocol {
    pub fn name(&self) -> &'static str {
        match self {
            SweepProtocol::HalfCat => "halfcat",
            SweepProtocol::Njz => "njz",
            SweepProtocol::Jz2 => "jz2",
            SweepProtocol::Bec { .. } => "bec",
        }
    }

    fn kind(&self) -> ProtocolKind {
        match self {
            SweepProtocol::HalfCat => ProtocolKind::HalfCatJz2,
            SweepProtocol::Njz | SweepProtocol::Bec { .. } => ProtocolKind::ProductNjz,
            SweepProtocol::Jz2 => ProtocolKind::ProductJz2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EvalMode {
    /// Closed-form (or exact error-propagation) precision per point.
    Analytic,
    /// Monte Carlo batches inverted through the estimator.
    MonteCarlo,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepConfig {
    pub protocol: SweepProtocol,
    pub n_grid: Vec<usize>,
    /// Interrogation time per trial (seconds for the BEC chain).
    pub t: f64,
    /// Trials per estimate.
    pub nu: usize,
    /// Estimates per point (Monte Carlo mode).
    pub repeats: usize,
    pub mode: EvalMode,
    pub noise: NoiseModel,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub protocol: &'static str,
    pub n: usize,
    pub t: f64,
    pub gamma_true: f64,
    pub nu: usize,
    pub repeats: usize,
    pub delta_gamma: f64,
    pub stderr: f64,
    pub seed: u64,
}

impl SweepRow {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.protocol,
            self.n,
            self.t,
            self.gamma_true,
            self.nu,
            self.repeats,
            self.delta_gamma,
            self.stderr,
            self.seed
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepResult {
    /// One row per grid point, sorted by strictly increasing n.
    pub rows: Vec<SweepRow>,
    /// Fitted log-log slope of `delta_gamma` against `n`.
    pub exponent: f64,
    pub exponent_stderr: f64,
    /// Digest of the generating config, for provenance checks.
    pub config_hash: u64,
}

impl SweepResult {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.csv_row());
            out.push('\n');
        }
        out
    }
}

/// Runs one precision-vs-n sweep and fits the scaling exponent.
///
/// Grid points evaluate in parallel; determinism is guaranteed because every
/// point derives its own RNG stream from `(seed, grid index)` and the rows
/// are assembled in grid order.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepResult> {
    validate(config)?;
    let rows: Vec<SweepRow> = config
        .n_grid
        .par_iter()
        .enumerate()
        .map(|(idx, &n)| evaluate_point(config, idx, n))
        .collect::<Result<_>>()?;
    let points: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| (r.n as f64, r.delta_gamma))
        .collect();
    let (exponent, exponent_stderr) = fit_exponent(&points)?;
    Ok(SweepResult {
        rows,
        exponent,
        exponent_stderr,
        config_hash: config_hash(config),
    })
}

fn validate(config: &SweepConfig) -> Result<()> {
    config.noise.validate()?;
    let grid = &config.n_grid;
    if grid.len() < 4 {
        return Err(LabError::InvalidConfig(
            "n grid needs at least 4 points".into(),
        ));
    }
    if !grid.windows(2).all(|w| w[0] < w[1]) {
        return Err(LabError::InvalidConfig(
            "n grid must be strictly increasing".into(),
        ));
    }
    if (grid[grid.len() - 1] as f64) < 10.0 * grid[0] as f64 {
        return Err(LabError::InvalidConfig(
            "n grid must span at least a decade".into(),
        ));
    }
    if !(config.t > 0.0) || config.nu < 1 {
        return Err(LabError::InvalidConfig("need t > 0 and nu >= 1".into()));
    }
    if config.mode == EvalMode::MonteCarlo && config.repeats < 100 {
        return Err(LabError::InvalidConfig(
            "Monte Carlo mode needs at least 100 repeats per point".into(),
        ));
    }
    if config.mode == EvalMode::Analytic
        && (config.noise.loss_fraction != 0.0 || config.noise.number_sigma != 0.0)
    {
        return Err(LabError::InvalidConfig(
            "the analytic chain models only dephasing; use Monte Carlo for loss or number noise"
                .into(),
        ));
    }
    if config.noise.dephasing_rate != 0.0 && !matches!(config.protocol, SweepProtocol::Njz) {
        if config.mode == EvalMode::Analytic {
            return Err(LabError::InvalidConfig(
                "analytic dephasing is available only for the linear product protocol".into(),
            ));
        }
    }
    Ok(())
}

fn evaluate_point(config: &SweepConfig, idx: usize, n: usize) -> Result<SweepRow> {
    let seed = stream_seed(config.seed, 0xA11, idx as u64);
    let (spec, to_estimand) = operating_point(config, n)?;
    let (delta_gamma, stderr, repeats) = match config.mode {
        EvalMode::Analytic => (analytic_point(config, &spec)? * to_estimand, 0.0, 0),
        EvalMode::MonteCarlo => {
            let sampler = apply_noise(spec.kind, &config.noise)?;
            let result = evaluate_eq1_with(&spec, config.repeats, None, seed, sampler)
                .map_err(|e| tag_degenerate(e, n))?;
            let dg = result.delta_gamma * to_estimand;
            (dg, dg / (2.0 * config.repeats as f64).sqrt(), config.repeats)
        }
    };
    Ok(SweepRow {
        protocol: config.protocol.name(),
        n,
        t: config.t,
        gamma_true: spec.gamma_true * to_estimand,
        nu: config.nu,
        repeats,
        delta_gamma,
        stderr,
        seed,
    })
}

/// Builds the per-point protocol spec and the factor converting the fitted
/// coupling rate into the physical estimand (1 except for the BEC chain,
/// where the rate `a = γ₁η/ħ` is inverted back to γ₁).
fn operating_point(config: &SweepConfig, n: usize) -> Result<(ProtocolSpec, f64)> {
    match &config.protocol {
        SweepProtocol::Bec { trap, species } => {
            let opts = HamiltonianOptions {
                exact_particle_number: false,
                ..Default::default()
            };
            let h = bec_hamiltonian(trap, species, n, opts)?;
            if h.a == 0.0 {
                return Err(LabError::Degenerate(format!(
                    "n={n}: species has no linear coupling to estimate"
                )));
            }
            // lock the readout axis to quadrature so the accumulated phase
            // can exceed a fringe without branch ambiguity
            let phase = h.a * config.t * n as f64;
            let spec = ProtocolSpec::new(ProtocolKind::ProductNjz, n, config.t, h.a, config.nu)
                .with_readout_phi(phase - FRAC_PI_2);
            let e = eta(trap, species, n as f64)?;
            Ok((spec, HBAR / e.value))
        }
        other => Ok((
            ProtocolSpec::at_mid_fringe(other.kind(), n, config.t, config.nu),
            1.0,
        )),
    }
}

fn analytic_point(config: &SweepConfig, spec: &ProtocolSpec) -> Result<f64> {
    let (n, t, nu) = (spec.n, spec.t, spec.nu);
    match &config.protocol {
        SweepProtocol::HalfCat => Ok(halfcat_precision(n, t, nu)?),
        SweepProtocol::Njz => Ok(njz_dephased_precision(
            n,
            t,
            nu,
            config.noise.dephasing_rate,
        )),
        SweepProtocol::Jz2 => Ok(jz2_product_precision(
            n,
            t,
            spec.gamma_true,
            spec.beta_or_default(),
        )
        .map_err(|e| tag_degenerate(e, n))?
            / (nu as f64).sqrt()),
        SweepProtocol::Bec { .. } => Ok(njz_precision(n, t, nu)),
    }
}

fn tag_degenerate(e: ProtocolError, n: usize) -> LabError {
    match e {
        ProtocolError::DegenerateOperatingPoint(msg) => {
            LabError::Degenerate(format!("n={n}: {msg}"))
        }
        other => LabError::Protocol(other),
    }
}

/// FNV-1a over the canonical JSON encoding of the config.
fn config_hash(config: &SweepConfig) -> u64 {
    let encoded = serde_json::to_string(config).expect("config serializes");
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for byte in encoded.as_bytes() {
        hash ^= *byte as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01B3);
    }
    hash
}

/// Geometric n grid with `points` entries from `n_min` to `n_max` inclusive,
/// rounded and deduplicated.
pub fn geometric_grid(n_min: usize, n_max: usize, points: usize) -> Result<Vec<usize>> {
    if n_min < 1 || n_max <= n_min || points < 2 {
        return Err(LabError::InvalidConfig(
            "need 1 <= n_min < n_max and at least 2 points".into(),
        ));
    }
    let ratio = n_max as f64 / n_min as f64;
    let mut grid: Vec<usize> = (0..points)
        .map(|i| {
            (n_min as f64 * ratio.powf(i as f64 / (points - 1) as f64)).round() as usize
        })
        .collect();
    grid.dedup();
    Ok(grid)
}
