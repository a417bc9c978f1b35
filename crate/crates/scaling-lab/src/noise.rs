//! Parametric noise models layered over the ideal sampling distributions.

use rand::distributions::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::Serialize;

use protocols::{sample_outcomes, ProtocolKind, ProtocolSpec};

use crate::{LabError, Result};

/// Which atom number sets the phase-accumulation rate after loss.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
pub enum LossPhase {
    /// The coupling strength was configured before the loss happened, so the
    /// phase still accumulates at the full-n rate.
    #[default]
    PreLossRate,
    /// The rate tracks the surviving atom number.
    PostLossRate,
}

/// Independent-particle noise parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Default)]
pub struct NoiseModel {
    /// Per-particle phase-damping rate Γ_φ, 1/time. Multiplies each
    /// particle's equatorial coherence by `e^{-Γ_φ t}`.
    pub dephasing_rate: f64,
    /// Per-particle loss probability before readout, in [0, 1).
    pub loss_fraction: f64,
    /// Standard deviation Δn of the atom-number distribution; the realized
    /// number is redrawn once per estimate while the estimator assumes `n`.
    pub number_sigma: f64,
    pub loss_phase: LossPhase,
}

impl NoiseModel {
    pub fn is_noiseless(&self) -> bool {
        self.dephasing_rate == 0.0 && self.loss_fraction == 0.0 && self.number_sigma == 0.0
    }

    pub fn validate(&self) -> Result<()> {
        if self.dephasing_rate < 0.0 || self.number_sigma < 0.0 {
            return Err(LabError::InvalidConfig(
                "noise rates must be nonnegative".into(),
            ));
        }
        if !(0.0..1.0).contains(&self.loss_fraction) {
            return Err(LabError::InvalidConfig(
                "loss fraction must lie in [0, 1)".into(),
            ));
        }
        Ok(())
    }
}

/// Dephasing degrades the linear-coupling fringe contrast by `e^{-Γ_φ t}`,
/// which inflates the precision by the inverse factor without touching the
/// n-scaling: `δγ = e^{Γ_φ t}/(t n^{3/2} √ν)`.
pub fn njz_dephased_precision(n: usize, t: f64, nu: usize, dephasing_rate: f64) -> f64 {
    (dephasing_rate * t).exp() / (t * (n as f64).powf(1.5) * (nu as f64).sqrt())
}

pub type Sampler = Box<dyn Fn(&ProtocolSpec, u64) -> protocols::Result<Vec<f64>> + Send + Sync>;

/// Wraps the ideal sampling model of `kind` with the noise model.
///
/// The noise acts independently on the probe particles, which only makes
/// sense for the product-state protocols: the entangled half-cat is rejected
/// for any nonzero noise, and the quadratic product protocol supports only
/// the number-uncertainty channel (its dephased or lossy state is no longer
/// pure, which is outside this simulator's state space).
pub fn apply_noise(kind: ProtocolKind, nm: &NoiseModel) -> Result<Sampler> {
    nm.validate()?;
    if nm.is_noiseless() {
        return Ok(Box::new(sample_outcomes));
    }
    match kind {
        ProtocolKind::HalfCatJz2 => Err(LabError::InvalidConfig(
            "noise models are not supported for the entangled half-cat protocol".into(),
        )),
        ProtocolKind::ProductJz2 => {
            if nm.dephasing_rate != 0.0 || nm.loss_fraction != 0.0 {
                return Err(LabError::InvalidConfig(
                    "the quadratic product protocol supports only number uncertainty".into(),
                ));
            }
            let sigma = nm.number_sigma;
            Ok(Box::new(move |spec, seed| {
                let mut rng = ChaCha12Rng::seed_from_u64(seed);
                let realized = draw_number(spec.n, sigma, &mut rng);
                let shifted = ProtocolSpec {
                    n: realized,
                    ..*spec
                };
                sample_outcomes(&shifted, rng.gen())
            }))
        }
        ProtocolKind::ProductNjz => {
            let nm = *nm;
            Ok(Box::new(move |spec, seed| sample_njz_noisy(spec, &nm, seed)))
        }
    }
}

fn draw_number(n: usize, sigma: f64, rng: &mut ChaCha12Rng) -> usize {
    if sigma == 0.0 {
        return n;
    }
    let normal = rand_distr::Normal::new(n as f64, sigma).expect("sigma > 0");
    (normal.sample(rng).round().max(1.0)) as usize
}

/// Noisy linear-protocol trials with a calibrated readout.
///
/// Dephasing and loss shrink the fringe contrast by the known factor
/// `(1 - p_loss)·e^{-Γ_φ t}`; an experimenter who knows the noise rates
/// divides it back out, so the recorded collective values are rescaled by
/// that contrast. This keeps the fringe inversion unbiased while the
/// shot-to-shot fluctuations stay inflated, which is exactly the
/// constant-factor sensitivity cost of the noise. The atom-number draw is
/// never calibrated: the estimator keeps assuming `n`.
fn sample_njz_noisy(
    spec: &ProtocolSpec,
    nm: &NoiseModel,
    seed: u64,
) -> protocols::Result<Vec<f64>> {
    spec.validate()?;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    // one number draw per estimate: slow preparation drift, fast trials
    let realized = draw_number(spec.n, nm.number_sigma, &mut rng);
    let damp = (-nm.dephasing_rate * spec.t).exp();
    let contrast = (1.0 - nm.loss_fraction) * damp;
    let mut outcomes = Vec::with_capacity(spec.nu);
    for _ in 0..spec.nu {
        let kept = if nm.loss_fraction > 0.0 {
            rand_distr::Binomial::new(realized as u64, 1.0 - nm.loss_fraction)
                .expect("survival probability in (0, 1]")
                .sample(&mut rng)
        } else {
            realized as u64
        };
        let rate_n = match nm.loss_phase {
            LossPhase::PreLossRate => realized as f64,
            LossPhase::PostLossRate => kept as f64,
        };
        let angle = spec.gamma_true * spec.t * rate_n - spec.readout_phi;
        let p = ((1.0 + damp * angle.cos()) / 2.0).clamp(0.0, 1.0);
        let up = if kept == 0 {
            0
        } else {
            rand_distr::Binomial::new(kept, p)
                .expect("probability in [0,1]")
                .sample(&mut rng)
        };
        outcomes.push((up as f64 - kept as f64 / 2.0) / contrast);
    }
    Ok(outcomes)
}
