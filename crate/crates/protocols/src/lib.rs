//! Collective-spin metrology protocols and their precision statistics.
//!
//! Three protocols estimate a coupling constant `γ` imprinted on an
//! `n`-particle probe:
//!
//! * `HalfCatJz2` — entangled half-cat input under `J_z²`, parity readout.
//!   The signal oscillates at frequency `tn²/4`, so `δγ = 4/(tn²√ν)`.
//! * `ProductNjz` — product input under `nJ_z`, equatorial readout.
//!   No entanglement is ever generated and `δγ = 1/(tn^{3/2}√ν)`.
//! * `ProductJz2` — product input under `J_z²`, `J_y` readout. Scales as
//!   `1/(tn^{3/2}√ν)` at small `γt`, with the optimum at `β = π/4`.
//!
//! Besides closed forms, every protocol has a seeded Monte Carlo sampling
//! model, a fringe-inversion estimator, and the units-corrected RMS deviation
//! `δγ = <(γ_est/(∂<γ_est>/∂γ) - γ)²>^{1/2}` evaluated over repeated batches.

mod analytic;
mod error;
mod estimate;
mod sampling;
mod spec;

pub use analytic::{
    halfcat_precision, halfcat_signal, jz2_product_precision, jz2_jy_mean, njz_moments,
    njz_precision,
};
pub use error::ProtocolError;
pub use estimate::{
    analytic_precision, estimate_gamma, evaluate_eq1, evaluate_eq1_with, EstimationResult,
};
pub use sampling::{sample_outcomes, stream_seed};
pub use spec::{MeasurementRecord, ProtocolKind, ProtocolSpec};

pub type Result<T> = std::result::Result<T, ProtocolError>;
