//! Experiment driver: sweeps over the probe size, parametric noise models,
//! and log-log exponent fits, with reproducible seeded output.

mod error;
mod fit;
mod noise;
mod sweep;

pub use error::LabError;
pub use fit::fit_exponent;
pub use noise::{apply_noise, njz_dephased_precision, LossPhase, NoiseModel, Sampler};
pub use sweep::{
    geometric_grid, run_sweep, EvalMode, SweepConfig, SweepProtocol, SweepResult, SweepRow,
    CSV_HEADER,
};

pub type Result<T> = std::result::Result<T, LabError>;
