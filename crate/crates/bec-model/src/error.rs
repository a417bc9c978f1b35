use thiserror::Error;

#[derive(Debug, Error)]
pub enum BecError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("atom number {n} is at or above the density-limited ceiling n_T = {n_t:.3e}")]
    OutOfModel { n: f64, n_t: f64 },
    #[error("time budget requires a nonzero linear coupling")]
    ZeroGamma1,
    #[error("config error: {0}")]
    Config(String),
}
