use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DickeError {
    #[error("amplitude vector has length {got}, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },

    #[error("state norm {norm} differs from 1 beyond tolerance")]
    NotNormalized { norm: f64 },

    #[error("expectation value carries imaginary residue {residue:.3e} (state corrupted)")]
    ImaginaryResidue { residue: f64 },

    #[error("variance {value:.3e} is negative beyond tolerance (state corrupted)")]
    NegativeVariance { value: f64 },

    #[error("particle count must be at least 1")]
    EmptyEnsemble,
}
