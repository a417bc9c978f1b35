use thiserror::Error;

#[derive(Debug, Error)]
pub enum ProtocolError {
    #[error("half-cat protocol needs an even particle count, got {n}")]
    OddHalfCat { n: usize },

    #[error("invalid protocol spec: {0}")]
    InvalidSpec(String),

    #[error("degenerate operating point: {0}")]
    DegenerateOperatingPoint(String),

    #[error("true phase lies outside the principal inversion branch")]
    BranchAmbiguity,

    #[error(transparent)]
    Dicke(#[from] dicke_core::DickeError),
}
