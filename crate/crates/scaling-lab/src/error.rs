use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error("degenerate operating point: {0}")]
    Degenerate(String),
    #[error(transparent)]
    Protocol(#[from] protocols::ProtocolError),
    #[error(transparent)]
    Bec(#[from] bec_model::BecError),
    #[error("fit error: {0}")]
    Fit(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl LabError {
    /// Process exit code: 3 for a degenerate operating point, 2 for
    /// everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Degenerate(_)
            | LabError::Protocol(protocols::ProtocolError::DegenerateOperatingPoint(_))
            | LabError::Protocol(protocols::ProtocolError::BranchAmbiguity) => 3,
            _ => 2,
        }
    }
}
