use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("base ring mismatch: {0}")]
    BaseMismatch(String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("side mismatch: {0}")]
    SideMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("torsion lattice required: {0}")]
    TorsionNotAllowed(String),
    #[error("Artin base required: {0}")]
    ArtinBaseRequired(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not certified within depth {depth}: {reason}")]
    NotCertified { depth: usize, reason: String },
    #[error("cancelled")]
    Cancelled,
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
