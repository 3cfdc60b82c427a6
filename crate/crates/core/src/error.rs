use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("angle must be finite, got {0}")]
    NonFiniteAngle(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A simple-function or model invariant does not hold.
    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("correlation violates the period-π constraint (max violation {violation:.3e})")]
    NotPeriodic { violation: f64 },

    #[error("correlation is not stationary: off-diagonal spectral mass fraction {fraction:.3e}")]
    NotStationary { fraction: f64 },

    #[error(
        "partial sum has imaginary residue {residue:.3e}; spectrum is not conjugate symmetric"
    )]
    ImaginaryResidue { residue: f64 },

    #[error("spectrum convention mismatch: {0}")]
    ConventionMismatch(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("model file: {0}")]
    Parse(#[from] serde_json::Error),

    #[error("table: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
