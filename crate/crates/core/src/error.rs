use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Cancellation needs more working digits than the policy allows.
    #[error("precision exceeded: needed more than {max_digits} digits ({context})")]
    PrecisionExceeded { max_digits: u32, context: String },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    /// The sign scan ran out before locating the requested root.
    #[error("no bracket found for root index {index} (scanned a in [{scanned_to}, 0])")]
    BracketNotFound { index: usize, scanned_to: f64 },

    #[error("root index {index} out of range (only {available} roots exist)")]
    IndexOutOfRange { index: usize, available: usize },

    #[error("z = {z:e} is below the root-solver domain (z >= 1e-8)")]
    DomainTooSmall { z: f64 },

    #[error("zero magnetic field is not supported by the Kummer reduction")]
    NonMagneticUnsupported,

    #[error("{operation} did not converge: {detail}")]
    ConvergenceFailure { operation: String, detail: String },

    /// The minimising index sits too close to the end of the search window.
    #[error("tail check failed at B = {field}: last-decile ratios dip to {tail_min} (minimum {min_ratio}); raise the search margin")]
    TailUnsafe {
        field: f64,
        min_ratio: f64,
        tail_min: f64,
    },

    #[error("bad bracket [{lo}, {hi}]: {detail}")]
    BadBracket { lo: f64, hi: f64, detail: String },

    /// The asymptotic remainder is requested outside its decay regime.
    #[error("z = {z} is outside the asymptotic regime (need z > {min_z})")]
    AsymptoticRegime { z: f64, min_z: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
