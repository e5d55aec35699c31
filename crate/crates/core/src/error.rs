use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid code parameters: {0}")]
    InvalidCodeParameters(String),

    #[error("operation requires a qudit shift code, got {0}")]
    NotQuditCode(String),

    #[error("operation requires a qubit block code, got {0}")]
    NotBlockCode(String),

    #[error("operator kind does not match the code ({0})")]
    OperatorKindMismatch(String),

    #[error("no rational with denominator <= {max_denominator} lies within {tolerance:e} of {value}")]
    ReconstructionFailed {
        value: f64,
        tolerance: f64,
        max_denominator: u64,
    },

    #[error("exponent overflow while multiplying polynomials")]
    ExponentOverflow,

    #[error("unsupported channel: {0}")]
    UnsupportedChannel(String),

    #[error("degenerate code: {0}")]
    DegenerateCode(String),

    #[error("unknown syndrome {0}")]
    UnknownSyndrome(String),

    #[error("polynomial is constant, it has no leading correction term")]
    ConstantPolynomial,

    #[error("fidelity must equal 1 at p = 0, got {0}")]
    NotNormalized(String),

    #[error("1 - F(p) - p has no sign change in (0, 1] at kappa = {kappa}, mu = {mu}")]
    NoThreshold { kappa: f64, mu: f64 },

    #[error("parse error: {0}")]
    Parse(String),
}
