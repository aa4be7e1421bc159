use thiserror::Error;

/// Errors surfaced by the library.
///
/// Resource limits are reported as errors rather than silently truncated
/// results: a computation either finishes exactly or refuses.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("operation requires characteristic 0")]
    CharacteristicNotZero,

    #[error("S-pair limit exceeded after {pairs} pairs")]
    PairLimitExceeded { pairs: usize },

    #[error("polynomial term limit exceeded ({terms} terms)")]
    TermLimitExceeded { terms: usize },

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("matrix is not skew-symmetric with zero diagonal")]
    NotSkewSymmetric,

    #[error("pfaffian size must be even and positive")]
    OddPfaffianSize,

    #[error("matrix shape: {0}")]
    MatrixShape(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid coefficient: {0}")]
    InvalidCoefficient(String),

    #[error("colon or saturation by the zero ideal")]
    ZeroDenominatorIdeal,

    #[error("ideal is not generated by monomials")]
    NotMonomial,

    #[error("expected a zero-dimensional ideal (dimension is {0})")]
    PositiveDimension(i64),

    #[error("no height-{height} complete intersection found in {attempts} attempts")]
    CiSearchFailed { height: usize, attempts: usize },

    #[error("operation not supported over quotient rings")]
    QuotientRingUnsupported,

    #[error("hypotheses not met: {0}")]
    HypothesesNotMet(String),

    #[error("refuted radical candidate: {0}")]
    RefutedRadical(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("parse error at {line}:{col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },

    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
