use thiserror::Error;

/// Errors raised by coefficient generation, expansion and the solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed number `{text}`: {reason}")]
    Parse { text: String, reason: String },

    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),

    #[error("cannot mix number realizations ({0} vs {1})")]
    MixedRealizations(&'static str, &'static str),

    /// A precondition on an input parameter was violated. The message names it.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The result is not representable in the exact field; retry in a float mode.
    #[error("{0} has no exact rational value; use a floating-point mode")]
    InexactPower(String),

    #[error("base {0} must be positive for a fractional exponent")]
    NonPositiveBase(String),

    #[error("leading coefficient is zero")]
    ZeroLeadingCoefficient,

    #[error("operation budget exceeded: {required} > {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("missing sample at offset {0}")]
    MissingSample(String),

    #[error("matrix is singular at column {0}")]
    Singular(usize),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("render failed: {0}")]
    Render(String),
}

pub type Result<T> = std::result::Result<T, Error>;
