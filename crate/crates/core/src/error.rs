use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-domain input (bad letter, invalid shape, wrong dimension).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The drift does not satisfy the strict ordering p_1 > ... > p_n > 0.
    #[error("probability vector violates the strict ordering condition: {0}")]
    ConditionViolated(String),

    /// A denominator of a closed formula vanishes at the evaluation point.
    #[error("singular evaluation: {0}")]
    Singular(String),

    /// The requested closed formula does not hold for this shape.
    #[error("formula not applicable: {0}")]
    FormulaNotApplicable(String),

    #[error("budget exceeded: {what} (limit {limit})")]
    Budget { what: String, limit: usize },

    #[error("function is not harmonic for the kernel at state {0}")]
    NotHarmonic(String),

    #[error("Martin kernel undefined: Green function vanishes at {0}")]
    UndefinedKernel(String),

    /// An internal cross-check failed; signals a bug or an invalid term order.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("rejection sampling exhausted after {attempts} attempts ({accepted} accepted)")]
    SamplingFailure { attempts: usize, accepted: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
