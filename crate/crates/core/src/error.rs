use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An explicit quotient list ran out before index `index` was reached.
    #[error("partial quotient a_{index} requested but the base only supplies {available}")]
    QuotientsExhausted { index: usize, available: usize },

    #[error("invalid quadratic surd: {0}")]
    InvalidSurd(String),

    #[error("partial quotients must be at least 1 (got 0 at position {0})")]
    ZeroQuotient(usize),

    #[error("invalid base specification `{spec}`: {reason}")]
    BaseSpec { spec: String, reason: String },

    #[error("absolute expansion requires a non-negative value, got {0}")]
    NegativeValue(String),

    #[error("integer overflow in the scalar type")]
    Overflow,

    #[error("enumeration exceeds the budget of {budget} sequences")]
    BudgetExceeded { budget: u64 },

    /// An internal inequality of the expansion algorithms failed.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
