use thiserror::Error;

/// Errors raised by the valuation-spectrum library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The modulus is not a prime (or is smaller than 2).
    #[error("invalid modulus {0}: expected a prime p >= 2")]
    InvalidModulus(u64),

    /// ν_p(0) was requested.
    #[error("valuation of zero is undefined")]
    UndefinedValuation,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// The scalar-recurrence evaluation only exists for binomial rows.
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("enumeration of {required} tuples exceeds the oracle budget of {budget}")]
    EnumerationTooLarge { required: String, budget: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
