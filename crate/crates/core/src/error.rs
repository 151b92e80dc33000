use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A precondition on the arguments was violated. The message names the
    /// condition, e.g. `gcd(d, c) = 1`.
    #[error("domain error: {0}")]
    Domain(String),

    /// A brute-force enumeration would exceed the configured iteration budget.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// A closed form that must evaluate to an integer came out fractional.
    /// Surfaced instead of rounding; indicates a defective formula.
    #[error("non-integral count from {formula}: {value}")]
    NonIntegralCount { formula: String, value: String },

    /// Malformed CLI / text input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
