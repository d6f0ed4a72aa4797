use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands have incompatible shapes.
    DimensionMismatch {
        op: &'static str,
        expected: String,
        found: String,
    },
    /// An argument broke a documented precondition (not a solution, not a cover, ...).
    ContractViolation(String),
    /// A generator parameter was out of range.
    InvalidParameter(String),
    /// No cover with at most `max_k` bicliques exists.
    InfeasibleWithinBudget { max_k: usize, lower_bound: usize },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch {
                op,
                expected,
                found,
            } => write!(f, "{op}: dimension mismatch (expected {expected}, found {found})"),
            Error::ContractViolation(msg) => write!(f, "contract violation: {msg}"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::InfeasibleWithinBudget { max_k, lower_bound } => write!(
                f,
                "no biclique cover with at most {max_k} bicliques (lower bound {lower_bound})"
            ),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn mismatch(op: &'static str, expected: impl fmt::Display, found: impl fmt::Display) -> Error {
    use alloc::string::ToString;
    Error::DimensionMismatch {
        op,
        expected: expected.to_string(),
        found: found.to_string(),
    }
}
