//! Error type shared by all engine operations.

use alloc::string::String;
use core::fmt;

/// Errors raised by ring construction, parsing, and ideal arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands belong to different ambient rings.
    RingMismatch,
    /// A name in the input is not a declared variable.
    UnknownVariable(String),
    /// Malformed polynomial or ring-description syntax.
    Parse(String),
    /// A computed term would exceed the configured total-degree cap.
    DegreeCapExceeded { degree: u64, cap: u64 },
    /// Colon by the zero ideal is undefined.
    ColonByZeroIdeal,
    /// The operation requires a monomial ideal.
    NotMonomial,
    /// The operation requires a squarefree monomial ideal.
    NotSquarefree,
    /// The operation requires a graded (homogeneous) presentation.
    NotGraded,
    /// A Frobenius level outside the allowed range (contractions need e >= 1).
    InvalidLevel(u32),
    /// Invalid argument with context.
    InvalidArgument(String),
    /// Minimal primes are not computable for this class of defining ideal.
    MinimalPrimesUnavailable,
    /// The variable count exceeds a combinatorial enumeration bound.
    VariableBoundExceeded { nvars: usize, bound: usize },
    /// An internal consistency check failed; indicates an engine bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch => write!(f, "operands belong to different rings"),
            Error::UnknownVariable(name) => write!(f, "unknown variable `{name}`"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::DegreeCapExceeded { degree, cap } => {
                write!(f, "total degree {degree} exceeds the degree cap {cap}")
            }
            Error::ColonByZeroIdeal => write!(f, "colon by zero ideal"),
            Error::NotMonomial => write!(f, "expected a monomial ideal"),
            Error::NotSquarefree => write!(f, "expected a squarefree monomial ideal"),
            Error::NotGraded => write!(f, "operation requires a graded presentation"),
            Error::InvalidLevel(e) => write!(f, "invalid Frobenius level e = {e}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::MinimalPrimesUnavailable => {
                write!(f, "minimal primes unavailable for this defining ideal")
            }
            Error::VariableBoundExceeded { nvars, bound } => {
                write!(f, "{nvars} variables exceed the enumeration bound {bound}")
            }
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

/// Convenient alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
