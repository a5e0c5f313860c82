use thiserror::Error;

/// Errors raised by the library. Each variant names the offending input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed element `{input}`: {reason}")]
    ElementSyntax { input: String, reason: String },

    #[error("malformed rational `{0}`")]
    RationalSyntax(String),

    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<usize>, reason: String },

    #[error("weight mismatch: expected {expected}, found {found}")]
    WeightMismatch { expected: usize, found: usize },

    #[error("{what} = {value} exceeds the guard {limit}")]
    Guard {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid Thoma parameters: {0}")]
    InvalidThoma(String),

    #[error("invalid representation spec: {0}")]
    InvalidRepSpec(String),

    #[error("element {element} has support outside [1, {n}]")]
    SupportOutOfRange { element: String, n: usize },

    #[error("element {element} is not in B_n B_(n,inf) for n = {n}")]
    NotInLevel { element: String, n: usize },

    #[error("shift {shift} is below the largest support point {max}")]
    ShiftTooSmall { shift: usize, max: usize },

    #[error("permutation part must be trivial, found signs in {0}")]
    UnexpectedSigns(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
