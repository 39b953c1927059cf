use alloc::string::String;
use core::fmt;

use crate::algebra::RingTag;

/// Errors raised by the library. Every fallible operation returns this type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A binary operation received values from two different rings.
    RingMismatch { left: RingTag, right: RingTag },
    /// Two polynomials in different variables were combined.
    VariableMismatch { left: String, right: String },
    /// A rational function was evaluated at (or numerically near) a pole.
    Pole,
    /// A value that must be inverted is zero.
    NotInvertible(&'static str),
    /// The ring does not support the requested operation.
    Unsupported(&'static str),
    /// A coefficient table or sequence is too short or otherwise malformed.
    InvalidArgument(String),
    /// An internal cross-check failed (for instance a sum that must be an integer was not).
    Inconsistent(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch { left, right } => {
                write!(f, "ring mismatch: {left:?} combined with {right:?}")
            }
            Error::VariableMismatch { left, right } => {
                write!(f, "variable mismatch: {left} combined with {right}")
            }
            Error::Pole => f.write_str("evaluation at a pole"),
            Error::NotInvertible(what) => write!(f, "{what} is not invertible"),
            Error::Unsupported(what) => write!(f, "unsupported operation: {what}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Inconsistent(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
