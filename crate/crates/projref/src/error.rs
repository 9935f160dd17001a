//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parameter validation failed; the message names the violated condition.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Two elements (or an element and an operation) live in different groups.
    #[error("parameter mismatch: {0}")]
    ParamMismatch(String),

    /// A color vector does not satisfy the congruence defining G(r,p,n).
    #[error("color sum {sum} is not divisible by p = {p}")]
    ColorSum { sum: usize, p: usize },

    /// Structural validation of a permutation, tableau, or matrix failed.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// An enumeration would exceed the configured cap.
    #[error("group order {order} exceeds enumeration cap {cap}")]
    CapExceeded { order: u128, cap: usize },

    /// The requested operation needs GCD(d, r) = 1.
    #[error("{d} is not invertible modulo r = {r}")]
    NotCoprime { d: usize, r: usize },

    /// Lifting preconditions failed.
    #[error("cannot lift: {0}")]
    Lift(String),

    /// The isomorphism criterion is undefined for this rank.
    #[error("the duality criterion is undefined for n = 2")]
    RankTwo,

    /// A matrix is not in the basis-indexing set B_k.
    #[error("matrix is not in B_k: {0}")]
    NotBasisIndex(String),

    /// An averaged character sum failed to collapse to a nonnegative integer.
    #[error("character average is not a nonnegative integer: {0}")]
    NonIntegral(String),

    /// Unknown verification suite or bad CLI input.
    #[error("usage: {0}")]
    Usage(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Malformed(format!("json: {e}"))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
