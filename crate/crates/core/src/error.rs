use thiserror::Error;

/// Errors raised by operations on combinatorial objects and verification inputs.
///
/// Arithmetic preconditions (negative bracket index, zero substitution power,
/// reduction modulus below 2) panic instead: they are programming errors, not
/// data errors.
#[derive(Debug, Error)]
pub enum Error {
    /// A partition or permutation violates its structural invariants.
    #[error("invalid object: {0}")]
    InvalidObject(String),

    /// An operation was asked for with arguments outside its domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The splitting map's precondition fails at the given value.
    #[error("not splittable at {value}: {reason}")]
    NotSplittable { value: i64, reason: String },

    /// The merging map's precondition fails at the given value.
    #[error("not mergeable at {value}: {reason}")]
    NotMergeable { value: i64, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
