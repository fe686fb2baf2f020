//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by construction, search, and certification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A fraction string or numerator/denominator pair is not a reduced
    /// fraction in the open interval (0, 1).
    #[error("invalid Farey fraction: {0}")]
    InvalidFraction(String),

    /// An elliptic order below 2 was supplied.
    #[error("elliptic order must be at least 2, got {0}")]
    OrderTooSmall(u32),

    /// The requested pair of orders is outside the domain of the operation.
    #[error("unsupported order pair: {0}")]
    UnsupportedPair(String),

    /// Both axes are parabolic, so the normalized distance parameter is
    /// undefined.
    #[error("complex distance undefined when both generators are parabolic")]
    BothParabolic,

    /// The triangle parameters do not describe a hyperbolic triangle.
    #[error("triangle ({0}, {1}, {2}) is not hyperbolic")]
    NotHyperbolic(String, String, String),

    /// The iterative root finder failed to converge or certify.
    #[error("root finding failed: {0}")]
    RootFinding(String),

    /// Exact integer arithmetic overflowed its fixed-width representation.
    #[error("integer overflow in exact polynomial arithmetic")]
    Overflow,

    /// A certification step failed; the payload names the offending check.
    #[error("certification failed: {0}")]
    Certification(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
