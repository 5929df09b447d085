use thiserror::Error;

/// Errors surfaced by fallible public entry points.
///
/// Internal invariant violations (e.g. mixed-field arithmetic that slipped past
/// input validation) panic instead: they are programming errors, not input errors.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input: dimension mismatch, mixed fields,
    /// empty matrix, out-of-range index, non-skew matrix, and similar.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A Plücker vector that does not satisfy the quadratic relations was
    /// passed where a decomposable vector is required.
    #[error("vector is not decomposable: {0}")]
    NotDecomposable(String),

    /// Exact polynomial division was requested but the divisor does not divide.
    #[error("polynomial division is not exact: {0}")]
    NotDivisible(String),

    /// Parameters exceed the supported size window and the caller did not
    /// opt in to large sizes.
    #[error("unsupported size: {0}")]
    UnsupportedSize(String),

    /// Text-format parse failure (polynomials, Plücker vectors, CLI values).
    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
