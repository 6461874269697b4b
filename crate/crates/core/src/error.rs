//! Crate-wide error type.

use num_complex::Complex64;

/// Errors reported by the library.
///
/// Precondition violations (bad degrees, non-normalized coefficients,
/// angles outside the allowed range, ...) are reported eagerly; numerical
/// failures carry enough state to diagnose the run that produced them.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A coefficient vector must hold at least one coefficient.
    #[error("coefficient vector must contain at least one coefficient")]
    EmptyCoeffs,

    /// The operation requires coefficients summing to 1.
    #[error("coefficients must sum to 1 (got {sum:.6e})")]
    NotNormalized { sum: f64 },

    /// A precondition on an argument was violated.
    #[error("{0}")]
    Domain(String),

    /// The angle passed to a factorization is not a zero of `S`.
    #[error("t = {angle} is not a zero of S: |S(t)| = {residual:.3e} exceeds {tol:.3e}")]
    NotAZero { angle: f64, residual: f64, tol: f64 },

    /// The map has no interior equilibrium for the given parameters.
    #[error("map has no interior equilibrium for the given parameters")]
    NoInteriorEquilibrium,

    /// The simultaneous-iteration root finder did not converge.
    ///
    /// Carries the best iterates and their residuals `|p(root)|`.
    #[error("root finder did not converge in {iterations} iterations (max residual {max_residual:.3e})")]
    RootsNotConverged {
        roots: Vec<Complex64>,
        residuals: Vec<f64>,
        iterations: usize,
        max_residual: f64,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
