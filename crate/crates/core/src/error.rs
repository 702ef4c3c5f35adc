use thiserror::Error;

/// Errors produced by the trajectory machinery.
#[derive(Debug, Error)]
pub enum Error {
    /// The coefficient triple does not define a positive definite quadratic
    /// form, so the conjugate momentum would diverge or change sign.
    #[error("microstate not positive definite: a = {a}, b = {b}, c = {c} (ab - c^2/4 = {discriminant})")]
    NonPositiveDefinite {
        a: f64,
        b: f64,
        c: f64,
        discriminant: f64,
    },

    /// No coefficient triple reproduces the requested initial values.
    #[error("no microstate matches the initial values: {0}")]
    NoRealSolution(String),

    /// Input outside the admissible domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A result exceeds the representable range of f64; use a scaled variant.
    #[error("range error: {0}")]
    Range(String),

    /// A structurally invalid parameter (non-finite, wrong sign, empty grid).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An internal numerical procedure failed (lost bracket, overflow, ...).
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// Adaptive quadrature hit its depth limit before reaching the tolerance.
    #[error("quadrature did not converge: achieved {achieved:.3e}, requested {requested:.3e}")]
    QuadratureNotConverged { achieved: f64, requested: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
