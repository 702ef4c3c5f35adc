//! Trajectory representation of one-dimensional stationary quantum mechanics.
//!
//! The quantum stationary Hamilton-Jacobi equation (QSHJE)
//!
//! ```text
//! Wx^2/(2m) + V - E = -(hbar^2 / 4m) {W; x}
//! ```
//!
//! with the Schwarzian derivative `{W; x} = Wxxx/Wx - (3/2)(Wxx/Wx)^2` admits
//! closed-form solutions built from a pair (phi, theta) of independent
//! Schrodinger solutions: `Wx = sqrt(2m) / (a phi^2 + b theta^2 + c phi theta)`
//! under a Wronskian normalization, with the coefficient triple (a, b, c)
//! selecting the microstate. This crate evaluates those solutions in closed
//! form for three potentials (free particle, infinite step barrier, constant
//! force), treats hbar as an independent variable, and provides the machinery
//! to probe the hbar -> 0 limit: cycle averages, residual-indeterminacy
//! envelopes, forbidden-region limits and turning-point scaling, all
//! cross-checked against independent numerical oracles.
//!
//! Everything that can grow like `exp(kappa x / hbar)` is computed in
//! sign-tracked log space ([`ScaledValue`]), so sweeps remain exact arbitrarily
//! deep into the classical regime.

pub mod climit;
pub mod error;
pub mod microstate;
pub mod oracle;
pub mod potentials;
pub mod scaled;
pub mod specfun;
pub mod trajectory;

pub use error::{Error, Result};
pub use microstate::{IndeterminacySignature, Microstate, PhysicalSetup};
pub use potentials::{BasisPair, PotentialModel};
pub use scaled::ScaledValue;
pub use trajectory::{ReducedActionConvention, TrajectoryPoint};
