//! Sub-Finsler geometry on Heisenberg groups `H^n` for arbitrary convex norms.
//!
//! The crate is organized around the optimal-control view of sub-Finsler
//! geodesics: horizontal curves in `H^n` minimizing the norm-length of their
//! planar projection. It provides
//!
//! - group arithmetic, dilations, horizontal lifts and homogeneous-norm
//!   distances ([`heisenberg`]),
//! - convex norms on `R^{2n}` with subdifferentials, dual norms and Legendre
//!   transforms ([`norms`]),
//! - the first-order extremal system integrator and condition checker
//!   ([`extremal`]),
//! - two-point geodesic solvers: shooting on the multiplier unknowns and an
//!   independent direct-transcription cross-check ([`bvp`]),
//! - the Busemann isoperimetrix construction in `H^1` ([`isoperimetrix`]),
//! - blow-down, boundedness-certificate and geodesic-linearity experiments
//!   ([`glp`]).

pub mod bvp;
pub mod example52;
pub mod extremal;
pub mod geometry;
pub mod glp;
pub mod heisenberg;
pub mod isoperimetrix;
pub mod norms;

pub(crate) mod numeric;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("norm is not strictly convex")]
    NotStrictlyConvex,
    #[error("norm is strictly convex; no flat face to exploit")]
    NoFlatFace,
    #[error("dual gradient undefined at {0:?}")]
    DualGradientUndefined(Vec<f64>),
    #[error("shooting did not converge: best residual {best_residual:.3e}{hint}")]
    NoConvergence { best_residual: f64, hint: String },
    #[error("curve is constant")]
    ConstantCurve,
    #[error("control trace is a straight line; no boundedness certificate exists")]
    LineInput,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
