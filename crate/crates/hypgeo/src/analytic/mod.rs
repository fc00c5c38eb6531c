//! High-precision evaluation of the series and its derivative with
//! certified truncation bounds, and sampled positivity functionals over
//! polar grids in the unit disk.
//!
//! Exact rationals flow in (coefficients, radii, tolerances); evaluation
//! itself runs on 192-bit floats. Every certified bound is decided back in
//! exact rational arithmetic, so a reported `truncation_bound` genuinely
//! dominates the truncation error under the coefficient-ratio majorant.

mod complex;
mod disk;
mod eval;
pub(crate) mod real;

pub use complex::{Complex, ComplexPoint};
pub use disk::{disk_minimum, ks_star_evidence, DiskEvidence, DiskFunctional, GridSpec};
pub use eval::{eval_derivative, eval_series, EvalOptions, EvalResult};
pub use real::{Real, PRECISION_BITS};

use thiserror::Error;

/// Errors from evaluation and disk sampling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyticError {
    /// The geometric tail majorant did not reach the tolerance within the
    /// term budget; the point is too close to the boundary for the
    /// requested tolerance.
    #[error("tail bound unattainable within {max_terms} terms (radius too close to 1 for this tolerance)")]
    TailBoundUnattainable { max_terms: usize },
    /// The point's certified modulus bound reaches 1.
    #[error("point lies outside the open unit disk (modulus bound {modulus_bound})")]
    PointOutsideDisk { modulus_bound: String },
    /// Malformed sampling grid.
    #[error("invalid grid: {reason}")]
    GridInvalid { reason: String },
    /// Every starlike node fell below the skip threshold.
    #[error("all grid nodes were skipped (|f| below threshold everywhere)")]
    AllNodesSkipped,
    /// Membership evidence is defined for the normalized and transformed
    /// series only.
    #[error("unsupported sequence kind {kind} for this operation")]
    UnsupportedKind { kind: String },
}
