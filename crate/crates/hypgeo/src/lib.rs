//! Exact-arithmetic analysis of geometric properties of the normalized
//! series `z·₃F₂(a,b,c;d,e;z)` on the unit disk.
//!
//! The crate has five layers:
//!
//! * [`rational`] / [`params`] — exact rational values and the validated
//!   five-parameter tuple.
//! * [`series`] — coefficient prefixes of the normalized series, its odd
//!   embedding, and its integral (Alexander) transform, plus entrywise
//!   products and weighted differences. All exact.
//! * [`criteria`] — the four sufficient-condition predicates on the
//!   parameters, monotone-chain checks on coefficient prefixes, and exact
//!   audits of the closed-form difference identities.
//! * [`analytic`] — high-precision evaluation of the series and its
//!   derivative with certified truncation bounds, and sampled positivity
//!   functionals over polar grids in the disk.
//! * [`scanner`] / [`cli`] — 2-D parameter-region sweeps with CSV/JSON
//!   reports, and the command-line surface.
//!
//! See the crate examples for a runnable tour of each capability.

pub mod analytic;
pub mod cli;
pub mod criteria;
pub mod params;
pub mod rational;
pub mod scanner;
pub mod series;

pub use params::{ParamError, ParameterSet};
pub use rational::{parse_rational, Rational, RationalParseError};
pub use series::{
    build_sequence, coefficient, coefficient_ratio, difference_sequence, hadamard, pochhammer,
    CoefficientSequence, DifferenceSequence, SequenceKind,
};
