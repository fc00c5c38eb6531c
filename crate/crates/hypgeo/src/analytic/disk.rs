//! Sampled positivity functionals over polar grids in the unit disk.
//!
//! The three functionals are the real parts whose positivity characterizes
//! the geometric properties under study:
//!
//! * `ctc_log`:    `Re((1-z)  f'(z))` — close-to-convexity w.r.t. `-log(1-z)`
//! * `ctc_atanh`:  `Re((1-z²) f'(z))` — close-to-convexity w.r.t.
//!   `(1/2) log((1+z)/(1-z))`
//! * `starlike`:   `Re(z f'(z)/f(z))`
//!
//! Grid nodes `z = r_i e^(iθ_j)` are evaluated independently (and in
//! parallel); the reduction is a deterministic minimum — ties broken by
//! lexicographic `(r, θ)` order — so results are independent of scheduling.
//! Each node propagates the series truncation bounds through the functional
//! via first-order perturbation bounds; the grid-level `error_budget` is the
//! maximum node budget, and `positive` demands `min_value - error_budget > 0`
//! strictly. A nonpositive margin only means the sample is inconclusive:
//! sampling is evidence, never proof.

use super::complex::{Complex, ComplexPoint};
use super::eval::{EvalOptions, SeriesTable};
use super::real::{unit_angles, Real};
use super::AnalyticError;
use crate::params::ParameterSet;
use crate::rational::{ratio, Rational};
use crate::series::{build_sequence, CoefficientSequence, SequenceKind};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;

/// The real-part functional sampled over the disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiskFunctional {
    #[serde(rename = "ctc_log")]
    CtcLog,
    #[serde(rename = "ctc_atanh")]
    CtcAtanh,
    #[serde(rename = "starlike")]
    Starlike,
}

impl fmt::Display for DiskFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiskFunctional::CtcLog => "ctc_log",
            DiskFunctional::CtcAtanh => "ctc_atanh",
            DiskFunctional::Starlike => "starlike",
        })
    }
}

/// Polar sampling grid: `n_r` radii equally spaced in `(0, r_max]` and
/// `n_theta` angles equally spaced in `[0, 2π)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub n_r: usize,
    pub n_theta: usize,
    #[serde(with = "crate::rational::rational_serde")]
    pub r_max: Rational,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            n_r: 64,
            n_theta: 256,
            r_max: ratio(19, 20),
        }
    }
}

impl GridSpec {
    fn validate(&self) -> Result<(), AnalyticError> {
        if self.n_r < 1 || self.n_theta < 1 {
            return Err(AnalyticError::GridInvalid {
                reason: format!("need n_r >= 1 and n_theta >= 1, got {}x{}", self.n_r, self.n_theta),
            });
        }
        if !(self.r_max > Rational::from_integer(0.into()) && self.r_max <= ratio(99, 100)) {
            return Err(AnalyticError::GridInvalid {
                reason: format!("r_max = {} outside (0, 99/100]", self.r_max),
            });
        }
        Ok(())
    }

    fn radius(&self, i: usize) -> Rational {
        &self.r_max * Rational::new(BigInt::from(i as u64), BigInt::from(self.n_r as u64))
    }
}

/// Minimum of a sampled functional over a polar grid, with the argument of
/// the minimum and a dominating bound on the evaluation error at any node.
#[derive(Debug, Clone)]
pub struct DiskEvidence {
    pub functional: DiskFunctional,
    pub grid: GridSpec,
    pub min_value: Real,
    pub argmin: ComplexPoint,
    pub error_budget: Real,
    pub positive: bool,
    /// Starlike nodes where |f(z)| fell below 10·tol and were skipped.
    pub skipped_nodes: usize,
}

struct NodeOutcome {
    value: Real,
    budget: Real,
    radius_index: usize,
    angle_index: usize,
    point: ComplexPoint,
}

fn better(a: &NodeOutcome, b: &NodeOutcome) -> bool {
    // strict (value, r, θ) lexicographic order: used as "b is better than a"
    match b.value.total_cmp(&a.value) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => {
            (b.radius_index, b.angle_index) < (a.radius_index, a.angle_index)
        }
    }
}

struct NodeReduction {
    best: Option<NodeOutcome>,
    max_budget: Real,
    skipped: usize,
}

impl NodeReduction {
    fn empty() -> Self {
        NodeReduction {
            best: None,
            max_budget: Real::zero(),
            skipped: 0,
        }
    }

    fn absorb_outcome(mut self, outcome: Option<NodeOutcome>) -> Self {
        match outcome {
            None => self.skipped += 1,
            Some(node) => {
                if node.budget > self.max_budget {
                    self.max_budget = node.budget.clone();
                }
                match &self.best {
                    Some(current) if !better(current, &node) => {}
                    _ => self.best = Some(node),
                }
            }
        }
        self
    }

    fn merge(self, other: NodeReduction) -> Self {
        let mut merged = NodeReduction {
            best: self.best,
            max_budget: if other.max_budget > self.max_budget {
                other.max_budget
            } else {
                self.max_budget
            },
            skipped: self.skipped + other.skipped,
        };
        if let Some(node) = other.best {
            match &merged.best {
                Some(current) if !better(current, &node) => {}
                _ => merged.best = Some(node),
            }
        }
        merged
    }
}

/// Evaluates one functional at one node. `Ok(None)` marks a skipped node.
fn eval_node(
    table: &SeriesTable,
    functional: DiskFunctional,
    z: &ComplexPoint,
    opts: &EvalOptions,
) -> Result<Option<(Real, Real)>, AnalyticError> {
    match functional {
        DiskFunctional::CtcLog => {
            let deriv = table.eval_at(z, opts, true)?;
            let one_minus = &Complex::one() - z.value();
            let value = (&one_minus * &deriv.value).re;
            let budget = one_minus.magnitude_bound() * deriv.truncation_bound;
            Ok(Some((value, budget)))
        }
        DiskFunctional::CtcAtanh => {
            let deriv = table.eval_at(z, opts, true)?;
            let z_sq = z.value() * z.value();
            let one_minus_sq = &Complex::one() - &z_sq;
            let value = (&one_minus_sq * &deriv.value).re;
            let budget = one_minus_sq.magnitude_bound() * deriv.truncation_bound;
            Ok(Some((value, budget)))
        }
        DiskFunctional::Starlike => {
            // limit value at the origin: z f'/f → 1
            let origin_cutoff = Rational::new(BigInt::from(1u8), BigInt::from(10u64).pow(8));
            if z.modulus_bound() < &origin_cutoff {
                return Ok(Some((Real::one(), Real::zero())));
            }
            let series = table.eval_at(z, opts, false)?;
            let f_mod = series.value.modulus();
            let skip_threshold =
                Real::from_rational(&opts.tol) * Real::from_u64(10);
            if f_mod < skip_threshold {
                return Ok(None);
            }
            let deriv = table.eval_at(z, opts, true)?;
            let quotient = z.value() * &deriv.value;
            let value = quotient.div(&series.value).re;
            // first-order propagation of both truncation bounds through the
            // quotient: |Δ(z w / v)| ≤ |z| (Δw/|v| + |w| Δv / |v|²)
            let z_mag = z.value().magnitude_bound();
            let w_mod = deriv.value.modulus();
            let budget = &z_mag
                * &(&(&deriv.truncation_bound / &f_mod)
                    + &(&(&w_mod * &series.truncation_bound) / &(&f_mod * &f_mod)));
            Ok(Some((value, budget)))
        }
    }
}

/// Samples `functional` over the polar grid and returns the exact minimum of
/// the sampled values with its argument, a dominating error budget, and the
/// strict positivity verdict.
pub fn disk_minimum(
    seq: &CoefficientSequence,
    functional: DiskFunctional,
    grid: &GridSpec,
    opts: &EvalOptions,
) -> Result<DiskEvidence, AnalyticError> {
    grid.validate()?;
    let mut table = SeriesTable::new(seq);
    // worst-case radius bound shared by all nodes (includes the polar
    // placement margin)
    let r_prepare = ComplexPoint::from_polar(&grid.r_max, &(Real::one(), Real::zero()))?
        .modulus_bound()
        .clone();
    match functional {
        DiskFunctional::Starlike => {
            table.prepare(&r_prepare, opts, false)?;
            table.prepare(&r_prepare, opts, true)?;
        }
        _ => table.prepare(&r_prepare, opts, true)?,
    }
    let table = &table;
    let angles = unit_angles(grid.n_theta);
    let angles = &angles;

    let total = grid.n_r * grid.n_theta;
    let reduction = (0..total)
        .into_par_iter()
        .map(|k| {
            let radius_index = k / grid.n_theta + 1;
            let angle_index = k % grid.n_theta;
            let z = ComplexPoint::from_polar(&grid.radius(radius_index), &angles[angle_index])?;
            let outcome = eval_node(table, functional, &z, opts)?.map(|(value, budget)| {
                NodeOutcome {
                    value,
                    budget,
                    radius_index,
                    angle_index,
                    point: z,
                }
            });
            Ok(outcome)
        })
        .try_fold(
            || NodeReduction::empty(),
            |acc, outcome: Result<Option<NodeOutcome>, AnalyticError>| {
                Ok(acc.absorb_outcome(outcome?))
            },
        )
        .try_reduce(|| NodeReduction::empty(), |a, b| Ok(a.merge(b)))?;

    let best = reduction.best.ok_or(AnalyticError::AllNodesSkipped)?;
    let positive = {
        let margin = &best.value - &reduction.max_budget;
        margin.is_positive()
    };
    Ok(DiskEvidence {
        functional,
        grid: grid.clone(),
        min_value: best.value,
        argmin: best.point,
        error_budget: reduction.max_budget,
        positive,
        skipped_nodes: reduction.skipped,
    })
}

/// Samples the two functionals whose joint positivity supports membership in
/// the class of functions close-to-convex w.r.t. `-log(1-z)` and starlike:
/// returns `(ctc_log evidence, starlike evidence)`. `kind` selects the
/// normalized series or its integral transform.
pub fn ks_star_evidence(
    params: &ParameterSet,
    kind: SequenceKind,
    grid: &GridSpec,
    opts: &EvalOptions,
) -> Result<(DiskEvidence, DiskEvidence), AnalyticError> {
    if kind == SequenceKind::OddEmbedded {
        return Err(AnalyticError::UnsupportedKind {
            kind: kind.to_string(),
        });
    }
    let seq = build_sequence(params, 2, kind);
    let ctc = disk_minimum(&seq, DiskFunctional::CtcLog, grid, opts)?;
    let star = disk_minimum(&seq, DiskFunctional::Starlike, grid, opts)?;
    Ok((ctc, star))
}
