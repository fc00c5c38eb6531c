//! Machine-checkable sufficient conditions for geometric properties of the
//! normalized series and its transforms: four inequality predicates on the
//! parameters, monotone-chain checks on coefficient prefixes, and exact
//! audits of the closed-form difference identities behind them.

mod audit;
mod lemmas;
mod theorems;

pub use audit::{
    proof_identity_audit, proof_poly, transform_u_poly, NonNegEntry, ProofAuditReport,
};
pub use lemmas::{check_fejer, check_ozaki, check_ozaki_odd, Branch, Lemma, LemmaVerdict};
pub use theorems::{
    predicate, thm1_predicate, thm2_predicate, thm3_predicate, thm4_predicate,
    FLAG_PROOF_CONDITIONS, FLAG_WITH_THM1,
};

use crate::params::ParameterSet;
use crate::rational::{rational_serde, Rational};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// The four built-in sufficient-condition sets.
///
/// * `T1` — the normalized series is close-to-convex with respect to
///   `-log(1-z)`.
/// * `T2` — the odd embedding is close-to-convex with respect to
///   `(1/2) log((1+z)/(1-z))`.
/// * `T3` — the normalized series is close-to-convex with respect to
///   `-log(1-z)` and starlike (both at once).
/// * `T4` — the integral transform (coefficients `A_n/n`) has the same pair
///   of properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Theorem {
    T1,
    T2,
    T3,
    T4,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [Theorem::T1, Theorem::T2, Theorem::T3, Theorem::T4];

    /// Numeric id as used by the CLI (`--theorem 1`..`--theorem 4`).
    pub fn number(self) -> u8 {
        match self {
            Theorem::T1 => 1,
            Theorem::T2 => 2,
            Theorem::T3 => 3,
            Theorem::T4 => 4,
        }
    }

    pub fn from_number(n: u8) -> Option<Theorem> {
        match n {
            1 => Some(Theorem::T1),
            2 => Some(Theorem::T2),
            3 => Some(Theorem::T3),
            4 => Some(Theorem::T4),
            _ => None,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.number())
    }
}

/// Direction of a predicate comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "<=")]
    Le,
}

impl Relation {
    pub fn eval(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Ge => lhs >= rhs,
            Relation::Le => lhs <= rhs,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Ge => ">=",
            Relation::Le => "<=",
        })
    }
}

/// One exact sub-inequality of a predicate, with both sides evaluated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PredicatePart {
    pub name: String,
    #[serde(with = "rational_serde")]
    pub lhs: Rational,
    #[serde(with = "rational_serde")]
    pub rhs: Rational,
    pub relation: Relation,
    pub satisfied: bool,
}

impl PredicatePart {
    fn new(name: &str, lhs: Rational, rhs: Rational, relation: Relation) -> Self {
        let satisfied = relation.eval(&lhs, &rhs);
        PredicatePart {
            name: name.to_owned(),
            lhs,
            rhs,
            relation,
            satisfied,
        }
    }
}

/// Outcome of one sufficient-condition predicate at a parameter tuple:
/// the conjunction of exact sub-inequalities, plus named alternative
/// condition sets (`variant_flags`) that the analyses use alongside the
/// stated parts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PredicateVerdict {
    pub theorem: Theorem,
    pub params: ParameterSet,
    pub overall: bool,
    pub parts: Vec<PredicatePart>,
    pub variant_flags: BTreeMap<String, bool>,
}

impl PredicateVerdict {
    fn from_parts(theorem: Theorem, params: ParameterSet, parts: Vec<PredicatePart>) -> Self {
        let overall = parts.iter().all(|p| p.satisfied);
        PredicateVerdict {
            theorem,
            params,
            overall,
            parts,
            variant_flags: BTreeMap::new(),
        }
    }

    /// First unsatisfied part, if any.
    pub fn failing_part(&self) -> Option<&PredicatePart> {
        self.parts.iter().find(|p| !p.satisfied)
    }

    pub fn flag(&self, name: &str) -> Option<bool> {
        self.variant_flags.get(name).copied()
    }
}

/// Errors from predicate and chain-check entry points.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriteriaError {
    /// The predicates additionally require d > 0 and e > 0.
    #[error("predicate requires positive lower parameters, got d = {d}, e = {e}")]
    NonPositiveLowerParams { d: String, e: String },
    /// A chain check got fewer coefficients than it can meaningfully examine.
    #[error("sequence too short: need at least {needed} coefficients, got {got}")]
    SequenceTooShort { needed: usize, got: usize },
    /// The odd-chain check applies only to odd-embedded sequences.
    #[error("wrong sequence kind: expected {expected}, got {got}")]
    WrongKind { expected: String, got: String },
    /// The ordinary chain check presumes the normalization A_1 = 1.
    #[error("sequence is not normalized: A_1 = {got}, expected 1")]
    NotNormalized { got: String },
}

pub(crate) fn require_positive_lower(params: &ParameterSet) -> Result<(), CriteriaError> {
    if params.lower_params_positive() {
        Ok(())
    } else {
        Err(CriteriaError::NonPositiveLowerParams {
            d: params.d().to_string(),
            e: params.e().to_string(),
        })
    }
}
