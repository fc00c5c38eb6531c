//! Exact coefficient computation for the normalized series
//! `f(z) = z + Σ_{n≥2} A_n z^n` attached to ₃F₂(a,b,c;d,e;z), together with
//! its odd embedding `z ↦ f-with-z²` and the integral (Alexander) transform
//! whose n-th coefficient is `A_n / n`.
//!
//! Everything here is pure, exact rational arithmetic; no rounding occurs at
//! any point. Coefficients are produced by the one-step ratio recurrence
//! `A_{n+1} = A_n · (a+n-1)(b+n-1)(c+n-1) / ((d+n-1)(e+n-1) n)`, one small
//! rational multiply per step; tests cross-check against the direct
//! rising-factorial products.

use crate::params::ParameterSet;
use crate::rational::Rational;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Errors from the coefficient-level operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// Entrywise products need equal-length coefficient lists.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
}

/// Which series a coefficient list belongs to.
///
/// The stored values are indexed 1-based; entry `n` is the coefficient of
/// `z^n` for `Normalized` and `Alexander`, and of `z^(2n-1)` for
/// `OddEmbedded`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SequenceKind {
    /// `z + Σ A_n z^n` with `A_n` the Pochhammer-quotient coefficients.
    #[serde(rename = "normalized")]
    Normalized,
    /// Odd series `z + Σ A_n z^(2n-1)`, the normalized series taken in `z²`.
    #[serde(rename = "odd-embedded")]
    OddEmbedded,
    /// Termwise-integrated series `z + Σ (A_n/n) z^n`.
    #[serde(rename = "alexander")]
    Alexander,
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SequenceKind::Normalized => "normalized",
            SequenceKind::OddEmbedded => "odd-embedded",
            SequenceKind::Alexander => "alexander",
        };
        f.write_str(name)
    }
}

/// Exact prefix `A_1..A_N` of one of the three series.
///
/// Sequences built from a [`ParameterSet`] carry it along so evaluators can
/// extend them on demand; hand-made sequences (via [`from_values`]) have no
/// parameters and are treated as finite polynomials downstream.
///
/// [`from_values`]: CoefficientSequence::from_values
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSequence {
    params: Option<ParameterSet>,
    kind: SequenceKind,
    values: Vec<Rational>,
}

impl CoefficientSequence {
    /// Wraps an explicit coefficient list (1-based entries, `values[0]` is
    /// `A_1`). Used for hand-made sequences in lemma checks and tests.
    pub fn from_values(kind: SequenceKind, values: Vec<Rational>) -> Self {
        assert!(!values.is_empty(), "a coefficient sequence needs at least A_1");
        CoefficientSequence {
            params: None,
            kind,
            values,
        }
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn params(&self) -> Option<&ParameterSet> {
        self.params.as_ref()
    }

    /// Number of stored coefficients N.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The stored coefficients `A_1..A_N` in order.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// 1-based access: `value(n)` is `A_n`. Panics if `n` is out of range.
    pub fn value(&self, n: usize) -> &Rational {
        assert!(n >= 1 && n <= self.values.len(), "index {n} out of range");
        &self.values[n - 1]
    }

    /// Extends a parameter-backed sequence in place so it holds at least
    /// `len` coefficients. No-op for hand-made sequences and shorter targets.
    pub fn ensure_len(&mut self, len: usize) {
        let params = match &self.params {
            Some(p) => p.clone(),
            None => return,
        };
        while self.values.len() < len {
            let n = self.values.len();
            let next = next_value(&params, self.kind, &self.values[n - 1], n);
            self.values.push(next);
        }
    }

    /// The exponent of `z` carried by the `n`-th stored coefficient.
    pub fn exponent(&self, n: usize) -> usize {
        match self.kind {
            SequenceKind::OddEmbedded => 2 * n - 1,
            _ => n,
        }
    }

    /// Exact ratio of stored values `A_{n+1}/A_n` in closed form, for
    /// parameter-backed sequences.
    pub fn stored_ratio(&self, n: usize) -> Option<Rational> {
        let params = self.params.as_ref()?;
        let mut ratio = coefficient_ratio(params, n);
        if self.kind == SequenceKind::Alexander {
            ratio *= Rational::new(n.into(), (n + 1).into());
        }
        Some(ratio)
    }
}

/// Rising factorial `x (x+1) ⋯ (x+n-1)`; the empty product is 1.
pub fn pochhammer(x: &Rational, n: usize) -> Rational {
    let mut product = Rational::one();
    let mut factor = x.clone();
    for _ in 0..n {
        product *= &factor;
        factor += Rational::one();
    }
    product
}

/// Exact `A_{n+1}/A_n = (a+n-1)(b+n-1)(c+n-1) / ((d+n-1)(e+n-1) n)` for the
/// normalized series, without computing either coefficient. Requires `n ≥ 1`.
pub fn coefficient_ratio(params: &ParameterSet, n: usize) -> Rational {
    assert!(n >= 1, "coefficient index starts at 1");
    let shift = Rational::from_integer((n as i64 - 1).into());
    let numer = (params.a() + &shift) * (params.b() + &shift) * (params.c() + &shift);
    let denom = (params.d() + &shift) * (params.e() + &shift) * Rational::from_integer(n.into());
    numer / denom
}

/// Exact normalized coefficient `A_n`; `A_1 = 1`. Requires `n ≥ 1`.
pub fn coefficient(params: &ParameterSet, n: usize) -> Rational {
    assert!(n >= 1, "coefficient index starts at 1");
    let mut value = Rational::one();
    for k in 1..n {
        value *= coefficient_ratio(params, k);
    }
    value
}

fn next_value(params: &ParameterSet, kind: SequenceKind, current: &Rational, n: usize) -> Rational {
    let mut ratio = coefficient_ratio(params, n);
    if kind == SequenceKind::Alexander {
        ratio *= Rational::new(n.into(), (n + 1).into());
    }
    current * ratio
}

/// Builds the exact prefix `A_1..A_N` of the requested series by the ratio
/// recurrence (one rational multiply per step). Requires `len ≥ 2`.
pub fn build_sequence(params: &ParameterSet, len: usize, kind: SequenceKind) -> CoefficientSequence {
    assert!(len >= 2, "a sequence prefix needs at least two terms");
    let mut values = Vec::with_capacity(len);
    values.push(Rational::one());
    for n in 1..len {
        let next = next_value(params, kind, &values[n - 1], n);
        values.push(next);
    }
    CoefficientSequence {
        params: Some(params.clone()),
        kind,
        values,
    }
}

/// Entrywise (convolution) product of two equal-length coefficient lists.
pub fn hadamard(s1: &[Rational], s2: &[Rational]) -> Result<Vec<Rational>, SeriesError> {
    if s1.len() != s2.len() {
        return Err(SeriesError::LengthMismatch {
            left: s1.len(),
            right: s2.len(),
        });
    }
    Ok(s1.iter().zip(s2).map(|(x, y)| x * y).collect())
}

/// Forward differences `B_n = n A_n - (n+1) A_{n+1}` of the weighted stored
/// values, for `1 ≤ n ≤ N-1`.
#[derive(Debug, Clone, PartialEq)]
pub struct DifferenceSequence<'a> {
    base: &'a CoefficientSequence,
    values: Vec<Rational>,
}

impl<'a> DifferenceSequence<'a> {
    pub fn base(&self) -> &CoefficientSequence {
        self.base
    }

    /// The differences `B_1..B_{N-1}` in order.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// 1-based access: `value(n)` is `B_n`.
    pub fn value(&self, n: usize) -> &Rational {
        assert!(n >= 1 && n <= self.values.len(), "index {n} out of range");
        &self.values[n - 1]
    }
}

/// Computes `B_n = n A_n - (n+1) A_{n+1}` exactly over the stored prefix.
/// Requires at least two stored coefficients.
pub fn difference_sequence(seq: &CoefficientSequence) -> DifferenceSequence<'_> {
    assert!(seq.len() >= 2, "difference sequence needs at least two terms");
    let values = (1..seq.len())
        .map(|n| {
            let weighted = Rational::from_integer(n.into()) * seq.value(n);
            let next = Rational::from_integer((n + 1).into()) * seq.value(n + 1);
            weighted - next
        })
        .collect();
    DifferenceSequence { base: seq, values }
}

/// Weight attached to the `n`-th stored coefficient in the monotone chains:
/// `n` for ordinary series, `2n-1` for the odd embedding.
pub fn chain_weight(kind: SequenceKind, n: usize) -> Rational {
    match kind {
        SequenceKind::OddEmbedded => Rational::from_integer((2 * n as i64 - 1).into()),
        _ => Rational::from_integer((n as i64).into()),
    }
}

/// `weight(n) * A_n` over the stored prefix; the sequence whose monotone
/// behavior the lemma checks examine.
pub fn weighted_values(seq: &CoefficientSequence) -> Vec<Rational> {
    (1..=seq.len())
        .map(|n| chain_weight(seq.kind(), n) * seq.value(n))
        .collect()
}
