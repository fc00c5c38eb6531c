//! Monotone-chain checks on coefficient prefixes.
//!
//! Three classical sequence criteria are implemented over exact rationals
//! with non-strict comparisons throughout:
//!
//! * **Fejér**: `A_n ≥ 0` with `{n A_n}` and `{n A_n - (n+1) A_{n+1}}` both
//!   non-increasing implies the series is starlike.
//! * **Ozaki**: `1 ≥ 2A_2 ≥ ⋯ ≥ nA_n ≥ ⋯ ≥ 0` or
//!   `1 ≤ 2A_2 ≤ ⋯ ≤ nA_n ≤ ⋯ ≤ 2` implies close-to-convexity with respect
//!   to `-log(1-z)`.
//! * **Ozaki, odd form**: the same two chains over `(2n+1) A_{2n+1}` for odd
//!   functions imply close-to-convexity with respect to
//!   `(1/2) log((1+z)/(1-z))`.
//!
//! Every verdict records the earliest exact inequality failure when the
//! check does not hold. These are finite-prefix checks: they examine the
//! stored coefficients and nothing beyond.

use super::CriteriaError;
use crate::rational::Rational;
use crate::series::{weighted_values, CoefficientSequence, SequenceKind};
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

/// Which chain criterion a verdict reports on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Lemma {
    Fejer,
    Ozaki,
    OzakiOdd,
}

/// Which of the two alternative chains held.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "non-increasing")]
    NonIncreasing,
    #[serde(rename = "non-decreasing-bounded-2")]
    NonDecreasingBounded2,
}

/// Result of a chain check over a stored prefix.
///
/// `first_violation_index` is 1-based over stored positions (for the odd
/// form, position `k` holds the coefficient of `z^(2k-1)`). For the
/// two-branch checks it is the earliest index at which the last surviving
/// chain fails, i.e. the point where the verdict becomes negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaVerdict {
    pub lemma: Lemma,
    pub holds: bool,
    pub branch: Option<Branch>,
    pub first_violation_index: Option<usize>,
    pub checked_length: usize,
}

/// First index (1-based) where the weighted sequence stops being
/// non-increasing or drops below zero.
fn non_increasing_violation(weighted: &[Rational]) -> Option<usize> {
    for (i, w) in weighted.iter().enumerate() {
        if w.is_negative() {
            return Some(i + 1);
        }
        if i + 1 < weighted.len() && w < &weighted[i + 1] {
            return Some(i + 1);
        }
    }
    None
}

/// First index (1-based) where the weighted sequence stops being
/// non-decreasing or exceeds 2.
fn non_decreasing_bounded_violation(weighted: &[Rational]) -> Option<usize> {
    let two = Rational::from_integer(2.into());
    for (i, w) in weighted.iter().enumerate() {
        if w > &two {
            return Some(i + 1);
        }
        if i + 1 < weighted.len() && w > &weighted[i + 1] {
            return Some(i + 1);
        }
    }
    None
}

fn two_branch_verdict(lemma: Lemma, weighted: &[Rational]) -> LemmaVerdict {
    let down = non_increasing_violation(weighted);
    let up = non_decreasing_bounded_violation(weighted);
    let (holds, branch, first_violation_index) = match (down, up) {
        (None, _) => (true, Some(Branch::NonIncreasing), None),
        (Some(_), None) => (true, Some(Branch::NonDecreasingBounded2), None),
        // both chains broken: the check fails once the later of the two
        // surviving chains is exhausted
        (Some(i), Some(j)) => (false, None, Some(i.max(j))),
    };
    LemmaVerdict {
        lemma,
        holds,
        branch,
        first_violation_index,
        checked_length: weighted.len(),
    }
}

/// Starlikeness chain check: positivity of `A_n` plus double monotonicity,
/// `{n A_n}` and `{B_n = n A_n - (n+1) A_{n+1}}` both non-increasing over the
/// stored prefix. Needs at least three coefficients.
pub fn check_fejer(seq: &CoefficientSequence) -> Result<LemmaVerdict, CriteriaError> {
    if seq.len() < 3 {
        return Err(CriteriaError::SequenceTooShort {
            needed: 3,
            got: seq.len(),
        });
    }
    let weighted = weighted_values(seq);
    // positivity and first-difference monotonicity in one pass
    let first_level = non_increasing_violation(&weighted);
    // second differences: B_n non-increasing  ⇔  B_n ≥ B_{n+1}
    let diffs: Vec<Rational> = (0..weighted.len() - 1)
        .map(|i| &weighted[i] - &weighted[i + 1])
        .collect();
    let second_level = (0..diffs.len() - 1)
        .find(|&i| diffs[i] < diffs[i + 1])
        .map(|i| i + 1);
    let first_violation_index = match (first_level, second_level) {
        (Some(i), Some(j)) => Some(i.min(j)),
        (Some(i), None) => Some(i),
        (None, Some(j)) => Some(j),
        (None, None) => None,
    };
    Ok(LemmaVerdict {
        lemma: Lemma::Fejer,
        holds: first_violation_index.is_none(),
        branch: None,
        first_violation_index,
        checked_length: seq.len(),
    })
}

/// Close-to-convexity chain check with respect to `-log(1-z)`: either chain
/// of weighted values `n A_n` must hold over the stored prefix. Needs at
/// least two coefficients and the normalization `A_1 = 1`.
pub fn check_ozaki(seq: &CoefficientSequence) -> Result<LemmaVerdict, CriteriaError> {
    if seq.len() < 2 {
        return Err(CriteriaError::SequenceTooShort {
            needed: 2,
            got: seq.len(),
        });
    }
    if !seq.value(1).is_one() {
        return Err(CriteriaError::NotNormalized {
            got: seq.value(1).to_string(),
        });
    }
    let weighted = weighted_values(seq);
    Ok(two_branch_verdict(Lemma::Ozaki, &weighted))
}

/// Odd-function variant: the same two chains over `(2k-1) A_{2k-1}` of an
/// odd-embedded sequence.
pub fn check_ozaki_odd(seq: &CoefficientSequence) -> Result<LemmaVerdict, CriteriaError> {
    if seq.kind() != SequenceKind::OddEmbedded {
        return Err(CriteriaError::WrongKind {
            expected: SequenceKind::OddEmbedded.to_string(),
            got: seq.kind().to_string(),
        });
    }
    if seq.len() < 2 {
        return Err(CriteriaError::SequenceTooShort {
            needed: 2,
            got: seq.len(),
        });
    }
    let weighted = weighted_values(seq);
    Ok(two_branch_verdict(Lemma::OzakiOdd, &weighted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ParameterSet;
    use crate::rational::{int, ratio};
    use crate::series::build_sequence;

    fn raw(kind: SequenceKind, values: Vec<Rational>) -> CoefficientSequence {
        CoefficientSequence::from_values(kind, values)
    }

    #[test]
    fn fejer_accepts_inverse_squares() {
        let p = ParameterSet::from_integers(1, 1, 1, 2, 2).unwrap();
        let seq = build_sequence(&p, 50, SequenceKind::Normalized);
        let verdict = check_fejer(&seq).unwrap();
        assert!(verdict.holds);
        assert_eq!(verdict.first_violation_index, None);
        assert_eq!(verdict.checked_length, 50);
    }

    #[test]
    fn fejer_rejects_constant_ones_at_first_index() {
        let seq = raw(SequenceKind::Normalized, vec![int(1); 6]);
        let verdict = check_fejer(&seq).unwrap();
        assert!(!verdict.holds);
        assert_eq!(verdict.first_violation_index, Some(1));
    }

    #[test]
    fn fejer_accepts_harmonic_sequence() {
        let values: Vec<Rational> = (1..=10).map(|n| ratio(1, n)).collect();
        let seq = raw(SequenceKind::Normalized, values);
        let verdict = check_fejer(&seq).unwrap();
        assert!(verdict.holds, "constant nA_n and zero B_n pass non-strictly");
    }

    #[test]
    fn fejer_needs_three_terms() {
        let seq = raw(SequenceKind::Normalized, vec![int(1), int(1)]);
        assert!(matches!(
            check_fejer(&seq),
            Err(CriteriaError::SequenceTooShort { needed: 3, .. })
        ));
    }

    #[test]
    fn ozaki_non_increasing_branch() {
        let p = ParameterSet::from_integers(1, 1, 1, 2, 2).unwrap();
        let seq = build_sequence(&p, 40, SequenceKind::Normalized);
        let verdict = check_ozaki(&seq).unwrap();
        assert!(verdict.holds);
        assert_eq!(verdict.branch, Some(Branch::NonIncreasing));
    }

    #[test]
    fn ozaki_bounded_increasing_branch() {
        // A_n = (2n-1)/n²  ⇒  n A_n = 2 - 1/n, increasing toward 2
        let values: Vec<Rational> = (1..=12).map(|n| ratio(2 * n - 1, n * n)).collect();
        let seq = raw(SequenceKind::Normalized, values);
        let verdict = check_ozaki(&seq).unwrap();
        assert!(verdict.holds);
        assert_eq!(verdict.branch, Some(Branch::NonDecreasingBounded2));
    }

    #[test]
    fn ozaki_rejects_constant_ones_when_weight_exits_both_chains() {
        let seq = raw(SequenceKind::Normalized, vec![int(1); 6]);
        let verdict = check_ozaki(&seq).unwrap();
        assert!(!verdict.holds);
        // non-increasing chain dies at n=1 (1 < 2), the bounded chain at n=3
        // (3 A_3 = 3 > 2); the verdict is settled at the later index.
        assert_eq!(verdict.first_violation_index, Some(3));
    }

    #[test]
    fn ozaki_requires_normalization() {
        let seq = raw(SequenceKind::Normalized, vec![int(2), int(1)]);
        assert!(matches!(
            check_ozaki(&seq),
            Err(CriteriaError::NotNormalized { .. })
        ));
    }

    #[test]
    fn ozaki_odd_constant_chain() {
        // A_{2k-1} = 1/(2k-1)  ⇒  weighted chain constant at 1
        let values: Vec<Rational> = (1..=10).map(|k| ratio(1, 2 * k - 1)).collect();
        let seq = raw(SequenceKind::OddEmbedded, values);
        let verdict = check_ozaki_odd(&seq).unwrap();
        assert!(verdict.holds);
        assert_eq!(verdict.branch, Some(Branch::NonIncreasing));
    }

    #[test]
    fn ozaki_odd_single_term_function() {
        let mut values = vec![int(1)];
        values.extend(std::iter::repeat(int(0)).take(7));
        let seq = raw(SequenceKind::OddEmbedded, values);
        let verdict = check_ozaki_odd(&seq).unwrap();
        assert!(verdict.holds);
        assert_eq!(verdict.branch, Some(Branch::NonIncreasing));
    }

    #[test]
    fn ozaki_odd_rejects_geometric_odd_series() {
        // all odd coefficients 1: weighted chain 1, 3, 5, … exceeds 2
        let seq = raw(SequenceKind::OddEmbedded, vec![int(1); 6]);
        let verdict = check_ozaki_odd(&seq).unwrap();
        assert!(!verdict.holds);
        assert_eq!(verdict.first_violation_index, Some(2));
    }

    #[test]
    fn ozaki_odd_rejects_wrong_kind() {
        let seq = raw(SequenceKind::Normalized, vec![int(1), int(1)]);
        assert!(matches!(
            check_ozaki_odd(&seq),
            Err(CriteriaError::WrongKind { .. })
        ));
    }
}
