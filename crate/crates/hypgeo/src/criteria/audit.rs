//! Closed-form difference polynomials and exact identity audits.
//!
//! Each of the four condition sets rests on a polynomial `poly(n)` that
//! expresses a weighted coefficient difference in closed form:
//!
//! * `T1`: `n A_n - (n+1) A_{n+1} = A_n · U(n) / ((d+n-1)(e+n-1) n)` on the
//!   normalized sequence, with
//!   `U(n) = n²(e+n-1)(d+n-1) - (n+1)(a+n-1)(b+n-1)(c+n-1)`.
//! * `T2`: `(2n-1) A_{2n-1} - (2n+1) A_{2n+1} = A_{2n-1} · X(n) /
//!   ((e+n-1)(d+n-1) n)` on the odd embedding, with
//!   `X(n) = n(2n-1)(d+n-1)(e+n-1) - (2n+1)(a+n-1)(b+n-1)(c+n-1)`.
//! * `T3`: `B_n - B_{n+1} = A_n · P(n) / (n(n+1)(d+n)(d+n-1)(e+n)(e+n-1))`
//!   on the normalized sequence, with `P(n)` the three-product form below.
//! * `T4`: `B_n - B_{n+1} = A_n · C(n) /
//!   ((d+n-1)(e+n-1)(d+n)(e+n)(n+1))` on the transformed sequence, with
//!   `C(n) = U(n)(d+n)(e+n)(n+1) - U(n+1)(a+n-1)(b+n-1)(c+n-1)` and
//!   `U(n) = n(d+n-1)(e+n-1) - (a+n-1)(b+n-1)(c+n-1)`.
//!
//! The audit recomputes both sides independently — the left from the ratio
//! recurrence, the right from the compact product form — and compares them
//! exactly at every n, recording nonnegativity of `poly(n)` along the way.
//! The identities are algebraic: they hold for every valid parameter tuple,
//! regardless of whether the predicate hypotheses are satisfied.

use super::Theorem;
use crate::params::ParameterSet;
use crate::rational::{rational_serde, Rational};
use crate::series::{build_sequence, difference_sequence, SequenceKind};
use num_traits::Signed;
use serde::{Deserialize, Serialize};

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `(a+n-1)(b+n-1)(c+n-1)` — the shared upper-parameter product.
fn upper_product(params: &ParameterSet, n: i64) -> Rational {
    let shift = r(n - 1);
    (params.a() + &shift) * (params.b() + &shift) * (params.c() + &shift)
}

/// `U(n) = n²(e+n-1)(d+n-1) - (n+1)(a+n-1)(b+n-1)(c+n-1)`.
fn poly_u1(params: &ParameterSet, n: i64) -> Rational {
    let shift = r(n - 1);
    r(n) * r(n) * (params.e() + &shift) * (params.d() + &shift)
        - r(n + 1) * upper_product(params, n)
}

/// `X(n) = n(2n-1)(d+n-1)(e+n-1) - (2n+1)(a+n-1)(b+n-1)(c+n-1)`.
fn poly_x(params: &ParameterSet, n: i64) -> Rational {
    let shift = r(n - 1);
    r(n) * r(2 * n - 1) * (params.d() + &shift) * (params.e() + &shift)
        - r(2 * n + 1) * upper_product(params, n)
}

/// `P(n)` in its three-product form.
fn poly_p(params: &ParameterSet, n: i64) -> Rational {
    let (d, e) = (params.d(), params.e());
    let shift = r(n - 1);
    let shift_up = r(n);
    let dd = (d + &shift_up) * (d + &shift);
    let ee = (e + &shift_up) * (e + &shift);
    let upper = upper_product(params, n);
    let upper_next =
        (params.a() + &shift_up) * (params.b() + &shift_up) * (params.c() + &shift_up);

    r(n) * r(n) * r(n + 1) * &dd * &ee
        - r(2) * r(n + 1) * r(n + 1) * (d + &shift_up) * (e + &shift_up) * &upper
        + r(n + 2) * upper_next * upper
}

/// `U(n) = n(d+n-1)(e+n-1) - (a+n-1)(b+n-1)(c+n-1)` — the transform variant.
fn poly_u4(params: &ParameterSet, n: i64) -> Rational {
    let shift = r(n - 1);
    r(n) * (params.d() + &shift) * (params.e() + &shift) - upper_product(params, n)
}

/// `C(n) = U(n)(d+n)(e+n)(n+1) - U(n+1)(a+n-1)(b+n-1)(c+n-1)`.
fn poly_c(params: &ParameterSet, n: i64) -> Rational {
    let shift_up = r(n);
    poly_u4(params, n) * (params.d() + &shift_up) * (params.e() + &shift_up) * r(n + 1)
        - poly_u4(params, n + 1) * upper_product(params, n)
}

/// Evaluates the closed-form difference polynomial of `theorem` at index `n`
/// (compact product form, never a re-expansion). Requires `n ≥ 1`.
pub fn proof_poly(theorem: Theorem, params: &ParameterSet, n: usize) -> Rational {
    assert!(n >= 1, "polynomial index starts at 1");
    let n = n as i64;
    match theorem {
        Theorem::T1 => poly_u1(params, n),
        Theorem::T2 => poly_x(params, n),
        Theorem::T3 => poly_p(params, n),
        Theorem::T4 => poly_c(params, n),
    }
}

/// The transform-variant auxiliary `U(n) = n(d+n-1)(e+n-1) -
/// (a+n-1)(b+n-1)(c+n-1)`, whose sign controls the first differences of the
/// transformed sequence and from which the fourth condition set's `C(n)` is
/// assembled. Requires `n ≥ 1`.
pub fn transform_u_poly(params: &ParameterSet, n: usize) -> Rational {
    assert!(n >= 1, "polynomial index starts at 1");
    poly_u4(params, n as i64)
}

/// Nonnegativity record for one index of the audited polynomial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NonNegEntry {
    pub n: usize,
    #[serde(with = "rational_serde")]
    pub value: Rational,
    pub nonneg: bool,
}

/// Outcome of auditing a difference identity over `1 ≤ n ≤ range.1`.
///
/// `identity_ok` is true iff the coefficient difference computed from the
/// sequence recurrence equals `A_n · poly(n) / denominator(n)` exactly at
/// every checked index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProofAuditReport {
    pub theorem: Theorem,
    pub params: ParameterSet,
    /// Inclusive n-interval that was checked.
    pub range: (usize, usize),
    pub identity_ok: bool,
    pub nonnegativity: Vec<NonNegEntry>,
}

impl ProofAuditReport {
    /// True when `poly(n) ≥ 0` at every checked index.
    pub fn all_nonnegative(&self) -> bool {
        self.nonnegativity.iter().all(|entry| entry.nonneg)
    }
}

/// Audits the difference identity of `theorem` for all `1 ≤ n ≤ len`,
/// comparing both sides exactly and recording the sign of the polynomial.
/// Requires `len ≥ 2`.
pub fn proof_identity_audit(
    theorem: Theorem,
    params: &ParameterSet,
    len: usize,
) -> ProofAuditReport {
    assert!(len >= 2, "audit needs at least two indices");
    let mut identity_ok = true;
    let mut nonnegativity = Vec::with_capacity(len);

    match theorem {
        Theorem::T1 | Theorem::T2 => {
            let kind = if theorem == Theorem::T1 {
                SequenceKind::Normalized
            } else {
                SequenceKind::OddEmbedded
            };
            let seq = build_sequence(params, len + 1, kind);
            for n in 1..=len {
                let i = n as i64;
                // weights n and n+1 for the plain series; 2n-1 and 2n+1 for
                // the odd embedding, whose n-th entry sits at z^(2n-1)
                let (w0, w1) = if theorem == Theorem::T1 {
                    (r(i), r(i + 1))
                } else {
                    (r(2 * i - 1), r(2 * i + 1))
                };
                let lhs = w0 * seq.value(n) - w1 * seq.value(n + 1);
                let shift = r(i - 1);
                let denom = (params.d() + &shift) * (params.e() + &shift) * r(i);
                let poly = proof_poly(theorem, params, n);
                let rhs = seq.value(n) * &poly / denom;
                identity_ok &= lhs == rhs;
                nonnegativity.push(NonNegEntry {
                    n,
                    nonneg: !poly.is_negative(),
                    value: poly,
                });
            }
        }
        Theorem::T3 | Theorem::T4 => {
            let kind = if theorem == Theorem::T3 {
                SequenceKind::Normalized
            } else {
                SequenceKind::Alexander
            };
            let seq = build_sequence(params, len + 2, kind);
            let diffs = difference_sequence(&seq);
            for n in 1..=len {
                let i = n as i64;
                let lhs = diffs.value(n) - diffs.value(n + 1);
                let shift = r(i - 1);
                let shift_up = r(i);
                let denom = if theorem == Theorem::T3 {
                    r(i) * r(i + 1)
                        * (params.d() + &shift_up)
                        * (params.d() + &shift)
                        * (params.e() + &shift_up)
                        * (params.e() + &shift)
                } else {
                    (params.d() + &shift)
                        * (params.e() + &shift)
                        * (params.d() + &shift_up)
                        * (params.e() + &shift_up)
                        * r(i + 1)
                };
                let poly = proof_poly(theorem, params, n);
                let rhs = seq.value(n) * &poly / denom;
                identity_ok &= lhs == rhs;
                nonnegativity.push(NonNegEntry {
                    n,
                    nonneg: !poly.is_negative(),
                    value: poly,
                });
            }
        }
    }

    ProofAuditReport {
        theorem,
        params: params.clone(),
        range: (1, len),
        identity_ok,
        nonnegativity,
    }
}
