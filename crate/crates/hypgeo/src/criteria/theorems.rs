//! The four sufficient-condition predicates on (a, b, c, d, e).
//!
//! Each predicate evaluates a fixed list of exact polynomial inequalities in
//! the five parameters and reports every sub-inequality with both sides.
//! The larger bound polynomials are evaluated in the exact form in which
//! they are stated (no re-expansion), as full five-parameter expressions.
//!
//! Predicates require `d > 0` and `e > 0` on top of the series-level
//! parameter invariants; the sign arguments behind the conditions need
//! positive denominator factors.

use super::{
    require_positive_lower, CriteriaError, PredicatePart, PredicateVerdict, Relation, Theorem,
};
use crate::params::ParameterSet;
use crate::rational::Rational;

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn sq(x: &Rational) -> Rational {
    x * x
}

/// Sufficient condition for the normalized series to be close-to-convex
/// with respect to `-log(1-z)`:
/// `de ≥ 2abc` and `d+e ≥ max{a+b+c, (ab+bc+ca+2(a+b+c)-1-2abc)/2,
/// 2(ab+bc+ca)-3abc}`.
pub fn thm1_predicate(params: &ParameterSet) -> Result<PredicateVerdict, CriteriaError> {
    require_positive_lower(params)?;
    let (s1, s2, s3) = params.upper_symmetric();
    let de = params.d() * params.e();
    let sum = params.d() + params.e();

    let parts = vec![
        PredicatePart::new("de >= 2abc", de, r(2) * &s3, Relation::Ge),
        PredicatePart::new("d+e >= a+b+c", sum.clone(), s1.clone(), Relation::Ge),
        PredicatePart::new(
            "d+e >= (ab+bc+ca + 2(a+b+c) - 1 - 2abc)/2",
            sum.clone(),
            (&s2 + r(2) * &s1 - r(1) - r(2) * &s3) / r(2),
            Relation::Ge,
        ),
        PredicatePart::new(
            "d+e >= 2(ab+bc+ca) - 3abc",
            sum,
            r(2) * &s2 - r(3) * &s3,
            Relation::Ge,
        ),
    ];
    Ok(PredicateVerdict::from_parts(
        Theorem::T1,
        params.clone(),
        parts,
    ))
}

/// Sufficient condition for the odd embedding to be close-to-convex with
/// respect to `(1/2) log((1+z)/(1-z))`:
/// `de ≥ 3abc` and `d+e ≥ max{a+b+c, alpha(a,b,c), 3(ab+bc+ca)-7abc}` with
/// `alpha = (2(ab+bc+ca) + 3(a+b+c) - 6abc - 1)/3`.
pub fn thm2_predicate(params: &ParameterSet) -> Result<PredicateVerdict, CriteriaError> {
    require_positive_lower(params)?;
    let (s1, s2, s3) = params.upper_symmetric();
    let de = params.d() * params.e();
    let sum = params.d() + params.e();
    let alpha = (r(2) * &s2 + r(3) * &s1 - r(6) * &s3 - r(1)) / r(3);

    let parts = vec![
        PredicatePart::new("de >= 3abc", de, r(3) * &s3, Relation::Ge),
        PredicatePart::new("d+e >= a+b+c", sum.clone(), s1.clone(), Relation::Ge),
        PredicatePart::new("d+e >= alpha(a,b,c)", sum.clone(), alpha, Relation::Ge),
        PredicatePart::new(
            "d+e >= 3(ab+bc+ca) - 7abc",
            sum,
            r(3) * &s2 - r(7) * &s3,
            Relation::Ge,
        ),
    ];
    Ok(PredicateVerdict::from_parts(
        Theorem::T2,
        params.clone(),
        parts,
    ))
}

/// Flag name on the combined-condition verdict of [`thm3_predicate`]:
/// the stated parts together with the full [`thm1_predicate`] condition set,
/// which the starlikeness argument also draws on.
pub const FLAG_WITH_THM1: &str = "with_thm1";

/// Flag name on [`thm4_predicate`]: the pair of conditions
/// `de ≥ abc` and `d+e ≥ ab+bc+ca - abc` that the monotonicity argument
/// uses directly, which the stated bound list does not imply verbatim.
pub const FLAG_PROOF_CONDITIONS: &str = "proof_conditions";

/// The four bound polynomials and the sign polynomial of the combined
/// close-to-convex + starlike condition for the normalized series.
/// All five are evaluated exactly as stated, as functions of all five
/// parameters.
fn thm3_bounds(params: &ParameterSet) -> [Rational; 5] {
    let (a, b, c, d, e) = (
        params.a(),
        params.b(),
        params.c(),
        params.d(),
        params.e(),
    );
    let (s1, s2, s3) = params.upper_symmetric();
    let de = d * e;
    let sum = d + e;
    let gap = &sum - &s1; // e + d - c - b - a

    let t1 = &gap * (&gap + r(1));

    let t2 = (&gap + r(1)) * (r(2) * &de + r(5) * &sum - r(2) * &s2 - r(5) * &s1 + r(2));

    let t3 = {
        let e2 = sq(d) + r(9) * d + r(9);
        let x = (r(-2) * b + r(-2) * a - r(8)) * c + (r(-2) * a - r(8)) * b - r(8) * a + r(29);
        let y = ((r(-2) * a - r(10)) * b - r(10) * a - r(16)) * c
            + (r(-10) * a - r(16)) * b
            - r(16) * a
            + r(15);
        let e1 = r(9) * sq(d) + &x * d + &y;
        let c2 = sq(b) + (r(4) * a + r(9)) * b + sq(a) + r(9) * a + r(7);
        let c1 = (r(4) * a + r(9)) * sq(b)
            + (r(4) * sq(a) + r(24) * a + r(3)) * b
            + r(9) * sq(a)
            + r(3) * a
            - r(11);
        let tail = (sq(a) + r(9) * a + r(7)) * sq(b)
            + (r(9) * sq(a) + r(3) * a - r(11)) * b
            + r(7) * sq(a)
            - r(11) * a
            + r(4);
        e2 * sq(e) + e1 * e + r(9) * sq(d) + y * d + c2 * sq(c) + c1 * c + tail
    };

    let t4 = {
        let e2 = r(4) * sq(d) + r(14) * d + r(7);
        let x = ((r(-2) * a - r(8)) * b - r(8) * a - r(8)) * c + (r(-8) * a - r(8)) * b
            - r(8) * a
            + r(32);
        let y = ((r(-10) * a - r(16)) * b - r(16) * a - r(8)) * c + (r(-16) * a - r(8)) * b
            - r(8) * a
            + r(11);
        let e1 = r(14) * sq(d) + &x * d + &y;
        let c2 = (r(2) * a + r(4)) * sq(b)
            + (r(2) * sq(a) + r(16) * a + r(10)) * b
            + r(4) * sq(a)
            + r(10) * a
            + r(3);
        let c1 = (r(2) * sq(a) + r(16) * a + r(10)) * sq(b)
            + (r(16) * sq(a) + r(16) * a - r(8)) * b
            + r(10) * sq(a)
            - r(8) * a
            - r(5);
        let tail = (r(4) * sq(a) + r(10) * a + r(3)) * sq(b)
            + (r(10) * sq(a) - r(8) * a - r(5)) * b
            + r(3) * sq(a)
            - r(5) * a
            + r(2);
        e2 * sq(e) + e1 * e + r(7) * sq(d) + y * d + c2 * sq(c) + c1 * c + tail
    };

    let t = {
        let e2 = r(2) * sq(d) + r(2) * d;
        let e1 = r(2) * sq(d) + (r(2) - r(8) * &s3) * d - r(8) * &s3;
        let c2 = (r(3) * sq(a) + r(3) * a) * sq(b) + (r(3) * sq(a) + r(3) * a) * b;
        let c1 = (r(3) * sq(a) + r(3) * a) * sq(b) + (r(3) * sq(a) - r(5) * a) * b;
        e2 * sq(e) + e1 * e - r(8) * &s3 * d + c2 * sq(c) + c1 * c
    };

    [t1, t2, t3, t4, t]
}

/// Sufficient condition for the normalized series to be simultaneously
/// close-to-convex with respect to `-log(1-z)` and starlike:
/// `d+e ≥ max{T1, T2, T3, T4}` and `T ≥ 0` with the bound polynomials of
/// [`thm3_bounds`]. The `with_thm1` variant flag additionally requires the
/// full T1 condition set, which the starlikeness argument relies on.
pub fn thm3_predicate(params: &ParameterSet) -> Result<PredicateVerdict, CriteriaError> {
    require_positive_lower(params)?;
    let sum = params.d() + params.e();
    let [t1, t2, t3, t4, t] = thm3_bounds(params);

    let parts = vec![
        PredicatePart::new("d+e >= T1", sum.clone(), t1, Relation::Ge),
        PredicatePart::new("d+e >= T2", sum.clone(), t2, Relation::Ge),
        PredicatePart::new("d+e >= T3", sum.clone(), t3, Relation::Ge),
        PredicatePart::new("d+e >= T4", sum, t4, Relation::Ge),
        PredicatePart::new("T >= 0", t, r(0), Relation::Ge),
    ];
    let mut verdict = PredicateVerdict::from_parts(Theorem::T3, params.clone(), parts);
    let with_thm1 = verdict.overall && thm1_predicate(params)?.overall;
    verdict
        .variant_flags
        .insert(FLAG_WITH_THM1.to_owned(), with_thm1);
    Ok(verdict)
}

/// The three bound polynomials and the sign polynomial of the combined
/// condition for the integral transform.
fn thm4_bounds(params: &ParameterSet) -> [Rational; 4] {
    let (a, b, c, d, e) = (
        params.a(),
        params.b(),
        params.c(),
        params.d(),
        params.e(),
    );
    let (s1, s2, s3) = params.upper_symmetric();
    let de = d * e;
    let sum = d + e;
    let gap = &sum - &s1;

    let t1 = (&gap + r(1)) * (&gap + r(2));

    let t2 = r(2) * (&gap + r(2)) * (&de + r(2) * &sum - &s2 - &s1 + r(1));

    let t3 = {
        let e2 = sq(d) + r(7) * d + r(5);
        let x = (r(-2) * b + r(-2) * a - r(4)) * c + (r(-2) * a - r(4)) * b - r(4) * a + r(21);
        let y = ((r(-2) * a - r(6)) * b - r(6) * a - r(4)) * c + (r(-6) * a - r(4)) * b
            - r(4) * a
            + r(9);
        let e1 = r(7) * sq(d) + &x * d + &y;
        let c2 = sq(b) + (r(4) * a + r(3)) * b + sq(a) + r(3) * a + r(1);
        let c1 = (r(4) * a + r(3)) * sq(b)
            + (r(4) * sq(a) + r(4) * a - r(5)) * b
            + r(3) * sq(a)
            - r(5) * a
            - r(3);
        let tail = (sq(a) + r(3) * a + r(1)) * sq(b)
            + (r(3) * sq(a) - r(5) * a - r(3)) * b
            + sq(a)
            - r(3) * a
            + r(2);
        e2 * sq(e) + e1 * e + r(5) * sq(d) + y * d + c2 * sq(c) + c1 * c + tail
    };

    let t = {
        let e2 = r(2) * sq(d) + r(2) * d;
        let e1 = r(2) * sq(d) + (r(2) - r(4) * &s3) * d - r(4) * &s3;
        let c2 = (sq(a) + a) * sq(b) + (sq(a) + a) * b;
        let c1 = (sq(a) + a) * sq(b) + (sq(a) - r(3) * a) * b;
        e2 * sq(e) + e1 * e - r(4) * &s3 * d + c2 * sq(c) + c1 * c
    };

    [t1, t2, t3, t]
}

/// Sufficient condition for the integral transform (coefficients `A_n/n`)
/// to be close-to-convex with respect to `-log(1-z)` and starlike:
/// `d+e ≥ max{T1, T2, T3}` and `T ≥ 0` with the bound polynomials of
/// [`thm4_bounds`]. The `proof_conditions` variant flag evaluates
/// `de ≥ abc ∧ d+e ≥ ab+bc+ca - abc`, the pair the monotonicity argument
/// actually invokes.
pub fn thm4_predicate(params: &ParameterSet) -> Result<PredicateVerdict, CriteriaError> {
    require_positive_lower(params)?;
    let (s1, s2, s3) = params.upper_symmetric();
    let _ = s1;
    let de = params.d() * params.e();
    let sum = params.d() + params.e();
    let [t1, t2, t3, t] = thm4_bounds(params);

    let parts = vec![
        PredicatePart::new("d+e >= T1", sum.clone(), t1, Relation::Ge),
        PredicatePart::new("d+e >= T2", sum.clone(), t2, Relation::Ge),
        PredicatePart::new("d+e >= T3", sum.clone(), t3, Relation::Ge),
        PredicatePart::new("T >= 0", t, r(0), Relation::Ge),
    ];
    let mut verdict = PredicateVerdict::from_parts(Theorem::T4, params.clone(), parts);
    let proof_conditions = de >= s3 && sum >= &s2 - &s3;
    verdict
        .variant_flags
        .insert(FLAG_PROOF_CONDITIONS.to_owned(), proof_conditions);
    Ok(verdict)
}

/// Dispatches to the predicate for `theorem`.
pub fn predicate(
    theorem: Theorem,
    params: &ParameterSet,
) -> Result<PredicateVerdict, CriteriaError> {
    match theorem {
        Theorem::T1 => thm1_predicate(params),
        Theorem::T2 => thm2_predicate(params),
        Theorem::T3 => thm3_predicate(params),
        Theorem::T4 => thm4_predicate(params),
    }
}
