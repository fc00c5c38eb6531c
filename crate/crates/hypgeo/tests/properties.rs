//! Property-based invariants over random rational parameter tuples.

use hypgeo::analytic::{eval_derivative, eval_series, ComplexPoint, EvalOptions};
use hypgeo::criteria::{
    check_fejer, check_ozaki, check_ozaki_odd, proof_identity_audit, proof_poly, thm1_predicate,
    thm2_predicate, Branch, Theorem,
};
use hypgeo::rational::{int, ratio};
use hypgeo::series::{build_sequence, coefficient, coefficient_ratio, hadamard, SequenceKind};
use hypgeo::{ParameterSet, Rational};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

/// Positive rational in (0, max] with denominator up to 8.
fn positive_rational(max: i64) -> impl Strategy<Value = Rational> {
    (1i64..=8).prop_flat_map(move |den| (1i64..=max * den).prop_map(move |num| ratio(num, den)))
}

fn upper_params() -> impl Strategy<Value = (Rational, Rational, Rational)> {
    (positive_rational(3), positive_rational(3), positive_rational(3))
}

fn lower_params() -> impl Strategy<Value = (Rational, Rational)> {
    (positive_rational(10), positive_rational(10))
}

fn any_params() -> impl Strategy<Value = ParameterSet> {
    (upper_params(), lower_params()).prop_map(|((a, b, c), (d, e))| {
        ParameterSet::new(a, b, c, d, e).expect("positive rationals are valid")
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn ratio_steps_reproduce_coefficients(params in any_params()) {
        for n in 1..12usize {
            let stepped = coefficient(&params, n) * coefficient_ratio(&params, n);
            prop_assert_eq!(stepped, coefficient(&params, n + 1));
        }
    }

    #[test]
    fn coefficients_invariant_under_parameter_symmetries(params in any_params()) {
        let permuted = ParameterSet::new(
            params.c().clone(),
            params.a().clone(),
            params.b().clone(),
            params.e().clone(),
            params.d().clone(),
        ).unwrap();
        for n in 1..10usize {
            prop_assert_eq!(coefficient(&params, n), coefficient(&permuted, n));
        }
    }

    #[test]
    fn results_stay_in_lowest_terms(params in any_params()) {
        let seq = build_sequence(&params, 24, SequenceKind::Normalized);
        for value in seq.values() {
            prop_assert!(value.denom().is_positive());
            let gcd = num_integer::gcd(value.numer().clone(), value.denom().clone());
            prop_assert!(gcd.abs().is_one());
        }
    }

    #[test]
    fn transform_values_times_index_match(params in any_params()) {
        let norm = build_sequence(&params, 16, SequenceKind::Normalized);
        let alex = build_sequence(&params, 16, SequenceKind::Alexander);
        for n in 1..=16usize {
            prop_assert_eq!(
                alex.value(n) * Rational::from_integer(n.into()),
                norm.value(n).clone()
            );
        }
    }

    #[test]
    fn hadamard_identity_commutative_associative(
        xs in prop::collection::vec((1i64..40, 1i64..9).prop_map(|(n, d)| ratio(n, d)), 1..8),
        ys in prop::collection::vec((-20i64..20, 1i64..7).prop_map(|(n, d)| ratio(n, d)), 1..8),
    ) {
        let len = xs.len().min(ys.len());
        let (xs, ys) = (&xs[..len], &ys[..len]);
        let ones = vec![int(1); len];
        prop_assert_eq!(hadamard(xs, &ones).unwrap(), xs.to_vec());
        prop_assert_eq!(hadamard(xs, ys).unwrap(), hadamard(ys, xs).unwrap());
        let zs = vec![ratio(1, 3); len];
        let left = hadamard(&hadamard(xs, ys).unwrap(), &zs).unwrap();
        let right = hadamard(xs, &hadamard(ys, &zs).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn predicate_overall_is_conjunction(params in any_params()) {
        for theorem in Theorem::ALL {
            let verdict = hypgeo::criteria::predicate(theorem, &params).unwrap();
            prop_assert_eq!(verdict.overall, verdict.parts.iter().all(|p| p.satisfied));
        }
    }

    #[test]
    fn predicates_symmetric_in_upper_and_lower(params in any_params()) {
        let swapped = ParameterSet::new(
            params.b().clone(),
            params.c().clone(),
            params.a().clone(),
            params.e().clone(),
            params.d().clone(),
        ).unwrap();
        let v1 = thm1_predicate(&params).unwrap();
        let v2 = thm1_predicate(&swapped).unwrap();
        prop_assert_eq!(v1.overall, v2.overall);
        let w1 = thm2_predicate(&params).unwrap();
        let w2 = thm2_predicate(&swapped).unwrap();
        prop_assert_eq!(w1.overall, w2.overall);
        for (p1, p2) in v1.parts.iter().zip(&v2.parts) {
            prop_assert_eq!(&p1.rhs, &p2.rhs);
        }
    }

    #[test]
    fn first_condition_set_implies_monotone_chain(params in any_params()) {
        let verdict = thm1_predicate(&params).unwrap();
        prop_assume!(verdict.overall);
        let seq = build_sequence(&params, 60, SequenceKind::Normalized);
        let chain = check_ozaki(&seq).unwrap();
        prop_assert!(chain.holds);
        prop_assert_eq!(chain.branch, Some(Branch::NonIncreasing));
        for n in 1..=60usize {
            prop_assert!(!proof_poly(Theorem::T1, &params, n).is_negative(),
                "difference polynomial negative at n = {}", n);
        }
    }

    #[test]
    fn second_condition_set_implies_odd_chain(params in any_params()) {
        let verdict = thm2_predicate(&params).unwrap();
        prop_assume!(verdict.overall);
        let seq = build_sequence(&params, 60, SequenceKind::OddEmbedded);
        prop_assert!(check_ozaki_odd(&seq).unwrap().holds);
    }

    #[test]
    fn identity_audits_hold_for_all_valid_params(params in any_params()) {
        for theorem in Theorem::ALL {
            let report = proof_identity_audit(theorem, &params, 25);
            prop_assert!(report.identity_ok, "{} identity failed", theorem);
        }
    }
}

#[test]
fn combined_condition_sets_imply_both_chains_at_borderline_tuples() {
    // the degenerate tuples where every bound polynomial vanishes
    let log_series = ParameterSet::from_integers(1, 1, 1, 1, 2).unwrap();
    let v3 = hypgeo::criteria::thm3_predicate(&log_series).unwrap();
    assert_eq!(v3.flag(hypgeo::criteria::FLAG_WITH_THM1), Some(true));
    let seq = build_sequence(&log_series, 200, SequenceKind::Normalized);
    assert!(check_fejer(&seq).unwrap().holds);
    assert!(check_ozaki(&seq).unwrap().holds);

    let all_ones = ParameterSet::from_integers(1, 1, 1, 1, 1).unwrap();
    let v4 = hypgeo::criteria::thm4_predicate(&all_ones).unwrap();
    assert!(v4.overall);
    assert_eq!(v4.flag(hypgeo::criteria::FLAG_PROOF_CONDITIONS), Some(true));
    let alex = build_sequence(&all_ones, 200, SequenceKind::Alexander);
    assert!(check_fejer(&alex).unwrap().holds);
    assert!(check_ozaki(&alex).unwrap().holds);
}

#[test]
fn derivative_consistent_with_central_difference() {
    // |f'(z) - (f(z+h) - f(z-h))/2h| ≤ budgets/2h + (h²/6)·max|f'''|
    let params = ParameterSet::from_integers(1, 1, 1, 2, 2).unwrap();
    let seq = build_sequence(&params, 2, SequenceKind::Normalized);
    let opts = EvalOptions::default();
    let h = ratio(1, 100_000);
    let z = ComplexPoint::from_rational(&ratio(3, 10), &ratio(1, 5)).unwrap();
    let z_plus = ComplexPoint::from_rational(&(ratio(3, 10) + &h), &ratio(1, 5)).unwrap();
    let z_minus = ComplexPoint::from_rational(&(ratio(3, 10) - &h), &ratio(1, 5)).unwrap();

    let deriv = eval_derivative(&seq, &z, &opts).unwrap();
    let f_plus = eval_series(&seq, &z_plus, &opts).unwrap();
    let f_minus = eval_series(&seq, &z_minus, &opts).unwrap();

    let fd_re = (f_plus.value.re.to_f64() - f_minus.value.re.to_f64()) / 0.00002;
    let fd_im = (f_plus.value.im.to_f64() - f_minus.value.im.to_f64()) / 0.00002;
    let err = ((fd_re - deriv.value.re.to_f64()).powi(2)
        + (fd_im - deriv.value.im.to_f64()).powi(2))
    .sqrt();

    // crude third-derivative bound on |z| ≤ 0.37: Σ n(n-1)(n-2) A_n r^(n-3)
    let r: f64 = 0.37;
    let mut m3 = 0.0f64;
    let big = build_sequence(&params, 400, SequenceKind::Normalized);
    for n in 3..=400usize {
        let a_n =
            big.value(n).numer().to_string().parse::<f64>().unwrap()
                / big.value(n).denom().to_string().parse::<f64>().unwrap();
        m3 += (n * (n - 1) * (n - 2)) as f64 * a_n * r.powi(n as i32 - 3);
    }
    let h_f = 0.00001f64;
    let budget = (f_plus.truncation_bound.to_f64() + f_minus.truncation_bound.to_f64())
        / (2.0 * h_f)
        + deriv.truncation_bound.to_f64()
        + h_f * h_f / 6.0 * m3 * 1.05;
    assert!(
        err <= budget,
        "finite difference err {err} exceeds budget {budget}"
    );
}

#[test]
fn transform_derivative_recovers_series_over_z() {
    // termwise: derivative of the transform at z equals f(z)/z
    let params = ParameterSet::from_integers(1, 1, 1, 2, 2).unwrap();
    let opts = EvalOptions::default();
    let z = ComplexPoint::from_rational(&ratio(2, 5), &ratio(-1, 4)).unwrap();
    let alex = build_sequence(&params, 2, SequenceKind::Alexander);
    let norm = build_sequence(&params, 2, SequenceKind::Normalized);
    let lhs = eval_derivative(&alex, &z, &opts).unwrap();
    let rhs = eval_series(&norm, &z, &opts).unwrap();
    // f(z)/z in f64 (budgets are ~1e-12, f64 noise ~1e-16)
    let (zr, zi) = (0.4f64, -0.25f64);
    let zn = zr * zr + zi * zi;
    let rhs_re = (rhs.value.re.to_f64() * zr + rhs.value.im.to_f64() * zi) / zn;
    let rhs_im = (rhs.value.im.to_f64() * zr - rhs.value.re.to_f64() * zi) / zn;
    let err = ((lhs.value.re.to_f64() - rhs_re).powi(2)
        + (lhs.value.im.to_f64() - rhs_im).powi(2))
    .sqrt();
    let allowed = lhs.truncation_bound.to_f64() + rhs.truncation_bound.to_f64() / zn.sqrt() + 1e-14;
    assert!(err <= allowed, "err {err} exceeds combined budgets {allowed}");
}
