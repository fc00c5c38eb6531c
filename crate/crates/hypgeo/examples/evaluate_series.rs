//! Certified evaluation of the series and its derivative at disk points.
//!
//! At a = b = c = 1, d = e = 2 the normalized series is Σ zⁿ/n², whose
//! value at z = 1/2 is π²/12 − (ln 2)²/2 ≈ 0.5822405264650125…; the
//! evaluator reaches it with a certified truncation bound below 1e-12.
//!
//! Run with: `cargo run --example evaluate_series`

use hypgeo::analytic::{eval_derivative, eval_series, ComplexPoint, EvalOptions};
use hypgeo::rational::{int, ratio};
use hypgeo::series::{build_sequence, SequenceKind};
use hypgeo::ParameterSet;

fn main() {
    let params = ParameterSet::from_integers(1, 1, 1, 2, 2).unwrap();
    let seq = build_sequence(&params, 2, SequenceKind::Normalized);
    let opts = EvalOptions::default();

    let half = ComplexPoint::from_rational(&ratio(1, 2), &int(0)).unwrap();
    let value = eval_series(&seq, &half, &opts).unwrap();
    println!(
        "f(1/2)  = {:.16e}  (bound {:.3e}, {} terms)",
        value.value.re.to_f64(),
        value.truncation_bound.to_f64(),
        value.terms_used
    );

    let deriv = eval_derivative(&seq, &half, &opts).unwrap();
    println!(
        "f'(1/2) = {:.16e}  (2 ln 2 = {:.16e})",
        deriv.value.re.to_f64(),
        2.0 * std::f64::consts::LN_2
    );

    // an interior complex point
    let z = ComplexPoint::from_rational(&ratio(3, 10), &ratio(2, 5)).unwrap();
    let at_z = eval_series(&seq, &z, &opts).unwrap();
    println!(
        "f(0.3 + 0.4i) = {:.16e} + {:.16e} i  ({} terms)",
        at_z.value.re.to_f64(),
        at_z.value.im.to_f64(),
        at_z.terms_used
    );

    // near the boundary more terms are needed for the same bound
    let near_edge = ComplexPoint::from_rational(&ratio(19, 20), &int(0)).unwrap();
    let edge = eval_series(&seq, &near_edge, &opts).unwrap();
    println!(
        "f(0.95) = {:.16e}  ({} terms for the same bound)",
        edge.value.re.to_f64(),
        edge.terms_used
    );
}
