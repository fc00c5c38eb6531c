//! Sampled positivity of the membership functionals over a polar grid:
//! `Re((1-z) f'(z))` for close-to-convexity w.r.t. −log(1−z) and
//! `Re(z f'(z)/f(z))` for starlikeness.
//!
//! Run with: `cargo run --example disk_evidence`

use hypgeo::analytic::{ks_star_evidence, DiskEvidence, EvalOptions, GridSpec};
use hypgeo::rational::ratio;
use hypgeo::series::SequenceKind;
use hypgeo::ParameterSet;

fn describe(evidence: &DiskEvidence) {
    println!(
        "  {:<9} min = {:.12}  at ({:+.4}, {:+.4})  budget = {:.2e}  positive = {}",
        evidence.functional.to_string(),
        evidence.min_value.to_f64(),
        evidence.argmin.re().to_f64(),
        evidence.argmin.im().to_f64(),
        evidence.error_budget.to_f64(),
        evidence.positive
    );
}

fn main() {
    // a modest grid keeps this example quick; the library default is 64×256
    let grid = GridSpec {
        n_r: 16,
        n_theta: 64,
        r_max: ratio(19, 20),
    };
    let opts = EvalOptions::default();

    // Σ zⁿ/n²: its first sufficient condition holds, and the sampled
    // functionals agree
    let params = ParameterSet::from_integers(1, 1, 1, 2, 2).unwrap();
    println!("{params} — normalized series");
    let (ctc, star) = ks_star_evidence(&params, SequenceKind::Normalized, &grid, &opts).unwrap();
    describe(&ctc);
    describe(&star);

    // the transform of z/(1-z) is -log(1-z): (1-z)Λ' ≡ 1 on the disk
    let geometric = ParameterSet::from_integers(2, 3, 1, 2, 3).unwrap();
    println!("{geometric} — integral transform");
    let (ctc, star) = ks_star_evidence(&geometric, SequenceKind::Alexander, &grid, &opts).unwrap();
    describe(&ctc);
    describe(&star);
}
