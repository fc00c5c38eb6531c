//! Audit the closed-form difference identities exactly: the coefficient
//! difference computed from the ratio recurrence must equal
//! `A_n · poly(n) / denominator(n)` at every index, for each of the four
//! condition sets.
//!
//! Run with: `cargo run --example proof_audit`

use hypgeo::criteria::{proof_identity_audit, proof_poly, Theorem};
use hypgeo::rational::ratio;
use hypgeo::ParameterSet;

fn main() {
    let params = ParameterSet::new(
        ratio(1, 2),
        ratio(3, 2),
        ratio(2, 1),
        ratio(5, 2),
        ratio(3, 1),
    )
    .unwrap();
    println!("{params}");

    for theorem in Theorem::ALL {
        let report = proof_identity_audit(theorem, &params, 60);
        let negatives = report.nonnegativity.iter().filter(|e| !e.nonneg).count();
        println!(
            "{}: identity {} over n = {}..{}, {} negative polynomial values",
            theorem,
            if report.identity_ok { "exact" } else { "MISMATCH" },
            report.range.0,
            report.range.1,
            negatives,
        );
    }

    // the polynomials are available directly as well
    let p = ParameterSet::from_integers(1, 1, 1, 2, 2).unwrap();
    println!(
        "\nfirst difference polynomial values at (1,1,1,2,2): {}, {}, {}",
        proof_poly(Theorem::T1, &p, 1),
        proof_poly(Theorem::T1, &p, 2),
        proof_poly(Theorem::T1, &p, 3),
    );
}
