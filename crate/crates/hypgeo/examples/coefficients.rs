//! Exact coefficient prefixes of the three series attached to a parameter
//! tuple, plus the entrywise (convolution) product and weighted differences.
//!
//! Run with: `cargo run --example coefficients`

use hypgeo::rational::ratio;
use hypgeo::series::{
    build_sequence, difference_sequence, hadamard, pochhammer, SequenceKind,
};
use hypgeo::ParameterSet;

fn main() {
    // a = b = c = 1, d = e = 2 gives A_n = 1/n²
    let params = ParameterSet::from_integers(1, 1, 1, 2, 2).unwrap();

    let normalized = build_sequence(&params, 8, SequenceKind::Normalized);
    let alexander = build_sequence(&params, 8, SequenceKind::Alexander);
    let odd = build_sequence(&params, 8, SequenceKind::OddEmbedded);

    println!("params {params}");
    println!("normalized A_n:   {}", join(normalized.values()));
    println!("alexander  A_n/n: {}", join(alexander.values()));
    print!("odd embedding:    ");
    for n in 1..=odd.len() {
        print!("{} z^{}  ", odd.value(n), odd.exponent(n));
    }
    println!();

    // B_n = n A_n - (n+1) A_{n+1}; for A_n = 1/n² this is 1/(n(n+1))
    let diffs = difference_sequence(&normalized);
    println!("differences B_n:  {}", join(diffs.values()));

    // convolution with the all-ones coefficient list is the identity
    let ones = vec![ratio(1, 1); normalized.len()];
    let convolved = hadamard(normalized.values(), &ones).unwrap();
    assert_eq!(&convolved, normalized.values());
    println!("hadamard with z/(1-z) reproduces the series (identity law)");

    // rising factorial underlying it all
    println!("(1/2)_3 = {}", pochhammer(&ratio(1, 2), 3));
}

fn join(values: &[hypgeo::Rational]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
