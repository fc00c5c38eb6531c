//! Evaluate the four sufficient-condition predicates at a few parameter
//! tuples, showing every exact sub-inequality and the variant flags.
//!
//! Run with: `cargo run --example theorem_check`

use hypgeo::criteria::{predicate, Theorem};
use hypgeo::rational::parse_rational;
use hypgeo::ParameterSet;

fn tuple(values: [&str; 5]) -> ParameterSet {
    let [a, b, c, d, e] = values.map(|v| parse_rational(v).unwrap());
    ParameterSet::new(a, b, c, d, e).unwrap()
}

fn main() {
    let tuples = [
        tuple(["1", "1", "1", "2", "2"]),     // passes T1 and T2
        tuple(["1", "1", "1", "7/5", "7/5"]), // T3 stated parts hold, combined flag fails
        tuple(["1", "1", "1", "1", "1"]),     // T4 holds outright
    ];

    for params in &tuples {
        println!("{params}");
        for theorem in Theorem::ALL {
            let verdict = predicate(theorem, params).unwrap();
            println!(
                "  {}: {}",
                theorem,
                if verdict.overall { "holds" } else { "fails" }
            );
            for part in &verdict.parts {
                println!(
                    "      [{}] {:<42} {} {} {}",
                    if part.satisfied { "ok" } else { "--" },
                    part.name,
                    part.lhs,
                    part.relation,
                    part.rhs
                );
            }
            for (flag, value) in &verdict.variant_flags {
                println!("      flag {flag} = {value}");
            }
        }
        println!();
    }
}
