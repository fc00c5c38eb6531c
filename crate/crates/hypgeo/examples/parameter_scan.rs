//! Sweep a 2-D slice of the parameter space, classify every cell by the
//! four predicates, and search boxes for satisfying tuples.
//!
//! Run with: `cargo run --example parameter_scan`

use hypgeo::rational::int;
use hypgeo::scanner::{
    find_satisfying, run_scan, AxisSpec, ConditionName, ParamName, ScanOptions, SliceSpec,
};
use std::collections::BTreeMap;

fn unit_slice(start: i64, stop: i64, steps: usize) -> SliceSpec {
    let mut fixed = BTreeMap::new();
    fixed.insert(ParamName::A, int(1));
    fixed.insert(ParamName::B, int(1));
    fixed.insert(ParamName::C, int(1));
    SliceSpec::new(
        fixed,
        [
            AxisSpec {
                name: ParamName::D,
                start: int(start),
                stop: int(stop),
                steps,
            },
            AxisSpec {
                name: ParamName::E,
                start: int(start),
                stop: int(stop),
                steps,
            },
        ],
        ScanOptions::default(),
    )
    .unwrap()
}

fn main() {
    // the 3×3 integer box over d, e with a = b = c = 1
    let spec = unit_slice(1, 3, 2);
    let result = run_scan(&spec);
    println!("3x3 box, {} cells", result.cells.len());
    for (class, count) in &result.summary {
        println!("  {class}: {count}");
    }
    print!("{}", result.to_csv());

    // row-major search for satisfying tuples
    println!();
    for target in [
        ConditionName::Thm1,
        ConditionName::Thm3WithThm1,
        ConditionName::Thm4WithProofConditions,
    ] {
        match find_satisfying(&spec, target) {
            Some(params) => println!("{target}: first satisfying cell {params}"),
            None => println!("{target}: empty in this box"),
        }
    }

    // a finer box over the same region; the combined third condition set is
    // satisfied exactly on the borderline cells where the series degenerates
    // to -log(1-z) and every bound polynomial vanishes
    let fine = unit_slice(1, 5, 16);
    match find_satisfying(&fine, ConditionName::Thm3WithThm1) {
        Some(params) => println!("fine box (17x17 over [1,5]²): first hit {params}"),
        None => println!("fine box (17x17 over [1,5]²): combined third condition set empty"),
    }
}
