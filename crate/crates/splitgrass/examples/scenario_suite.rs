//! Runs the consistency scenario battery and prints one verdict per line.
//!
//! Each scenario samples configurations, checks them through two independent
//! computation routes where one exists, and exercises a negative control so
//! a passing verdict cannot be vacuous. Failures carry witness strings.
//!
//! Run with: cargo run --example scenario_suite

use std::process::ExitCode;

use splitgrass::checks::standard_suite;

fn main() -> ExitCode {
    let results = match standard_suite(0) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut passed = 0;
    for res in &results {
        println!("{} {} {}", res.verdict(), res.scenario, res.params);
        for w in &res.witnesses {
            println!("    witness: {w}");
        }
        if res.passed {
            passed += 1;
        }
    }
    println!("{passed}/{} scenarios passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
