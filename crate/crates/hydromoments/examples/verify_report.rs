//! Run the full identity verifier and show that it actually verifies:
//! a clean sweep passes, and a deliberately injected wrong value is
//! caught by exactly the family that reads it.
//!
//! ```sh
//! cargo run --example verify_report
//! ```

use hydromoments::{verify_all, verify_all_with_fault, MomentFault, Rational};

fn main() {
    // clean run over n <= 5: twelve identity families, every cell exact
    let report = verify_all(5);
    for result in &report.results {
        println!(
            "{:<30} {:>4} cells  {}",
            result.family,
            result.cells,
            if result.passed() { "pass" } else { "FAIL" }
        );
    }
    assert!(report.passed());
    println!("total: {} cells, all exact\n", report.total_cells());

    // negative control: perturb <4,2| r^7 |4,2> by 1/1000 at the
    // verifier's fetch layer and watch the recurrence closure notice
    let fault = MomentFault {
        n: 4,
        l: 2,
        m: 7,
        delta: Rational::ratio(1, 1000),
    };
    let faulted = verify_all_with_fault(5, Some(&fault));
    assert!(!faulted.passed());
    println!(
        "with <4,2|r^7|4,2> perturbed by {}: failing families = {:?}",
        fault.delta,
        faulted.failing_families()
    );
    for result in &faulted.results {
        for f in &result.failures {
            println!(
                "  {} at n={:?} l={} m={:?}: {} != {}",
                result.family, f.n, f.l, f.m, f.lhs, f.rhs
            );
        }
    }

    // machine-readable form of the same report
    let json = serde_json::to_string_pretty(&faulted).unwrap();
    println!("\nreport serializes to {} bytes of JSON", json.len());
}
