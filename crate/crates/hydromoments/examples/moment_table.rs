//! Sweep the radial moments of a few levels and cross-check every value
//! against brute-force integration.
//!
//! ```sh
//! cargo run --example moment_table
//! ```
//!
//! The recurrence engine and the integration oracle share no moment
//! logic, so the agreement printed here is a genuine two-path check.

use hydromoments::cli::unit_label;
use hydromoments::{moment, moment_exists, oracle_moment};

fn main() {
    for (n, l) in [(1u32, 0u32), (2, 1), (3, 0), (4, 2)] {
        println!("moments of the (n={n}, l={l}) level:");
        for m in -6..=4i64 {
            if !moment_exists(l, m) {
                println!(
                    "  <r^{m:>2}>  nonexistent (requires m >= {})",
                    -2 * (l as i64) - 2
                );
                continue;
            }
            let engine = moment(n, l, m).expect("inside the existence range").value;
            let brute = oracle_moment(n, l, m).expect("same range");
            assert_eq!(engine, brute, "recurrence and integration must agree");
            let unit = unit_label(m);
            let sep = if unit.is_empty() { "" } else { " " };
            println!("  <r^{m:>2}> = {engine}{sep}{unit}   (integration agrees)");
        }
        println!();
    }

    // arbitrary precision: a large positive moment of a Rydberg-ish level
    let big = moment(8, 3, 11).unwrap();
    println!("<8,3| r^11 |8,3> = {} a0^11", big.value);
}
