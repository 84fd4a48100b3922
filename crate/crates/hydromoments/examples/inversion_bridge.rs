//! The Pasternack inversion relation: positive moments determine
//! inverse moments through a single factorial-weighted rescaling,
//!
//! ```text
//! <r^(-m-2)> = (2/n)^(2m+1) * (2l-m)!/(2l+m+1)! * <r^(m-1)>
//! ```
//!
//! proven for 0 <= m <= 2l. This example closes the relation against
//! the recurrence engine across its whole proven range, then probes the
//! extension to negative m (where both sides still make sense) and
//! shows it empirically continues to hold.
//!
//! ```sh
//! cargo run --example inversion_bridge
//! ```

use hydromoments::{moment, pasternack_inversion, pasternack_inversion_extended};

fn main() {
    println!("proven range 0 <= m <= 2l, all n <= 6:");
    let mut cells = 0u32;
    for n in 1..=6u32 {
        for l in 0..n {
            for m in 0..=2 * (l as i64) {
                let inv = pasternack_inversion(n, l, m).unwrap();
                let direct = moment(n, l, inv.power).unwrap();
                assert_eq!(inv.value, direct.value);
                cells += 1;
            }
        }
    }
    println!("  inversion == recurrence on {cells} cells");

    let example = pasternack_inversion(3, 1, 1).unwrap();
    println!(
        "  e.g. n=3, l=1, m=1 maps <r^0> to <r^{}> = {}",
        example.power, example.value
    );
    println!();

    // outside the proven range the constructor refuses ...
    assert!(pasternack_inversion(3, 1, -1).is_err());
    assert!(pasternack_inversion(3, 1, 3).is_err());
    println!("m = -1 and m = 2l+1 are rejected by pasternack_inversion");

    // ... but the probing variant accepts every m where both sides are
    // defined, -2l-1 <= m <= 2l, and the relation keeps holding
    println!("extension probe -2l-1 <= m < 0, all n <= 6:");
    let mut probed = 0u32;
    for n in 1..=6u32 {
        for l in 0..n {
            for m in -2 * (l as i64) - 1..0 {
                let inv = pasternack_inversion_extended(n, l, m).unwrap();
                let direct = moment(n, l, inv.power).unwrap();
                assert_eq!(inv.value, direct.value, "n={n} l={l} m={m}");
                probed += 1;
            }
        }
    }
    println!("  relation persists on all {probed} probed cells");
    let neg = pasternack_inversion_extended(4, 2, -3).unwrap();
    println!(
        "  e.g. n=4, l=2, m=-3 maps <r^-4> to <r^{}> = {}",
        neg.power, neg.value
    );
}
