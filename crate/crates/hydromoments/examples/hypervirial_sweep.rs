//! Hypervirial identities: on an eigenstate, the expectation of any
//! commutator with the Hamiltonian vanishes. Specializing the probe
//! operator to `r^m p + p r^m` (with `p = d/dr + 1/r` the stripped
//! radial momentum) turns that single fact into the whole three-term
//! recurrence for radial moments.
//!
//! ```sh
//! cargo run --example hypervirial_sweep
//! ```

use hydromoments::{
    build_hamiltonian, build_hypervirial, expectation, oracle_moment, radial_momentum, RadialOp,
    Rational,
};

fn main() {
    // <[O_m, H_l]> = 0 wherever the integrals converge
    let mut cells = 0u32;
    for n in 1..=6u32 {
        for l in 0..n {
            let h = build_hamiltonian(l);
            for m in -2 * (l as i64) + 1..=8 {
                let commutator = build_hypervirial(m).commutator(&h);
                let value = expectation(&commutator, n, l).unwrap();
                assert!(value.is_zero(), "n={n} l={l} m={m}");
                cells += 1;
            }
        }
    }
    println!("<[O_m, H_l]> = 0 on {cells} cells (n <= 6)");

    // one probe operator, written out
    let o2 = build_hypervirial(2);
    println!("O_2 = {o2}");
    println!("[O_2, H_0] = {}", o2.commutator(&build_hamiltonian(0)));
    println!();

    // at the edge of convergence the algebra still has one more thing
    // to say: for l >= 1 the expectation of p r^-3 closes on <r^-4>
    println!("<p r^-3> = -(3/2) <r^-4> for l >= 1:");
    let op = radial_momentum().compose(&RadialOp::power_mul(-3));
    for (n, l) in [(2u32, 1u32), (3, 1), (3, 2), (5, 4)] {
        let lhs = expectation(&op, n, l).unwrap();
        let r4 = oracle_moment(n, l, -4).unwrap();
        assert_eq!(lhs, Rational::ratio(-3, 2) * &r4);
        println!("  n={n} l={l}: <p r^-3> = {lhs}, <r^-4> = {r4}");
    }
}
