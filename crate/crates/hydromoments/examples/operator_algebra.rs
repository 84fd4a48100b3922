//! The operator calculus behind the ladder: factorization of the
//! radial Hamiltonian, intertwining, commutators, and adjoints — all as
//! exact structural identities on symbolic operators.
//!
//! ```sh
//! cargo run --example operator_algebra
//! ```

use hydromoments::{
    build_hamiltonian, build_lower, build_raise, energy, radial_momentum, RadialOp, Rational,
};

fn main() {
    let half = Rational::ratio(1, 2);

    for l in 0..=2u32 {
        let lower = build_lower(l);
        let raise = build_raise(l);
        let h = build_hamiltonian(l);

        println!("l = {l}");
        println!("  lower_{l} = {lower}");
        println!("  raise_{l} = {raise}");
        println!("  H_{l}     = {h}");

        // H_l = (1/2) raise_l lower_l + E_l
        let product = raise
            .compose(&lower)
            .scale(&half)
            .add(&RadialOp::scalar(energy(l)));
        assert_eq!(product, h);
        println!("  (1/2) raise_{l} lower_{l} + E_{l} == H_{l}");

        // reversed order lands one rung up: (1/2) lower_l raise_l + E_l = H_{l+1}
        let reversed = lower
            .compose(&raise)
            .scale(&half)
            .add(&RadialOp::scalar(energy(l)));
        assert_eq!(reversed, build_hamiltonian(l + 1));
        println!("  (1/2) lower_{l} raise_{l} + E_{l} == H_{}", l + 1);

        // intertwining: H_l raise_l = raise_l H_{l+1}
        assert_eq!(h.compose(&raise), raise.compose(&build_hamiltonian(l + 1)));
        println!("  H_{l} raise_{l} == raise_{l} H_{}", l + 1);

        // the ladder operators are formal adjoints of each other under
        // the r^2 dr measure
        assert_eq!(lower.adjoint(), raise);
        println!("  adjoint(lower_{l}) == raise_{l}");
        println!();
    }

    // commutators evaluate symbolically too
    let p = radial_momentum();
    let r2 = RadialOp::power_mul(-2);
    println!("p           = {p}");
    println!("[p, r^-2]   = {}", p.commutator(&r2));
    let h0 = build_hamiltonian(0);
    println!("[H_0, r^-2] = {}", h0.commutator(&r2));
    // the l-dependent centrifugal term drops out of this commutator
    assert_eq!(h0.commutator(&r2), build_hamiltonian(5).commutator(&r2));
    println!("[H_l, r^-2] is independent of l");
}
