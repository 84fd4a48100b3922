//! Build the bound states of one principal level by walking the ladder.
//!
//! ```sh
//! cargo run --example ladder_walk
//! ```
//!
//! Each level starts at the top rung `l = n-1`, whose wavefunction
//! `r^(n-1) exp(-r/n)` is forced by the subsidiary condition (the
//! lowering operator annihilates it). Raising operators then walk `l`
//! downward one rung at a time; every state produced along the way is
//! an exact eigenstate of its own radial Hamiltonian.

use hydromoments::{
    build_hamiltonian, build_lower, build_state, norm_gap_product, top_state, Rational,
};

fn main() {
    let n = 4u32;

    let top = top_state(n);
    println!("top rung (n={n}, l={}): {}", n - 1, top.wavefunction());
    let killed = build_lower(n - 1).apply(top.wavefunction());
    println!(
        "lower_{} applied to it: {} (subsidiary condition)",
        n - 1,
        killed
    );
    println!();

    for l in (0..n).rev() {
        let state = build_state(n, l).expect("valid quantum numbers");
        println!("state (n={n}, l={l})");
        println!("  wavefunction: {}", state.wavefunction());
        println!("  normsq:       {}", state.normsq());
        println!("  energy:       {} e^2/a0", state.energy());

        // exact eigenstate check: H_l psi = E psi with E = -1/(2n^2)
        let h_psi = build_hamiltonian(l).apply(state.wavefunction());
        assert_eq!(h_psi, state.wavefunction().scale(&state.energy()));
        println!("  H_{l} psi == E psi holds exactly");

        // norm bookkeeping: each raising step scales the squared norm by
        // 2 (E_{n-1} - E_l), so the accumulated ratio is a product of
        // energy gaps
        let k = (n - 1 - l) as i64;
        let ratio = Rational::ratio(1, 2).pow(k) * state.normsq() / top.normsq();
        assert_eq!(ratio, norm_gap_product(n, l).unwrap());
        println!("  (1/2)^{k} |psi|^2 / |top|^2 = {ratio} (product of energy gaps)");
        println!();
    }
}
