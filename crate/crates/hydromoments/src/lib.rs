//! Exact radial expectation values for hydrogen-like atoms.
//!
//! Bound hydrogenic states satisfy the Kramers-Pasternack relation: a
//! three-term recurrence connecting `<r^(m-1)>`, `<r^(m-2)>`, and
//! `<r^(m-3)>` on a fixed `(n, l)` level. Seeded with the trivial
//! normalization moment and the virial-theorem value `<r^-1> = 1/n^2`,
//! it produces every positive moment; run backwards — once the
//! factorization method supplies the inverse-square moment the
//! recurrence itself cannot reach — it produces every negative moment
//! down to the convergence bound `m >= -2l-2`. The Pasternack inversion
//! relation ties the two directions together by mapping `<r^(m-1)>`
//! directly onto `<r^(-m-2)>`.
//!
//! Everything here is computed in arbitrary-precision rational
//! arithmetic (natural units `hbar = mu = e^2 = a0 = 1`), so every
//! identity the crate claims is checked as an exact equality, not to a
//! tolerance. Two fully independent pipelines make those checks
//! meaningful:
//!
//! * the **algebraic path** — [`moment`] runs the recurrences, and
//!   [`build_state`] constructs eigenstates by applying raising
//!   operators to the analytically-known top rung of each ladder, with
//!   the operator calculus in [`RadialOp`] doing symbolic composition,
//!   commutators, and adjoints;
//! * the **oracle path** — [`oracle_wavefunction`] expands the
//!   closed-form associated Laguerre wavefunction and
//!   [`oracle_moment`] integrates it term by term.
//!
//! [`verify_all`] confronts the two paths across twelve identity
//! families (recurrence closure, inversion, hypervirial relations,
//! operator factorization identities, ladder norm bookkeeping, ...) and
//! reports every cell checked. A deliberate fault can be injected at
//! the verifier's moment-fetch layer to prove the harness detects
//! wrong values ([`verify_all_with_fault`]).
//!
//! ```
//! use hydromoments::{moment, oracle_moment, Rational};
//!
//! // <2,1| r |2,1> = 5 a0, by recurrence ...
//! let engine = moment(2, 1, 1).unwrap();
//! assert_eq!(engine.value, Rational::from_int(5));
//! // ... and by brute-force integration of the Laguerre closed form.
//! assert_eq!(oracle_moment(2, 1, 1).unwrap(), engine.value);
//!
//! // Inverse moments exist only down to m = -2l-2.
//! assert!(moment(2, 1, -4).is_ok());
//! assert!(moment(2, 1, -5).is_err());
//! ```
//!
//! The `hydromoments` binary exposes the same machinery as `moment`,
//! `table`, `state`, and `verify` subcommands with deterministic
//! plain/JSON/CSV/markdown output; see [`cli`].

pub mod cli;
pub mod error;
pub mod ladder;
pub mod moments;
pub mod operator;
pub mod oracle;
pub mod polyexp;
pub mod rational;

pub use error::{Error, Result};
pub use ladder::{
    build_state, norm_gap_product, normalization_constant_sq, top_state, RadialState,
};
pub use moments::{
    first_moment_closed_form, inverse_second, kp_residual, moment, moment_exists,
    pasternack_inversion, pasternack_inversion_extended, ratio_step_check,
    second_moment_closed_form, MomentValue,
};
pub use operator::{
    build_hamiltonian, build_hypervirial, build_lower, build_raise, energy, radial_momentum,
    RadialOp, RadialOpTerm,
};
pub use oracle::{
    expectation, laguerre, oracle_moment, oracle_wavefunction, proportionality_factor, verify_all,
    verify_all_with_fault, FailureCell, IdentityResult, LaguerrePoly, MomentFault,
    VerificationReport,
};
pub use polyexp::{inner_product, PolyExp, PolyExpTerm};
pub use rational::Rational;
