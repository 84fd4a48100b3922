//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by the moment engine, the integrator and the CLI layer.
///
/// Every error is a domain violation, never a numerical problem: all
/// arithmetic in this crate is exact.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The integrand of `inner_product` has a term with net radial power
    /// below zero after cancellation, so the integral diverges at the origin.
    #[error("divergent integral: integrand contains r^{power} with power < 0 near the origin")]
    DivergentIntegral {
        /// Net power of r (including the r^2 measure) of the offending term.
        power: i64,
    },

    /// Quantum numbers outside the bound-state grid `n >= 1`, `0 <= l <= n-1`.
    #[error("invalid quantum numbers: require n >= 1 and 0 <= l <= n-1 (got n={n}, l={l})")]
    QuantumNumber { n: u32, l: u32 },

    /// Requested a radial moment below the existence bound `m >= -2l-2`.
    #[error("moment does not exist: requires m >= -2l-2 (got n={n}, l={l}, m={m})")]
    MomentDoesNotExist { n: u32, l: u32, m: i64 },

    /// Argument outside the proven validity range of the inversion relation.
    #[error("m out of range: {reason} (got l={l}, m={m})")]
    Range {
        l: u32,
        m: i64,
        /// Which range was violated, e.g. `0 <= m <= 2l`.
        reason: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
