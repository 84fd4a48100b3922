//! Bound-state construction by the Schrodinger factorization chain.
//!
//! Each angular-momentum sector has a nodeless top state `|n, n-1>`
//! annihilated by `lower_{n-1}` (the subsidiary condition); every other
//! bound state is reached by applying raising operators:
//!
//! ```text
//! |n,l> = raise_l raise_{l+1} ... raise_{n-2} |n,n-1>
//! ```
//!
//! applied right-to-left. States are stored unnormalized with exact
//! rational coefficients together with a cached squared norm; normalized
//! wavefunctions would need irrational square-root factors, and every
//! expectation value divides by the norm anyway.

use crate::error::{Error, Result};
use crate::operator::{build_raise, energy};
use crate::polyexp::{inner_product, PolyExp};
use crate::rational::{factorial, Rational};

/// An unnormalized bound state `|n,l>` with its cached squared norm.
///
/// Invariants: `normsq > 0`, the lowest power of `r` in the wavefunction
/// equals `l` (small-r behavior `r^l`), and every term decays like
/// `exp(-r/n)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RadialState {
    n: u32,
    l: u32,
    wavefunction: PolyExp,
    normsq: Rational,
}

impl RadialState {
    /// Wrap a wavefunction after checking the bound-state invariants.
    pub(crate) fn from_wavefunction(n: u32, l: u32, wavefunction: PolyExp) -> Result<Self> {
        validate_quantum_numbers(n, l)?;
        assert_eq!(
            wavefunction.min_power(),
            Some(l as i64),
            "wavefunction of |{n},{l}> must behave like r^{l} at the origin"
        );
        let decay = Rational::ratio(1, n as i64);
        assert!(
            wavefunction.terms().iter().all(|t| t.decay == decay),
            "wavefunction of |{n},{l}> must decay like exp(-r/{n})"
        );
        let normsq = inner_product(&wavefunction, &wavefunction)
            .expect("bound-state norm integral converges");
        assert!(normsq.is_positive(), "squared norm must be positive");
        Ok(RadialState {
            n,
            l,
            wavefunction,
            normsq,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// The unnormalized radial wavefunction.
    pub fn wavefunction(&self) -> &PolyExp {
        &self.wavefunction
    }

    /// Cached `<wavefunction|wavefunction>` under the `r^2 dr` measure.
    pub fn normsq(&self) -> &Rational {
        &self.normsq
    }

    /// Bound-state energy `E_{n-1} = -1/(2n^2)` in units of `e^2/a0`.
    pub fn energy(&self) -> Rational {
        energy(self.n - 1)
    }
}

pub(crate) fn validate_quantum_numbers(n: u32, l: u32) -> Result<()> {
    if n == 0 || l >= n {
        return Err(Error::QuantumNumber { n, l });
    }
    Ok(())
}

/// The nodeless top state `|n, n-1>`, wavefunction `r^(n-1) exp(-r/n)`.
///
/// This is the state fixed by the subsidiary condition
/// `lower_{n-1} |n,n-1> = 0`. Panics if `n = 0`.
pub fn top_state(n: u32) -> RadialState {
    assert!(n >= 1, "principal quantum number must be positive");
    let wf = PolyExp::term(Rational::one(), n as i64 - 1, Rational::ratio(1, n as i64));
    RadialState::from_wavefunction(n, n - 1, wf).expect("top state is always valid")
}

/// Build `|n,l>` by the raising chain applied to the top state.
///
/// The chain is applied right-to-left (`raise_{n-2}` first); for
/// `l = n-1` the chain is empty and the top state is returned.
pub fn build_state(n: u32, l: u32) -> Result<RadialState> {
    validate_quantum_numbers(n, l)?;
    let mut wf = top_state(n).wavefunction().clone();
    // empty range when l = n-1
    for ll in (l as i64..=n as i64 - 2).rev() {
        wf = build_raise(ll as u32).apply(&wf);
    }
    RadialState::from_wavefunction(n, l, wf)
}

/// Exact energy-gap product `prod_{i=l}^{n-2} (E_{n-1} - E_i)`.
///
/// The empty product (`l = n-1`) is one. Equals `1/C_nl^2` for the
/// normalization constant of the raising chain.
pub fn norm_gap_product(n: u32, l: u32) -> Result<Rational> {
    validate_quantum_numbers(n, l)?;
    let e_top = energy(n - 1);
    let mut acc = Rational::one();
    for i in l as i64..=n as i64 - 2 {
        acc *= &e_top - &energy(i as u32);
    }
    Ok(acc)
}

/// Squared normalization constant of the raising chain, closed form:
///
/// ```text
/// C_nl^2 = (2 n^2)^(n-l-1) [(n-1)!/l!]^2 (n+l)! / [(2n-1)! (n-l-1)!]
/// ```
///
/// in natural units. `C_nl` itself is irrational in general, but its
/// square is rational and satisfies `C_nl^2 * prod(E_{n-1} - E_i) = 1`.
pub fn normalization_constant_sq(n: u32, l: u32) -> Result<Rational> {
    validate_quantum_numbers(n, l)?;
    let chain_len = n - 1 - l;
    let base = Rational::from_int(2 * (n as i64) * (n as i64));
    let fact_ratio = Rational::new(factorial(n - 1), factorial(l));
    let value = base.pow(chain_len as i64)
        * &fact_ratio
        * &fact_ratio
        * Rational::new(
            factorial(n + l),
            factorial(2 * n - 1) * factorial(chain_len),
        );
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::{build_hamiltonian, build_lower};
    use crate::polyexp::PolyExpTerm;

    #[test]
    fn ground_top_state() {
        let s = top_state(1);
        assert_eq!(
            s.wavefunction(),
            &PolyExp::term(Rational::one(), 0, Rational::one())
        );
        assert_eq!(s.normsq(), &Rational::ratio(1, 4));
    }

    #[test]
    fn first_excited_top_state() {
        let s = top_state(2);
        assert_eq!(
            s.wavefunction(),
            &PolyExp::term(Rational::one(), 1, Rational::ratio(1, 2))
        );
        assert_eq!(s.normsq(), &Rational::from_int(24));
    }

    #[test]
    fn subsidiary_condition_small_n() {
        for n in 1..=8 {
            let top = top_state(n);
            assert!(
                build_lower(n - 1).apply(top.wavefunction()).is_zero(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn two_s_state_by_hand() {
        // raise_0 applied to r e^(-r/2) gives ((3/2) r - 3) e^(-r/2)
        let s = build_state(2, 0).unwrap();
        let expected = PolyExp::from_terms([
            PolyExpTerm {
                coeff: Rational::ratio(3, 2),
                power: 1,
                decay: Rational::ratio(1, 2),
            },
            PolyExpTerm {
                coeff: Rational::from_int(-3),
                power: 0,
                decay: Rational::ratio(1, 2),
            },
        ]);
        assert_eq!(s.wavefunction(), &expected);
        assert_eq!(s.normsq(), &Rational::from_int(18));
    }

    #[test]
    fn empty_chain_returns_top_state() {
        for n in 1..=5 {
            assert_eq!(build_state(n, n - 1).unwrap(), top_state(n));
        }
    }

    #[test]
    fn two_s_state_is_eigenstate() {
        let s = build_state(2, 0).unwrap();
        let hw = build_hamiltonian(0).apply(s.wavefunction());
        assert_eq!(hw, s.wavefunction().scale(&Rational::ratio(-1, 8)));
    }

    #[test]
    fn invalid_quantum_numbers_rejected() {
        assert_eq!(
            build_state(2, 2).unwrap_err(),
            Error::QuantumNumber { n: 2, l: 2 }
        );
        assert_eq!(
            build_state(0, 0).unwrap_err(),
            Error::QuantumNumber { n: 0, l: 0 }
        );
        assert!(norm_gap_product(3, 3).is_err());
        assert!(normalization_constant_sq(3, 5).is_err());
    }

    #[test]
    fn gap_product_values() {
        assert_eq!(norm_gap_product(2, 1).unwrap(), Rational::one());
        assert_eq!(norm_gap_product(2, 0).unwrap(), Rational::ratio(3, 8));
        assert_eq!(norm_gap_product(3, 1).unwrap(), Rational::ratio(5, 72));
    }

    #[test]
    fn normalization_constant_values() {
        assert_eq!(normalization_constant_sq(4, 3).unwrap(), Rational::one());
        assert_eq!(
            normalization_constant_sq(2, 0).unwrap(),
            Rational::ratio(8, 3)
        );
        // C_nl^2 is the reciprocal of the gap product
        for n in 1..=6 {
            for l in 0..n {
                let c2 = normalization_constant_sq(n, l).unwrap();
                let gap = norm_gap_product(n, l).unwrap();
                assert_eq!(c2 * gap, Rational::one(), "n={n} l={l}");
            }
        }
    }

    #[test]
    fn norm_bookkeeping_small_grid() {
        // (1/2)^(n-1-l) normsq / top_normsq = prod (E_{n-1} - E_i)
        for n in 1..=5u32 {
            let top_normsq = top_state(n).normsq().clone();
            for l in 0..n {
                let s = build_state(n, l).unwrap();
                let stripped = Rational::ratio(1, 2).pow((n - 1 - l) as i64);
                let lhs = stripped * s.normsq() / &top_normsq;
                assert_eq!(lhs, norm_gap_product(n, l).unwrap(), "n={n} l={l}");
            }
        }
    }

    #[test]
    fn small_r_behavior() {
        for n in 1..=6u32 {
            for l in 0..n {
                let s = build_state(n, l).unwrap();
                assert_eq!(s.wavefunction().min_power(), Some(l as i64), "n={n} l={l}");
            }
        }
    }
}
