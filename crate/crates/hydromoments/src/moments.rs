//! Closed forms and recurrences for the radial moments `<n,l| r^m |n,l>`.
//!
//! The Kramers-Pasternack relation links three consecutive moments
//! (natural units, `a0 = 1`):
//!
//! ```text
//! 0 = -(2m/n^2) <r^(m-1)> + 2(2m-1) <r^(m-2)>
//!     - (1/2)(m-1)((2l+1)^2 - (m-1)^2) <r^(m-3)>
//! ```
//!
//! Run upward from the seeds `<r^0> = 1` and `<r^-1> = 1/n^2` it yields
//! every positive moment. Run downward it stalls: the `m = 1` instance
//! degenerates (it IS the `<r^-1>` seed), so the descent is seeded by the
//! pair `(<r^-1>, <r^-2>)` instead, with the inverse-square moment
//! supplied by its own closed form `<r^-2> = 2/(n^3(2l+1))` from the
//! factorization-method derivation.
//!
//! Moments exist exactly for `m >= -2l-2`; below that the wavefunction's
//! `r^l` behavior at the origin makes the integral diverge, and the
//! descent's denominator vanishes at the first power past the bound.
//! Requests below the bound return a typed error, never a regularized
//! value.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ladder::validate_quantum_numbers;
use crate::rational::{factorial, Rational};

/// An exact moment `<n,l| r^power |n,l>` in units of `a0^power`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MomentValue {
    pub n: u32,
    pub l: u32,
    pub power: i64,
    pub value: Rational,
}

/// Residual of the Kramers-Pasternack relation at index `m` for the
/// candidate triple `(a, b, c) = (<r^(m-1)>, <r^(m-2)>, <r^(m-3)>)`.
///
/// Zero iff the triple satisfies the relation. Linear in each argument.
pub fn kp_residual(n: u32, l: u32, m: i64, a: &Rational, b: &Rational, c: &Rational) -> Rational {
    let n2 = (n as i64) * (n as i64);
    let first = Rational::ratio(-2 * m, n2) * a;
    let second = Rational::from_int(2 * (2 * m - 1)) * b;
    let third = kp_descent_coefficient(l, m) * c;
    first + second - third
}

/// Coefficient of the `<r^(m-3)>` term: `(1/2)(m-1)((2l+1)^2 - (m-1)^2)`.
///
/// Vanishes at `m = 1` (the degenerate instance) and at
/// `m - 1 = -(2l+1)`, i.e. exactly one step below the existence bound.
fn kp_descent_coefficient(l: u32, m: i64) -> Rational {
    let two_l_plus_1 = 2 * l as i64 + 1;
    Rational::ratio(m - 1, 2) * Rational::from_int(two_l_plus_1 * two_l_plus_1 - (m - 1) * (m - 1))
}

/// Existence bound: `<r^m>` converges iff `m >= -2l-2`.
pub fn moment_exists(l: u32, m: i64) -> bool {
    m >= -2 * (l as i64) - 2
}

/// Exact `<n,l| r^m |n,l>` by the Kramers-Pasternack recurrence.
///
/// Positive powers iterate the relation upward from the normalization
/// and virial seeds; inverse powers below `-2` iterate downward from the
/// `(<r^-1>, <r^-2>)` pair. Inside the existence range every divisor is
/// provably nonzero.
pub fn moment(n: u32, l: u32, m: i64) -> Result<MomentValue> {
    validate_quantum_numbers(n, l)?;
    if !moment_exists(l, m) {
        return Err(Error::MomentDoesNotExist { n, l, m });
    }
    let value = moment_value(n, l, m);
    debug_assert!(value.is_positive());
    Ok(MomentValue {
        n,
        l,
        power: m,
        value,
    })
}

/// Recurrence engine; assumes validated `(n, l)` and `m` within bounds.
fn moment_value(n: u32, l: u32, m: i64) -> Rational {
    let n2 = Rational::from_int((n as i64) * (n as i64));
    match m {
        0 => Rational::one(),
        -1 => n2.recip(),
        -2 => inverse_second_value(n, l),
        m if m >= 1 => {
            // at index mu the relation solves for <r^(mu-1)>:
            // <r^(mu-1)> = (n^2/(2 mu)) [2(2 mu - 1) <r^(mu-2)>
            //              - (1/2)(mu-1)((2l+1)^2-(mu-1)^2) <r^(mu-3)>]
            let mut two_below = n2.recip(); // <r^(mu-3)> at mu = 2
            let mut one_below = Rational::one(); // <r^(mu-2)> at mu = 2
            for mu in 2..=m + 1 {
                let next = (Rational::from_int(2 * (2 * mu - 1)) * &one_below
                    - kp_descent_coefficient(l, mu) * &two_below)
                    * &n2
                    / Rational::from_int(2 * mu);
                two_below = one_below;
                one_below = next;
            }
            one_below
        }
        m => {
            // descend: at index mu the relation solves for <r^(mu-3)>:
            // <r^(mu-3)> = [-(2 mu/n^2) <r^(mu-1)> + 2(2 mu - 1) <r^(mu-2)>]
            //              / [(1/2)(mu-1)((2l+1)^2-(mu-1)^2)]
            let mut two_above = n2.recip(); // <r^(mu-1)> at mu = 0
            let mut one_above = inverse_second_value(n, l); // <r^(mu-2)> at mu = 0
            for target in (m..=-3).rev() {
                let mu = target + 3;
                let numer = Rational::ratio(-2 * mu, 1) / &n2 * &two_above
                    + Rational::from_int(2 * (2 * mu - 1)) * &one_above;
                let denom = kp_descent_coefficient(l, mu);
                debug_assert!(!denom.is_zero(), "descent divisor inside existence range");
                let next = numer / denom;
                two_above = one_above;
                one_above = next;
            }
            one_above
        }
    }
}

fn inverse_second_value(n: u32, l: u32) -> Rational {
    // <r^-2> = 1/(n^3 (l + 1/2)) = 2/(n^3 (2l+1))
    let n3 = (n as i64).pow(3);
    Rational::ratio(2, n3 * (2 * l as i64 + 1))
}

/// Closed-form inverse-square moment `<r^-2> = 1/(n^3 (l + 1/2))`.
///
/// This is the seed the downward recurrence cannot produce on its own;
/// the factorization method derives it purely algebraically.
pub fn inverse_second(n: u32, l: u32) -> Result<MomentValue> {
    validate_quantum_numbers(n, l)?;
    Ok(MomentValue {
        n,
        l,
        power: -2,
        value: inverse_second_value(n, l),
    })
}

/// The single step of the inverse-square descent in `l`:
/// returns the pair
/// `(<n,l|r^-2|n,l>, ((l+3/2)/(l+1/2)) <n,l+1|r^-2|n,l+1>)`,
/// whose components must be equal. Requires `l <= n-2` so that the
/// `(n, l+1)` state exists.
pub fn ratio_step_check(n: u32, l: u32) -> Result<(Rational, Rational)> {
    validate_quantum_numbers(n, l)?;
    validate_quantum_numbers(n, l + 1)?;
    let here = inverse_second_value(n, l);
    let ratio = Rational::ratio(2 * l as i64 + 3, 2 * l as i64 + 1);
    let stepped = ratio * inverse_second_value(n, l + 1);
    Ok((here, stepped))
}

/// Pasternack inversion relation, mapping a positive moment to an
/// inverse one:
///
/// ```text
/// <r^(-m-2)> = (2/n)^(2m+1) * (2l-m)!/(2l+m+1)! * <r^(m-1)>
/// ```
///
/// Proven for `0 <= m <= 2l`; arguments outside that range are a
/// [`Error::Range`]. The returned [`MomentValue`] carries power `-m-2`
/// and must equal `moment(n, l, -m-2)`.
pub fn pasternack_inversion(n: u32, l: u32, m: i64) -> Result<MomentValue> {
    validate_quantum_numbers(n, l)?;
    if m < 0 || m > 2 * l as i64 {
        return Err(Error::Range {
            l,
            m,
            reason: "inversion relation proved for 0 <= m <= 2l",
        });
    }
    inversion_value(n, l, m)
}

/// The inversion relation evaluated outside its proven range.
///
/// Empirically the relation also appears to hold for negative `m`; this
/// entry point allows `-2l-1 <= m <= 2l` (the widest range on which both
/// sides are defined) so the extension can be probed and reported. The
/// library contract only covers [`pasternack_inversion`].
pub fn pasternack_inversion_extended(n: u32, l: u32, m: i64) -> Result<MomentValue> {
    validate_quantum_numbers(n, l)?;
    if m < -(2 * l as i64) - 1 || m > 2 * l as i64 {
        return Err(Error::Range {
            l,
            m,
            reason: "both sides of the inversion relation are defined for -2l-1 <= m <= 2l",
        });
    }
    inversion_value(n, l, m)
}

fn inversion_value(n: u32, l: u32, m: i64) -> Result<MomentValue> {
    let source = moment(n, l, m - 1)?;
    let prefactor = Rational::ratio(2, n as i64).pow(2 * m + 1);
    let fact_ratio = Rational::new(
        factorial((2 * l as i64 - m) as u32),
        factorial((2 * l as i64 + m + 1) as u32),
    );
    Ok(MomentValue {
        n,
        l,
        power: -m - 2,
        value: prefactor * fact_ratio * source.value,
    })
}

/// Closed form `<r> = (3n^2 - l(l+1))/2`, used as an independent check.
pub fn first_moment_closed_form(n: u32, l: u32) -> Rational {
    let n2 = (n as i64) * (n as i64);
    let ll1 = (l as i64) * (l as i64 + 1);
    Rational::ratio(3 * n2 - ll1, 2)
}

/// Closed form `<r^2> = (n^2/2)(5n^2 + 1 - 3l(l+1))`.
pub fn second_moment_closed_form(n: u32, l: u32) -> Rational {
    let n2 = (n as i64) * (n as i64);
    let ll1 = (l as i64) * (l as i64 + 1);
    Rational::ratio(n2, 2) * Rational::from_int(5 * n2 + 1 - 3 * ll1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kp_residual_degenerate_instance() {
        // m = 1 on the ground state: the <r^-3> coefficient vanishes and
        // the relation collapses to -2<r^0> + 2<r^-1> = 0
        let res = kp_residual(
            1,
            0,
            1,
            &Rational::one(),
            &Rational::one(),
            &Rational::ratio(123, 7), // arbitrary: its coefficient is zero
        );
        assert!(res.is_zero());
    }

    #[test]
    fn kp_residual_known_triple() {
        // n=2, l=1, m=2 with <r> = 5, <r^0> = 1, <r^-1> = 1/4
        let res = kp_residual(
            2,
            1,
            2,
            &Rational::from_int(5),
            &Rational::one(),
            &Rational::ratio(1, 4),
        );
        assert!(res.is_zero());
    }

    #[test]
    fn kp_residual_is_linear() {
        let a = Rational::from_int(3);
        let b = Rational::ratio(1, 2);
        let c = Rational::from_int(2);
        let t = Rational::from_int(7);
        let res = kp_residual(2, 0, 4, &a, &b, &c);
        assert!(!res.is_zero());
        let scaled = kp_residual(2, 0, 4, &(&a * &t), &(&b * &t), &(&c * &t));
        assert_eq!(scaled, res * t);
    }

    #[test]
    fn seed_moments() {
        for n in 1..=8u32 {
            for l in 0..n {
                assert_eq!(moment(n, l, 0).unwrap().value, Rational::one());
                assert_eq!(
                    moment(n, l, -1).unwrap().value,
                    Rational::ratio(1, (n as i64) * (n as i64))
                );
            }
        }
    }

    #[test]
    fn first_moment_values() {
        assert_eq!(moment(2, 1, 1).unwrap().value, Rational::from_int(5));
        for n in 1..=8u32 {
            for l in 0..n {
                assert_eq!(
                    moment(n, l, 1).unwrap().value,
                    first_moment_closed_form(n, l),
                    "n={n} l={l}"
                );
            }
        }
    }

    #[test]
    fn second_moment_ground_state() {
        assert_eq!(moment(1, 0, 2).unwrap().value, Rational::from_int(3));
    }

    #[test]
    fn inverse_moments() {
        assert_eq!(moment(2, 1, -2).unwrap().value, Rational::ratio(1, 12));
        assert_eq!(moment(3, 2, -3).unwrap().value, Rational::ratio(1, 405));
    }

    #[test]
    fn existence_bound_enforced() {
        assert_eq!(
            moment(1, 0, -3).unwrap_err(),
            Error::MomentDoesNotExist { n: 1, l: 0, m: -3 }
        );
        for l in 0..4u32 {
            let bound = -2 * (l as i64) - 2;
            assert!(moment(l + 1, l, bound).is_ok());
            assert!(moment(l + 1, l, bound - 1).is_err());
        }
    }

    #[test]
    fn inverse_second_values() {
        assert_eq!(inverse_second(2, 0).unwrap().value, Rational::ratio(1, 4));
        assert_eq!(inverse_second(2, 1).unwrap().value, Rational::ratio(1, 12));
        for n in 1..=6u32 {
            let top = inverse_second(n, n - 1).unwrap().value;
            // <n,n-1|r^-2|n,n-1> = 1/(n^3 (n - 1/2))
            let expected = Rational::one()
                / (Rational::from_int((n as i64).pow(3)) * Rational::ratio(2 * n as i64 - 1, 2));
            assert_eq!(top, expected, "n={n}");
        }
    }

    #[test]
    fn ratio_step_values() {
        let (a, b) = ratio_step_check(3, 0).unwrap();
        assert_eq!(a, Rational::ratio(2, 27));
        assert_eq!(b, Rational::ratio(2, 27));
        let (a, b) = ratio_step_check(2, 0).unwrap();
        assert_eq!(a, Rational::ratio(1, 4));
        assert_eq!(a, b);
        assert!(ratio_step_check(3, 2).is_err());
    }

    #[test]
    fn inversion_in_proved_range() {
        // m = 0 relates <r^-1> to <r^-2>
        let inv = pasternack_inversion(2, 1, 0).unwrap();
        assert_eq!(inv.power, -2);
        assert_eq!(inv.value, Rational::ratio(1, 12));
        assert_eq!(inv.value, moment(2, 1, -2).unwrap().value);

        // m = 1 relates <r^0> to <r^-3>
        let inv = pasternack_inversion(3, 1, 1).unwrap();
        assert_eq!(inv.power, -3);
        assert_eq!(inv.value, moment(3, 1, -3).unwrap().value);
    }

    #[test]
    fn inversion_range_enforced() {
        let err = pasternack_inversion(2, 1, 3).unwrap_err();
        assert!(matches!(err, Error::Range { l: 1, m: 3, .. }));
        assert!(pasternack_inversion(2, 1, -1).is_err());
    }

    #[test]
    fn extended_inversion_probes_negative_m() {
        // m = -1 reproduces the virial seed <r^-1> = 1/n^2
        for n in 1..=5u32 {
            for l in 0..n {
                let inv = pasternack_inversion_extended(n, l, -1).unwrap();
                assert_eq!(inv.power, -1);
                assert_eq!(inv.value, moment(n, l, -1).unwrap().value, "n={n} l={l}");
            }
        }
        assert!(pasternack_inversion_extended(2, 1, -4).is_err());
    }

    #[test]
    fn cauchy_schwarz_between_neighbors() {
        // <r^(m-1)><r^(m+1)> >= <r^m>^2 for interior m
        for n in 1..=5u32 {
            for l in 0..n {
                for m in -2 * (l as i64) - 1..=6 {
                    let lo = moment(n, l, m - 1).unwrap().value;
                    let hi = moment(n, l, m + 1).unwrap().value;
                    let mid = moment(n, l, m).unwrap().value;
                    assert!(lo * hi >= &mid * &mid, "n={n} l={l} m={m}");
                }
            }
        }
    }

    #[test]
    fn kp_closure_small_grid() {
        for n in 1..=5u32 {
            for l in 0..n {
                for m in -2 * (l as i64) + 1..=8 {
                    let a = moment(n, l, m - 1).unwrap().value;
                    let b = moment(n, l, m - 2).unwrap().value;
                    let c = moment(n, l, m - 3).unwrap().value;
                    assert!(
                        kp_residual(n, l, m, &a, &b, &c).is_zero(),
                        "n={n} l={l} m={m}"
                    );
                }
            }
        }
    }
}
