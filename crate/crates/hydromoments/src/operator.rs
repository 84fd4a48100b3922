//! Radial differential operators with Laurent-monomial coefficients.
//!
//! A [`RadialOp`] is a finite sum of terms `c * r^p * (d/dr)^d`. The set
//! is closed under composition because moving a derivative past a power
//! of `r` only produces more terms of the same shape (generalized
//! Leibniz rule), so ladder operators, Hamiltonians, commutators and
//! formal adjoints all live here.
//!
//! Everything is phase-stripped and in natural atomic units: the ladder
//! operators are the real first-order operators
//!
//! ```text
//! lower_l = d/dr + 1/r + W_l,    raise_l = -d/dr - 1/r + W_l,
//! W_l(r)  = 1/(l+1) - (l+1)/r,
//! ```
//!
//! and the factorized radial Hamiltonian satisfies
//! `H_l = (1/2) raise_l lower_l + E_l` with `E_l = -1/(2(l+1)^2)`.
//! Operator equality is canonical-form structural equality, which makes
//! the factorization, reversed-product and intertwining identities
//! decidable exact checks.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::polyexp::PolyExp;
use crate::rational::{binomial, falling_factorial, Rational};

/// One operator monomial `coeff * r^power * (d/dr)^deriv_order`:
/// differentiate first, then multiply by the Laurent monomial.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RadialOpTerm {
    pub coeff: Rational,
    pub power: i64,
    pub deriv_order: u32,
}

/// A finite sum of [`RadialOpTerm`]s in canonical form: unique
/// `(power, deriv_order)` pairs, no zero coefficients, sorted by
/// `(deriv_order, power)`. The zero operator is the empty sum.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct RadialOp {
    terms: Vec<RadialOpTerm>,
}

impl<'de> Deserialize<'de> for RadialOp {
    /// Deserializes through [`RadialOp::from_terms`] so external term
    /// lists are canonicalized on entry.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(RadialOp::from_terms(Vec::<RadialOpTerm>::deserialize(d)?))
    }
}

impl RadialOp {
    pub fn zero() -> Self {
        RadialOp { terms: Vec::new() }
    }

    /// The identity operator (multiplication by 1).
    pub fn identity() -> Self {
        Self::term(Rational::one(), 0, 0)
    }

    /// First derivative `d/dr`.
    pub fn deriv() -> Self {
        Self::term(Rational::one(), 0, 1)
    }

    /// Multiplication by `r^p`.
    pub fn power_mul(p: i64) -> Self {
        Self::term(Rational::one(), p, 0)
    }

    /// Multiplication by the constant `c`.
    pub fn scalar(c: Rational) -> Self {
        Self::term(c, 0, 0)
    }

    /// A single term `coeff * r^power * (d/dr)^deriv_order`.
    pub fn term(coeff: Rational, power: i64, deriv_order: u32) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        RadialOp {
            terms: vec![RadialOpTerm {
                coeff,
                power,
                deriv_order,
            }],
        }
    }

    /// Canonicalize an arbitrary term list.
    pub fn from_terms(terms: impl IntoIterator<Item = RadialOpTerm>) -> Self {
        let mut merged: BTreeMap<(u32, i64), Rational> = BTreeMap::new();
        for t in terms {
            let entry = merged
                .entry((t.deriv_order, t.power))
                .or_insert_with(Rational::zero);
            *entry += t.coeff;
        }
        let terms = merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((deriv_order, power), coeff)| RadialOpTerm {
                coeff,
                power,
                deriv_order,
            })
            .collect();
        RadialOp { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Canonical term list, sorted by `(deriv_order, power)`.
    pub fn terms(&self) -> &[RadialOpTerm] {
        &self.terms
    }

    pub fn add(&self, other: &RadialOp) -> RadialOp {
        Self::from_terms(self.terms.iter().chain(other.terms.iter()).cloned())
    }

    pub fn sub(&self, other: &RadialOp) -> RadialOp {
        self.add(&other.scale(&Rational::from_int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> RadialOp {
        if c.is_zero() {
            return Self::zero();
        }
        RadialOp {
            terms: self
                .terms
                .iter()
                .map(|t| RadialOpTerm {
                    coeff: &t.coeff * c,
                    power: t.power,
                    deriv_order: t.deriv_order,
                })
                .collect(),
        }
    }

    pub fn neg(&self) -> RadialOp {
        self.scale(&Rational::from_int(-1))
    }

    /// Apply the operator to a radial function.
    pub fn apply(&self, f: &PolyExp) -> PolyExp {
        let mut out = PolyExp::zero();
        for t in &self.terms {
            let mut g = f.clone();
            for _ in 0..t.deriv_order {
                g = g.differentiate();
            }
            out = out.add(&g.shift_power(t.power).scale(&t.coeff));
        }
        out
    }

    /// Operator composition `self . other` (apply `other` first).
    ///
    /// Uses the generalized Leibniz rule to normalize derivatives to the
    /// right of powers:
    ///
    /// ```text
    /// (d/dr)^d r^p = sum_{j=0..d} C(d,j) p(p-1)...(p-j+1) r^(p-j) (d/dr)^(d-j)
    /// ```
    pub fn compose(&self, other: &RadialOp) -> RadialOp {
        let mut out = Vec::new();
        for a in &self.terms {
            for b in &other.terms {
                let coeff = &a.coeff * &b.coeff;
                for j in 0..=a.deriv_order {
                    let weight = Rational::from(binomial(a.deriv_order, j))
                        * Rational::from(falling_factorial(b.power, j));
                    if weight.is_zero() {
                        continue;
                    }
                    out.push(RadialOpTerm {
                        coeff: &coeff * &weight,
                        power: a.power + b.power - j as i64,
                        deriv_order: a.deriv_order - j + b.deriv_order,
                    });
                }
            }
        }
        Self::from_terms(out)
    }

    /// Commutator `[self, other] = self other - other self`.
    pub fn commutator(&self, other: &RadialOp) -> RadialOp {
        self.compose(other).sub(&other.compose(self))
    }

    /// Compose the operator with itself `k` times; `k = 0` is the identity.
    pub fn pow(&self, k: u32) -> RadialOp {
        let mut acc = RadialOp::identity();
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    /// Formal adjoint under the measure `r^2 dr`.
    ///
    /// Term-wise: `(c r^p D^d)^+ = (D^+)^d (c r^p)` with
    /// `D^+ = -d/dr - 2/r`, multiplication operators being self-adjoint.
    /// Boundary terms are ignored; the adjoint identity
    /// `<op f, g> = <f, op^+ g>` therefore holds on function classes where
    /// every integral converges and boundary contributions vanish.
    pub fn adjoint(&self) -> RadialOp {
        // D^+ = -d/dr - 2/r
        let deriv_adjoint = RadialOp::from_terms([
            RadialOpTerm {
                coeff: Rational::from_int(-1),
                power: 0,
                deriv_order: 1,
            },
            RadialOpTerm {
                coeff: Rational::from_int(-2),
                power: -1,
                deriv_order: 0,
            },
        ]);
        let mut out = RadialOp::zero();
        for t in &self.terms {
            let mult = RadialOp::term(t.coeff.clone(), t.power, 0);
            out = out.add(&deriv_adjoint.pow(t.deriv_order).compose(&mult));
        }
        out
    }
}

/// Bound-state energy `E_l = -1/(2(l+1)^2)` in units of `e^2/a0`.
///
/// The label follows the maximal-angular-momentum convention: `E_l` is the
/// energy of the state with principal quantum number `n = l + 1`.
pub fn energy(l: u32) -> Rational {
    let lp1 = (l + 1) as i64;
    Rational::ratio(-1, 2 * lp1 * lp1)
}

/// The phase-stripped radial momentum `d/dr + 1/r`.
///
/// The physical radial momentum is `-i` times this; the stripped form
/// keeps every coefficient real and rational. It is Hermitian up to the
/// stripped phase: `(d/dr + 1/r)^+ = -(d/dr + 1/r)`.
pub fn radial_momentum() -> RadialOp {
    RadialOp::deriv().add(&RadialOp::power_mul(-1))
}

/// Superpotential `W_l(r) = 1/(l+1) - (l+1)/r` as a multiplication operator.
fn superpotential(l: u32) -> RadialOp {
    let lp1 = (l + 1) as i64;
    RadialOp::from_terms([
        RadialOpTerm {
            coeff: Rational::ratio(1, lp1),
            power: 0,
            deriv_order: 0,
        },
        RadialOpTerm {
            coeff: Rational::from_int(-lp1),
            power: -1,
            deriv_order: 0,
        },
    ])
}

/// Stripped lowering operator `lower_l = d/dr + 1/r + W_l`.
pub fn build_lower(l: u32) -> RadialOp {
    radial_momentum().add(&superpotential(l))
}

/// Stripped raising operator `raise_l = -d/dr - 1/r + W_l`.
///
/// This is the formal adjoint of `lower_l` under the `r^2 dr` measure.
pub fn build_raise(l: u32) -> RadialOp {
    radial_momentum().neg().add(&superpotential(l))
}

/// Radial Hamiltonian for angular momentum `l`, natural units:
/// `H_l = -(1/2)(d^2/dr^2 + (2/r) d/dr) + l(l+1)/(2 r^2) - 1/r`.
pub fn build_hamiltonian(l: u32) -> RadialOp {
    let ll1 = (l as i64) * (l as i64 + 1);
    RadialOp::from_terms([
        RadialOpTerm {
            coeff: Rational::ratio(-1, 2),
            power: 0,
            deriv_order: 2,
        },
        RadialOpTerm {
            coeff: Rational::from_int(-1),
            power: -1,
            deriv_order: 1,
        },
        RadialOpTerm {
            coeff: Rational::ratio(ll1, 2),
            power: -2,
            deriv_order: 0,
        },
        RadialOpTerm {
            coeff: Rational::from_int(-1),
            power: -1,
            deriv_order: 0,
        },
    ])
}

/// Stripped hypervirial probe operator
/// `O_m = r^m (d/dr + 1/r) + (d/dr + 1/r) r^m`.
///
/// The physical operator `r^m p_r + p_r r^m` is `-i` times this, so the
/// hypervirial vanishing of its commutator with `H_l` on eigenstates
/// carries over unchanged.
pub fn build_hypervirial(m: i64) -> RadialOp {
    let p = radial_momentum();
    let rm = RadialOp::power_mul(m);
    rm.compose(&p).add(&p.compose(&rm))
}

impl fmt::Display for RadialOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", t.coeff)?;
            match t.power {
                0 => {}
                1 => write!(f, " r")?,
                p => write!(f, " r^{p}")?,
            }
            match t.deriv_order {
                0 => {}
                1 => write!(f, " D")?,
                d => write!(f, " D^{d}")?,
            }
        }
        Ok(())
    }
}
