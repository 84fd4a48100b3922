//! Radial functions of the form `sum c * r^p * exp(-s*r)`.
//!
//! [`PolyExp`] is closed under addition, multiplication, differentiation
//! and multiplication by powers of `r`, which is everything the ladder
//! operators and the moment integrals need. All decay constants are
//! strictly positive, so integrability of a term over `(0, inf)` against
//! the measure `r^2 dr` reduces to a sign condition on its net power.
//!
//! Inner products are exact: `int_0^inf r^P exp(-s r) dr = P! / s^(P+1)`
//! for integer `P >= 0`, which keeps the whole pipeline in rational
//! arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};

/// One monomial `coeff * r^power * exp(-decay * r)`.
///
/// Invariants: `coeff != 0` and `decay > 0`. Zero coefficients are
/// dropped during canonicalization; the positive decay guarantees
/// convergence at infinity for every integral in the crate.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PolyExpTerm {
    pub coeff: Rational,
    pub power: i64,
    pub decay: Rational,
}

/// A finite sum of [`PolyExpTerm`]s in canonical form.
///
/// Canonical means: no two terms share a `(power, decay)` pair, no zero
/// coefficients, and terms are sorted by `(decay, power)`. The zero
/// function is the empty sum. Equality is structural, which makes it an
/// exact function equality.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct PolyExp {
    terms: Vec<PolyExpTerm>,
}

impl<'de> Deserialize<'de> for PolyExp {
    /// Deserializes through [`PolyExp::from_terms`] so external term
    /// lists are canonicalized on entry.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(PolyExp::from_terms(Vec::<PolyExpTerm>::deserialize(d)?))
    }
}

impl PolyExp {
    /// The zero function.
    pub fn zero() -> Self {
        PolyExp { terms: Vec::new() }
    }

    /// A single term `coeff * r^power * exp(-decay * r)`.
    ///
    /// Panics if `decay <= 0`; such a function would not be integrable
    /// and never arises from bound-state constructions.
    pub fn term(coeff: Rational, power: i64, decay: Rational) -> Self {
        assert!(decay.is_positive(), "decay must be positive");
        if coeff.is_zero() {
            return Self::zero();
        }
        PolyExp {
            terms: vec![PolyExpTerm {
                coeff,
                power,
                decay,
            }],
        }
    }

    /// Canonicalize an arbitrary term list: merge duplicate `(power, decay)`
    /// keys, drop zeros, sort by `(decay, power)`.
    pub fn from_terms(terms: impl IntoIterator<Item = PolyExpTerm>) -> Self {
        let mut merged: BTreeMap<(Rational, i64), Rational> = BTreeMap::new();
        for t in terms {
            assert!(t.decay.is_positive(), "decay must be positive");
            let entry = merged
                .entry((t.decay, t.power))
                .or_insert_with(Rational::zero);
            *entry += t.coeff;
        }
        let terms = merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((decay, power), coeff)| PolyExpTerm {
                coeff,
                power,
                decay,
            })
            .collect();
        PolyExp { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Canonical term list, sorted by `(decay, power)`.
    pub fn terms(&self) -> &[PolyExpTerm] {
        &self.terms
    }

    /// Smallest power of `r` present, `None` for the zero function.
    pub fn min_power(&self) -> Option<i64> {
        self.terms.iter().map(|t| t.power).min()
    }

    pub fn add(&self, other: &PolyExp) -> PolyExp {
        Self::from_terms(self.terms.iter().chain(other.terms.iter()).cloned())
    }

    pub fn sub(&self, other: &PolyExp) -> PolyExp {
        self.add(&other.scale(&Rational::from_int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> PolyExp {
        if c.is_zero() {
            return Self::zero();
        }
        // scaling by a nonzero constant cannot merge or reorder terms
        PolyExp {
            terms: self
                .terms
                .iter()
                .map(|t| PolyExpTerm {
                    coeff: &t.coeff * c,
                    power: t.power,
                    decay: t.decay.clone(),
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &PolyExp) -> PolyExp {
        let mut out = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                out.push(PolyExpTerm {
                    coeff: &a.coeff * &b.coeff,
                    power: a.power + b.power,
                    decay: &a.decay + &b.decay,
                });
            }
        }
        Self::from_terms(out)
    }

    /// Term-by-term derivative:
    /// `c r^p e^(-s r)  ->  c p r^(p-1) e^(-s r) - c s r^p e^(-s r)`.
    pub fn differentiate(&self) -> PolyExp {
        let mut out = Vec::with_capacity(2 * self.terms.len());
        for t in &self.terms {
            if t.power != 0 {
                out.push(PolyExpTerm {
                    coeff: &t.coeff * &Rational::from_int(t.power),
                    power: t.power - 1,
                    decay: t.decay.clone(),
                });
            }
            out.push(PolyExpTerm {
                coeff: -(&t.coeff * &t.decay),
                power: t.power,
                decay: t.decay.clone(),
            });
        }
        Self::from_terms(out)
    }

    /// Multiply by `r^k` (k may be negative).
    pub fn shift_power(&self, k: i64) -> PolyExp {
        PolyExp {
            terms: self
                .terms
                .iter()
                .map(|t| PolyExpTerm {
                    coeff: t.coeff.clone(),
                    power: t.power + k,
                    decay: t.decay.clone(),
                })
                .collect(),
        }
    }
}

/// Exact radial inner product `<f|g> = int_0^inf f(r) g(r) r^2 dr`.
///
/// The product `f * g * r^2` is canonicalized first, so terms that cancel
/// exactly cannot fake a divergence. Any surviving term with net power
/// below zero makes the integral divergent at the origin and is reported
/// as an error rather than regularized away.
pub fn inner_product(f: &PolyExp, g: &PolyExp) -> Result<Rational> {
    let integrand = f.mul(g).shift_power(2);
    let mut total = Rational::zero();
    for t in integrand.terms() {
        if t.power < 0 {
            return Err(Error::DivergentIntegral { power: t.power });
        }
        // int r^P e^(-s r) dr = P! / s^(P+1)
        let p = t.power as u32;
        let value = Rational::from(factorial(p)) / t.decay.pow(p as i64 + 1);
        total += &t.coeff * &value;
    }
    Ok(total)
}

impl fmt::Display for PolyExp {
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
            write!(f, " exp(-{} r)", t.decay)?;
        }
        Ok(())
    }
}
