//! Brute-force oracle and the identity verifier.
//!
//! Everything the recurrence and ladder machinery claims is re-derived
//! here by a deliberately independent route: the closed-form associated
//! Laguerre expansion of the radial wavefunction, term-by-term exact
//! integration, and literal operator application. The two paths share
//! only the [`PolyExp`] arithmetic, so agreement is a genuine
//! cross-check rather than the same code talking to itself.
//!
//! [`verify_all`] sweeps twelve identity families over a quantum-number
//! grid and reports every checked cell. [`verify_all_with_fault`]
//! additionally perturbs a single moment at the verifier's fetch layer —
//! a mutation hook proving the harness can actually see a wrong value.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ladder::{
    build_state, norm_gap_product, normalization_constant_sq, top_state, validate_quantum_numbers,
};
use crate::moments::{inverse_second, kp_residual, moment, pasternack_inversion, ratio_step_check};
use crate::operator::{
    build_hamiltonian, build_hypervirial, build_lower, build_raise, energy, RadialOp,
};
use crate::polyexp::{inner_product, PolyExp, PolyExpTerm};
use crate::rational::{binomial, factorial, Rational};

/// Associated Laguerre polynomial `L_k^alpha` as an exact coefficient
/// list, `coeffs[i]` multiplying `x^i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaguerrePoly {
    pub degree: u32,
    pub alpha: u32,
    coeffs: Vec<Rational>,
}

impl LaguerrePoly {
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }
}

/// `L_k^alpha(x) = sum_i (-1)^i C(k+alpha, k-i) x^i / i!` for `0 <= i <= k`.
pub fn laguerre(k: u32, alpha: u32) -> LaguerrePoly {
    let coeffs = (0..=k)
        .map(|i| {
            let mag = Rational::new(binomial(k + alpha, k - i), factorial(i));
            if i % 2 == 0 {
                mag
            } else {
                -mag
            }
        })
        .collect();
    LaguerrePoly {
        degree: k,
        alpha,
        coeffs,
    }
}

/// Unnormalized bound-state radial wavefunction in closed form:
///
/// ```text
/// R_{n,l}(r) = r^l L_{n-l-1}^{2l+1}(2r/n) exp(-r/n)
/// ```
///
/// This never touches the ladder; it is the reference the ladder-built
/// states are compared against (they agree up to a rational factor).
pub fn oracle_wavefunction(n: u32, l: u32) -> Result<PolyExp> {
    validate_quantum_numbers(n, l)?;
    let poly = laguerre(n - l - 1, 2 * l + 1);
    let decay = Rational::ratio(1, n as i64);
    let scale = Rational::ratio(2, n as i64);
    let terms = poly.coeffs.iter().enumerate().map(|(i, c)| PolyExpTerm {
        coeff: c * scale.pow(i as i64),
        power: l as i64 + i as i64,
        decay: decay.clone(),
    });
    Ok(PolyExp::from_terms(terms))
}

/// `<n,l| r^m |n,l>` by literal integration of the closed-form
/// wavefunction — no recurrence anywhere in the call chain.
pub fn oracle_moment(n: u32, l: u32, m: i64) -> Result<Rational> {
    let psi = oracle_wavefunction(n, l)?;
    let numerator = match integrate(&psi.shift_power(m), &psi) {
        Ok(v) => v,
        Err(Error::DivergentIntegral { .. }) => return Err(Error::MomentDoesNotExist { n, l, m }),
        Err(e) => return Err(e),
    };
    let norm = integrate(&psi, &psi)?;
    Ok(numerator / norm)
}

/// `int_0^inf f g r^2 dr`, mapping divergence through unchanged.
fn integrate(f: &PolyExp, g: &PolyExp) -> Result<Rational> {
    inner_product(f, g)
}

/// Expectation `<psi| op |psi> / <psi|psi>` on the closed-form state.
pub fn expectation(op: &RadialOp, n: u32, l: u32) -> Result<Rational> {
    let psi = oracle_wavefunction(n, l)?;
    let numer = integrate(&psi, &op.apply(&psi))?;
    let norm = integrate(&psi, &psi)?;
    Ok(numer / norm)
}

/// Exact ratio `ladder / oracle` between the ladder-built wavefunction
/// and the closed-form one. The two are proportional by construction of
/// the theory; this extracts the constant and asserts exact agreement
/// term by term.
pub fn proportionality_factor(n: u32, l: u32) -> Result<Rational> {
    let ladder = build_state(n, l)?;
    let oracle = oracle_wavefunction(n, l)?;
    let lead_ladder = &ladder.wavefunction().terms()[0];
    let lead_oracle = &oracle.terms()[0];
    let factor = &lead_ladder.coeff / &lead_oracle.coeff;
    let diff = ladder.wavefunction().sub(&oracle.scale(&factor));
    assert!(
        diff.is_zero(),
        "ladder and closed-form wavefunctions disagree beyond a constant at n={n}, l={l}"
    );
    Ok(factor)
}

/// A deliberate perturbation of one moment, applied where the verifier
/// fetches recurrence values. Used as a negative control: a verifier
/// that cannot flag an injected error is not verifying anything.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MomentFault {
    pub n: u32,
    pub l: u32,
    pub m: i64,
    pub delta: Rational,
}

impl MomentFault {
    /// Fault with the default perturbation `delta = 1`.
    pub fn new(n: u32, l: u32, m: i64) -> Self {
        MomentFault {
            n,
            l,
            m,
            delta: Rational::one(),
        }
    }
}

/// One checked instance that failed: the grid cell plus the two exact
/// values that were supposed to coincide. `n` and `m` are absent for
/// families not indexed by them (the purely operator-algebraic families
/// are indexed by `l` alone).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FailureCell {
    pub n: Option<u32>,
    pub l: u32,
    pub m: Option<i64>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one identity family: how many cells were checked and
/// which of them failed.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IdentityResult {
    pub family: String,
    pub cells: u64,
    pub failures: Vec<FailureCell>,
}

impl IdentityResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Full verifier output: every family in a fixed order, every cell
/// accounted for.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n_max: u32,
    pub results: Vec<IdentityResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(IdentityResult::passed)
    }

    pub fn total_cells(&self) -> u64 {
        self.results.iter().map(|r| r.cells).sum()
    }

    pub fn total_failures(&self) -> usize {
        self.results.iter().map(|r| r.failures.len()).sum()
    }

    pub fn failing_families(&self) -> Vec<&str> {
        self.results
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.family.as_str())
            .collect()
    }
}

/// Moment fetch used by the recurrence-facing families; the fault hook
/// perturbs exactly one `(n, l, m)` cell here and nowhere else.
fn fetch_moment(fault: Option<&MomentFault>, n: u32, l: u32, m: i64) -> Result<Rational> {
    let mut value = moment(n, l, m)?.value;
    if let Some(f) = fault {
        if f.n == n && f.l == l && f.m == m {
            value += f.delta.clone();
        }
    }
    Ok(value)
}

struct FamilyRun {
    family: &'static str,
    cells: u64,
    failures: Vec<FailureCell>,
}

impl FamilyRun {
    fn new(family: &'static str) -> Self {
        FamilyRun {
            family,
            cells: 0,
            failures: Vec::new(),
        }
    }

    fn check(
        &mut self,
        n: Option<u32>,
        l: u32,
        m: Option<i64>,
        outcome: Result<Option<(String, String)>>,
    ) {
        self.cells += 1;
        let (lhs, rhs) = match outcome {
            Ok(None) => return,
            Ok(Some(sides)) => sides,
            Err(e) => (format!("unexpected error: {e}"), String::new()),
        };
        self.failures.push(FailureCell { n, l, m, lhs, rhs });
    }

    fn finish(self) -> IdentityResult {
        IdentityResult {
            family: self.family.to_string(),
            cells: self.cells,
            failures: self.failures,
        }
    }
}

fn pass() -> Result<Option<(String, String)>> {
    Ok(None)
}

fn fail(lhs: impl ToString, rhs: impl ToString) -> Result<Option<(String, String)>> {
    Ok(Some((lhs.to_string(), rhs.to_string())))
}

/// Verify every identity family over `n <= n_max` (and `l <= n_max` for
/// the purely operator-algebraic families). All arithmetic is exact, so
/// a pass is an identity, not a tolerance.
pub fn verify_all(n_max: u32) -> VerificationReport {
    verify_all_with_fault(n_max, None)
}

/// [`verify_all`] with an optional injected moment fault. With a fault
/// targeting a cell some family actually reads, at least one family
/// must fail; `verify_all(n).passed() && !verify_all_with_fault(n,
/// fault).passed()` is the negative control.
pub fn verify_all_with_fault(n_max: u32, fault: Option<&MomentFault>) -> VerificationReport {
    let grid: Vec<(u32, u32)> = (1..=n_max)
        .flat_map(|n| (0..n).map(move |l| (n, l)))
        .collect();

    let results = vec![
        verify_kp_closure(&grid, fault),
        verify_pasternack_inversion(&grid, fault),
        verify_inverse_second(&grid),
        verify_ratio_step(&grid),
        verify_hypervirial(&grid),
        verify_subsidiary(n_max),
        verify_eigen_relation(&grid),
        verify_factorization(n_max),
        verify_reversed_product(n_max),
        verify_intertwining(n_max),
        verify_norm_bookkeeping(&grid),
        verify_proportionality(&grid),
    ];

    VerificationReport { n_max, results }
}

/// Kramers-Pasternack closure: the residual vanishes on every triple of
/// recurrence moments with all three powers inside the existence range.
fn verify_kp_closure(grid: &[(u32, u32)], fault: Option<&MomentFault>) -> IdentityResult {
    let mut run = FamilyRun::new("kp_closure");
    for &(n, l) in grid {
        for m in (-2 * (l as i64) + 1)..=11 {
            let outcome = (|| {
                let a = fetch_moment(fault, n, l, m - 1)?;
                let b = fetch_moment(fault, n, l, m - 2)?;
                let c = fetch_moment(fault, n, l, m - 3)?;
                let residual = kp_residual(n, l, m, &a, &b, &c);
                if residual.is_zero() {
                    pass()
                } else {
                    fail(residual, 0)
                }
            })();
            run.check(Some(n), l, Some(m), outcome);
        }
    }
    run.finish()
}

/// The inversion relation reproduces the recurrence's inverse moments
/// across its whole proven range `0 <= m <= 2l`.
fn verify_pasternack_inversion(grid: &[(u32, u32)], fault: Option<&MomentFault>) -> IdentityResult {
    let mut run = FamilyRun::new("pasternack_inversion");
    for &(n, l) in grid {
        for m in 0..=2 * (l as i64) {
            let outcome = (|| {
                let inverted = pasternack_inversion(n, l, m)?;
                let direct = fetch_moment(fault, n, l, -m - 2)?;
                if inverted.value == direct {
                    pass()
                } else {
                    fail(inverted.value, direct)
                }
            })();
            run.check(Some(n), l, Some(m), outcome);
        }
    }
    run.finish()
}

/// The closed form `<r^-2> = 1/(n^3(l+1/2))` against literal
/// integration of the closed-form wavefunction.
fn verify_inverse_second(grid: &[(u32, u32)]) -> IdentityResult {
    let mut run = FamilyRun::new("inverse_second_closed_form");
    for &(n, l) in grid {
        let outcome = (|| {
            let closed = inverse_second(n, l)?.value;
            let integrated = oracle_moment(n, l, -2)?;
            if closed == integrated {
                pass()
            } else {
                fail(closed, integrated)
            }
        })();
        run.check(Some(n), l, Some(-2), outcome);
    }
    run.finish()
}

/// The `l -> l+1` descent step of the inverse-square moment.
fn verify_ratio_step(grid: &[(u32, u32)]) -> IdentityResult {
    let mut run = FamilyRun::new("ratio_step");
    for &(n, l) in grid {
        if l + 1 >= n {
            continue;
        }
        let outcome = (|| {
            let (here, stepped) = ratio_step_check(n, l)?;
            if here == stepped {
                pass()
            } else {
                fail(here, stepped)
            }
        })();
        run.check(Some(n), l, None, outcome);
    }
    run.finish()
}

/// Hypervirial closure: `<[H_l, r^m d/dr + d/dr r^m + 2 r^(m-1)]> = 0`
/// on every eigenstate, for all powers keeping the integrals finite.
fn verify_hypervirial(grid: &[(u32, u32)]) -> IdentityResult {
    let mut run = FamilyRun::new("hypervirial");
    for &(n, l) in grid {
        let h = build_hamiltonian(l);
        for m in (-2 * (l as i64) + 1)..=8 {
            let outcome = (|| {
                let op = h.commutator(&build_hypervirial(m));
                let value = expectation(&op, n, l)?;
                if value.is_zero() {
                    pass()
                } else {
                    fail(value, 0)
                }
            })();
            run.check(Some(n), l, Some(m), outcome);
        }
    }
    run.finish()
}

/// The subsidiary condition: the lowering operator at `l = n-1`
/// annihilates the top-rung state.
fn verify_subsidiary(n_max: u32) -> IdentityResult {
    let mut run = FamilyRun::new("subsidiary_condition");
    for n in 1..=n_max {
        let top = top_state(n);
        let killed = build_lower(n - 1).apply(top.wavefunction());
        let outcome = if killed.is_zero() {
            pass()
        } else {
            fail(killed, 0)
        };
        run.check(Some(n), n - 1, None, outcome);
    }
    run.finish()
}

/// Every ladder-built state is an `H_l` eigenstate with the Bohr
/// energy `-1/(2n^2)`.
fn verify_eigen_relation(grid: &[(u32, u32)]) -> IdentityResult {
    let mut run = FamilyRun::new("eigen_relation");
    for &(n, l) in grid {
        let outcome = (|| {
            let state = build_state(n, l)?;
            let h_psi = build_hamiltonian(l).apply(state.wavefunction());
            let e_psi = state.wavefunction().scale(&state.energy());
            if h_psi == e_psi {
                pass()
            } else {
                fail(h_psi, e_psi)
            }
        })();
        run.check(Some(n), l, None, outcome);
    }
    run.finish()
}

/// `(1/2) raise_l lower_l + E_l = H_l` as an exact operator identity.
fn verify_factorization(n_max: u32) -> IdentityResult {
    let mut run = FamilyRun::new("factorization");
    for l in 0..=n_max {
        let product = build_raise(l)
            .compose(&build_lower(l))
            .scale(&Rational::ratio(1, 2))
            .add(&RadialOp::scalar(energy(l)));
        let h = build_hamiltonian(l);
        let outcome = if product == h {
            pass()
        } else {
            fail(product, h)
        };
        run.check(None, l, None, outcome);
    }
    run.finish()
}

/// The reversed product lands one rung up:
/// `(1/2) lower_l raise_l + E_l = H_{l+1}`.
fn verify_reversed_product(n_max: u32) -> IdentityResult {
    let mut run = FamilyRun::new("reversed_product");
    for l in 0..=n_max {
        let product = build_lower(l)
            .compose(&build_raise(l))
            .scale(&Rational::ratio(1, 2))
            .add(&RadialOp::scalar(energy(l)));
        let h_up = build_hamiltonian(l + 1);
        let outcome = if product == h_up {
            pass()
        } else {
            fail(product, h_up)
        };
        run.check(None, l, None, outcome);
    }
    run.finish()
}

/// Intertwining: `H_l raise_l = raise_l H_{l+1}`, the relation that
/// lets the raising operator carry eigenstates between rungs.
fn verify_intertwining(n_max: u32) -> IdentityResult {
    let mut run = FamilyRun::new("intertwining");
    for l in 0..=n_max {
        let left = build_hamiltonian(l).compose(&build_raise(l));
        let right = build_raise(l).compose(&build_hamiltonian(l + 1));
        let outcome = if left == right {
            pass()
        } else {
            fail(left, right)
        };
        run.check(None, l, None, outcome);
    }
    run.finish()
}

/// Norm bookkeeping down the ladder: with `k = n-1-l` raising steps,
///
/// ```text
/// (1/2)^k |psi_{n,l}|^2 / |psi_{n,n-1}|^2 = prod_i (E_{n-1} - E_i)
/// ```
///
/// and the closed-form normalization constant inverts that product.
fn verify_norm_bookkeeping(grid: &[(u32, u32)]) -> IdentityResult {
    let mut run = FamilyRun::new("norm_bookkeeping");
    for &(n, l) in grid {
        let outcome = (|| {
            let state = build_state(n, l)?;
            let top = top_state(n);
            let k = (n - 1 - l) as i64;
            let lhs = Rational::ratio(1, 2).pow(k) * state.normsq() / top.normsq();
            let gaps = norm_gap_product(n, l)?;
            if lhs != gaps {
                return fail(lhs, gaps);
            }
            let c2 = normalization_constant_sq(n, l)?;
            let product = c2 * &gaps;
            if product.is_one() {
                pass()
            } else {
                fail(product, 1)
            }
        })();
        run.check(Some(n), l, None, outcome);
    }
    run.finish()
}

/// Ladder-built wavefunctions agree with the closed-form Laguerre
/// expansion up to a nonzero rational constant, term by term.
fn verify_proportionality(grid: &[(u32, u32)]) -> IdentityResult {
    let mut run = FamilyRun::new("ladder_oracle_proportionality");
    for &(n, l) in grid {
        let outcome = (|| {
            let ladder = build_state(n, l)?;
            let oracle = oracle_wavefunction(n, l)?;
            // canonical form bars zero coefficients, so the ratio of the
            // two leading coefficients is automatically nonzero
            let factor = &ladder.wavefunction().terms()[0].coeff / &oracle.terms()[0].coeff;
            let scaled = oracle.scale(&factor);
            if *ladder.wavefunction() == scaled {
                pass()
            } else {
                fail(ladder.wavefunction(), scaled)
            }
        })();
        run.check(Some(n), l, None, outcome);
    }
    run.finish()
}
