//! Point-Coulomb phase shifts σ_l(η) = arg Γ(1 + l + iη).
//!
//! Exact routes: the σ₀ series `-γη - Σ_{m≥0} [atan(η/(m+1)) - η/(m+1)]`
//! with the finite sum `σ_l = σ₀ + Σ_{m=1}^{l} atan(η/m)`, the small-η power
//! series in odd zeta values, and the Gudermann remainder route
//! `σ_l = σ_l^(0) + Im μ(1+l+iη)`. Approximations: the leading Stirling phase
//! σ_l^(0) with its rigorous error bound, the first-order correction σ_l^(1),
//! a truncated Stirling series, and the large-η and large-l limits.

mod roots;

pub use roots::{find_root_bracketed, RootResult};

use num_complex::Complex;

use crate::error::{PhaseError, Result};
use crate::gamma_kernel::{leading_phase, mu_gudermann, mu_stirling_result};
use crate::numerics::{
    check_finite_real, euler_gamma_constant, zeta_odd, CompensatedSum, EvalConfig,
};
use crate::scalar::Real;

/// Below this |η| the dispatcher prefers the power series.
const POWER_SERIES_CUTOFF: f64 = 0.5;

/// |σ₀| below which relative errors are reported as absolute ones.
pub const NEAR_ZERO_THRESHOLD: f64 = 1e-3;

/// One (l, η) pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseQuery<T> {
    pub l: u32,
    pub eta: T,
}

impl<T: Real> PhaseQuery<T> {
    pub fn new(l: u32, eta: T) -> Result<Self> {
        check_finite_real("eta", eta)?;
        Ok(Self { l, eta })
    }

    fn l_plus_one(&self) -> T {
        T::from_u32(self.l).expect("u32 fits") + T::one()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhaseMethod {
    /// σ₀ series plus finite arctangent sum.
    ExactSum,
    /// σ_l^(0) plus the Gudermann remainder.
    ExactGudermann,
    Order0,
    Order1,
    PowerSeries,
    LargeEta,
    LogApprox,
    /// σ_l^(0) plus a truncated Stirling series for the remainder.
    Stirling,
}

impl PhaseMethod {
    pub fn is_exact(self) -> bool {
        matches!(
            self,
            PhaseMethod::ExactSum | PhaseMethod::ExactGudermann | PhaseMethod::PowerSeries
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseResult<T> {
    /// Phase shift in radians.
    pub sigma: T,
    pub method: PhaseMethod,
    pub error_bound: Option<T>,
    pub terms_used: Option<usize>,
}

impl<T: Real> PhaseResult<T> {
    fn approx(sigma: T, method: PhaseMethod, error_bound: Option<T>) -> Self {
        Self {
            sigma,
            method,
            error_bound,
            terms_used: None,
        }
    }

    /// σ / π.
    pub fn over_pi(&self) -> T {
        self.sigma / T::PI()
    }
}

/// `atan(x) - x`, via its Taylor series where the difference cancels.
fn atan_minus_identity<T: Real>(x: T) -> T {
    if x.abs() >= T::lit(0.25) {
        return x.atan() - x;
    }
    let x2 = x * x;
    let mut power = x * x2;
    let mut sum = T::zero();
    let mut k = 1usize;
    loop {
        let term = power / T::from_count(2 * k + 1);
        let term = if k % 2 == 1 { -term } else { term };
        sum = sum + term;
        if term.abs() <= T::epsilon() * T::lit(0.25) * sum.abs() {
            return sum;
        }
        power = power * x2;
        k += 1;
    }
}

/// `∫_A^∞ [atan(a/t) - a/t] dt = A Σ_{k≥1} (-1)^k x^{2k+1} / (2k(2k+1))`, `x = a/A ≤ 1/2`.
fn sigma0_tail_integral<T: Real>(a: T, edge: T) -> T {
    let x = a / edge;
    let x2 = x * x;
    let mut power = x * x2;
    let mut sum = T::zero();
    let mut k = 1usize;
    loop {
        let kk = T::from_count(2 * k);
        let term = power / (kk * (kk + T::one()));
        let term = if k % 2 == 1 { -term } else { term };
        sum = sum + term;
        if term.abs() <= T::epsilon() * T::lit(0.25) * sum.abs() || k > 200 {
            return edge * sum;
        }
        power = power * x2;
        k += 1;
    }
}

/// σ₀ from `-γη - Σ_{m≥0} [atan(η/(m+1)) - η/(m+1)]`.
///
/// The remainder after `N` summands is replaced by the integral of the
/// summand from `A = N + 1/2` to infinity (leading behaviour `-η³/(6N²)`)
/// plus its midpoint-rule correction `f'(A)/24 = |η|³/(24 A² (A² + η²))`.
/// The sum stops once that correction is below
/// `cfg.series_rel_tol · max(|σ₀|, 1)`. `error_bound` reports the magnitude
/// of the integral tail: the true remainder lies between it and zero.
pub fn sigma0_exact<T: Real>(eta: T, cfg: &EvalConfig<T>) -> Result<PhaseResult<T>> {
    cfg.validate()?;
    check_finite_real("eta", eta)?;
    if eta == T::zero() {
        return Ok(PhaseResult {
            sigma: T::zero(),
            method: PhaseMethod::ExactSum,
            error_bound: Some(T::zero()),
            terms_used: Some(0),
        });
    }
    // The series is odd in η.
    let a = eta.abs();
    let half = T::lit(0.5);
    let lead = euler_gamma_constant::<T>() * a;
    let min_edge = a + a;
    let mut acc = CompensatedSum::new();
    for n in 1..=cfg.max_terms {
        acc.add(atan_minus_identity(a / T::from_count(n)));
        let edge = T::from_count(n) + half;
        if edge < min_edge {
            continue;
        }
        let partial = -lead - acc.value();
        let edge2 = edge * edge;
        let residual = a.powi(3) / (T::lit(24.0) * edge2 * (edge2 + a * a));
        if residual < cfg.series_rel_tol * partial.abs().max(T::one()) {
            let tail = sigma0_tail_integral(a, edge);
            let sigma = -lead - (acc.value() + tail + residual);
            return Ok(PhaseResult {
                sigma: eta.signum() * sigma,
                method: PhaseMethod::ExactSum,
                error_bound: Some(tail.abs()),
                terms_used: Some(n),
            });
        }
    }
    Err(PhaseError::Convergence {
        what: "sigma0_exact",
        limit: cfg.max_terms,
    })
}

/// Partial sum through `k_max` of the alternating series
/// `σ₀ = -γη - Σ_{k≥1} (-1)^k ζ(2k+1) η^{2k+1} / (2k+1)`, valid for |η| < 1.
///
/// `error_bound` is the magnitude of the first omitted term.
pub fn sigma0_power_series<T: Real>(eta: T, k_max: usize) -> Result<PhaseResult<T>> {
    check_finite_real("eta", eta)?;
    if eta.abs() >= T::one() {
        return Err(PhaseError::domain(format!(
            "power series needs |eta| < 1, got {eta}"
        )));
    }
    let cfg = EvalConfig::<T>::default();
    let eta2 = eta * eta;
    let mut acc = CompensatedSum::new();
    acc.add(-euler_gamma_constant::<T>() * eta);
    let mut power = eta * eta2;
    for k in 1..=k_max {
        let term = zeta_odd(k, &cfg)? * power / T::from_count(2 * k + 1);
        // -(-1)^k term
        acc.add(if k % 2 == 1 { term } else { -term });
        power = power * eta2;
    }
    let next = zeta_odd(k_max + 1, &cfg)? * power.abs() / T::from_count(2 * k_max + 3);
    Ok(PhaseResult {
        sigma: acc.value(),
        method: PhaseMethod::PowerSeries,
        error_bound: Some(next),
        terms_used: Some(k_max),
    })
}

/// Smallest `k_max` whose alternating-series bound is below `tol`.
pub fn power_series_terms<T: Real>(eta: T, tol: T, max_terms: usize) -> Result<usize> {
    check_finite_real("eta", eta)?;
    let a = eta.abs();
    if a >= T::one() {
        return Err(PhaseError::domain(format!(
            "power series needs |eta| < 1, got {eta}"
        )));
    }
    let cfg = EvalConfig::<T>::default();
    let a2 = a * a;
    let mut power = a * a2;
    for k_max in 0..=max_terms {
        // first omitted term after k_max terms: ζ(2k_max+3) a^{2k_max+3} / (2k_max+3)
        let bound = zeta_odd(k_max + 1, &cfg)? * power / T::from_count(2 * k_max + 3);
        if bound < tol {
            return Ok(k_max);
        }
        power = power * a2;
    }
    Err(PhaseError::Convergence {
        what: "power_series_terms",
        limit: max_terms,
    })
}

/// σ₀ by whichever exact route suits η: the power series for |η| < 0.5,
/// the direct sum otherwise.
pub fn sigma0<T: Real>(eta: T, cfg: &EvalConfig<T>) -> Result<PhaseResult<T>> {
    cfg.validate()?;
    check_finite_real("eta", eta)?;
    if eta.abs() < T::lit(POWER_SERIES_CUTOFF) {
        let k = power_series_terms(eta, cfg.series_rel_tol, cfg.max_terms)?;
        sigma0_power_series(eta, k)
    } else {
        sigma0_exact(eta, cfg)
    }
}

fn arctangent_sum<T: Real>(l: u32, eta: T) -> T {
    (1..=l)
        .map(|m| eta.atan2(T::from_u32(m).expect("u32 fits")))
        .collect::<CompensatedSum<T>>()
        .value()
}

/// `σ_l = σ₀ + Σ_{m=1}^{l} atan(η/m)`.
pub fn sigma_l_exact<T: Real>(q: PhaseQuery<T>, cfg: &EvalConfig<T>) -> Result<PhaseResult<T>> {
    check_finite_real("eta", q.eta)?;
    let s0 = sigma0_exact(q.eta, cfg)?;
    Ok(PhaseResult {
        sigma: s0.sigma + arctangent_sum(q.l, q.eta),
        method: PhaseMethod::ExactSum,
        error_bound: s0.error_bound,
        terms_used: s0.terms_used.map(|n| n + q.l as usize),
    })
}

/// `σ_l = σ_l^(0) + Im μ(1 + l + iη)`, μ from the Gudermann series.
pub fn sigma_l_gudermann<T: Real>(q: PhaseQuery<T>, cfg: &EvalConfig<T>) -> Result<PhaseResult<T>> {
    check_finite_real("eta", q.eta)?;
    let mu = mu_gudermann(Complex::new(q.l_plus_one(), q.eta), cfg)?;
    Ok(PhaseResult {
        sigma: leading_phase(q.l, q.eta) + mu.value.im,
        method: PhaseMethod::ExactGudermann,
        error_bound: mu.truncation_error,
        terms_used: Some(mu.terms_used),
    })
}

/// Error bound on σ_l^(0): `1 / (6 (l + 1 + √((l+1)² + η²)))`.
pub fn order0_error_bound<T: Real>(q: PhaseQuery<T>) -> T {
    let lp1 = q.l_plus_one();
    T::one() / (T::lit(6.0) * (lp1 + lp1.hypot(q.eta)))
}

/// σ_l^(0) = (l+1/2) atan(η/(l+1)) + η (ln √((l+1)² + η²) - 1).
pub fn sigma_l_order0<T: Real>(q: PhaseQuery<T>) -> Result<PhaseResult<T>> {
    check_finite_real("eta", q.eta)?;
    Ok(PhaseResult::approx(
        leading_phase(q.l, q.eta),
        PhaseMethod::Order0,
        Some(order0_error_bound(q)),
    ))
}

/// First Stirling correction `Δσ_l = -η / (12 ((l+1)² + η²))`.
pub fn delta_sigma_l<T: Real>(q: PhaseQuery<T>) -> Result<T> {
    check_finite_real("eta", q.eta)?;
    let lp1 = q.l_plus_one();
    let r = lp1.hypot(q.eta);
    Ok(-q.eta / (T::lit(12.0) * r * r))
}

/// σ_l^(1) = σ_l^(0) + Δσ_l.
pub fn sigma_l_order1<T: Real>(q: PhaseQuery<T>) -> Result<PhaseResult<T>> {
    let s0 = sigma_l_order0(q)?;
    Ok(PhaseResult::approx(
        s0.sigma + delta_sigma_l(q)?,
        PhaseMethod::Order1,
        None,
    ))
}

/// σ_l^(0) plus `cfg.stirling_terms` terms of the Stirling series for the
/// remainder. With one term this coincides with σ_l^(1).
pub fn sigma_l_stirling<T: Real>(q: PhaseQuery<T>, cfg: &EvalConfig<T>) -> Result<PhaseResult<T>> {
    cfg.validate()?;
    check_finite_real("eta", q.eta)?;
    let mu = mu_stirling_result(Complex::new(q.l_plus_one(), q.eta), cfg.stirling_terms)?;
    Ok(PhaseResult {
        sigma: leading_phase(q.l, q.eta) + mu.value.im,
        method: PhaseMethod::Stirling,
        error_bound: mu.truncation_error,
        terms_used: Some(mu.terms_used),
    })
}

/// Large-η limit `σ₀ ≈ π/4 + η (ln η - 1)`.
pub fn sigma0_large_eta<T: Real>(eta: T) -> Result<PhaseResult<T>> {
    check_finite_real("eta", eta)?;
    if eta <= T::zero() {
        return Err(PhaseError::domain(format!(
            "large-eta form needs eta > 0, got {eta}"
        )));
    }
    Ok(PhaseResult::approx(
        T::FRAC_PI_4() + eta * (eta.ln() - T::one()),
        PhaseMethod::LargeEta,
        None,
    ))
}

/// Large-l, small-η/l limit `σ_l ≈ η ln(l+1)`.
pub fn sigma_l_log_approx<T: Real>(q: PhaseQuery<T>) -> Result<PhaseResult<T>> {
    check_finite_real("eta", q.eta)?;
    if q.l == 0 {
        return Err(PhaseError::domain("logarithmic form needs l >= 1"));
    }
    Ok(PhaseResult::approx(
        q.eta * q.l_plus_one().ln(),
        PhaseMethod::LogApprox,
        None,
    ))
}

/// Positive zero of σ₀(η), refined on the bracket [1, 3].
pub fn find_sigma0_zero<T: Real>(cfg: &EvalConfig<T>) -> Result<T> {
    cfg.validate()?;
    let f = |eta: T| sigma0_exact(eta, cfg).map(|r| r.sigma);
    find_root_bracketed(f, T::one(), T::lit(3.0), cfg.root_abs_tol, 200).map(|r| r.root)
}

/// Accuracy of σ₀^(1) against the exact σ₀ at one η.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Order1Accuracy<T> {
    pub eta: T,
    pub exact: T,
    pub approx: T,
    pub abs_err: T,
    /// `(σ₀^(1) - σ₀)/σ₀`; `None` when |σ₀| is below [`NEAR_ZERO_THRESHOLD`].
    pub rel_err: Option<T>,
}

impl<T: Real> Order1Accuracy<T> {
    pub fn near_zero(&self) -> bool {
        self.rel_err.is_none()
    }
}

pub fn order1_accuracy<T: Real>(eta: T, cfg: &EvalConfig<T>) -> Result<Order1Accuracy<T>> {
    let exact = sigma0_exact(eta, cfg)?.sigma;
    let approx = sigma_l_order1(PhaseQuery::new(0, eta)?)?.sigma;
    let diff = approx - exact;
    let rel_err = (exact.abs() >= T::lit(NEAR_ZERO_THRESHOLD)).then(|| diff / exact);
    Ok(Order1Accuracy {
        eta,
        exact,
        approx,
        abs_err: diff.abs(),
        rel_err,
    })
}
