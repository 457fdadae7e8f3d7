//! The Stirling correction μ(z), defined on the cut plane by
//! `Γ(z) = √(2π) e^{-z} z^{z-1/2} e^{μ(z)}`.
//!
//! Two independent evaluations are provided: the convergent Gudermann series
//! `μ(z) = Σ_{m≥0} [(z+m+1/2) Log(1 + 1/(z+m)) - 1]` and the divergent
//! asymptotic Stirling series `Σ B_{2n}/((2n-1)2n) z^{1-2n}`. The Gudermann
//! route also drives [`gamma_ratio_phase`], the reference value of σ_l.

use num_complex::Complex;

use crate::error::{PhaseError, Result};
use crate::numerics::{
    check_cut_plane, check_finite_real, stirling_coefficient, CompensatedSum, ComplexValue,
    EvalConfig, MAX_BERNOULLI_INDEX,
};
use crate::scalar::Real;

/// Modulus below which the argument is shifted with the functional equation.
const SHIFT_RADIUS: f64 = 8.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MuMethod {
    Gudermann,
    Stirling,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuResult<T> {
    pub value: ComplexValue<T>,
    pub terms_used: usize,
    /// Rigorous bound on |μ(z)| from the cut-plane estimate.
    pub bound: T,
    pub method: MuMethod,
    /// Estimated truncation error of `value`, when one is available.
    pub truncation_error: Option<T>,
}

/// Remainder estimate for the Stirling series cut after `n_terms` terms:
/// `|c_{n+1}| / (|z|^{2n+1} cos^{2n+2}(φ/2))`.
fn stirling_remainder<T: Real>(z: ComplexValue<T>, n_terms: usize) -> Option<T> {
    let next = stirling_coefficient::<T>(n_terms + 1).ok()?.abs();
    let r = z.norm();
    let cos_sq_half = if z.re >= T::zero() {
        (r + z.re) / (T::lit(2.0) * r)
    } else {
        z.im * z.im / (T::lit(2.0) * r * (r - z.re))
    };
    let p = i32::try_from(n_terms).ok()?;
    Some(next / (r.powi(2 * p + 1) * cos_sq_half.powi(p + 1)))
}

#[derive(Default)]
struct ComplexAccumulator<T> {
    re: CompensatedSum<T>,
    im: CompensatedSum<T>,
}

impl<T: Real> ComplexAccumulator<T> {
    fn new() -> Self {
        Self {
            re: CompensatedSum::new(),
            im: CompensatedSum::new(),
        }
    }

    fn add(&mut self, z: ComplexValue<T>) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    fn value(&self) -> ComplexValue<T> {
        Complex::new(self.re.value(), self.im.value())
    }
}

/// One Gudermann summand `(w + 1/2) Log(1 + 1/w) - 1`, which also equals
/// `μ(w) - μ(w+1)`.
///
/// For `|w| ≥ 8` the summand is ≈ `1/(12 w²)` and the closed form cancels
/// badly, so the Taylor series in `u = 1/w`,
/// `Σ_{k≥2} (-1)^k (k-1) / (2k(k+1)) u^k`, is used instead.
pub fn gudermann_term<T: Real>(w: ComplexValue<T>) -> ComplexValue<T> {
    let one = T::one();
    if w.norm() < T::lit(SHIFT_RADIUS) {
        let half = T::lit(0.5);
        return (w + half) * (Complex::new(one, T::zero()) + w.inv()).ln() - one;
    }
    let u = w.inv();
    let eps = T::epsilon() * T::lit(0.25);
    let eps_sq = eps * eps;
    let mut power = u * u;
    let mut sum = Complex::new(T::zero(), T::zero());
    let mut k = 2usize;
    loop {
        let kk = T::from_count(k);
        let coeff = (kk - one) / (T::lit(2.0) * kk * (kk + one));
        let term = if k.is_multiple_of(2) {
            power * coeff
        } else {
            -power * coeff
        };
        sum = sum + term;
        if term.norm_sqr() <= eps_sq * sum.norm_sqr() || k > 64 {
            return sum;
        }
        power = power * u;
        k += 1;
    }
}

/// μ(z) from the Gudermann series.
///
/// Arguments with `|z| < 8` are first moved outward with
/// `μ(z) = Σ_{m<n} [μ(z+m) - μ(z+m+1)] + μ(z+n)`. The series remainder after
/// the summand at `W - 1` is `μ(W)`, approximated by its leading term
/// `1/(12W)`; summation stops when the first neglected correction
/// `1/(360|W|³)` is below `cfg.series_rel_tol · max(|μ|, 1)`.
pub fn mu_gudermann<T: Real>(z: ComplexValue<T>, cfg: &EvalConfig<T>) -> Result<MuResult<T>> {
    cfg.validate()?;
    check_cut_plane(z)?;
    let one = T::one();
    let radius = T::lit(SHIFT_RADIUS);

    let mut acc = ComplexAccumulator::new();
    let mut terms = 0usize;
    let mut w = z;
    while w.norm() < radius {
        acc.add(gudermann_term(w));
        w = w + one;
        terms += 1;
        if terms >= cfg.max_terms {
            return Err(PhaseError::Convergence {
                what: "mu_gudermann",
                limit: cfg.max_terms,
            });
        }
    }

    let c360 = T::lit(360.0);
    let tail_error;
    loop {
        acc.add(gudermann_term(w));
        terms += 1;
        w = w + one;
        let scale = acc.value().norm().max(one);
        let r = w.norm();
        let neglected = one / (c360 * r * r * r);
        if neglected < cfg.series_rel_tol * scale {
            acc.add((w * T::lit(12.0)).inv());
            tail_error = stirling_remainder(w, 1);
            break;
        }
        if terms >= cfg.max_terms {
            return Err(PhaseError::Convergence {
                what: "mu_gudermann",
                limit: cfg.max_terms,
            });
        }
    }

    Ok(MuResult {
        value: acc.value(),
        terms_used: terms,
        bound: mu_bound(z)?,
        method: MuMethod::Gudermann,
        truncation_error: tail_error,
    })
}

/// `|μ(z)| ≤ 1 / (12 cos²(φ/2) |z|)` with φ the principal argument.
///
/// Evaluated as `1 / (6 (|z| + Re z))`, with `|z| + Re z` rewritten as
/// `Im(z)² / (|z| - Re z)` in the left half-plane.
pub fn mu_bound<T: Real>(z: ComplexValue<T>) -> Result<T> {
    check_cut_plane(z)?;
    let r = z.norm();
    let denom = if z.re >= T::zero() {
        r + z.re
    } else {
        z.im * z.im / (r - z.re)
    };
    Ok(one_over(T::lit(6.0) * denom))
}

#[inline]
fn one_over<T: Real>(x: T) -> T {
    T::one() / x
}

/// Truncated Stirling series `Σ_{n=1}^{n_terms} B_{2n}/((2n-1)2n) z^{-(2n-1)}`.
///
/// Asymptotic only: adding terms helps for large |z| and eventually hurts.
pub fn mu_stirling<T: Real>(z: ComplexValue<T>, n_terms: usize) -> Result<ComplexValue<T>> {
    check_cut_plane(z)?;
    if !(1..=MAX_BERNOULLI_INDEX).contains(&n_terms) {
        return Err(PhaseError::domain(format!(
            "n_terms must lie in 1..={MAX_BERNOULLI_INDEX}, got {n_terms}"
        )));
    }
    let u = z.inv();
    let u2 = u * u;
    // Horner in u² from the highest coefficient down.
    let mut acc = Complex::new(T::zero(), T::zero());
    for n in (1..=n_terms).rev() {
        acc = acc * u2 + stirling_coefficient::<T>(n)?;
    }
    Ok(acc * u)
}

/// [`mu_stirling`] packaged with the cut-plane bound on the true μ.
pub fn mu_stirling_result<T: Real>(z: ComplexValue<T>, n_terms: usize) -> Result<MuResult<T>> {
    Ok(MuResult {
        value: mu_stirling(z, n_terms)?,
        terms_used: n_terms,
        bound: mu_bound(z)?,
        method: MuMethod::Stirling,
        truncation_error: stirling_remainder(z, n_terms),
    })
}

/// Asymptotic expansion of the correcting factor,
/// `e^{μ(z)} ≈ 1 + 1/(12z) + 1/(288z²) - 139/(51840z³)`.
pub fn exp_mu_series<T: Real>(z: ComplexValue<T>) -> Result<ComplexValue<T>> {
    check_cut_plane(z)?;
    if z.norm() < T::one() {
        return Err(PhaseError::domain(format!(
            "exp_mu_series needs |z| >= 1, got |z| = {}",
            z.norm()
        )));
    }
    let u = z.inv();
    let c1 = T::one() / T::lit(12.0);
    let c2 = T::one() / T::lit(288.0);
    let c3 = -T::lit(139.0) / T::lit(51840.0);
    Ok(((u * c3 + c2) * u + c1) * u + T::one())
}

/// Leading Stirling phase
/// `σ_l^(0) = (l + 1/2) atan(η/(l+1)) + η (ln √((l+1)² + η²) - 1)`.
pub(crate) fn leading_phase<T: Real>(l: u32, eta: T) -> T {
    let lp1 = T::from_u32(l).expect("u32 fits") + T::one();
    let half = T::lit(0.5);
    (lp1 - half) * eta.atan2(lp1) + eta * (lp1.hypot(eta).ln() - T::one())
}

/// σ_l as `σ_l^(0) + Im μ(1 + l + iη)` with μ from the Gudermann series.
pub fn gamma_ratio_phase<T: Real>(l: u32, eta: T, cfg: &EvalConfig<T>) -> Result<T> {
    check_finite_real("eta", eta)?;
    let lp1 = T::from_u32(l).expect("u32 fits") + T::one();
    let mu = mu_gudermann(Complex::new(lp1, eta), cfg)?;
    Ok(leading_phase(l, eta) + mu.value.im)
}
