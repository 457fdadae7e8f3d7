use super::{CompensatedSum, EvalConfig};
use crate::error::{PhaseError, Result};
use crate::scalar::Real;

/// ζ(2k+1) by direct summation of `m^{-(2k+1)}` with a midpoint-integral tail.
///
/// For the convex summand the remainder after `N` terms is bracketed by
/// `∫_{N+1}^∞` and `∫_{N+1/2}^∞`. The latter, with its midpoint-rule
/// correction `-s (N+1/2)^{-s-1} / 24`, is added once that correction drops
/// below `cfg.series_rel_tol` times the partial sum. For large `s` the
/// correction is unreliable at small `N`, so the tail is clamped to the lower
/// integral.
pub fn zeta_odd<T: Real>(k: usize, cfg: &EvalConfig<T>) -> Result<T> {
    cfg.validate()?;
    if k == 0 {
        return Err(PhaseError::domain(
            "zeta_odd needs k >= 1 (zeta(1) diverges)",
        ));
    }
    let Some(s) = k.checked_mul(2).and_then(|v| v.checked_add(1)) else {
        return Ok(T::one());
    };
    let Ok(s_i) = i32::try_from(s) else {
        // 2^{-s} is far below any representable tolerance.
        return Ok(T::one());
    };
    let s_real = T::from_count(s);
    let half = T::lit(0.5);
    let mut acc = CompensatedSum::new();
    for m in 1..=cfg.max_terms {
        let x = T::from_count(m);
        acc.add(x.powi(-s_i));
        let edge = x + half;
        let residual = s_real * edge.powi(-s_i - 1) / T::lit(24.0);
        if residual < cfg.series_rel_tol * acc.value() {
            let lower = (x + T::one()).powi(1 - s_i) / (s_real - T::one());
            let tail = (edge.powi(1 - s_i) / (s_real - T::one()) - residual).max(lower);
            return Ok(acc.value() + tail);
        }
    }
    Err(PhaseError::Convergence {
        what: "zeta_odd",
        limit: cfg.max_terms,
    })
}
