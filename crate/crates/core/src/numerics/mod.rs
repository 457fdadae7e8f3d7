//! Foundation values shared by the phase-shift evaluators: complex-argument
//! checks, Euler's constant, Bernoulli numbers, odd zeta values, the
//! arctangent form of the log ratio and a compensated accumulator.

mod bernoulli;
mod sum;
mod zeta;

pub use bernoulli::{
    bernoulli_2n, bernoulli_2n_exact, stirling_coefficient, stirling_coefficient_exact,
    MAX_BERNOULLI_INDEX,
};
pub use sum::CompensatedSum;
pub use zeta::zeta_odd;

use num_complex::Complex;

use crate::error::{PhaseError, Result};
use crate::scalar::Real;

/// Complex argument of μ and Γ.
pub type ComplexValue<T> = Complex<T>;

/// Euler's constant γ to full double precision.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[inline]
pub fn euler_gamma_constant<T: Real>() -> T {
    T::lit(EULER_GAMMA)
}

/// Truncation and iteration controls shared by all series and root finders.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig<T> {
    /// Relative tolerance at which a convergent series is truncated.
    pub series_rel_tol: T,
    /// Hard cap on the number of series terms.
    pub max_terms: usize,
    /// Absolute tolerance on root locations.
    pub root_abs_tol: T,
    /// Number of Stirling-series terms used by the asymptotic phase route.
    pub stirling_terms: usize,
}

impl<T: Real> Default for EvalConfig<T> {
    fn default() -> Self {
        Self {
            series_rel_tol: T::lit(1e-14),
            max_terms: 1_000_000,
            root_abs_tol: T::lit(1e-10),
            stirling_terms: 3,
        }
    }
}

impl<T: Real> EvalConfig<T> {
    pub fn with_series_tol(mut self, tol: T) -> Self {
        self.series_rel_tol = tol;
        self
    }

    pub fn with_root_tol(mut self, tol: T) -> Self {
        self.root_abs_tol = tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.series_rel_tol > T::zero() && self.series_rel_tol.is_finite()) {
            return Err(PhaseError::Config(format!(
                "series_rel_tol must be positive, got {}",
                self.series_rel_tol
            )));
        }
        if !(self.root_abs_tol > T::zero() && self.root_abs_tol.is_finite()) {
            return Err(PhaseError::Config(format!(
                "root_abs_tol must be positive, got {}",
                self.root_abs_tol
            )));
        }
        if self.max_terms == 0 {
            return Err(PhaseError::Config("max_terms must be at least 1".into()));
        }
        if !(1..=MAX_BERNOULLI_INDEX).contains(&self.stirling_terms) {
            return Err(PhaseError::Config(format!(
                "stirling_terms must lie in 1..={MAX_BERNOULLI_INDEX}, got {}",
                self.stirling_terms
            )));
        }
        Ok(())
    }
}

pub(crate) fn check_finite_real<T: Real>(name: &str, x: T) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(PhaseError::domain(format!(
            "{name} must be finite, got {x}"
        )))
    }
}

/// Rejects non-finite components.
pub fn check_finite<T: Real>(z: ComplexValue<T>) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(PhaseError::domain(format!("non-finite complex value {z}")))
    }
}

/// Rejects points on the branch cut (-inf, 0].
pub fn check_cut_plane<T: Real>(z: ComplexValue<T>) -> Result<()> {
    check_finite(z)?;
    if z.im == T::zero() && z.re <= T::zero() {
        return Err(PhaseError::domain(format!(
            "{z} lies on the branch cut (-inf, 0]"
        )));
    }
    Ok(())
}

/// Principal argument in (-π, π]; a negative-zero imaginary part counts as +0.
#[inline]
pub fn principal_arg<T: Real>(z: ComplexValue<T>) -> T {
    (z.im + T::zero()).atan2(z.re)
}

/// `(1/2i) Log((x+iy)/(x-iy))`, which for `x > 0` collapses to `atan(y/x)`.
pub fn half_log_ratio_as_atan<T: Real>(x: T, y: T) -> Result<T> {
    check_finite_real("x", x)?;
    check_finite_real("y", y)?;
    if x <= T::zero() {
        return Err(PhaseError::domain(format!(
            "x must be positive for the arctangent identity, got {x}"
        )));
    }
    // atan2 with x > 0 is atan(y/x) without overflowing the quotient.
    Ok(y.atan2(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn euler_constant_partial_sum() {
        let n = 1_000_000usize;
        let mut acc = CompensatedSum::new();
        for m in 0..=n {
            acc.add(1.0 / (m as f64 + 1.0));
        }
        let partial = acc.value() - ((n + 1) as f64).ln();
        assert!((partial - euler_gamma_constant::<f64>()).abs() < 1e-6);
        let g: f64 = euler_gamma_constant();
        assert!(g > 0.5 && g < 0.6);
        assert!((g - 0.5772156649).abs() < 1e-10);
    }

    #[test]
    fn arctangent_identity_examples() {
        assert!((half_log_ratio_as_atan(1.0, 1.0).unwrap() - PI / 4.0).abs() < 1e-16);
        assert_eq!(half_log_ratio_as_atan(1.0, 0.0).unwrap(), 0.0);
        let v: f64 = half_log_ratio_as_atan(2.0, 0.5).unwrap();
        assert!((v - 0.244_978_663_126_864_15).abs() < 1e-15);
        let z = Complex::new(2.0, 0.5);
        let via_log = ((z / z.conj()).ln() / Complex::new(0.0, 2.0)).re;
        assert!((v - via_log).abs() < 1e-15);
    }

    #[test]
    fn arctangent_identity_rejects_nonpositive_x() {
        assert!(matches!(
            half_log_ratio_as_atan(0.0, 1.0),
            Err(PhaseError::Domain(_))
        ));
        assert!(matches!(
            half_log_ratio_as_atan(-1.0, 1.0),
            Err(PhaseError::Domain(_))
        ));
        assert!(half_log_ratio_as_atan(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn principal_arg_range_and_conjugation() {
        let neg_zero = Complex::new(-2.0, -0.0);
        assert_eq!(principal_arg(neg_zero), PI);
        let z = Complex::new(-1.0f64, 1e-300);
        assert!((principal_arg(z.conj()) + principal_arg(z)).abs() < 1e-300);
        let w = Complex::new(0.3, -4.0);
        assert_eq!(principal_arg(w.conj()), -principal_arg(w));
    }

    #[test]
    fn cut_plane_checks() {
        assert!(check_cut_plane(Complex::new(0.0, 0.0)).is_err());
        assert!(check_cut_plane(Complex::new(-3.0, 0.0)).is_err());
        assert!(check_cut_plane(Complex::new(-3.0, 1e-12)).is_ok());
        assert!(check_cut_plane(Complex::new(f64::INFINITY, 1.0)).is_err());
        assert!(check_cut_plane(Complex::new(1.0, f64::NAN)).is_err());
    }

    #[test]
    fn config_validation() {
        assert!(EvalConfig::<f64>::default().validate().is_ok());
        let bad = EvalConfig::<f64> {
            max_terms: 0,
            ..Default::default()
        };
        assert!(matches!(bad.validate(), Err(PhaseError::Config(_))));
        let bad = EvalConfig::<f64>::default().with_series_tol(0.0);
        assert!(bad.validate().is_err());
        let bad = EvalConfig::<f64>::default().with_root_tol(f64::NAN);
        assert!(bad.validate().is_err());
        let bad = EvalConfig::<f64> {
            stirling_terms: 11,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }
}
