//! Semiclassical phases: the closed-form point-Coulomb WKB phase, the eikonal
//! phase under sharp, exponential and Gaussian screening, and the classical
//! and quantum deflection functions.
//!
//! Eikonal formulas take the impact parameter `b`, the screening length `a`
//! and η directly; relating them to λ = k b and η = k a_half is up to the
//! caller (see [`SemiclassicalQuery`]).

use crate::error::{PhaseError, Result};
use crate::numerics::{check_finite_real, euler_gamma_constant, EvalConfig};
use crate::phase_shifts::{sigma_l_exact, PhaseQuery};
use crate::scalar::Real;

/// Semiclassical kinematics of one collision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemiclassicalQuery<T> {
    /// λ = l + 1/2 = k b.
    pub lambda: T,
    pub eta: T,
    /// Impact parameter.
    pub b: T,
    /// Screening length.
    pub a: T,
    /// Asymptotic wave number.
    pub k: T,
}

impl<T: Real> SemiclassicalQuery<T> {
    /// Builds a query from impact parameter, wave number, screening length
    /// and η, setting λ = k b.
    pub fn from_impact(b: T, k: T, a: T, eta: T) -> Result<Self> {
        positive("b", b)?;
        positive("k", k)?;
        positive("a", a)?;
        check_finite_real("eta", eta)?;
        Ok(Self {
            lambda: k * b,
            eta,
            b,
            a,
            k,
        })
    }

    /// Builds a query from an integer partial wave, with λ = l + 1/2 and b = λ/k.
    pub fn from_partial_wave(l: u32, k: T, a: T, eta: T) -> Result<Self> {
        positive("k", k)?;
        let lambda = langer_lambda::<T>(l);
        Self::from_impact(lambda / k, k, a, eta)
    }

    pub fn wkb(&self) -> Result<T> {
        wkb_phase(self.lambda, self.eta)
    }

    pub fn eikonal_sharp(&self) -> Result<T> {
        eikonal_sharp(self.b, self.a, self.eta)
    }

    pub fn eikonal_exponential(&self) -> Result<T> {
        eikonal_exponential(self.b, self.a, self.eta)
    }

    pub fn eikonal_gaussian(&self) -> Result<T> {
        eikonal_gaussian(self.b, self.a, self.eta)
    }

    pub fn deflection(&self) -> Result<T> {
        deflection_classical(self.lambda, self.eta)
    }
}

/// Semiclassical angular momentum λ = l + 1/2.
pub fn langer_lambda<T: Real>(l: u32) -> T {
    T::from_u32(l).expect("u32 fits") + T::lit(0.5)
}

fn positive<T: Real>(name: &str, x: T) -> Result<()> {
    check_finite_real(name, x)?;
    if x > T::zero() {
        Ok(())
    } else {
        Err(PhaseError::domain(format!(
            "{name} must be positive, got {x}"
        )))
    }
}

/// WKB phase `½η ln(η² + λ²) + λ asin(η/√(η² + λ²)) - η`.
pub fn wkb_phase<T: Real>(lambda: T, eta: T) -> Result<T> {
    positive("lambda", lambda)?;
    check_finite_real("eta", eta)?;
    // For λ > 0, asin(η/hypot(η, λ)) is atan2(η, λ), which stays well
    // conditioned when η ≫ λ.
    Ok(eta * eta.hypot(lambda).ln() + lambda * eta.atan2(lambda) - eta)
}

/// Eikonal phase for a sharp cutoff at radius `a`:
/// `-(η/2) ln((a + √(a²-b²)) / (a - √(a²-b²)))`, zero at `b = a`.
pub fn eikonal_sharp<T: Real>(b: T, a: T, eta: T) -> Result<T> {
    positive("b", b)?;
    positive("a", a)?;
    check_finite_real("eta", eta)?;
    if b > a {
        return Err(PhaseError::domain(format!(
            "impact parameter {b} lies outside the screening radius {a}"
        )));
    }
    // (a+s)/(a-s) = (a+s)²/b², so the phase is -η ln((a+s)/b) with no cancellation.
    let s = ((a - b) * (a + b)).sqrt();
    Ok(-eta * ((a + s) / b).ln())
}

/// `a ≫ b` limit of the sharp-cutoff phase: `η ln(b/(2a))`.
pub fn eikonal_sharp_limit<T: Real>(b: T, a: T, eta: T) -> Result<T> {
    positive("b", b)?;
    positive("a", a)?;
    check_finite_real("eta", eta)?;
    if b >= a {
        return Err(PhaseError::domain(format!(
            "the a >> b limit needs b < a, got b = {b}, a = {a}"
        )));
    }
    Ok(eta * (b / (a + a)).ln())
}

/// Exponential screening `exp(-r/a)`: `η (ln(b/(2a)) - γ)`.
pub fn eikonal_exponential<T: Real>(b: T, a: T, eta: T) -> Result<T> {
    positive("b", b)?;
    positive("a", a)?;
    check_finite_real("eta", eta)?;
    Ok(eta * ((b / (a + a)).ln() - euler_gamma_constant::<T>()))
}

/// Gaussian screening `exp(-r²/a²)`: `η (ln(b/(2a)) - γ/2)`.
pub fn eikonal_gaussian<T: Real>(b: T, a: T, eta: T) -> Result<T> {
    positive("b", b)?;
    positive("a", a)?;
    check_finite_real("eta", eta)?;
    Ok(eta * ((b / (a + a)).ln() - T::lit(0.5) * euler_gamma_constant::<T>()))
}

/// Rutherford deflection `Θ(λ) = 2 atan(η/λ)`, the λ-derivative of twice the WKB phase.
pub fn deflection_classical<T: Real>(lambda: T, eta: T) -> Result<T> {
    positive("lambda", lambda)?;
    check_finite_real("eta", eta)?;
    Ok(T::lit(2.0) * eta.atan2(lambda))
}

/// How [`deflection_quantum_with`] forms `σ_l - σ_{l-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DeflectionRoute {
    /// Evaluate both exact phases and subtract.
    #[default]
    ExplicitDifference,
    /// Use the recursion increment `atan(η/l)` directly.
    Recursion,
}

/// Quantum deflection `Θ_q(l) = 2 (σ_l - σ_{l-1})` from two exact phases.
pub fn deflection_quantum<T: Real>(l: u32, eta: T, cfg: &EvalConfig<T>) -> Result<T> {
    deflection_quantum_with(l, eta, cfg, DeflectionRoute::ExplicitDifference)
}

pub fn deflection_quantum_with<T: Real>(
    l: u32,
    eta: T,
    cfg: &EvalConfig<T>,
    route: DeflectionRoute,
) -> Result<T> {
    check_finite_real("eta", eta)?;
    if l == 0 {
        return Err(PhaseError::domain("quantum deflection needs l >= 1"));
    }
    let two = T::lit(2.0);
    match route {
        DeflectionRoute::ExplicitDifference => {
            let upper = sigma_l_exact(PhaseQuery::new(l, eta)?, cfg)?.sigma;
            let lower = sigma_l_exact(PhaseQuery::new(l - 1, eta)?, cfg)?.sigma;
            Ok(two * (upper - lower))
        }
        DeflectionRoute::Recursion => Ok(two * eta.atan2(T::from_u32(l).expect("u32 fits"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    const GAMMA: f64 = 0.577_215_664_901_532_9;

    #[test]
    fn wkb_examples() {
        assert_eq!(wkb_phase(1.0, 0.0).unwrap(), 0.0);
        let v: f64 = wkb_phase(0.5, 1.0).unwrap();
        assert!((v - (-0.334_853_865_445_849_9)).abs() < 1e-15, "{v}");
        let literal = 0.5 * 1.25f64.ln() + 0.5 * (1.0 / 1.25f64.sqrt()).asin() - 1.0;
        assert!((v - literal).abs() < 1e-15);
        assert!(wkb_phase(0.0, 1.0).is_err());
        assert!(wkb_phase(-1.0, 1.0).is_err());
    }

    #[test]
    fn wkb_approaches_exact_at_large_l() {
        let cfg = EvalConfig::default();
        let gap = |l: u32| {
            let exact = sigma_l_exact(PhaseQuery::new(l, 1.0).unwrap(), &cfg)
                .unwrap()
                .sigma;
            (wkb_phase(langer_lambda::<f64>(l), 1.0).unwrap() - exact).abs()
        };
        assert!(gap(40) < gap(5));
        assert!(gap(200) < 1e-4);
    }

    #[test]
    fn sharp_examples() {
        assert_eq!(eikonal_sharp(3.0, 3.0, 1.7).unwrap(), 0.0);
        let v = eikonal_sharp(1e-3, 1.0, 1.0).unwrap();
        let limit = -(2000f64.ln());
        assert!(((v - limit) / limit).abs() < 1e-4);
        assert!((eikonal_sharp(0.6, 1.0, 2.0).unwrap() + 9f64.ln()).abs() < 1e-14);
        let literal = -(2.0 / 2.0) * ((2.0 + 2.0 * 0.8f64) / (2.0 - 2.0 * 0.8)).ln();
        assert!((eikonal_sharp(0.6, 1.0, 2.0).unwrap() - literal).abs() < 1e-13);
        assert!(eikonal_sharp(1.1, 1.0, 1.0).is_err());
        assert!(eikonal_sharp(0.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn sharp_limit_examples() {
        assert!((eikonal_sharp_limit(0.5, 1.0, 1.0).unwrap() - 0.25f64.ln()).abs() < 1e-15);
        let full: f64 = eikonal_sharp(0.01, 1.0, 1.0).unwrap();
        let lim = eikonal_sharp_limit(0.01, 1.0, 1.0).unwrap();
        assert!(((full - lim) / lim).abs() < 5e-5);
        assert_eq!(eikonal_sharp_limit(0.3, 1.0, 0.0).unwrap(), 0.0);
        assert!(eikonal_sharp_limit(1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn screened_examples() {
        assert_eq!(eikonal_exponential(1.0, 2.0, 0.0).unwrap(), 0.0);
        assert!((eikonal_exponential(2.0, 1.0, 1.0).unwrap() + GAMMA).abs() < 1e-16);
        let v = eikonal_exponential(1.0, 1.0, 2.0).unwrap();
        assert!((v - 2.0 * (0.5f64.ln() - GAMMA)).abs() < 1e-15);
        assert!((v - (-2.540_725_690_922_956_3)).abs() < 1e-12);
        assert_eq!(eikonal_gaussian(1.0, 2.0, 0.0).unwrap(), 0.0);
        assert!((eikonal_gaussian(2.0, 1.0, 1.0).unwrap() + GAMMA / 2.0).abs() < 1e-16);
        for &(b, a, eta) in &[(0.1, 5.0, 1.3), (7.0, 0.2, -2.0), (1.0, 1.0, 0.25)] {
            let d = eikonal_exponential(b, a, eta).unwrap() - eikonal_gaussian(b, a, eta).unwrap();
            assert!((d + eta * GAMMA / 2.0).abs() < 1e-14);
        }
        assert!(eikonal_gaussian(-1.0, 1.0, 1.0).is_err());
        assert!(eikonal_exponential(1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn classical_deflection_examples() {
        assert!((deflection_classical(1.0, 1.0).unwrap() - FRAC_PI_2).abs() < 1e-16);
        assert_eq!(deflection_classical(3.7, 0.0).unwrap(), 0.0);
        let (lam, eta, h) = (2.0f64, 1.0, 1e-5);
        let fd =
            2.0 * (wkb_phase(lam + h, eta).unwrap() - wkb_phase(lam - h, eta).unwrap()) / (2.0 * h);
        assert!((fd - deflection_classical(lam, eta).unwrap()).abs() < 1e-8);
        assert!(deflection_classical(0.0, 1.0).is_err());
    }

    #[test]
    fn quantum_deflection_examples() {
        let cfg = EvalConfig::default();
        assert!((deflection_quantum(1, 1.0, &cfg).unwrap() - FRAC_PI_2).abs() < 1e-12);
        let v = deflection_quantum(5, 0.1, &cfg).unwrap();
        assert!((v - 2.0 * 0.02f64.atan()).abs() < 1e-12);
        assert!((v - 0.039_994_667_946_301_07).abs() < 1e-12);
        let rec = deflection_quantum_with(5, 0.1, &cfg, DeflectionRoute::Recursion).unwrap();
        assert!((v - rec).abs() < 1e-12);
        assert_eq!(deflection_quantum(1, 0.0, &cfg).unwrap(), 0.0);
        assert!(deflection_quantum(0, 1.0, &cfg).is_err());
        let v = deflection_quantum(3, 2.0, &cfg).unwrap();
        assert!((v - 2.0 * (2.0f64 / 3.0).atan()).abs() < 1e-12);
        assert!(v < PI);
    }

    #[test]
    fn query_helpers() {
        let q = SemiclassicalQuery::from_impact(2.0, 1.5, 10.0, 1.0).unwrap();
        assert_eq!(q.lambda, 3.0);
        assert_eq!(q.wkb().unwrap(), wkb_phase(3.0, 1.0).unwrap());
        assert_eq!(
            q.deflection().unwrap(),
            deflection_classical(3.0, 1.0).unwrap()
        );
        assert!(q.eikonal_sharp().is_ok());
        let p = SemiclassicalQuery::<f64>::from_partial_wave(4, 2.0, 10.0, 1.0).unwrap();
        assert!((p.lambda - 4.5).abs() < 1e-15);
        assert!((p.b - 2.25).abs() < 1e-15);
        assert!(SemiclassicalQuery::from_impact(-1.0, 1.0, 1.0, 1.0).is_err());
    }
}
