//! Point-Coulomb scattering phase shifts σ_l(η) = arg Γ(1 + l + iη).
//!
//! The library evaluates σ_l exactly (two independent convergent routes),
//! through the Stirling/Gudermann machinery for the gamma-function correction
//! μ(z), and through the semiclassical WKB and eikonal limits. Every
//! evaluator is generic over [`Real`] (`f32` or `f64`); the `*64` aliases
//! below fix the common double-precision case.
//!
//! ```
//! use coulphase::{sigma_l_exact, sigma_l_order1, EvalConfig64, PhaseQuery64};
//!
//! let q = PhaseQuery64::new(0, 1.0)?;
//! let exact = sigma_l_exact(q, &EvalConfig64::default())?;
//! let approx = sigma_l_order1(q)?;
//! assert!((exact.sigma - -0.301_640_320_467_533).abs() < 1e-13);
//! assert!((approx.sigma - exact.sigma).abs() < 1e-3);
//! # Ok::<(), coulphase::PhaseError>(())
//! ```

pub mod error;
pub mod gamma_kernel;
pub mod numerics;
pub mod phase_shifts;
pub mod scalar;
pub mod semiclassical;

pub use error::{PhaseError, Result};
pub use gamma_kernel::{
    exp_mu_series, gamma_ratio_phase, gudermann_term, mu_bound, mu_gudermann, mu_stirling,
    mu_stirling_result, MuMethod, MuResult,
};
pub use numerics::{
    bernoulli_2n, euler_gamma_constant, half_log_ratio_as_atan, zeta_odd, ComplexValue, EvalConfig,
};
pub use phase_shifts::{
    delta_sigma_l, find_sigma0_zero, order1_accuracy, sigma0, sigma0_exact, sigma0_large_eta,
    sigma0_power_series, sigma_l_exact, sigma_l_gudermann, sigma_l_log_approx, sigma_l_order0,
    sigma_l_order1, sigma_l_stirling, Order1Accuracy, PhaseMethod, PhaseQuery, PhaseResult,
};
pub use scalar::Real;
pub use semiclassical::{
    deflection_classical, deflection_quantum, deflection_quantum_with, eikonal_exponential,
    eikonal_gaussian, eikonal_sharp, eikonal_sharp_limit, langer_lambda, wkb_phase,
    DeflectionRoute, SemiclassicalQuery,
};

pub type Complex64 = ComplexValue<f64>;
pub type Complex32 = ComplexValue<f32>;
pub type EvalConfig64 = EvalConfig<f64>;
pub type EvalConfig32 = EvalConfig<f32>;
pub type PhaseQuery64 = PhaseQuery<f64>;
pub type PhaseQuery32 = PhaseQuery<f32>;
pub type PhaseResult64 = PhaseResult<f64>;
pub type PhaseResult32 = PhaseResult<f32>;
pub type MuResult64 = MuResult<f64>;
pub type MuResult32 = MuResult<f32>;
pub type SemiclassicalQuery64 = SemiclassicalQuery<f64>;
