use crate::error::{PhaseError, Result};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult<T> {
    pub root: T,
    pub iterations: usize,
    /// Width of the final sign-change bracket.
    pub bracket_width: T,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    None,
    Lower,
    Upper,
}

/// Bracketed root refinement: Illinois false-position steps, with a bisection
/// step whenever the previous step failed to halve the bracket.
///
/// `f(lo)` and `f(hi)` must have opposite signs. Stops when the bracket is no
/// wider than `2 * abs_tol` or `f` hits an exact zero.
pub fn find_root_bracketed<T, F>(
    mut f: F,
    lo: T,
    hi: T,
    abs_tol: T,
    max_iter: usize,
) -> Result<RootResult<T>>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    if lo.is_nan() || hi.is_nan() || lo >= hi || abs_tol.is_nan() || abs_tol <= T::zero() {
        return Err(PhaseError::domain(format!(
            "invalid bracket [{lo}, {hi}] or tolerance {abs_tol}"
        )));
    }
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a)?, f(b)?);
    if fa == T::zero() {
        return Ok(RootResult {
            root: a,
            iterations: 0,
            bracket_width: T::zero(),
        });
    }
    if fb == T::zero() {
        return Ok(RootResult {
            root: b,
            iterations: 0,
            bracket_width: T::zero(),
        });
    }
    if fa.signum() == fb.signum() {
        return Err(PhaseError::domain(format!(
            "no sign change on [{lo}, {hi}]: f = {fa}, {fb}"
        )));
    }

    let two = T::lit(2.0);
    let half = T::lit(0.5);
    let mut side = Side::None;
    let mut force_bisect = false;
    for iter in 1..=max_iter {
        let width = b - a;
        if width <= two * abs_tol {
            return Ok(RootResult {
                root: a + half * width,
                iterations: iter - 1,
                bracket_width: width,
            });
        }
        let secant = b - fb * width / (fb - fa);
        let c = if force_bisect || !(secant > a && secant < b) {
            a + half * width
        } else {
            secant
        };
        let fc = f(c)?;
        if fc == T::zero() {
            return Ok(RootResult {
                root: c,
                iterations: iter,
                bracket_width: T::zero(),
            });
        }
        if fc.signum() == fa.signum() {
            a = c;
            fa = fc;
            if side == Side::Lower {
                fb = fb * half;
            }
            side = Side::Lower;
        } else {
            b = c;
            fb = fc;
            if side == Side::Upper {
                fa = fa * half;
            }
            side = Side::Upper;
        }
        force_bisect = b - a > half * width;
    }
    Err(PhaseError::Convergence {
        what: "find_root_bracketed",
        limit: max_iter,
    })
}
