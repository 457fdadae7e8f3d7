use num_rational::Rational64;

use crate::error::{PhaseError, Result};
use crate::scalar::Real;

/// Largest `n` for which `B_{2n}` is tabulated.
pub const MAX_BERNOULLI_INDEX: usize = 10;

// (numerator, denominator) of B_2, B_4, ..., B_20.
const BERNOULLI_EVEN: [(i64, i64); MAX_BERNOULLI_INDEX] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
];

fn check_index(n: usize) -> Result<usize> {
    if (1..=MAX_BERNOULLI_INDEX).contains(&n) {
        Ok(n - 1)
    } else {
        Err(PhaseError::domain(format!(
            "Bernoulli index n must lie in 1..={MAX_BERNOULLI_INDEX}, got {n}"
        )))
    }
}

/// `B_{2n}` as an exact rational.
pub fn bernoulli_2n_exact(n: usize) -> Result<Rational64> {
    let (num, den) = BERNOULLI_EVEN[check_index(n)?];
    Ok(Rational64::new(num, den))
}

pub fn bernoulli_2n<T: Real>(n: usize) -> Result<T> {
    bernoulli_2n_exact(n).map(to_real)
}

/// Coefficient `B_{2n} / ((2n-1) 2n)` of `z^{-(2n-1)}` in the Stirling series for μ.
pub fn stirling_coefficient_exact(n: usize) -> Result<Rational64> {
    let b = bernoulli_2n_exact(n)?;
    let two_n = 2 * n as i64;
    Ok(b / Rational64::from_integer((two_n - 1) * two_n))
}

pub fn stirling_coefficient<T: Real>(n: usize) -> Result<T> {
    stirling_coefficient_exact(n).map(to_real)
}

fn to_real<T: Real>(r: Rational64) -> T {
    let num = T::from_i64(*r.numer()).expect("small numerator");
    let den = T::from_i64(*r.denom()).expect("small denominator");
    num / den
}
