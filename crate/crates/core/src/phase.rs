//! Roots of unity and rounding helpers for character sums.

use num_complex::Complex64;

use crate::{Error, Result};

/// `exp(2πi · num/den)`, with `num` reduced mod `den` first so the float
/// argument always lies in `[0, 2π)`.
pub fn unit_root(num: i64, den: i64) -> Complex64 {
    debug_assert!(den > 0);
    let r = num.rem_euclid(den);
    let angle = 2.0 * core::f64::consts::PI * (r as f64) / (den as f64);
    Complex64::new(libm::cos(angle), libm::sin(angle))
}

/// Precomputed table of `exp(2πi · r/den)` for `r ∈ [0, den)`.
#[derive(Clone, Debug)]
pub struct RootTable {
    den: i64,
    roots: alloc::vec::Vec<Complex64>,
}

impl RootTable {
    pub fn new(den: i64) -> Self {
        let roots = (0..den).map(|r| unit_root(r, den)).collect();
        RootTable { den, roots }
    }

    #[inline]
    pub fn get(&self, num: i64) -> Complex64 {
        self.roots[num.rem_euclid(self.den) as usize]
    }

    pub fn den(&self) -> i64 {
        self.den
    }
}

/// Rounds a real value to the nearest integer, failing loudly when the
/// residue exceeds `tolerance`.
pub fn round_checked(value: f64, tolerance: f64, what: &'static str) -> Result<i64> {
    let r = libm::round(value);
    if libm::fabs(value - r) > tolerance || !value.is_finite() {
        return Err(Error::RoundingFailure { what, value, tolerance });
    }
    Ok(r as i64)
}

/// Rounds a complex value that must be a real integer.
pub fn round_complex(value: Complex64, tolerance: f64, what: &'static str) -> Result<i64> {
    if libm::fabs(value.im) > tolerance {
        return Err(Error::RoundingFailure { what, value: value.im, tolerance });
    }
    round_checked(value.re, tolerance, what)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_turn() {
        let z = unit_root(1, 4);
        assert!((z.re).abs() < 1e-15 && (z.im - 1.0).abs() < 1e-15);
        let w = unit_root(-3, 4);
        assert!((z - w).norm() < 1e-15);
    }

    #[test]
    fn rounding_is_never_silent() {
        assert_eq!(round_checked(2.0 + 1e-9, 1e-6, "x"), Ok(2));
        assert!(matches!(round_checked(2.4, 1e-6, "x"), Err(Error::RoundingFailure { .. })));
        assert!(round_complex(Complex64::new(1.0, 0.3), 1e-6, "x").is_err());
    }
}
