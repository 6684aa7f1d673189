//! Shared numeric kernels.
//!
//! Exact Bernoulli numbers, Hurwitz and Riemann zeta for real `s > 1` via
//! Euler–Maclaurin, the complex dilogarithm with the Bloch–Wigner function,
//! the gamma and upper incomplete gamma functions, and compensated summation.

mod bernoulli;
mod dilog;
mod gamma;
mod sum;
mod zeta;

pub use bernoulli::{bernoulli_numbers, BERNOULLI_CAP};
pub use dilog::{bloch_wigner, dilog};
pub use gamma::{gamma, upper_incomplete_gamma};
pub use sum::CompensatedSum;
pub use zeta::{hurwitz_zeta, hurwitz_zeta_progression, riemann_zeta};

use crate::{Error, Result};

/// Complex value used for character values, phases and `Li₂`.
pub type ComplexValue = num_complex::Complex64;

/// Tolerance and Euler–Maclaurin parameters for the zeta evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionPolicy {
    pub target_abs_tol: f64,
    /// Number of terms summed directly before the Euler–Maclaurin tail.
    pub euler_maclaurin_shift: u32,
    /// Number of Bernoulli correction terms in the tail.
    pub euler_maclaurin_terms: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy {
            target_abs_tol: 1e-13,
            euler_maclaurin_shift: 50,
            euler_maclaurin_terms: 12,
        }
    }
}

impl PrecisionPolicy {
    pub fn new(target_abs_tol: f64, shift: u32, terms: u32) -> Result<Self> {
        let policy = PrecisionPolicy {
            target_abs_tol,
            euler_maclaurin_shift: shift,
            euler_maclaurin_terms: terms,
        };
        policy.validate()?;
        Ok(policy)
    }

    /// Default parameters with a different target tolerance.
    pub fn with_tolerance(target_abs_tol: f64) -> Result<Self> {
        let policy = PrecisionPolicy {
            target_abs_tol,
            ..Default::default()
        };
        policy.validate()?;
        Ok(policy)
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if !(self.target_abs_tol > 0.0) || !self.target_abs_tol.is_finite() {
            return Err(Error::domain("target tolerance must be positive and finite"));
        }
        if self.euler_maclaurin_shift == 0 || self.euler_maclaurin_terms == 0 {
            return Err(Error::domain("Euler-Maclaurin shift and term count must be positive"));
        }
        // B_{2J} must stay inside the exact Bernoulli table.
        if 2 * self.euler_maclaurin_terms as usize >= BERNOULLI_CAP {
            return Err(Error::size(format!(
                "at most {} Euler-Maclaurin terms are supported",
                (BERNOULLI_CAP - 1) / 2
            )));
        }
        Ok(())
    }
}

pub(crate) fn check_finite(z: ComplexValue, what: &str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("{what} must be finite")))
    }
}
