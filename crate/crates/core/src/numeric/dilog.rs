use std::f64::consts::PI;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{bernoulli_numbers, check_finite, ComplexValue};
use crate::Result;

const PI2_6: f64 = PI * PI / 6.0;
const LOG_SERIES_TERMS: usize = 30;

/// `B_{2k} / (2k+1)!` for `k = 1..=LOG_SERIES_TERMS`.
fn log_series_coeffs() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = 2 * LOG_SERIES_TERMS + 2;
        let b = bernoulli_numbers(n).expect("within cap");
        let mut factorial = BigInt::one();
        let mut out = Vec::with_capacity(LOG_SERIES_TERMS);
        for k in 1..n {
            factorial *= BigInt::from(k);
            // factorial == k!, pair B_{k-1} with k! when k-1 is even and ≥ 2
            if k >= 3 && (k - 1) % 2 == 0 {
                let v = &b[k - 1] / BigRational::from_integer(factorial.clone());
                out.push(v.to_f64().expect("finite"));
            }
        }
        out.truncate(LOG_SERIES_TERMS);
        out
    })
}

/// `Σ z^k / k²`, for `|z| ≤ 1/2`.
fn power_series(z: ComplexValue) -> ComplexValue {
    let mut term = z;
    let mut sum = ComplexValue::zero();
    for k in 1..200 {
        let add = term / (k * k) as f64;
        sum += add;
        if add.norm() < 1e-18 * sum.norm().max(1e-300) {
            break;
        }
        term *= z;
    }
    sum
}

/// `Σ B_n u^{n+1}/(n+1)!` with `u = -log(1-z)`; converges for `|u| < 2π`.
fn bernoulli_log_series(z: ComplexValue) -> ComplexValue {
    let u = -(ComplexValue::one() - z).ln();
    let u2 = u * u;
    let mut sum = u - u2 / 4.0;
    let mut power = u * u2;
    for &c in log_series_coeffs() {
        let add = power * c;
        sum += add;
        if add.norm() < 1e-18 * sum.norm() {
            break;
        }
        power *= u2;
    }
    sum
}

/// `Li₂` for `|z| ≤ 1`, `z ≠ 1`.
fn dilog_unit_disc(z: ComplexValue) -> ComplexValue {
    if z.norm() <= 0.5 {
        return power_series(z);
    }
    if z.re > 0.5 {
        // Li₂(z) = π²/6 − log z · log(1−z) − Li₂(1−z); |1−z| < 1 here
        let w = ComplexValue::one() - z;
        let tail = if w.norm() <= 0.5 {
            power_series(w)
        } else {
            bernoulli_log_series(w)
        };
        return ComplexValue::new(PI2_6, 0.0) - z.ln() * w.ln() - tail;
    }
    bernoulli_log_series(z)
}

/// The dilogarithm `Li₂(z)` on the principal branch.
///
/// `|z| ≤ 1/2` uses the defining power series. Points with `|z| > 1` are first
/// inverted (`Li₂(z) = −π²/6 − ½ log²(−z) − Li₂(1/z)`); inside the unit disc,
/// points with `Re z > 1/2` are reflected about `1/2`, and the rest are summed
/// as a Bernoulli series in `−log(1−z)`.
pub fn dilog(z: ComplexValue) -> Result<ComplexValue> {
    check_finite(z, "dilog argument")?;
    if z == ComplexValue::one() {
        return Ok(ComplexValue::new(PI2_6, 0.0));
    }
    if z.norm() > 1.0 {
        let l = (-z).ln();
        return Ok(ComplexValue::new(-PI2_6, 0.0) - 0.5 * l * l - dilog_unit_disc(z.inv()));
    }
    Ok(dilog_unit_disc(z))
}

/// The Bloch–Wigner dilogarithm `D(z) = Im Li₂(z) + arg(1−z) log|z|`.
///
/// Vanishes on the real line, including `0` and `1`.
pub fn bloch_wigner(z: ComplexValue) -> Result<f64> {
    check_finite(z, "Bloch-Wigner argument")?;
    if z.im == 0.0 {
        return Ok(0.0);
    }
    let li = dilog(z)?;
    Ok(li.im + (ComplexValue::one() - z).arg() * z.norm().ln())
}
