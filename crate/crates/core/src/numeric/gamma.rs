use std::f64::consts::PI;

use crate::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const MAX_ITER: usize = 100_000;

/// Gamma function for real arguments (Lanczos, reflection below 1/2).
///
/// Integer arguments up to 171 are returned as exact factorials.
pub fn gamma(x: f64) -> f64 {
    if x == x.floor() && x > 0.0 && x <= 171.0 {
        return (1..x as u32).fold(1.0, |acc, k| acc * k as f64);
    }
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    let z = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * acc
}

/// Lower incomplete gamma by its power series; needs `a > 0`.
fn lower_series(a: f64, x: f64) -> f64 {
    let mut term = 1.0 / a;
    let mut sum = term;
    for n in 1..MAX_ITER {
        term *= x / (a + n as f64);
        sum += term;
        if term.abs() < sum.abs() * 1e-17 {
            break;
        }
    }
    sum * (a * x.ln() - x).exp()
}

/// Upper incomplete gamma by Legendre's continued fraction (modified Lentz).
fn upper_continued_fraction(a: f64, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_ITER {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (a * x.ln() - x).exp() * h
}

/// Exponential integral `E₁(x) = Γ(0, x)` for `0 < x < 1`.
fn e1_small(x: f64) -> f64 {
    let mut sum = 0.0;
    let mut term = 1.0;
    for k in 1..MAX_ITER {
        term *= -x / k as f64;
        let add = term / k as f64;
        sum += add;
        if add.abs() < 1e-18 {
            break;
        }
    }
    -EULER_GAMMA - x.ln() - sum
}

/// Upper incomplete gamma `Γ(a, x) = ∫_x^∞ t^{a-1} e^{-t} dt` for real `a`
/// and `x > 0`.
///
/// For `a > 0` uses `Γ(a) − γ(a, x)` with the series below `x = a + 1` and the
/// continued fraction above it. For `a ≤ 0` the continued fraction covers
/// `x ≥ 1`; below that the recurrence
/// `Γ(a, x) = (Γ(a+1, x) − x^a e^{-x}) / a` run downward from `a + k ∈ (0, 1]`
/// (or from `E₁` when `a` is an integer).
pub fn upper_incomplete_gamma(a: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() || !a.is_finite() {
        return Err(Error::domain(format!(
            "incomplete gamma needs finite a and x > 0, got a={a}, x={x}"
        )));
    }
    if a > 0.0 {
        return Ok(if x < a + 1.0 {
            gamma(a) - lower_series(a, x)
        } else {
            upper_continued_fraction(a, x)
        });
    }
    if x >= 1.0 {
        return Ok(upper_continued_fraction(a, x));
    }
    let steps = (-a).ceil();
    let base = a + steps;
    let (mut value, mut current) = if base == 0.0 {
        (e1_small(x), 0.0)
    } else if base < 1e-3 || base > 1.0 - 1e-3 {
        // Near-integer base: the series difference cancels badly.
        (upper_continued_fraction(base, x), base)
    } else {
        (gamma(base) - lower_series(base, x), base)
    };
    let weight = (-x).exp();
    while current > a + 0.5 {
        let next = current - 1.0;
        value = (value - x.powf(next) * weight) / next;
        current = next;
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma(5.0), 24.0);
        assert!(rel(gamma(0.5), PI.sqrt()) < 1e-14);
        assert!(rel(gamma(2.5), 0.75 * PI.sqrt()) < 1e-14);
        assert!(rel(gamma(-0.5), -2.0 * PI.sqrt()) < 1e-14);
    }

    #[test]
    fn integer_orders_have_closed_forms() {
        // Γ(1, x) = e^{-x}, Γ(2, x) = (1 + x) e^{-x}
        for &x in &[0.05, 0.3, 0.99, 1.0, 2.5, 17.0, 60.0] {
            let g1 = upper_incomplete_gamma(1.0, x).unwrap();
            assert!(rel(g1, (-x).exp()) < 1e-14, "x={x}");
            let g2 = upper_incomplete_gamma(2.0, x).unwrap();
            assert!(rel(g2, (1.0 + x) * (-x).exp()) < 1e-14, "x={x}");
            // Γ(-1, x) = E₁-free form: e^{-x}/x - Γ(0, x)
            let g0 = upper_incomplete_gamma(0.0, x).unwrap();
            let gm1 = upper_incomplete_gamma(-1.0, x).unwrap();
            assert!(rel(gm1, (-x).exp() / x - g0) < 1e-13, "x={x}");
        }
    }

    #[test]
    fn half_integer_order() {
        // Γ(1/2, x) = √π erfc(√x); erfc(1) = 0.15729920705028513
        let v = upper_incomplete_gamma(0.5, 1.0).unwrap();
        assert!(rel(v, PI.sqrt() * 0.157_299_207_050_285_13) < 1e-14);
        // Γ(-1/2, x) = 2 e^{-x}/√x - 2 Γ(1/2, x)
        for &x in &[0.1, 0.7, 1.0, 3.0] {
            let h = upper_incomplete_gamma(0.5, x).unwrap();
            let m = upper_incomplete_gamma(-0.5, x).unwrap();
            assert!(rel(m, 2.0 * (-x).exp() / x.sqrt() - 2.0 * h) < 1e-13, "x={x}");
        }
    }

    #[test]
    fn branches_agree_at_the_switch() {
        for &a in &[-3.3, -2.0, -0.4, 0.0, 0.6, 2.7] {
            let switch: f64 = if a > 0.0 { a + 1.0 } else { 1.0 };
            let below = upper_incomplete_gamma(a, switch - 1e-9).unwrap();
            let above = upper_incomplete_gamma(a, switch).unwrap();
            assert!(rel(below, above) < 1e-8, "a={a}: {below} vs {above}");
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(upper_incomplete_gamma(1.0, 0.0).is_err());
        assert!(upper_incomplete_gamma(f64::NAN, 1.0).is_err());
    }
}
