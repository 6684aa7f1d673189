use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::{bernoulli_numbers, CompensatedSum, PrecisionPolicy, BERNOULLI_CAP};
use crate::{Error, Result};

/// Largest direct-sum shift the adaptive loop will try.
const MAX_SHIFT: u64 = 1 << 20;

/// `B_{2j} / (2j)!` for `j = 0, 1, …` as doubles.
fn scaled_even_bernoulli() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let b = bernoulli_numbers(BERNOULLI_CAP).expect("cap is valid");
        let mut factorial = BigInt::one();
        let mut out = Vec::with_capacity(BERNOULLI_CAP / 2);
        for (k, bk) in b.iter().enumerate() {
            if k > 0 {
                factorial *= BigInt::from(k);
            }
            if k % 2 == 0 {
                let v = bk / BigRational::from_integer(factorial.clone());
                out.push(v.to_f64().expect("finite"));
            }
        }
        out
    })
}

/// Euler–Maclaurin tail `Σ_{k≥0} (k + x)^{-s}` for large `x`, with `terms`
/// Bernoulli corrections. Returns the tail and the size of the first omitted
/// correction.
fn em_tail(s: f64, x: f64, terms: usize) -> (f64, f64) {
    let coeffs = scaled_even_bernoulli();
    let mut acc = CompensatedSum::new();
    let xs = x.powf(-s);
    acc += x * xs / (s - 1.0);
    acc += 0.5 * xs;
    // rising = s (s+1) … (s+2j-2), power = x^{-s-2j+1}
    let mut rising = s;
    let mut power = xs / x;
    let inv_x2 = 1.0 / (x * x);
    for j in 1..=terms {
        acc += coeffs[j] * rising * power;
        rising *= (s + 2.0 * j as f64 - 1.0) * (s + 2.0 * j as f64);
        power *= inv_x2;
    }
    let omitted = (coeffs[terms + 1] * rising * power).abs();
    (acc.value(), omitted)
}

/// Hurwitz zeta `ζ(s, a) = Σ_{k≥0} (k+a)^{-s}` for real `s > 1`, `a ∈ (0, 1]`.
///
/// Sums the first `N` terms directly and the rest by Euler–Maclaurin. If the
/// first omitted correction exceeds the policy tolerance the shift `N` is
/// doubled until it does not.
pub fn hurwitz_zeta(s: f64, a: f64, policy: &PrecisionPolicy) -> Result<f64> {
    policy.validate()?;
    if !s.is_finite() || s <= 1.0 {
        return Err(Error::domain(format!("Hurwitz zeta needs real s > 1, got {s}")));
    }
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::domain(format!("Hurwitz zeta needs a in (0, 1], got {a}")));
    }
    let terms = policy.euler_maclaurin_terms as usize;
    let mut shift = policy.euler_maclaurin_shift as u64;
    let (tail, shift) = loop {
        let (tail, omitted) = em_tail(s, shift as f64 + a, terms);
        if omitted <= policy.target_abs_tol || shift >= MAX_SHIFT {
            break (tail, shift);
        }
        shift *= 2;
    };
    // Smallest terms first.
    let mut acc = CompensatedSum::new();
    acc += tail;
    for k in (0..shift).rev() {
        acc += (k as f64 + a).powf(-s);
    }
    Ok(acc.value())
}

/// `Σ_{k≥0} (r + k·m)^{−s} = m^{−s} ζ(s, r/m)` for integers `1 ≤ r ≤ m`.
///
/// Head terms are formed from exact integers, so the rounding of `r/m` is
/// never raised to the power `s`; this matters for large `s` and small `r/m`.
pub fn hurwitz_zeta_progression(s: f64, r: u64, m: u64, policy: &PrecisionPolicy) -> Result<f64> {
    policy.validate()?;
    if !s.is_finite() || s <= 1.0 {
        return Err(Error::domain(format!("Hurwitz zeta needs real s > 1, got {s}")));
    }
    if m == 0 || r == 0 || r > m {
        return Err(Error::domain(format!("progression needs 1 <= r <= m, got r={r}, m={m}")));
    }
    let terms = policy.euler_maclaurin_terms as usize;
    let a = r as f64 / m as f64;
    let scale = (m as f64).powf(-s);
    let mut shift = policy.euler_maclaurin_shift as u64;
    let (tail, shift) = loop {
        let (tail, omitted) = em_tail(s, shift as f64 + a, terms);
        if omitted * scale <= policy.target_abs_tol || shift >= MAX_SHIFT {
            break (tail * scale, shift);
        }
        shift *= 2;
    };
    let mut acc = CompensatedSum::new();
    acc += tail;
    for k in (0..shift).rev() {
        acc += ((r + k * m) as f64).powf(-s);
    }
    Ok(acc.value())
}

/// Riemann zeta for real `s > 1`.
pub fn riemann_zeta(s: f64, policy: &PrecisionPolicy) -> Result<f64> {
    hurwitz_zeta(s, 1.0, policy)
}
