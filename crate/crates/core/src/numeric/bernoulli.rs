use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Largest number of Bernoulli numbers [`bernoulli_numbers`] will produce.
pub const BERNOULLI_CAP: usize = 200;

/// Returns `B_0, …, B_{count-1}` exactly, with the convention `B_1 = -1/2`.
///
/// Uses the recurrence `Σ_{k<m+1} C(m+1, k) B_k = 0` for `m ≥ 1`.
pub fn bernoulli_numbers(count: usize) -> Result<Vec<BigRational>> {
    if count == 0 {
        return Err(Error::domain("count must be positive"));
    }
    if count > BERNOULLI_CAP {
        return Err(Error::size(format!(
            "at most {BERNOULLI_CAP} Bernoulli numbers are supported, got {count}"
        )));
    }
    let mut out: Vec<BigRational> = Vec::with_capacity(count);
    out.push(BigRational::one());
    for m in 1..count {
        if m > 1 && m % 2 == 1 {
            out.push(BigRational::zero());
            continue;
        }
        // binom(m+1, k) for k = 0..m
        let mut binom = BigInt::one();
        let mut acc = BigRational::zero();
        for (k, b) in out.iter().enumerate() {
            if !b.is_zero() {
                acc += BigRational::from_integer(binom.clone()) * b;
            }
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        out.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    Ok(out)
}
