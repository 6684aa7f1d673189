use std::iter::Sum;
use std::ops::AddAssign;

/// Neumaier compensated accumulator.
///
/// Partial accumulators can be merged, which keeps parallel reductions close
/// to the sequential result regardless of how the input was partitioned.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub const fn new() -> Self {
        CompensatedSum {
            sum: 0.0,
            compensation: 0.0,
        }
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn merge(mut self, other: CompensatedSum) -> CompensatedSum {
        self.add(other.sum);
        self.add(other.compensation);
        self
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl AddAssign<f64> for CompensatedSum {
    fn add_assign(&mut self, x: f64) {
        self.add(x);
    }
}

impl Sum<f64> for CompensatedSum {
    fn sum<I: Iterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

impl Sum<CompensatedSum> for CompensatedSum {
    fn sum<I: Iterator<Item = CompensatedSum>>(iter: I) -> Self {
        iter.fold(CompensatedSum::new(), CompensatedSum::merge)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_small_terms() {
        let xs = [1.0, 1e100, 1.0, -1e100];
        let s: CompensatedSum = xs.iter().copied().sum();
        assert_eq!(s.value(), 2.0);
        let naive: f64 = xs.iter().sum();
        assert_eq!(naive, 0.0);
    }

    #[test]
    fn merge_matches_single_pass() {
        let xs: Vec<f64> = (1..=10_000).map(|k| 1.0 / (k as f64).powi(2)).collect();
        let whole: CompensatedSum = xs.iter().copied().sum();
        let parts: CompensatedSum = xs
            .chunks(37)
            .map(|c| c.iter().copied().sum::<CompensatedSum>())
            .sum();
        assert!((whole.value() - parts.value()).abs() <= 1e-16);
    }
}
