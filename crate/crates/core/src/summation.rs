//! Compensated summation.

use std::ops::{Add, AddAssign};

/// Running sum with Neumaier's variant of Kahan compensation.
///
/// The compensation term collects the low-order bits lost by each addition,
/// so the error stays `O(ε)` independent of the number of terms as long as
/// the sum is not dominated by cancellation.
#[derive(Debug, Default, Clone, Copy, PartialEq)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl From<f64> for NeumaierSum {
    fn from(value: f64) -> Self {
        Self { sum: value, compensation: 0.0 }
    }
}

impl AddAssign<f64> for NeumaierSum {
    fn add_assign(&mut self, rhs: f64) {
        let (s, c) = two_sum(self.sum, rhs);
        self.sum = s;
        self.compensation += c;
    }
}

impl Add<f64> for NeumaierSum {
    type Output = Self;

    fn add(mut self, rhs: f64) -> Self {
        self += rhs;
        self
    }
}

impl Add for NeumaierSum {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let (s, c) = two_sum(self.sum, rhs.sum);
        Self { sum: s, compensation: self.compensation + rhs.compensation + c }
    }
}

impl std::iter::Sum<f64> for NeumaierSum {
    fn sum<I: Iterator<Item = f64>>(iter: I) -> Self {
        iter.fold(Self::new(), |acc, x| acc + x)
    }
}

/// Error-free addition: `a + b == s + c` exactly, with `s = fl(a + b)`.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let c = if a.abs() >= b.abs() { (a - s) + b } else { (b - s) + a };
    (s, c)
}

/// Compensated sum of a sequence of floats.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    values.into_iter().sum::<NeumaierSum>().value()
}
