//! Compensated accumulation for long alternating series.

use serde::{Deserialize, Serialize};

use crate::scalar::Real;

/// How partial sums are accumulated.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Summation {
    /// Plain floating point addition.
    Naive,
    /// Neumaier's variant of Kahan summation.
    #[default]
    Compensated,
    /// Double-word accumulator (`hi + lo` renormalised after every add),
    /// roughly twice the working precision for the running sum.
    DoubleWord,
}

#[inline]
fn two_sum<T: Real>(a: T, b: T) -> (T, T) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn fast_two_sum<T: Real>(a: T, b: T) -> (T, T) {
    let s = a + b;
    (s, b - (s - a))
}

/// Running sum with a selectable accumulation mode.
#[derive(Debug, Clone, Copy)]
pub struct Accumulator<T> {
    mode: Summation,
    hi: T,
    lo: T,
}

impl<T: Real> Accumulator<T> {
    pub fn new(mode: Summation) -> Self {
        Self { mode, hi: T::zero(), lo: T::zero() }
    }

    #[inline]
    pub fn add(&mut self, x: T) {
        match self.mode {
            Summation::Naive => self.hi = self.hi + x,
            Summation::Compensated => {
                let t = self.hi + x;
                if self.hi.abs() >= x.abs() {
                    self.lo = self.lo + ((self.hi - t) + x);
                } else {
                    self.lo = self.lo + ((x - t) + self.hi);
                }
                self.hi = t;
            }
            Summation::DoubleWord => {
                let (s, e) = two_sum(self.hi, x);
                let (hi, lo) = fast_two_sum(s, e + self.lo);
                self.hi = hi;
                self.lo = lo;
            }
        }
    }

    /// Adds another accumulator's exact state.
    pub fn merge(&mut self, other: &Self) {
        self.add(other.hi);
        self.add(other.lo);
    }

    #[inline]
    pub fn value(&self) -> T {
        self.hi + self.lo
    }
}

impl<T: Real> Default for Accumulator<T> {
    fn default() -> Self {
        Self::new(Summation::default())
    }
}

/// Sums a slice with the given mode.
pub fn sum_with<T: Real>(mode: Summation, xs: impl IntoIterator<Item = T>) -> T {
    let mut acc = Accumulator::new(mode);
    for x in xs {
        acc.add(x);
    }
    acc.value()
}
