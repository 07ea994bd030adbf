//! Path lengths over the extended nonnegative reals.
//!
//! Shortest-path lengths live in `[0, +inf]`: `+inf` marks an unreachable
//! target. Subtraction follows the convention `inf - inf = 0`, which lets
//! closeness and stable betweenness stay defined on disconnected graphs.

use core::cmp::Ordering;
use core::fmt;
use core::ops::Add;

use crate::error::{Error, Result};

/// A nonnegative path length that may be infinite.
///
/// The wrapped value is never NaN and never negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtendedLength(f64);

impl ExtendedLength {
    pub const ZERO: Self = Self(0.0);
    pub const INFINITY: Self = Self(f64::INFINITY);

    /// Wraps a finite nonnegative value.
    pub fn finite(value: f64) -> Self {
        debug_assert!(value.is_finite() && value >= 0.0);
        Self(value)
    }

    /// Wraps a nonnegative value that may already be infinite.
    pub fn finite_or_infinite(value: f64) -> Self {
        debug_assert!(!value.is_nan() && value >= 0.0);
        Self(value)
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_infinite()
    }

    /// The raw value; `f64::INFINITY` when unreachable.
    pub fn value(self) -> f64 {
        self.0
    }
}

impl Eq for ExtendedLength {}

impl Ord for ExtendedLength {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl PartialOrd for ExtendedLength {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for ExtendedLength {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl fmt::Display for ExtendedLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Difference of extended lengths with the `inf - inf = 0` convention.
///
/// `inf - finite` is an infinite contribution; `finite - finite` is the
/// plain difference. Errors with [`Error::NegativeDifference`] when the
/// result would be negative, including `finite - inf`.
pub fn extended_subtract(a: ExtendedLength, b: ExtendedLength) -> Result<ExtendedLength> {
    match (a.is_infinite(), b.is_infinite()) {
        (true, true) => Ok(ExtendedLength::ZERO),
        (true, false) => Ok(ExtendedLength::INFINITY),
        (false, true) => Err(Error::NegativeDifference),
        (false, false) => {
            let d = a.0 - b.0;
            if d < 0.0 {
                Err(Error::NegativeDifference)
            } else {
                Ok(ExtendedLength::finite(d))
            }
        }
    }
}

/// `|a - b|` under the same convention: two infinities are equal.
pub fn extended_abs_diff(a: ExtendedLength, b: ExtendedLength) -> ExtendedLength {
    match (a.is_infinite(), b.is_infinite()) {
        (true, true) => ExtendedLength::ZERO,
        (false, false) => ExtendedLength::finite((a.0 - b.0).abs()),
        _ => ExtendedLength::INFINITY,
    }
}
