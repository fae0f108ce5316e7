//! Extended real numbers: finite reals plus `+∞`.
//!
//! Path values live here so that a blocked road without any detour makes a
//! route infinitely expensive instead of undefined.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

/// A finite real or `+∞`. Never NaN, never `-∞`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtReal(f64);

impl ExtReal {
    pub const ZERO: ExtReal = ExtReal(0.0);
    pub const INFINITY: ExtReal = ExtReal(f64::INFINITY);

    /// Wraps a finite value.
    ///
    /// # Panics
    /// If `x` is NaN or infinite.
    pub fn finite(x: f64) -> Self {
        assert!(x.is_finite(), "ExtReal::finite called with {x}");
        ExtReal(x)
    }

    /// Accepts finite values and `+∞`; rejects NaN and `-∞`.
    pub fn new(x: f64) -> Option<Self> {
        if x.is_nan() || x == f64::NEG_INFINITY {
            None
        } else {
            Some(ExtReal(x))
        }
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_infinite()
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    /// The raw value; `f64::INFINITY` for `+∞`.
    pub fn get(self) -> f64 {
        self.0
    }

    /// `c · self` for `c > 0`; `c · ∞ = ∞`.
    pub fn scale(self, c: f64) -> Self {
        debug_assert!(c > 0.0, "scale factor must be positive, got {c}");
        ExtReal(self.0 * c)
    }

    /// `|self - other|`, with `∞ - ∞` taken as 0 and `∞ - x` as `∞`.
    pub fn distance(self, other: ExtReal) -> f64 {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => 0.0,
            (false, false) => (self.0 - other.0).abs(),
            _ => f64::INFINITY,
        }
    }

    /// Equality up to an absolute tolerance; two infinities are equal.
    pub fn approx_eq(self, other: ExtReal, tol: f64) -> bool {
        self.distance(other) <= tol
    }
}

impl Eq for ExtReal {}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.partial_cmp(&other.0).expect("ExtReal is never NaN")
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for ExtReal {
    type Output = ExtReal;
    fn add(self, rhs: ExtReal) -> ExtReal {
        ExtReal(self.0 + rhs.0)
    }
}

impl Add<f64> for ExtReal {
    type Output = ExtReal;
    fn add(self, rhs: f64) -> ExtReal {
        debug_assert!(rhs.is_finite());
        ExtReal(self.0 + rhs)
    }
}

impl Mul<ExtReal> for f64 {
    type Output = ExtReal;
    fn mul(self, rhs: ExtReal) -> ExtReal {
        rhs.scale(self)
    }
}

impl From<f64> for ExtReal {
    fn from(x: f64) -> Self {
        ExtReal::new(x).unwrap_or_else(|| panic!("{x} is not an extended real"))
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_absorbs() {
        let inf = ExtReal::INFINITY;
        assert_eq!(inf + 3.0, inf);
        assert_eq!(inf + ExtReal::finite(-2.0), inf);
        assert_eq!(0.5 * inf, inf);
        assert_eq!(inf.max(ExtReal::finite(7.0)), inf);
        assert!(inf > ExtReal::finite(f64::MAX));
    }

    #[test]
    fn rejects_nan_and_negative_infinity() {
        assert!(ExtReal::new(f64::NAN).is_none());
        assert!(ExtReal::new(f64::NEG_INFINITY).is_none());
        assert_eq!(ExtReal::new(f64::INFINITY), Some(ExtReal::INFINITY));
    }

    #[test]
    fn tolerance_comparisons() {
        let a = ExtReal::finite(1.0);
        let b = ExtReal::finite(1.0 + 1e-12);
        assert!(a.approx_eq(b, 1e-9));
        assert!(ExtReal::INFINITY.approx_eq(ExtReal::INFINITY, 0.0));
        assert!(!a.approx_eq(ExtReal::INFINITY, 1e300));
    }

    #[test]
    fn display() {
        assert_eq!(ExtReal::finite(2.5).to_string(), "2.5");
        assert_eq!(ExtReal::INFINITY.to_string(), "inf");
    }
}
