//! Spectral kernel layer: periodic spline kernels, Euler–Frobenius
//! polynomials, the inverting lattice operator, and certified lattice sums.
//!
//! Everything in this module is a pure function of a smoothness order `m`,
//! a lattice, and a point; the higher-level interpolation machinery in
//! [`crate::coefficients`] and [`crate::interpolator`] is built entirely on
//! these primitives.

mod bernoulli;
mod discrete;
mod euler_frobenius;
mod sums;

pub use bernoulli::bernoulli_kernel;
pub use discrete::{discrete_operator, operator_decay_ratio};
pub use euler_frobenius::{euler_frobenius, stable_roots, EulerFrobeniusData};
pub use sums::{big_lambda, lattice_sum, residue_fourier_sum};

pub(crate) use bernoulli::kernel_raw;
pub(crate) use sums::{filter_sum, spectral_scale};

use crate::error::{Error, Result};

/// Smoothness order `m ≥ 1` of the ambient space: functions whose m-th
/// derivative is square-integrable over one period.
///
/// The order enters everywhere through `2m` (kernel degree, spectral decay,
/// operator width), so it is validated once here and passed by value.
/// [`SmoothnessOrder::new`] enforces the default ceiling of
/// [`SmoothnessOrder::DEFAULT_CEILING`]; use [`SmoothnessOrder::with_ceiling`]
/// to raise it, at the cost of entering a regime where `f64` evaluation of
/// the degree-2m kernel polynomials loses accuracy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmoothnessOrder(u32);

impl SmoothnessOrder {
    /// Largest order accepted by [`SmoothnessOrder::new`].
    ///
    /// Orders up to 12 keep every internal quantity (kernel coefficients,
    /// Eulerian coefficient rows, spectral prefactors) comfortably inside
    /// `f64`/`i128` range with certified accuracy.
    pub const DEFAULT_CEILING: u32 = 12;

    /// Validates `1 ≤ m ≤ DEFAULT_CEILING`.
    pub fn new(m: u32) -> Result<Self> {
        Self::with_ceiling(m, Self::DEFAULT_CEILING)
    }

    /// Validates `1 ≤ m ≤ ceiling` against a caller-chosen ceiling.
    pub fn with_ceiling(m: u32, ceiling: u32) -> Result<Self> {
        if m == 0 || m > ceiling {
            return Err(Error::UnsupportedOrder {
                requested: m,
                ceiling,
            });
        }
        Ok(Self(m))
    }

    /// The raw order m.
    pub fn get(self) -> u32 {
        self.0
    }

    /// 2m, the degree that actually drives the kernel machinery.
    pub(crate) fn two_m(self) -> u32 {
        2 * self.0
    }

    /// (−1)^m, the sign making the kernel diagonal positive.
    pub(crate) fn sign(self) -> f64 {
        if self.0 % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }
}

/// A point on the unit circle, stored as its representative in `[0, 1)`.
///
/// Construction reduces any finite input modulo 1, so downstream code can
/// rely on the representative without re-reducing. Two points compare equal
/// exactly when their representatives do.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodicPoint(f64);

impl PeriodicPoint {
    /// Reduces `x` modulo 1 into `[0, 1)`. Rejects NaN and infinities.
    pub fn new(x: f64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::NonFinite {
                context: "periodic point",
                value: x,
            });
        }
        Ok(Self(reduce(x)))
    }

    /// The representative in `[0, 1)`.
    pub fn value(self) -> f64 {
        self.0
    }
}

/// Reduces a finite `x` modulo 1 into `[0, 1)`.
///
/// `x - floor(x)` can round up to exactly `1.0` for tiny negative inputs
/// (e.g. `-1e-20`), in which case the correct representative is `0.0`.
pub(crate) fn reduce(x: f64) -> f64 {
    let r = x - x.floor();
    if r >= 1.0 {
        0.0
    } else {
        r
    }
}

/// Truncation policy for infinite series: a hard term budget plus the
/// absolute accuracy the evaluation must *certify* before returning.
///
/// Every series routine in this crate either returns a value together with a
/// rigorous tail bound at or below `abs_tol`, or fails with
/// [`Error::SeriesNotConverged`] carrying the best certified bound. There is
/// no silent best-effort mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    max_terms: usize,
    abs_tol: f64,
}

impl SeriesControl {
    /// Validates a term budget (at least 3) and a positive finite tolerance.
    pub fn new(max_terms: usize, abs_tol: f64) -> Result<Self> {
        if max_terms < 3 {
            return Err(Error::InvalidControl {
                reason: format!("max_terms = {max_terms} is too small; need at least 3"),
            });
        }
        if !abs_tol.is_finite() || abs_tol <= 0.0 {
            return Err(Error::InvalidControl {
                reason: format!("abs_tol = {abs_tol} must be a positive finite number"),
            });
        }
        Ok(Self { max_terms, abs_tol })
    }

    /// Hard cap on the number of series terms consumed by one evaluation.
    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    /// Absolute tail bound an evaluation must certify.
    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }
}

impl Default for SeriesControl {
    /// 100 000 terms, absolute tolerance 1e-12.
    fn default() -> Self {
        Self {
            max_terms: 100_000,
            abs_tol: 1e-12,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_bounds_are_enforced() {
        assert!(SmoothnessOrder::new(0).is_err());
        assert!(SmoothnessOrder::new(1).is_ok());
        assert!(SmoothnessOrder::new(12).is_ok());
        assert!(SmoothnessOrder::new(13).is_err());
        assert!(SmoothnessOrder::with_ceiling(13, 16).is_ok());
        let err = SmoothnessOrder::new(40).unwrap_err();
        assert!(matches!(err, Error::UnsupportedOrder { requested: 40, ceiling: 12 }));
    }

    #[test]
    fn periodic_reduction_lands_in_unit_interval() {
        for &(x, want) in &[
            (0.0, 0.0),
            (1.0, 0.0),
            (-1.0, 0.0),
            (2.75, 0.75),
            (-0.25, 0.75),
            (0.5, 0.5),
            (-3.5, 0.5),
        ] {
            let p = PeriodicPoint::new(x).unwrap();
            assert_eq!(p.value(), want, "reduce({x})");
        }
        // A tiny negative value reduces to ~1 which must wrap to exactly 0,
        // not escape the half-open interval.
        let p = PeriodicPoint::new(-1e-20).unwrap();
        assert_eq!(p.value(), 0.0);
        assert!(PeriodicPoint::new(f64::NAN).is_err());
        assert!(PeriodicPoint::new(f64::INFINITY).is_err());
    }

    #[test]
    fn series_control_validation() {
        assert!(SeriesControl::new(2, 1e-10).is_err());
        assert!(SeriesControl::new(100, -1e-10).is_err());
        assert!(SeriesControl::new(100, 0.0).is_err());
        assert!(SeriesControl::new(100, f64::NAN).is_err());
        let ctl = SeriesControl::default();
        assert_eq!(ctl.max_terms(), 100_000);
        assert_eq!(ctl.abs_tol(), 1e-12);
    }

    #[test]
    fn sign_alternates_with_order() {
        assert_eq!(SmoothnessOrder::new(1).unwrap().sign(), -1.0);
        assert_eq!(SmoothnessOrder::new(2).unwrap().sign(), 1.0);
        assert_eq!(SmoothnessOrder::new(3).unwrap().sign(), -1.0);
    }
}
