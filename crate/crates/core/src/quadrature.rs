//! Quadrature over one period.
//!
//! Two routes to ∫₀¹:
//!
//! * [`rectangle_rule`] — the mesh-weighted sum of the nodal samples. For
//!   the optimal interpolant this is already exact: each coefficient
//!   function integrates to exactly h, so ∫P = h·Σφ(x_β) identically.
//! * [`integrate_interpolant`] — a composite midpoint rule applied to the
//!   interpolant itself. When the panel count is a multiple of the lattice
//!   size the midpoint set is a refined lattice and the two routes agree to
//!   rounding; otherwise the difference shrinks as the panels refine.
//!
//! Keeping both routes makes the exactness property testable instead of
//! assumed.

use crate::error::{Error, Result};
use crate::interpolator::{interpolate, SampledPeriodicFunction};
use crate::kernel::{PeriodicPoint, SeriesControl, SmoothnessOrder};

/// The mesh-weighted nodal sum `h · Σ_β φ(x_β)`; exact for the integral of
/// the optimal interpolant of the samples.
pub fn rectangle_rule(phi: &SampledPeriodicFunction) -> f64 {
    let h = phi.grid().mesh();
    h * phi.samples().iter().sum::<f64>()
}

/// Composite midpoint quadrature of the interpolant over one period.
///
/// Panels are evaluated left to right, so the result is deterministic for
/// fixed inputs. At least one panel per lattice node is required.
pub fn integrate_interpolant(
    phi: &SampledPeriodicFunction,
    m: SmoothnessOrder,
    ctl: &SeriesControl,
    panels: u32,
) -> Result<f64> {
    let n = phi.grid().size();
    if panels < n {
        return Err(Error::InvalidGrid {
            reason: format!("panel count {panels} is below the lattice size {n}"),
        });
    }
    let width = 1.0 / panels as f64;
    let mut total = 0.0;
    for i in 0..panels {
        let midpoint = PeriodicPoint::new((i as f64 + 0.5) * width)?;
        total += interpolate(phi, m, midpoint, ctl)?;
    }
    Ok(total * width)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::LatticeGrid;
    use crate::kernel::bernoulli_kernel;

    fn order(m: u32) -> SmoothnessOrder {
        SmoothnessOrder::new(m).unwrap()
    }

    fn grid(n: u32) -> LatticeGrid {
        LatticeGrid::new(n).unwrap()
    }

    #[test]
    fn sine_integrates_to_zero() {
        let phi = SampledPeriodicFunction::from_fn(grid(8), |x| {
            (2.0 * std::f64::consts::PI * x).sin()
        })
        .unwrap();
        assert!(rectangle_rule(&phi).abs() < 1e-12);
        let quad = integrate_interpolant(&phi, order(2), &SeriesControl::default(), 40).unwrap();
        assert!(quad.abs() < 1e-12, "{quad}");
    }

    #[test]
    fn degree_ten_polynomial_with_zero_mean() {
        // The degree-10 periodic Bernoulli polynomial has exact mean zero;
        // it is proportional to the order-5 reproducing kernel.
        let b10 = |x: f64| {
            -3628800.0 * bernoulli_kernel(order(5), PeriodicPoint::new(x).unwrap())
        };
        let phi = SampledPeriodicFunction::from_fn(grid(64), b10).unwrap();
        let rect = rectangle_rule(&phi);

        // Dense midpoint reference on the analytic function.
        let panels = 20_000;
        let width = 1.0 / panels as f64;
        let reference: f64 = (0..panels)
            .map(|i| b10((i as f64 + 0.5) * width))
            .sum::<f64>()
            * width;
        assert!((rect - reference).abs() < 1e-8, "{rect} vs {reference}");
    }

    #[test]
    fn aligned_panels_reproduce_the_nodal_sum() {
        let phi =
            SampledPeriodicFunction::new(grid(5), vec![0.4, -1.1, 2.3, 0.05, -0.7]).unwrap();
        let rect = rectangle_rule(&phi);
        for panels in [5u32, 10, 20] {
            let quad =
                integrate_interpolant(&phi, order(2), &SeriesControl::default(), panels).unwrap();
            assert!(
                (quad - rect).abs() < 1e-12,
                "panels = {panels}: {quad} vs {rect}"
            );
        }
    }

    #[test]
    fn misaligned_panels_converge_to_the_nodal_sum() {
        // Panel counts coprime to the lattice size; the midpoint rule
        // converges to ∫P = rectangle value at its usual rate.
        let phi =
            SampledPeriodicFunction::new(grid(5), vec![0.4, -1.1, 2.3, 0.05, -0.7]).unwrap();
        let rect = rectangle_rule(&phi);
        let ctl = SeriesControl::default();
        let errors: Vec<f64> = [6u32, 24, 96]
            .iter()
            .map(|&p| {
                (integrate_interpolant(&phi, order(2), &ctl, p).unwrap() - rect).abs()
            })
            .collect();
        assert!(errors[0] > errors[1] && errors[1] > errors[2], "{errors:?}");
        assert!(errors[2] < 1e-7, "{errors:?}");
    }

    #[test]
    fn coefficient_functions_integrate_to_the_mesh() {
        // Cardinal samples e_β make the interpolant equal to the β-th
        // coefficient function of z, whose exact integral is h.
        let n = 4u32;
        let h = 0.25;
        for beta in 1..=n {
            let mut samples = vec![0.0; n as usize];
            samples[(beta - 1) as usize] = 1.0;
            let phi = SampledPeriodicFunction::new(grid(n), samples).unwrap();
            let quad =
                integrate_interpolant(&phi, order(3), &SeriesControl::default(), 40).unwrap();
            assert!((quad - h).abs() < 1e-12, "β = {beta}: {quad}");
        }
    }

    #[test]
    fn too_few_panels_are_rejected() {
        let phi = SampledPeriodicFunction::from_fn(grid(8), |x| x).unwrap();
        let err =
            integrate_interpolant(&phi, order(1), &SeriesControl::default(), 7).unwrap_err();
        assert!(matches!(err, Error::InvalidGrid { .. }));
    }
}
