//! Minimal end-to-end use: sample a function, interpolate off-grid, and
//! read off the sharp worst-case error constant at that point.

use lattice_interp::{
    error_norm_squared, interpolate, LatticeGrid, PeriodicPoint, SampledPeriodicFunction,
    SeriesControl, SmoothnessOrder,
};

fn main() -> lattice_interp::Result<()> {
    let m = SmoothnessOrder::new(2)?;
    let grid = LatticeGrid::new(8)?;
    let ctl = SeriesControl::new(100_000, 1e-12)?;
    let phi =
        SampledPeriodicFunction::from_fn(grid, |x| (2.0 * std::f64::consts::PI * x).sin())?;

    let z = PeriodicPoint::new(0.3125)?;
    let value = interpolate(&phi, m, z, &ctl)?;
    let worst_case_sq = error_norm_squared(m, grid, z, &ctl)?;
    println!(
        "P(z) = {value:.12}, worst-case error ≤ {:.3e}·‖φ''‖",
        worst_case_sq.sqrt()
    );
    Ok(())
}
