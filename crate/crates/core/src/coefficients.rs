//! Optimal interpolation coefficients on the uniform lattice.
//!
//! For a function sampled at the N lattice nodes `x_β = β/N`, the
//! minimum-norm interpolation rule at an off-node point z takes the form
//! `P(z) = Σ_β C_β(z)·φ(x_β)` with coefficients
//!
//! ```text
//!     C_β(z) = h · ( 1 + Σ_{j=1}^{⌊N/2⌋} w_j · Re H_j(x_β − z) / S_j ),
//! ```
//!
//! where `h = 1/N`, the channel weight `w_j` is 2 except for the unpaired
//! middle class of even N (weight 1), `H_j` is the restricted-frequency
//! kernel sum of [`crate::kernel::residue_fourier_sum`], and `S_j = H_j(0)`
//! the corresponding lattice sum.
//!
//! ## Evaluation strategy
//!
//! `H_j` obeys the exact translation law `H_j(u + β/N) = e^{2πijβ/N}·H_j(u)`,
//! so one filter evaluation `W_j = H_j(−z)` per channel serves every node β
//! through an exact phase rotation. Besides an O(N) speedup this makes the
//! partition of unity `Σ_β C_β = 1` hold to machine precision by
//! construction: the per-channel evaluation error is *constant across β* and
//! meets the near-zero phase sum `Σ_β e^{2πijβ/N}`, so it cancels from the
//! total instead of being amplified by `1/S_j`.
//!
//! When z coincides with a lattice node (within 1e−9 of `z·N` being an
//! integer) the coefficients collapse to the exact cardinal vector — the
//! interpolant reproduces nodal data bitwise — and the multiplier is zero.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::kernel::{
    filter_sum, kernel_raw, lattice_sum, reduce, PeriodicPoint, SeriesControl, SmoothnessOrder,
};

/// Relative distance of `z·N` to the nearest integer below which z is
/// treated as that lattice node exactly.
const NODE_SNAP: f64 = 1e-9;

/// The uniform N-point lattice `{β/N : β = 1..N}` on the unit circle
/// (node N is the origin).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeGrid {
    n: u32,
}

impl LatticeGrid {
    /// A lattice needs at least two nodes.
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidLatticeSize { requested: n });
        }
        Ok(Self { n })
    }

    /// Number of nodes N.
    pub fn size(self) -> u32 {
        self.n
    }

    /// Mesh width `h = 1/N`.
    pub fn mesh(self) -> f64 {
        1.0 / self.n as f64
    }

    /// The node `β/N` as a point on the circle; β is taken modulo N, so
    /// `node(N) = node(0)` is the origin.
    pub fn node(self, beta: u32) -> PeriodicPoint {
        let r = (beta % self.n) as f64 / self.n as f64;
        PeriodicPoint::new(r).expect("lattice node is finite")
    }
}

/// The optimal coefficient vector `C_β(z)`, β = 1..N, together with the
/// Lagrange multiplier of the underlying constrained minimization.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector {
    m: SmoothnessOrder,
    grid: LatticeGrid,
    z: PeriodicPoint,
    values: Vec<f64>,
    lambda: f64,
    cardinal: bool,
}

impl CoefficientVector {
    /// Smoothness order the vector was built for.
    pub fn order(&self) -> SmoothnessOrder {
        self.m
    }

    /// The lattice the vector lives on.
    pub fn grid(&self) -> LatticeGrid {
        self.grid
    }

    /// The evaluation point z.
    pub fn evaluation_point(&self) -> PeriodicPoint {
        self.z
    }

    /// All coefficients, index β−1 for β = 1..N.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The coefficient of node β (1-based, β ≤ N).
    pub fn value(&self, beta: u32) -> f64 {
        assert!(
            beta >= 1 && beta <= self.grid.size(),
            "node index {beta} out of range 1..={}",
            self.grid.size()
        );
        self.values[(beta - 1) as usize]
    }

    /// The Lagrange multiplier λ(z) of the mean constraint; zero at nodes.
    pub fn multiplier(&self) -> f64 {
        self.lambda
    }

    /// Whether z snapped to a lattice node, making this an exact cardinal
    /// vector (a single 1, all other entries 0).
    pub fn is_cardinal(&self) -> bool {
        self.cardinal
    }

    /// Whether the lattice is inside the regime `N ≥ m` for which the
    /// explicit construction is stated. Smaller lattices still evaluate —
    /// the closed form keeps matching the defining linear system — but
    /// callers may want to surface a warning.
    pub fn within_stated_validity(&self) -> bool {
        self.grid.size() >= self.m.get()
    }

    /// `Σ_β C_β`, which the construction keeps at 1 up to rounding.
    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Applies the rule to a nodal sample vector (index β−1), yielding the
    /// interpolant value at z.
    ///
    /// # Panics
    ///
    /// Panics if the sample length differs from the lattice size; sampled
    /// data is validated at construction in
    /// [`crate::interpolator::SampledPeriodicFunction`].
    pub fn apply(&self, samples: &[f64]) -> f64 {
        assert_eq!(
            samples.len(),
            self.values.len(),
            "sample vector length {} does not match lattice size {}",
            samples.len(),
            self.values.len()
        );
        self.values
            .iter()
            .zip(samples)
            .map(|(c, s)| c * s)
            .sum()
    }
}

/// Computes the optimal coefficient vector for order m at the point z.
///
/// # Errors
///
/// Propagates [`Error::SeriesNotConverged`] from the lattice sums if `ctl`
/// cannot certify them; all other inputs are validated by their types.
pub fn optimal_coefficients(
    m: SmoothnessOrder,
    grid: LatticeGrid,
    z: PeriodicPoint,
    ctl: &SeriesControl,
) -> Result<CoefficientVector> {
    let n = grid.size();
    let nf = n as f64;
    let h = grid.mesh();

    // Node snap: exact cardinal vector, zero multiplier.
    let t = z.value() * nf;
    let k = t.round();
    if (t - k).abs() <= NODE_SNAP {
        let mut values = vec![0.0; n as usize];
        let residue = (k as i64).rem_euclid(n as i64) as u32;
        let index = if residue == 0 { n - 1 } else { residue - 1 };
        values[index as usize] = 1.0;
        return Ok(CoefficientVector {
            m,
            grid,
            z,
            values,
            lambda: 0.0,
            cardinal: true,
        });
    }

    let sums = cached_class_sums(m, n, ctl)?;
    let tau = 2.0 * std::f64::consts::PI;
    let minus_z = reduce(-z.value());

    let mut acc = vec![1.0f64; n as usize];
    for j in 1..=n / 2 {
        let pair_weight = if n % 2 == 0 && j == n / 2 { 1.0 } else { 2.0 };
        let w = filter_sum(m, n, j, minus_z);
        let channel = pair_weight / sums[j as usize];
        for beta in 1..=n as u64 {
            // Exact translation: H_j(x_β − z) = e^{2πijβ/N} · H_j(−z).
            let angle = tau * ((j as u64 * beta) % n as u64) as f64 / nf;
            acc[(beta - 1) as usize] += channel * (angle.cos() * w.re - angle.sin() * w.im);
        }
    }
    let values = acc.into_iter().map(|a| h * a).collect();

    Ok(CoefficientVector {
        m,
        grid,
        z,
        values,
        lambda: lagrange_multiplier(m, grid, z),
        cardinal: false,
    })
}

/// The Lagrange multiplier of the mean constraint in closed form:
/// `λ(z) = (K_m(Nz) − K_m(0)) / N^{2m}`, zero when z is a lattice node.
pub fn lagrange_multiplier(m: SmoothnessOrder, grid: LatticeGrid, z: PeriodicPoint) -> f64 {
    let nf = grid.size() as f64;
    let t = z.value() * nf;
    if (t - t.round()).abs() <= NODE_SNAP {
        return 0.0;
    }
    let scaled = reduce(t);
    (kernel_raw(m, scaled) - kernel_raw(m, 0.0)) / nf.powi(m.two_m() as i32)
}

/// Per-(m, N, control) cache of the residue-class lattice sums
/// `S_1 .. S_{⌊N/2⌋}` (the upper classes mirror them). Initialized once,
/// then shared by every coefficient and norm evaluation.
pub(crate) fn cached_class_sums(
    m: SmoothnessOrder,
    n: u32,
    ctl: &SeriesControl,
) -> Result<Arc<Vec<f64>>> {
    type Key = (u32, u32, u64, usize);
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<Vec<f64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (m.get(), n, ctl.abs_tol().to_bits(), ctl.max_terms());
    {
        let map = cache.lock().expect("class-sum cache poisoned");
        if let Some(v) = map.get(&key) {
            return Ok(Arc::clone(v));
        }
    }
    let mut sums = vec![f64::NAN; (n / 2 + 1) as usize];
    for j in 1..=n / 2 {
        sums[j as usize] = lattice_sum(m, n, j as i64, ctl)?;
    }
    let sums = Arc::new(sums);
    let mut map = cache.lock().expect("class-sum cache poisoned");
    Ok(Arc::clone(map.entry(key).or_insert(sums)))
}

/// Looks up `S_j` for any class `1 ≤ j ≤ N−1` in a cache vector produced by
/// [`cached_class_sums`], using the mirror symmetry `S_j = S_{N−j}`.
pub(crate) fn class_sum(sums: &[f64], n: u32, j: u32) -> f64 {
    debug_assert!(j >= 1 && j < n);
    sums[j.min(n - j) as usize]
}
