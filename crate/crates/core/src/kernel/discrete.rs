//! The lattice operator that inverts the order-m kernel under discrete
//! convolution.
//!
//! For mesh width h the operator is the bi-infinite symmetric stencil
//!
//! ```text
//!     D_h[β] = (2m−1)!/h^{2m} · ( p[β] + Σ_k A_k q_k^{|β|} ),
//! ```
//!
//! where `p[0] = −2^{2m−1}`, `p[±1] = 1`, `p` vanishes elsewhere, the `q_k`
//! are the m−1 stable roots (in `(−1,0)`) of the degree-(2m−2)
//! Euler–Frobenius polynomial, and the amplitudes are
//! `A_k = (1−q_k)^{2m+1} / (q_k · E_{2m−1}(q_k))`. Two identities pin the
//! stencil down and are enforced by the test suite: it sums to zero, and its
//! lattice convolution with `|hβ|^{2m−1}/(2(2m−1)!)` is the discrete delta
//! scaled by 1/h.
//!
//! For m = 1 the stable spectrum is empty and the stencil reduces to the
//! classical second difference `(1, −2, 1)/h²`.
//!
//! The per-order data (roots and amplitudes) is computed once and memoized;
//! evaluation is then O(m) per entry with geometric decay ratio
//! `max_k |q_k|`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

use super::euler_frobenius::{euler_frobenius, stable_roots};
use super::SmoothnessOrder;

/// Per-order stencil data: stable roots and their amplitudes.
#[derive(Debug)]
struct StencilData {
    /// Stable roots q_k of the degree-(2m−2) polynomial, ascending.
    roots: Vec<f64>,
    /// A_k = (1−q_k)^{2m+1} / (q_k · E_{2m−1}(q_k)).
    amplitudes: Vec<f64>,
    /// (2m−1)! as f64.
    factorial: f64,
}

fn stencil_cache() -> &'static Mutex<HashMap<u32, Arc<StencilData>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<StencilData>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn stencil_data(m: SmoothnessOrder) -> Result<Arc<StencilData>> {
    {
        let cache = stencil_cache().lock().expect("stencil cache poisoned");
        if let Some(d) = cache.get(&m.get()) {
            return Ok(Arc::clone(d));
        }
    }
    let even = euler_frobenius((m.two_m() - 2) as usize)?;
    let odd = euler_frobenius((m.two_m() - 1) as usize)?;
    let roots = stable_roots(&even)?;
    let amplitudes = roots
        .iter()
        .map(|&q| (1.0 - q).powi(m.two_m() as i32 + 1) / (q * odd.evaluate(q)))
        .collect();
    let mut factorial = 1.0;
    for i in 2..m.two_m() {
        factorial *= i as f64;
    }
    let data = Arc::new(StencilData {
        roots,
        amplitudes,
        factorial,
    });
    let mut cache = stencil_cache().lock().expect("stencil cache poisoned");
    Ok(Arc::clone(cache.entry(m.get()).or_insert(data)))
}

/// Evaluates the stencil entry `D_h[β]` for mesh width `h > 0`.
///
/// The stencil is even in β and decays geometrically, so callers that need a
/// truncated range can stop once `|q_max|^{|β|}` falls below their tolerance
/// (see [`operator_decay_ratio`]).
///
/// # Errors
///
/// Rejects non-positive or non-finite `h` with [`Error::NonFinite`];
/// propagates root-finding failures for exotic orders.
pub fn discrete_operator(m: SmoothnessOrder, h: f64, beta: i64) -> Result<f64> {
    if !h.is_finite() || h <= 0.0 {
        return Err(Error::NonFinite {
            context: "mesh width h",
            value: h,
        });
    }
    let data = stencil_data(m)?;
    let scale = data.factorial / h.powi(m.two_m() as i32);
    let b = beta.unsigned_abs();

    let tail = |power: u64| -> f64 {
        // Exponents beyond ~64k underflow every |q| < 1 root to zero;
        // clamping keeps powi's i32 domain safe for huge offsets.
        let e = power.min(100_000) as i32;
        data.roots
            .iter()
            .zip(&data.amplitudes)
            .map(|(&q, &a)| a * q.powi(e))
            .sum()
    };

    let value = match b {
        0 => -(2.0f64).powi(m.two_m() as i32 - 1) + tail(0),
        1 => 1.0 + tail(1),
        _ => tail(b),
    };
    Ok(scale * value)
}

/// The geometric decay ratio `max_k |q_k|` of the order-m stencil (`0` for
/// m = 1, where the stencil has finite support).
///
/// `|D_h[β]| ≤ |D_h[2]| · ratio^{|β|−2}` for `|β| ≥ 2`, which is what
/// truncated-convolution callers use to certify their tails.
pub fn operator_decay_ratio(m: SmoothnessOrder) -> Result<f64> {
    let data = stencil_data(m)?;
    Ok(data.roots.iter().fold(0.0, |acc: f64, &q| acc.max(q.abs())))
}
