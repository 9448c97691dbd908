//! Euler–Frobenius polynomials and their stable spectra.
//!
//! The degree-d Euler–Frobenius polynomial has the Eulerian numbers as
//! coefficients,
//!
//! ```text
//!     E_d(λ) = Σ_{k=0}^{d} A(d+1, k) λ^k,
//! ```
//!
//! and is characterized by the power-sum generating identity
//! `Σ_{k≥1} k^{d+1} λ^k = λ·E_d(λ)/(1−λ)^{d+2}` for |λ| < 1. Its roots are
//! real, negative, simple, and come in reciprocal pairs `(q, 1/q)`; for even
//! degree `2m−2` exactly `m−1` of them lie in the open interval `(−1, 0)`.
//! Those "stable" roots are the geometric decay ratios of the inverting
//! lattice operator in [`super::discrete`].
//!
//! Coefficients are exact `i128` integers (row sums are factorials, so
//! degree ≤ 32 fits). Roots are isolated by walking the interlacing ladder —
//! the roots of consecutive Eulerian polynomials strictly interlace — so
//! every bracket is guaranteed to contain exactly one root, then polished
//! with bisection and a few Newton steps to full `f64` accuracy.

use crate::error::{Error, Result};

/// Largest polynomial degree with exactly representable coefficients:
/// the coefficient row of degree d sums to (d+1)!, and 33! still fits i128.
const MAX_DEGREE: usize = 32;

/// An Euler–Frobenius polynomial: exact coefficients plus (optionally) the
/// roots lying in `(−1, 0)`.
///
/// Invariants upheld by the constructors and checked in tests:
/// coefficients are positive and palindromic, `coefficients[0] == 1`,
/// `stable_roots` is either empty (not yet computed) or sorted ascending
/// with every entry strictly inside `(−1, 0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EulerFrobeniusData {
    /// Polynomial degree d.
    pub degree: usize,
    /// Coefficients in ascending powers of λ; exact integers.
    pub coefficients: Vec<i128>,
    /// Roots in `(−1, 0)`, ascending; empty until computed by
    /// [`stable_roots`].
    pub stable_roots: Vec<f64>,
}

impl EulerFrobeniusData {
    /// Evaluates the polynomial at `x` in `f64` arithmetic.
    pub fn evaluate(&self, x: f64) -> f64 {
        horner(&as_f64(&self.coefficients), x)
    }
}

/// Constructs the degree-d Euler–Frobenius polynomial with exact integer
/// coefficients. The stable-root list is left empty; fill it with
/// [`stable_roots`].
///
/// # Errors
///
/// Degrees above 32 would overflow exact `i128` coefficient arithmetic and
/// are rejected with [`Error::InvalidControl`].
pub fn euler_frobenius(degree: usize) -> Result<EulerFrobeniusData> {
    let coefficients = eulerian_row(degree)?;
    Ok(EulerFrobeniusData {
        degree,
        coefficients,
        stable_roots: Vec::new(),
    })
}

/// Computes all roots of `data` in the open interval `(−1, 0)`, sorted
/// ascending and polished to full precision.
///
/// The expected count is `⌊degree/2⌋` (reciprocal pairing sends `(−1, 0)`
/// roots to `(−∞, −1)` ones, with `−1` itself a root only at odd degree);
/// any mismatch — a lost bracket, a failed polish, a residual above
/// `1e−12` relative to the coefficient scale — is a hard error rather than
/// a silently shortened list.
pub fn stable_roots(data: &EulerFrobeniusData) -> Result<Vec<f64>> {
    let target = data.degree;
    if target == 0 {
        return Ok(Vec::new());
    }

    // Walk the interlacing ladder: roots of E_{d-1} separate roots of E_d,
    // so each rung's roots provide guaranteed brackets for the next.
    let mut prev_roots: Vec<f64> = Vec::new();
    for d in 1..=target {
        let coeffs = as_f64(&eulerian_row(d)?);
        let mut roots = Vec::with_capacity(d);

        // Bracket endpoints: an expanded left edge, the previous rung's
        // roots, and 0 (where every rung is positive: E_d(0) = 1).
        let mut edges = Vec::with_capacity(d + 1);
        edges.push(left_edge(&coeffs, &prev_roots, d)?);
        edges.extend_from_slice(&prev_roots);
        edges.push(0.0);

        for w in edges.windows(2) {
            roots.push(refine_root(&coeffs, w[0], w[1], d)?);
        }
        prev_roots = roots;
    }

    let stable: Vec<f64> = prev_roots
        .into_iter()
        .filter(|&r| r > -1.0 + 1e-9 && r < 0.0)
        .collect();

    if stable.len() != target / 2 {
        return Err(Error::RootFinding {
            degree: target,
            reason: format!(
                "expected {} roots in (-1, 0), found {}",
                target / 2,
                stable.len()
            ),
        });
    }

    // Residual certificate: |E(q)| must vanish relative to the positive-
    // coefficient scale E(|q|) = Σ c_k |q|^k.
    let coeffs = as_f64(&data.coefficients);
    for &q in &stable {
        let residual = horner(&coeffs, q).abs();
        let scale = horner(&coeffs, -q);
        if residual > 1e-12 * scale {
            return Err(Error::RootFinding {
                degree: target,
                reason: format!("root {q} has residual {residual:.3e} above 1e-12 × scale {scale:.3e}"),
            });
        }
    }
    Ok(stable)
}

/// Coefficient row of the degree-d polynomial: Eulerian numbers
/// `A(d+1, 0..=d)` from the triangle recurrence
/// `A(n, k) = (k+1)·A(n−1, k) + (n−k)·A(n−1, k−1)`.
fn eulerian_row(degree: usize) -> Result<Vec<i128>> {
    if degree > MAX_DEGREE {
        return Err(Error::InvalidControl {
            reason: format!(
                "Euler-Frobenius degree {degree} exceeds exact integer range (max {MAX_DEGREE})"
            ),
        });
    }
    let n = degree + 1;
    let mut row: Vec<i128> = vec![1]; // A(1, 0)
    for cur in 2..=n {
        let mut next = vec![0i128; cur];
        for (k, slot) in next.iter_mut().enumerate() {
            let up = if k < row.len() {
                row[k]
                    .checked_mul(k as i128 + 1)
                    .expect("eulerian row bounded by (degree+1)! fits i128")
            } else {
                0
            };
            let left = if k >= 1 {
                row[k - 1]
                    .checked_mul((cur - k) as i128)
                    .expect("eulerian row bounded by (degree+1)! fits i128")
            } else {
                0
            };
            *slot = up
                .checked_add(left)
                .expect("eulerian row bounded by (degree+1)! fits i128");
        }
        row = next;
    }
    Ok(row)
}

fn as_f64(coeffs: &[i128]) -> Vec<f64> {
    coeffs.iter().map(|&c| c as f64).collect()
}

/// Horner evaluation over ascending-power coefficients.
fn horner(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for &c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn horner_derivative(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for (k, &c) in coeffs.iter().enumerate().skip(1).rev() {
        acc = acc * x + k as f64 * c;
    }
    acc
}

/// Finds a left bracket edge below the smallest root of the current rung by
/// doubling outward until the polynomial's sign matches its `−∞` behavior.
fn left_edge(coeffs: &[f64], prev_roots: &[f64], degree: usize) -> Result<f64> {
    // Sign of E_d(−∞) is (−1)^d (leading coefficient is 1).
    let far_sign = if degree % 2 == 0 { 1.0 } else { -1.0 };
    let anchor = prev_roots.first().copied().unwrap_or(-0.5);
    let mut lo = anchor * 2.0 - 1.0;
    for _ in 0..200 {
        let v = horner(coeffs, lo);
        if v != 0.0 && (v > 0.0) == (far_sign > 0.0) {
            return Ok(lo);
        }
        lo = lo * 2.0 - 1.0;
    }
    Err(Error::RootFinding {
        degree,
        reason: "left bracket edge not found after 200 doublings".to_string(),
    })
}

/// One guaranteed-bracket root: bisection to convergence, then Newton polish.
fn refine_root(coeffs: &[f64], mut a: f64, mut b: f64, degree: usize) -> Result<f64> {
    let mut fa = horner(coeffs, a);
    let fb = horner(coeffs, b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if (fa > 0.0) == (fb > 0.0) {
        return Err(Error::RootFinding {
            degree,
            reason: format!("bracket [{a}, {b}] does not change sign"),
        });
    }
    let mut x = 0.5 * (a + b);
    for _ in 0..200 {
        x = 0.5 * (a + b);
        if x == a || x == b {
            break; // bracket exhausted at f64 resolution
        }
        let fx = horner(coeffs, x);
        if fx == 0.0 {
            break;
        }
        if (fx > 0.0) == (fa > 0.0) {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
    }
    // Newton polish inside the final bracket.
    for _ in 0..4 {
        let fx = horner(coeffs, x);
        let dx = horner_derivative(coeffs, x);
        if dx == 0.0 {
            break;
        }
        let next = x - fx / dx;
        if !next.is_finite() || next <= a.min(b) || next >= a.max(b) {
            break;
        }
        if (next - x).abs() <= 1e-15 * x.abs() {
            x = next;
            break;
        }
        x = next;
    }
    Ok(x)
}
