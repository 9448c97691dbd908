//! Certified lattice sums and restricted-frequency kernel sums.
//!
//! Three spectral quantities drive the interpolation formulas:
//!
//! * `S_j = Σ_{γ∈ℤ} (Nγ + j)^{−2m}` — the lattice sum over one residue
//!   class, here evaluated by symmetric truncation plus a midpoint
//!   Euler–Maclaurin tail correction whose error bound is rigorous. Plain
//!   truncation would need ~10¹² terms for m = 1 at 1e−12; the corrected
//!   form needs a few thousand.
//! * `Λ(k) = 1/S_{k mod N}` — its reciprocal, the spectral symbol of the
//!   inverting lattice operator on the residue class of k.
//! * `H_j(u) = Σ_{k≡j (mod N), k≠0} e^{2πiku}/k^{2m}` — the kernel's Fourier
//!   series restricted to one residue class. This is evaluated *exactly*
//!   (up to rounding) through the discrete roots-of-unity filter
//!
//!   ```text
//!       H_j(u) = (−1)^m (2π)^{2m} / N · Σ_{r=0}^{N−1} e^{−2πirj/N} · K_m(u + r/N),
//!   ```
//!
//!   a finite sum of N closed-form kernel values, so no truncation control
//!   is needed. The slowly converging direct series survives only in the
//!   test suite as an independent oracle.

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::bernoulli::kernel_raw;
use super::{reduce, PeriodicPoint, SeriesControl, SmoothnessOrder};

/// Evaluates the residue-class lattice sum `S_j = Σ_γ (Nγ + j)^{−2m}`.
///
/// `j` may be any integer not divisible by `n`; the sum depends on it only
/// modulo `n`. The returned value carries a certified absolute error at or
/// below `ctl.abs_tol()`; when the term budget allows, the evaluation
/// continues until the tail bound is also below `1e−13` *relative* to the
/// sum, so downstream reciprocals stay fully accurate even when the sum
/// itself is tiny (large m, central residue).
///
/// # Errors
///
/// * [`Error::SingularLatticeSum`] if `j ≡ 0 (mod n)` — the class through
///   zero diverges.
/// * [`Error::SeriesNotConverged`] if the certified bound cannot be brought
///   below `ctl.abs_tol()` within `ctl.max_terms()` terms.
pub fn lattice_sum(m: SmoothnessOrder, n: u32, j: i64, ctl: &SeriesControl) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidLatticeSize { requested: 0 });
    }
    let j0 = j.rem_euclid(n as i64);
    if j0 == 0 {
        return Err(Error::SingularLatticeSum { j, n });
    }
    let jf = j0 as f64;
    let nf = n as f64;
    let p = m.two_m() as i32;

    // Largest one-sided truncation radius the term budget allows (2T + 1
    // terms in total); SeriesControl guarantees max_terms ≥ 3, so cap ≥ 1.
    let cap = ((ctl.max_terms() - 1) / 2).max(1) as i64;

    // Seed with γ ∈ {−1, 0, 1}: the tail correction needs T ≥ 1 so that the
    // left-side midpoint N(T + 1/2) − j stays positive.
    let mut partial = jf.powi(-p) + (nf + jf).powi(-p) + (nf - jf).powi(-p);
    let mut radius: i64 = 1;

    loop {
        let (correction, bound) = tail_correction(nf, jf, p, radius);
        let value = partial + correction;
        let absolute_ok = bound <= ctl.abs_tol();
        let relative_ok = bound <= 1e-13 * value.abs();
        if absolute_ok && (relative_ok || radius >= cap) {
            return Ok(value);
        }
        if radius >= cap {
            return Err(Error::SeriesNotConverged {
                requested: ctl.abs_tol(),
                achieved: bound,
                terms: (2 * radius + 1) as usize,
            });
        }
        let target = (radius * 2).min(cap);
        while radius < target {
            radius += 1;
            let t = radius as f64;
            partial += (nf * t + jf).powi(-p) + (nf * t - jf).powi(-p);
        }
    }
}

/// Midpoint Euler–Maclaurin tail estimate for both tails beyond `±radius`.
///
/// For each side the tail `Σ_{t > radius} (N t ± j)^{−2m}` is replaced by
/// `∫_{radius + 1/2}^{∞}` of the same integrand, which evaluates to
/// `u^{1−2m}/(N(2m−1))` with `u = N(radius + 1/2) ± j`. The midpoint rule's
/// cell-by-cell error telescopes into `(|φ′| + φ″)(radius + 1/2) / 24`,
/// giving a fully rigorous bound for this convex, monotone integrand.
fn tail_correction(nf: f64, jf: f64, p: i32, radius: i64) -> (f64, f64) {
    let mid = nf * (radius as f64 + 0.5);
    let mut correction = 0.0;
    let mut bound = 0.0;
    for u in [mid + jf, mid - jf] {
        debug_assert!(u > 0.0);
        correction += u.powi(1 - p) / (nf * (p - 1) as f64);
        let d1 = p as f64 * nf * u.powi(-p - 1);
        let d2 = (p as f64) * (p as f64 + 1.0) * nf * nf * u.powi(-p - 2);
        bound += (d1 + d2) / 24.0;
    }
    (correction, bound)
}

/// The spectral symbol `Λ(k) = 1 / S_{k mod N}` of the inverting lattice
/// operator on the residue class of `k`.
///
/// Shares [`lattice_sum`]'s error conditions.
pub fn big_lambda(m: SmoothnessOrder, n: u32, k: i64, ctl: &SeriesControl) -> Result<f64> {
    Ok(1.0 / lattice_sum(m, n, k, ctl)?)
}

/// Evaluates the restricted-frequency kernel sum
/// `H_j(u) = Σ_{k≡j (mod N), k≠0} e^{2πiku}/k^{2m}` in closed form.
///
/// The evaluation is a finite roots-of-unity filter over N closed-form
/// kernel values — exact up to rounding, no truncation. Useful identities,
/// all enforced by the test suite: `H_j(0) = S_j`, `H_{N−j}(u) = conj H_j(u)`,
/// and at lattice points `H_j(β/N) = e^{2πijβ/N} S_j`.
///
/// # Errors
///
/// [`Error::SingularLatticeSum`] if `j ≡ 0 (mod n)`: the class through zero
/// is excluded for consistency with [`lattice_sum`] (its `k = 0` term is
/// undefined).
pub fn residue_fourier_sum(
    m: SmoothnessOrder,
    n: u32,
    j: i64,
    u: PeriodicPoint,
) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::InvalidLatticeSize { requested: 0 });
    }
    let j0 = j.rem_euclid(n as i64) as u32;
    if j0 == 0 {
        return Err(Error::SingularLatticeSum { j, n });
    }
    Ok(filter_sum(m, n, j0, u.value()))
}

/// The roots-of-unity filter behind [`residue_fourier_sum`], on
/// pre-validated arguments (`1 ≤ j0 < n`, `u` reduced to `[0, 1)`).
///
/// Callers that need `H_j` on a whole lattice of shifted points should call
/// this **once** per class and apply the exact translation law
/// `H_j(u + β/N) = e^{2πijβ/N}·H_j(u)` — re-filtering at each shifted point
/// costs N kernel evaluations apiece and, worse, re-rolls the cancellation
/// noise that the single-evaluation + phase-rotation form provably cancels
/// in lattice-summed identities such as the coefficient partition of unity.
pub(crate) fn filter_sum(m: SmoothnessOrder, n: u32, j0: u32, u: f64) -> Complex64 {
    debug_assert!(j0 >= 1 && j0 < n);
    debug_assert!((0.0..1.0).contains(&u));
    let nf = n as f64;
    let scale = spectral_scale(m) / nf;
    let tau = 2.0 * std::f64::consts::PI;
    let (mut re, mut im) = (0.0, 0.0);
    for r in 0..n as u64 {
        let kernel = kernel_raw(m, reduce(u + r as f64 / nf));
        let angle = tau * ((r * j0 as u64) % n as u64) as f64 / nf;
        re += angle.cos() * kernel;
        im -= angle.sin() * kernel;
    }
    Complex64::new(scale * re, scale * im)
}

/// `(−1)^m (2π)^{2m}`, the factor converting kernel values back to spectral
/// normalization.
pub(crate) fn spectral_scale(m: SmoothnessOrder) -> f64 {
    m.sign() * (2.0 * std::f64::consts::PI).powi(m.two_m() as i32)
}
