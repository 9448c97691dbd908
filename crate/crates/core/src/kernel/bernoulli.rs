//! Closed-form evaluation of the order-m periodic spline kernel.
//!
//! The kernel of order m is the 1-periodic function with Fourier expansion
//!
//! ```text
//!     K_m(x) = Σ_{k≠0} e^{2πikx} / (2πik)^{2m},
//! ```
//!
//! the reproducing kernel (modulo constants) of the space of periodic
//! functions with square-integrable m-th derivative. The series sums in
//! closed form to `−P_{2m}({x}) / (2m)!` where `P_{2m}` is the degree-2m
//! Bernoulli polynomial and `{x}` the fractional part, so a single Horner
//! pass replaces the slowly converging sum.
//!
//! Polynomial coefficients are generated once per order in exact rational
//! arithmetic (Bernoulli numbers via the classical binomial recurrence),
//! converted to `f64` at the last moment, and memoized. For x in `[0, 1)`
//! every coefficient and partial product stays modest, so the Horner pass is
//! accurate to a few ulps through order 12.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, BigRational, ToPrimitive};

use super::{PeriodicPoint, SmoothnessOrder};

/// Evaluates the order-m periodic kernel at `x`.
///
/// The value is `(−1)^{m+1}`-signed at the origin: `K_1(0) = −1/12`,
/// `K_2(0) = 1/720`, and in general `(−1)^m K_m(0) > 0`. The kernel is even
/// around 0 and around 1/2, and `C^{2m−2}` across lattice points.
pub fn bernoulli_kernel(m: SmoothnessOrder, x: PeriodicPoint) -> f64 {
    kernel_raw(m, x.value())
}

/// Internal fast path: same as [`bernoulli_kernel`] but takes an
/// already-reduced representative in `[0, 1)`.
pub(crate) fn kernel_raw(m: SmoothnessOrder, reduced: f64) -> f64 {
    debug_assert!((0.0..1.0).contains(&reduced));
    let coeffs = kernel_coefficients(m.two_m());
    // Horner over descending powers.
    let mut acc = 0.0;
    for &c in coeffs.iter() {
        acc = acc * reduced + c;
    }
    acc
}

fn coefficient_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<f64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<f64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of `−P_n(x)/n!` in descending powers of x, computed exactly
/// and rounded once. Memoized per polynomial degree `n = 2m`.
fn kernel_coefficients(n: u32) -> Arc<Vec<f64>> {
    {
        let cache = coefficient_cache().lock().expect("kernel cache poisoned");
        if let Some(c) = cache.get(&n) {
            return Arc::clone(c);
        }
    }
    let computed = Arc::new(exact_kernel_coefficients(n as usize));
    let mut cache = coefficient_cache().lock().expect("kernel cache poisoned");
    Arc::clone(cache.entry(n).or_insert(computed))
}

/// Exact rational computation of the scaled Bernoulli-polynomial
/// coefficients, descending powers: entry k is the coefficient of
/// `x^{n−k}` in `−P_n(x)/n!`, i.e. `−C(n,k)·B_k/n!`.
fn exact_kernel_coefficients(n: usize) -> Vec<f64> {
    let binom = pascal_triangle(n + 1);
    let bern = bernoulli_numbers(n, &binom);
    let mut factorial = BigInt::from(1);
    for i in 2..=n {
        factorial *= BigInt::from(i);
    }
    let factorial = BigRational::from_integer(factorial);
    (0..=n)
        .map(|k| {
            let c = BigRational::from_integer(binom[n][k].clone());
            let exact = -(c * &bern[k]) / &factorial;
            exact
                .to_f64()
                .expect("kernel coefficient not representable")
        })
        .collect()
}

/// Rows 0..=n of Pascal's triangle as exact integers.
fn pascal_triangle(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    rows.push(vec![BigInt::from(1)]);
    for r in 1..=n {
        let prev = &rows[r - 1];
        let mut row = Vec::with_capacity(r + 1);
        row.push(BigInt::from(1));
        for k in 1..r {
            row.push(&prev[k - 1] + &prev[k]);
        }
        row.push(BigInt::from(1));
        rows.push(row);
    }
    rows
}

/// Bernoulli numbers `B_0..B_n` (convention `B_1 = −1/2`) from the
/// recurrence `Σ_{j=0}^{k} C(k+1, j)·B_j = 0` for `k ≥ 1`.
fn bernoulli_numbers(n: usize, binom: &[Vec<BigInt>]) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::from_integer(BigInt::from(1)));
    for k in 1..=n {
        let mut acc = BigRational::from_integer(BigInt::from(0));
        for (j, bj) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom[k + 1][j].clone()) * bj;
        }
        let denom = BigRational::from_integer(BigInt::from((k + 1) as i64));
        b.push(-acc / denom);
    }
    b
}
