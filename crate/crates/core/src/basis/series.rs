//! Taylor series of the basis from the coefficient recurrence.
//!
//! The derivatives `a_n = g_i^{(n)}(0)` satisfy `a_n = [i == n + 1]` for
//! `n < m` and `a_{n+m} = -sum_{k<m} c_k a_{n+k}`. To avoid overflow the
//! recurrence runs on the scaled terms `b_n = a_n x^n / n!`:
//!
//! `b_n = -sum_{k<m} c_k b_{n-m+k} x^{m-k} / ((n-m+k+1) ... n)`
//!
//! and `g_i(x) = sum_n b_n`. Summation is compensated. Truncation uses a
//! geometric tail bound: once `q = sum_k |c_k| (|x| / (n + 2 - m))^{m-k} < 1`,
//! every later block of `m` terms shrinks by at least `q`, so the tail is at
//! most `m M q / (1 - q)` with `M` the largest magnitude in the current window.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{check_x, Backend, BasisValues, ToleranceConfig};
use crate::dd::ComplexDD;
use crate::polykernel::{MonicPolynomial, RootSet};
use crate::{ComplexScalar, Error, Result};
#[allow(unused_imports)]
use num_traits::Float;

/// Neumaier-compensated accumulator for one real component.
#[derive(Clone, Copy, Default)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(self) -> f64 {
        self.sum + self.comp
    }
}

fn tail_ratio(abs_coeffs: &[f64], abs_x: f64, n: usize) -> Option<f64> {
    let m = abs_coeffs.len();
    if n + 2 <= m {
        return None;
    }
    let denom = (n + 2 - m) as f64;
    let q = abs_coeffs
        .iter()
        .enumerate()
        .map(|(k, &c)| c * (abs_x / denom).powi((m - k) as i32))
        .sum();
    Some(q)
}

/// Scalar operations the recurrence needs; lets the same loop run in double
/// and double-double precision.
trait SeriesScalar: Copy {
    fn zero() -> Self;
    fn one() -> Self;
    fn mul(self, other: Self) -> Self;
    fn add(self, other: Self) -> Self;
    fn neg(self) -> Self;
    fn div_int(self, k: usize) -> Self;
    fn magnitude(self) -> f64;
    fn finite(self) -> bool;
}

impl SeriesScalar for ComplexScalar {
    fn zero() -> Self {
        <ComplexScalar as Zero>::zero()
    }
    fn one() -> Self {
        ComplexScalar::new(1.0, 0.0)
    }
    fn mul(self, o: Self) -> Self {
        self * o
    }
    fn add(self, o: Self) -> Self {
        self + o
    }
    fn neg(self) -> Self {
        -self
    }
    fn div_int(self, k: usize) -> Self {
        self / k as f64
    }
    fn magnitude(self) -> f64 {
        self.norm()
    }
    fn finite(self) -> bool {
        crate::is_finite(self)
    }
}

impl SeriesScalar for ComplexDD {
    fn zero() -> Self {
        ComplexDD::ZERO
    }
    fn one() -> Self {
        ComplexDD::ONE
    }
    fn mul(self, o: Self) -> Self {
        self * o
    }
    fn add(self, o: Self) -> Self {
        self + o
    }
    fn neg(self) -> Self {
        -self
    }
    fn div_int(self, k: usize) -> Self {
        self.div_f64(k as f64)
    }
    fn magnitude(self) -> f64 {
        self.l1_norm()
    }
    fn finite(self) -> bool {
        self.is_finite()
    }
}

/// Runs the scaled recurrence for all `m` basis functions. Each produced term
/// is handed to `sink(i, term)`. Returns the number of terms used.
fn run_recurrence<T: SeriesScalar>(
    coeffs: &[T],
    x: T,
    tol: f64,
    max_terms: usize,
    mut sink: impl FnMut(usize, T),
) -> Result<usize> {
    let m = coeffs.len() - 1;
    let abs_coeffs: Vec<f64> = coeffs[..m].iter().map(|c| c.magnitude()).collect();
    let abs_x = x.magnitude();

    // windows[i] holds b_{n-m}, ..., b_{n-1} for basis function i
    let mut windows: Vec<Vec<T>> = vec![vec![T::zero(); m]; m];
    let mut abs_sums = vec![0.0f64; m];
    let mut term = T::zero();
    // b^{(i)}_k = δ_{i,k} x^k / k! for k < m (0-based i)
    for k in 0..m {
        term = if k == 0 {
            T::one()
        } else {
            term.mul(x).div_int(k)
        };
        windows[k][k] = term;
        abs_sums[k] = term.magnitude();
        sink(k, term);
    }

    let mut factors = vec![T::zero(); m];
    for n in m..max_terms {
        // factors[k] = x^{m-k} / ((n-m+k+1) ... n)
        let mut r = T::one();
        for k in (0..m).rev() {
            r = r.mul(x).div_int(n - m + k + 1);
            factors[k] = r;
        }
        let mut converged = true;
        let q = tail_ratio(&abs_coeffs, abs_x, n);
        for i in 0..m {
            let w = &mut windows[i];
            let mut b = T::zero();
            for k in 0..m {
                b = b.add(coeffs[k].mul(w[k]).mul(factors[k]));
            }
            let b = b.neg();
            if !b.finite() {
                return Err(Error::Overflow(Backend::Series.name()));
            }
            w.rotate_left(1);
            w[m - 1] = b;
            abs_sums[i] += b.magnitude();
            sink(i, b);

            let window_max = w.iter().map(|v| v.magnitude()).fold(0.0, f64::max);
            let done = window_max == 0.0
                || match q {
                    Some(q) if q < 1.0 => {
                        m as f64 * window_max * q / (1.0 - q) <= tol * abs_sums[i]
                    }
                    _ => false,
                };
            converged &= done;
        }
        if converged {
            return Ok(n + 1);
        }
    }
    Err(Error::SeriesNotConverged { terms: max_terms })
}

/// Basis values by the compensated Taylor series. Terms are capped at
/// `cfg.max_series_terms`.
pub fn eval_series(
    p: &MonicPolynomial,
    x: ComplexScalar,
    cfg: &ToleranceConfig,
) -> Result<BasisValues> {
    check_x(x)?;
    cfg.validate()?;
    let m = p.degree();
    let mut sums = vec![(Neumaier::default(), Neumaier::default()); m];
    let terms = run_recurrence(
        p.coeffs(),
        x,
        cfg.series_tol,
        cfg.max_series_terms,
        |i, b| {
            sums[i].0.add(b.re);
            sums[i].1.add(b.im);
        },
    )?;
    let values = sums
        .iter()
        .map(|(re, im)| ComplexScalar::new(re.value(), im.value()))
        .collect();
    let mut out = BasisValues::new(values, x, Backend::Series)?;
    out.diagnostics.series_terms = Some(terms);
    Ok(out)
}

/// Extended-precision reference values: the same series carried out in
/// double-double arithmetic, with the polynomial expanded from the roots in
/// double-double as well so no coefficient rounding enters.
pub fn series_reference(
    roots: &RootSet,
    x: ComplexScalar,
    max_terms: usize,
) -> Result<Vec<ComplexScalar>> {
    check_x(x)?;
    let mut coeffs = vec![ComplexDD::ONE];
    for &a in roots.as_slice() {
        let a = ComplexDD::from_complex(a);
        coeffs.push(ComplexDD::ZERO);
        for k in (0..coeffs.len()).rev() {
            let lower = if k > 0 {
                coeffs[k - 1]
            } else {
                ComplexDD::ZERO
            };
            coeffs[k] = lower - a * coeffs[k];
        }
    }
    let m = roots.len();
    let mut sums = vec![ComplexDD::ZERO; m];
    run_recurrence(
        &coeffs,
        ComplexDD::from_complex(x),
        1e-32,
        max_terms,
        |i, b| {
            sums[i] = sums[i] + b;
        },
    )?;
    Ok(sums.into_iter().map(ComplexDD::to_complex).collect())
}
