//! Companion-matrix exponential.
//!
//! Orientation: `A` has ones on the superdiagonal and `-c_0, ..., -c_{m-1}`
//! in its last row, so `y = (f, f', ..., f^{(m-1)})` obeys `y' = A y` and
//! `f(x) = e_1^T exp(xA) y(0)`. Row one of `exp(xA)` is therefore
//! `(g_1(x), ..., g_m(x))`: the unique solutions with
//! `g_i^{(k)}(0) = [i == k + 1]`. Nothing here divides by root differences,
//! so confluent roots need no special casing.
//!
//! Before exponentiating, the matrix is balanced with `D = diag(s^k)` for a
//! power of two `s` near the root scale; `exp(xA) = D exp(x s Ã) D^{-1}` where
//! `Ã` is the companion matrix of `p(s t) / s^m`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{check_x, Backend, BasisValues};
use crate::expm::expm;
use crate::linalg::Matrix;
use crate::polykernel::MonicPolynomial;
use crate::{ComplexScalar, Error, Result};
#[allow(unused_imports)]
use num_traits::Float;

/// Companion matrix in the state-propagating orientation described above.
pub fn companion_matrix(p: &MonicPolynomial) -> Matrix {
    let m = p.degree();
    let mut a = Matrix::zeros(m, m);
    for k in 0..m - 1 {
        a[(k, k + 1)] = ComplexScalar::one();
    }
    for (k, &c) in p.coeffs()[..m].iter().enumerate() {
        a[(m - 1, k)] = -c;
    }
    a
}

fn balancing_scale(p: &MonicPolynomial) -> f64 {
    let m = p.degree();
    let beta = (0..m)
        .map(|k| p.coeffs()[k].norm().powf(1.0 / (m - k) as f64))
        .fold(0.0, f64::max);
    if beta <= 1.0 {
        1.0
    } else {
        2f64.powi(beta.log2().round() as i32)
    }
}

/// `exp(xA)` computed through the balanced companion matrix.
pub(crate) fn companion_exponential(p: &MonicPolynomial, x: ComplexScalar) -> Result<Matrix> {
    check_x(x)?;
    let m = p.degree();
    let s = balancing_scale(p);
    let scaled: Vec<ComplexScalar> = (0..=m)
        .map(|k| p.coeffs()[k] / s.powi((m - k) as i32))
        .collect();
    let balanced = companion_matrix(&MonicPolynomial::new(scaled)?);
    let e = expm(&balanced.scaled(x * s));
    let mut out = Matrix::zeros(m, m);
    for r in 0..m {
        for c in 0..m {
            out[(r, c)] = e[(r, c)] * s.powi(r as i32 - c as i32);
        }
    }
    if !out.all_finite() {
        return Err(Error::Overflow(Backend::CompanionExp.name()));
    }
    Ok(out)
}

/// Row one of `exp(xA)`.
pub fn eval_companion_exp(p: &MonicPolynomial, x: ComplexScalar) -> Result<BasisValues> {
    let e = companion_exponential(p, x)?;
    BasisValues::new(e.row(0).to_vec(), x, Backend::CompanionExp)
}

/// Entry `(k, i)` is `g_{i+1}^{(k)}(x)` for `k = 0..=max_order`: row one of
/// `A^k exp(xA)`.
pub fn basis_derivatives(
    p: &MonicPolynomial,
    x: ComplexScalar,
    max_order: usize,
) -> Result<Matrix> {
    let e = companion_exponential(p, x)?;
    let a = companion_matrix(p);
    let m = p.degree();
    let mut out = Matrix::zeros(max_order + 1, m);
    let mut u = vec![ComplexScalar::zero(); m];
    u[0] = ComplexScalar::one();
    for k in 0..=max_order {
        let row = Matrix::vecmul_left(&u, &e);
        for (i, v) in row.into_iter().enumerate() {
            out[(k, i)] = v;
        }
        u = Matrix::vecmul_left(&u, &a);
    }
    if !out.all_finite() {
        return Err(Error::Overflow("basis_derivatives"));
    }
    Ok(out)
}
