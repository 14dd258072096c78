//! Vandermonde matrix of the characteristic roots and its closed-form inverse.
//!
//! Row `j` of `V` is `(1, a_j, ..., a_j^{m-1})`. Entry `(i, j)` of `V^{-1}` is
//! the coefficient of `e^{a_j x}` in the basis function `g_i`.

use num_traits::{One, Zero};

use crate::linalg::Matrix;
use crate::polykernel::{elementary_symmetric, RootSet};
use crate::{ComplexScalar, Error, Result};

pub fn vandermonde_matrix(roots: &RootSet) -> Matrix {
    let m = roots.len();
    let mut v = Matrix::zeros(m, m);
    for (j, &a) in roots.as_slice().iter().enumerate() {
        let mut pow = ComplexScalar::one();
        for k in 0..m {
            v[(j, k)] = pow;
            pow *= a;
        }
    }
    v
}

/// Determinant by the product formula `prod_{j<k} (a_k - a_j)`.
///
/// This is the sign convention matching rows `(1, a_j, ...)`; the product
/// `prod_{j<k} (a_j - a_k)` differs from it by `(-1)^{m(m-1)/2}`. Exactly zero
/// iff two roots coincide.
pub fn vandermonde_det(roots: &RootSet) -> ComplexScalar {
    let r = roots.as_slice();
    let mut det = ComplexScalar::one();
    for j in 0..r.len() {
        for k in j + 1..r.len() {
            det *= r[k] - r[j];
        }
    }
    det
}

/// Closed-form inverse:
/// `[V^{-1}]_{i,j} = (-1)^{m-i} S_{m-i}(a without a_j) / prod_{k != j} (a_j - a_k)`.
///
/// Fails with [`Error::ConfluentRoots`] unless the minimum pairwise distance
/// exceeds `sep_tol * (1 + max|a|)`. With `sep_tol = 0` only exact
/// coincidences are rejected.
pub fn vandermonde_inverse(roots: &RootSet, sep_tol: f64) -> Result<Matrix> {
    if sep_tol.is_nan() || sep_tol < 0.0 {
        return Err(Error::InvalidInput("sep_tol must be nonnegative"));
    }
    let min_separation = roots.min_separation();
    if !roots.is_well_separated(sep_tol) {
        return Err(Error::ConfluentRoots { min_separation });
    }
    let r = roots.as_slice();
    let m = r.len();
    let mut inv = Matrix::zeros(m, m);
    for j in 0..m {
        // column denominators do not depend on the row
        let denom = (0..m)
            .filter(|&k| k != j)
            .fold(ComplexScalar::one(), |acc, k| acc * (r[j] - r[k]));
        if denom == ComplexScalar::zero() {
            return Err(Error::ConfluentRoots {
                min_separation: 0.0,
            });
        }
        let rest = roots.without(j);
        for i in 1..=m {
            let sign = if (m - i).is_multiple_of(2) { 1.0 } else { -1.0 };
            inv[(i - 1, j)] = elementary_symmetric(&rest, m - i) * sign / denom;
        }
    }
    Ok(inv)
}
