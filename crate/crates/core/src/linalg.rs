//! Small dense complex matrices.
//!
//! Sizes here are the ODE order (a handful), so everything is plain row-major
//! storage with naive kernels.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::ComplexScalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<ComplexScalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![ComplexScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ComplexScalar::one();
        }
        m
    }

    /// Builds a matrix from row-major data. Panics if `data.len() != rows * cols`.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<ComplexScalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "row-major data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[ComplexScalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[ComplexScalar] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<ComplexScalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ComplexScalar::zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vecmul_left(v: &[ComplexScalar], m: &Matrix) -> Vec<ComplexScalar> {
        assert_eq!(v.len(), m.rows, "vecmul shape mismatch");
        let mut out = vec![ComplexScalar::zero(); m.cols];
        for (k, &a) in v.iter().enumerate() {
            for (j, o) in out.iter_mut().enumerate() {
                *o += a * m[(k, j)];
            }
        }
        out
    }

    pub fn scaled(&self, s: ComplexScalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| z * s).collect(),
        }
    }

    /// `self + s * other`
    pub fn add_scaled(&mut self, other: &Matrix, s: ComplexScalar) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a += s * b;
        }
    }

    pub fn add_diag(&mut self, s: ComplexScalar) {
        for i in 0..self.rows.min(self.cols) {
            self[(i, i)] += s;
        }
    }

    /// Maximum absolute column sum.
    pub fn norm1(&self) -> f64 {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|&z| crate::is_finite(z))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = ComplexScalar;

    fn index(&self, (r, c): (usize, usize)) -> &ComplexScalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut ComplexScalar {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

/// LU factorization with partial pivoting, `P A = L U`.
#[derive(Clone, Debug)]
pub struct Lu {
    lu: Matrix,
    perm: Vec<usize>,
    swaps: usize,
    singular: bool,
}

impl Lu {
    pub fn factor(a: &Matrix) -> Lu {
        assert!(a.is_square(), "LU requires a square matrix");
        let n = a.rows;
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut swaps = 0;
        let mut singular = false;
        for k in 0..n {
            let (p, pmax) = (k..n)
                .map(|i| (i, lu[(i, k)].norm()))
                .fold(
                    (k, -1.0),
                    |best, cur| if cur.1 > best.1 { cur } else { best },
                );
            if pmax == 0.0 {
                singular = true;
                continue;
            }
            if p != k {
                for j in 0..n {
                    lu.data.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
                swaps += 1;
            }
            let pivot = lu[(k, k)];
            for i in k + 1..n {
                let f = lu[(i, k)] / pivot;
                lu[(i, k)] = f;
                if f == ComplexScalar::zero() {
                    continue;
                }
                for j in k + 1..n {
                    let t = lu[(k, j)];
                    lu[(i, j)] -= f * t;
                }
            }
        }
        Lu {
            lu,
            perm,
            swaps,
            singular,
        }
    }

    pub fn is_singular(&self) -> bool {
        self.singular
    }

    pub fn det(&self) -> ComplexScalar {
        if self.singular {
            return ComplexScalar::zero();
        }
        let n = self.lu.rows;
        let mut d = (0..n).fold(ComplexScalar::one(), |acc, i| acc * self.lu[(i, i)]);
        if self.swaps % 2 == 1 {
            d = -d;
        }
        d
    }

    /// Solves `A X = B`. Returns `None` when the factorization is singular.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        if self.singular {
            return None;
        }
        let n = self.lu.rows;
        assert_eq!(b.rows, n, "solve shape mismatch");
        let mut x = Matrix::zeros(n, b.cols);
        for i in 0..n {
            for j in 0..b.cols {
                x[(i, j)] = b[(self.perm[i], j)];
            }
        }
        for j in 0..b.cols {
            for i in 0..n {
                let mut s = x[(i, j)];
                for k in 0..i {
                    s -= self.lu[(i, k)] * x[(k, j)];
                }
                x[(i, j)] = s;
            }
            for i in (0..n).rev() {
                let mut s = x[(i, j)];
                for k in i + 1..n {
                    s -= self.lu[(i, k)] * x[(k, j)];
                }
                x[(i, j)] = s / self.lu[(i, i)];
            }
        }
        Some(x)
    }
}

pub fn determinant(a: &Matrix) -> ComplexScalar {
    Lu::factor(a).det()
}
