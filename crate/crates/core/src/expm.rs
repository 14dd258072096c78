//! Matrix exponential by scaling and squaring with diagonal Padé approximants.
//!
//! Degree and scaling follow Higham, "The scaling and squaring method for the
//! matrix exponential revisited" (SIAM J. Matrix Anal. Appl., 2005): the
//! smallest degree in {3, 5, 7, 9, 13} whose theta bound covers the 1-norm,
//! otherwise degree 13 on `A / 2^s` followed by `s` squarings. The thetas
//! keep the backward error below the unit roundoff of f64.

use crate::linalg::{Lu, Matrix};
use crate::ComplexScalar;
#[allow(unused_imports)]
use num_traits::Float;

const THETA: [(usize, f64); 4] = [
    (3, 1.495585217958292e-2),
    (5, 2.539398330063230e-1),
    (7, 9.504178996162932e-1),
    (9, 2.097847961257068e0),
];
const THETA_13: f64 = 5.371920351148152;

const B3: [f64; 4] = [120.0, 60.0, 12.0, 1.0];
const B5: [f64; 6] = [30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0];
const B7: [f64; 8] = [
    17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0,
];
const B9: [f64; 10] = [
    17643225600.0,
    8821612800.0,
    2075673600.0,
    302702400.0,
    30270240.0,
    2162160.0,
    110880.0,
    3960.0,
    90.0,
    1.0,
];
const B13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

fn re(x: f64) -> ComplexScalar {
    ComplexScalar::new(x, 0.0)
}

/// `exp(A)` for a square complex matrix.
pub fn expm(a: &Matrix) -> Matrix {
    assert!(a.is_square(), "expm requires a square matrix");
    let n = a.rows();
    if n == 1 {
        return Matrix::from_row_major(1, 1, alloc::vec![a[(0, 0)].exp()]);
    }
    let norm = a.norm1();
    if norm == 0.0 {
        return Matrix::identity(n);
    }
    for &(degree, theta) in &THETA {
        if norm <= theta {
            let coeffs: &[f64] = match degree {
                3 => &B3,
                5 => &B5,
                7 => &B7,
                _ => &B9,
            };
            return pade_low(a, coeffs);
        }
    }
    let s = if norm > THETA_13 {
        (norm / THETA_13).log2().ceil().max(0.0) as i32
    } else {
        0
    };
    let scaled = a.scaled(re(2f64.powi(-s)));
    let mut r = pade13(&scaled);
    for _ in 0..s {
        r = r.matmul(&r);
    }
    r
}

/// Degrees 3..9: `U = A * sum_odd b_k A^{k-1}`, `V = sum_even b_k A^k`.
fn pade_low(a: &Matrix, b: &[f64]) -> Matrix {
    let n = a.rows();
    let a2 = a.matmul(a);
    let mut u_inner = Matrix::zeros(n, n);
    let mut v = Matrix::zeros(n, n);
    let mut pow = Matrix::identity(n); // A^{2k}
    for k in 0..b.len() / 2 {
        u_inner.add_scaled(&pow, re(b[2 * k + 1]));
        v.add_scaled(&pow, re(b[2 * k]));
        pow = pow.matmul(&a2);
    }
    let u = a.matmul(&u_inner);
    solve_pade(&u, &v)
}

fn pade13(a: &Matrix) -> Matrix {
    let n = a.rows();
    let b = &B13;
    let ident = Matrix::identity(n);
    let a2 = a.matmul(a);
    let a4 = a2.matmul(&a2);
    let a6 = a2.matmul(&a4);

    let mut w1 = a6.scaled(re(b[13]));
    w1.add_scaled(&a4, re(b[11]));
    w1.add_scaled(&a2, re(b[9]));
    let mut w = a6.matmul(&w1);
    w.add_scaled(&a6, re(b[7]));
    w.add_scaled(&a4, re(b[5]));
    w.add_scaled(&a2, re(b[3]));
    w.add_scaled(&ident, re(b[1]));
    let u = a.matmul(&w);

    let mut z1 = a6.scaled(re(b[12]));
    z1.add_scaled(&a4, re(b[10]));
    z1.add_scaled(&a2, re(b[8]));
    let mut v = a6.matmul(&z1);
    v.add_scaled(&a6, re(b[6]));
    v.add_scaled(&a4, re(b[4]));
    v.add_scaled(&a2, re(b[2]));
    v.add_scaled(&ident, re(b[0]));
    solve_pade(&u, &v)
}

/// `(V - U)^{-1} (V + U)`
fn solve_pade(u: &Matrix, v: &Matrix) -> Matrix {
    let mut p = v.clone();
    p.add_scaled(u, re(1.0));
    let mut q = v.clone();
    q.add_scaled(u, re(-1.0));
    // q is a small perturbation of a positive multiple of the identity for
    // every norm admitted above, so it is never singular
    Lu::factor(&q)
        .solve(&p)
        .expect("Padé denominator is nonsingular")
}
