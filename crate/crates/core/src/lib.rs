//! Graceful fundamental systems for linear ODEs with constant coefficients.
//!
//! For the operator `(d/dx - a_1)...(d/dx - a_m)` this crate evaluates the
//! basis `g_1..g_m` obtained by applying the inverse Vandermonde matrix of the
//! characteristic roots to the exponentials `e^{a_j x}`. Unlike the canonical
//! exponentials, these functions stay entire and linearly independent when
//! roots collide, and they satisfy `g_i^{(k)}(0) = [i == k + 1]`, which makes
//! them the natural basis for initial value problems.
//!
//! Four evaluators are provided (see [`basis`]):
//!
//! * partial fractions over the roots (fast, distinct roots only),
//! * row one of the companion-matrix exponential (valid everywhere),
//! * trapezoidal quadrature of a contour integral around all roots,
//! * a Taylor series driven by the coefficient recurrence.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod basis;
pub mod dd;
mod error;
pub mod expm;
pub mod ivp;
pub mod linalg;
pub mod polykernel;
pub mod vandermonde;
pub mod verify;

pub use basis::{
    basis_derivatives, eval_auto, eval_companion_exp, eval_contour, eval_partial_fraction,
    eval_series, Backend, BasisValues, Diagnostics, ToleranceConfig,
};
pub use error::{Error, Result};
pub use ivp::{eval_solution, solve_ivp, IVProblem, Solution};
pub use linalg::Matrix;
pub use polykernel::{
    elementary_symmetric, horner_tails, poly_from_roots, roots_from_poly, MonicPolynomial,
    Polynomial, RootSet,
};
pub use vandermonde::{vandermonde_det, vandermonde_inverse, vandermonde_matrix};
pub use verify::{check_graceful, stability_sweep, wronskian, CheckReport, SweepReport};

/// Complex scalar used throughout.
pub type ComplexScalar = num_complex::Complex64;

pub(crate) fn is_finite(z: ComplexScalar) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
