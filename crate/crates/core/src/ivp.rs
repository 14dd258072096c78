//! Initial value problems for `p(d/dx) f = 0`.
//!
//! Because `g_i^{(k)}(0) = [i == k + 1]`, the solution with data
//! `f^{(k)}(x0) = d_k` is simply `f(x) = sum_k d_k g_{k+1}(x - x0)`. There is
//! no linear system to solve, for any root configuration: the coefficients in
//! the basis are the initial data themselves.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::basis::{eval_auto, eval_companion_exp, ToleranceConfig};
use crate::polykernel::{poly_from_roots, MonicPolynomial, RootSet};
use crate::{is_finite, ComplexScalar, Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct IVProblem {
    poly: MonicPolynomial,
    /// Roots, when known; lets evaluation use partial fractions.
    roots: Option<RootSet>,
    x0: ComplexScalar,
    derivs: Vec<ComplexScalar>,
}

impl IVProblem {
    /// `derivs` holds `f(x0), f'(x0), ..., f^{(m-1)}(x0)`.
    pub fn new(
        poly: MonicPolynomial,
        x0: ComplexScalar,
        derivs: Vec<ComplexScalar>,
    ) -> Result<Self> {
        if derivs.len() != poly.degree() {
            return Err(Error::DimensionMismatch {
                expected: poly.degree(),
                got: derivs.len(),
            });
        }
        if !is_finite(x0) {
            return Err(Error::NonFinite("x0"));
        }
        if !derivs.iter().all(|&d| is_finite(d)) {
            return Err(Error::NonFinite("initial derivatives"));
        }
        Ok(IVProblem {
            poly,
            roots: None,
            x0,
            derivs,
        })
    }

    pub fn from_roots(
        roots: RootSet,
        x0: ComplexScalar,
        derivs: Vec<ComplexScalar>,
    ) -> Result<Self> {
        let mut prob = Self::new(poly_from_roots(&roots), x0, derivs)?;
        prob.roots = Some(roots);
        Ok(prob)
    }

    pub fn poly(&self) -> &MonicPolynomial {
        &self.poly
    }

    pub fn roots(&self) -> Option<&RootSet> {
        self.roots.as_ref()
    }

    pub fn x0(&self) -> ComplexScalar {
        self.x0
    }

    pub fn derivs(&self) -> &[ComplexScalar] {
        &self.derivs
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    pub problem: IVProblem,
    /// Coefficients in the basis `g_1(x - x0), ..., g_m(x - x0)`.
    pub coefficients: Vec<ComplexScalar>,
}

pub fn solve_ivp(prob: &IVProblem) -> Result<Solution> {
    if prob.derivs.len() != prob.poly.degree() {
        return Err(Error::DimensionMismatch {
            expected: prob.poly.degree(),
            got: prob.derivs.len(),
        });
    }
    Ok(Solution {
        problem: prob.clone(),
        coefficients: prob.derivs.clone(),
    })
}

/// `f(x)`, evaluating the basis at `x - x0`. The roots are never shifted.
pub fn eval_solution(
    sol: &Solution,
    x: ComplexScalar,
    cfg: &ToleranceConfig,
) -> Result<ComplexScalar> {
    let shift = x - sol.problem.x0;
    let basis = match &sol.problem.roots {
        Some(roots) => eval_auto(roots, shift, cfg)?,
        None => eval_companion_exp(&sol.problem.poly, shift)?,
    };
    Ok(basis
        .values
        .iter()
        .zip(&sol.coefficients)
        .fold(ComplexScalar::zero(), |acc, (g, d)| acc + g * d))
}
