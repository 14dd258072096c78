//! Polynomial and symmetric-function primitives shared by the backends.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_traits::{One, Zero};

use crate::{is_finite, ComplexScalar, Error, Result};
#[allow(unused_imports)]
use num_traits::Float;

/// The characteristic roots of the operator, as a multiset.
///
/// Storage order carries no meaning; every consumer is expected to be
/// invariant under permutation of the entries.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    roots: Vec<ComplexScalar>,
}

impl RootSet {
    pub fn new(roots: Vec<ComplexScalar>) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::EmptyRoots);
        }
        if !roots.iter().all(|&z| is_finite(z)) {
            return Err(Error::NonFinite("roots"));
        }
        Ok(RootSet { roots })
    }

    pub fn from_real(roots: &[f64]) -> Result<Self> {
        Self::new(roots.iter().map(|&r| ComplexScalar::new(r, 0.0)).collect())
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    /// Always false; a root set holds at least one root.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[ComplexScalar] {
        &self.roots
    }

    pub fn max_abs(&self) -> f64 {
        self.roots.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Smallest pairwise distance; `+inf` for a single root.
    pub fn min_separation(&self) -> f64 {
        let mut best = f64::INFINITY;
        for (j, a) in self.roots.iter().enumerate() {
            for b in &self.roots[j + 1..] {
                best = best.min((a - b).norm());
            }
        }
        best
    }

    /// True when the roots are separated by more than `sep_tol * (1 + max|a|)`.
    pub fn is_well_separated(&self, sep_tol: f64) -> bool {
        self.min_separation() > sep_tol * (1.0 + self.max_abs())
    }

    pub fn centroid(&self) -> ComplexScalar {
        self.roots.iter().sum::<ComplexScalar>() / self.roots.len() as f64
    }

    /// Sum of the roots, the trace of the companion matrix.
    pub fn sum(&self) -> ComplexScalar {
        self.roots.iter().sum()
    }

    /// Copy of the list with entry `j` removed.
    pub fn without(&self, j: usize) -> Vec<ComplexScalar> {
        self.roots
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != j)
            .map(|(_, &z)| z)
            .collect()
    }
}

/// Monic polynomial `c_0 + c_1 t + ... + c_{m-1} t^{m-1} + t^m`, ascending storage.
#[derive(Clone, Debug, PartialEq)]
pub struct MonicPolynomial {
    coeffs: Vec<ComplexScalar>,
}

impl MonicPolynomial {
    /// Validates `coeffs` (ascending degree). The leading entry must be exactly one.
    pub fn new(coeffs: Vec<ComplexScalar>) -> Result<Self> {
        if coeffs.len() < 2 || *coeffs.last().unwrap() != ComplexScalar::one() {
            return Err(Error::NotMonic);
        }
        if !coeffs.iter().all(|&z| is_finite(z)) {
            return Err(Error::NonFinite("coefficients"));
        }
        Ok(MonicPolynomial { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&r| ComplexScalar::new(r, 0.0)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ComplexScalar] {
        &self.coeffs
    }

    pub fn eval(&self, t: ComplexScalar) -> ComplexScalar {
        horner(&self.coeffs, t)
    }

    /// `p(t)` and `p'(t)` in one Horner pass.
    pub fn eval_with_derivative(&self, t: ComplexScalar) -> (ComplexScalar, ComplexScalar) {
        let mut p = ComplexScalar::zero();
        let mut dp = ComplexScalar::zero();
        for &c in self.coeffs.iter().rev() {
            dp = dp * t + p;
            p = p * t + c;
        }
        (p, dp)
    }

    /// Sum of the roots, `-c_{m-1}`.
    pub fn root_sum(&self) -> ComplexScalar {
        -self.coeffs[self.degree() - 1]
    }

    /// Upper bound on the modulus of every root: the smaller of the Cauchy
    /// and Fujiwara bounds.
    pub fn root_bound(&self) -> f64 {
        let m = self.degree();
        let cauchy = 1.0
            + self.coeffs[..m]
                .iter()
                .map(|c| c.norm())
                .fold(0.0, f64::max);
        let fujiwara = 2.0
            * (0..m)
                .map(|k| {
                    let mut a = self.coeffs[k].norm();
                    if k == 0 {
                        a *= 0.5;
                    }
                    a.powf(1.0 / (m - k) as f64)
                })
                .fold(0.0, f64::max);
        cauchy.min(fujiwara)
    }
}

/// Plain polynomial with ascending coefficients. Used for the tails `H_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    pub coeffs: Vec<ComplexScalar>,
}

impl Polynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, t: ComplexScalar) -> ComplexScalar {
        horner(&self.coeffs, t)
    }
}

fn horner(coeffs: &[ComplexScalar], t: ComplexScalar) -> ComplexScalar {
    coeffs
        .iter()
        .rev()
        .fold(ComplexScalar::zero(), |acc, &c| acc * t + c)
}

/// Elementary symmetric polynomial `S_d` of `vals`.
///
/// Expands `prod (1 + a_k z)` one factor at a time, keeping only the first
/// `d + 1` coefficients. `S_0 = 1` and `S_d = 0` for `d > vals.len()`.
pub fn elementary_symmetric(vals: &[ComplexScalar], d: usize) -> ComplexScalar {
    if d > vals.len() {
        return ComplexScalar::zero();
    }
    let mut e = vec![ComplexScalar::zero(); d + 1];
    e[0] = ComplexScalar::one();
    for (n, &a) in vals.iter().enumerate() {
        for k in (1..=d.min(n + 1)).rev() {
            let prev = e[k - 1];
            e[k] += a * prev;
        }
    }
    e[d]
}

/// Expands `prod (t - a_j)` by incremental multiplication.
pub fn poly_from_roots(roots: &RootSet) -> MonicPolynomial {
    let mut coeffs = vec![ComplexScalar::one()];
    for &a in roots.as_slice() {
        coeffs.push(ComplexScalar::zero());
        for k in (0..coeffs.len()).rev() {
            let lower = if k > 0 {
                coeffs[k - 1]
            } else {
                ComplexScalar::zero()
            };
            coeffs[k] = lower - a * coeffs[k];
        }
    }
    MonicPolynomial { coeffs }
}

pub const ABERTH_MAX_ITERATIONS: usize = 200;

/// All roots of `p` by Aberth-Ehrlich simultaneous iteration.
///
/// A root estimate is accepted once its correction drops below
/// `tol * (1 + max|z|)` or its residual `|p(z)|` falls under the rounding
/// bound of Horner evaluation (needed for multiple roots, which the
/// iteration only approaches to about `sqrt(eps)`). The backward error of
/// the result is therefore at the rounding level, which keeps the round
/// trip through [`poly_from_roots`] within a few ulps times the
/// coefficient norm for well-separated roots.
pub fn roots_from_poly(p: &MonicPolynomial, tol: f64) -> Result<RootSet> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidInput(
            "root-finding tolerance must be positive",
        ));
    }
    let m = p.degree();
    let c = p.coeffs();
    if m == 1 {
        return RootSet::new(vec![-c[0]]);
    }
    let radius = p.root_bound();
    if radius == 0.0 {
        return RootSet::new(vec![ComplexScalar::zero(); m]);
    }

    let mut z: Vec<ComplexScalar> = (0..m)
        .map(|k| {
            let theta = 2.0 * PI * k as f64 / m as f64 + 0.7;
            // slight radial jitter so symmetric polynomials do not stall
            let r = radius * (1.0 - 0.05 * (k as f64 / m as f64));
            ComplexScalar::from_polar(r, theta)
        })
        .collect();
    let mut done = vec![false; m];
    let abs_coeffs: Vec<f64> = c.iter().map(|a| a.norm()).collect();
    let noise = |t: ComplexScalar| -> f64 {
        let r = t.norm();
        let mag = abs_coeffs.iter().rev().fold(0.0, |acc, &a| acc * r + a);
        4.0 * (m as f64) * f64::EPSILON * mag
    };

    for _ in 0..ABERTH_MAX_ITERATIONS {
        let scale = 1.0 + z.iter().map(|w| w.norm()).fold(0.0, f64::max);
        for i in 0..m {
            if done[i] {
                continue;
            }
            let (pv, dp) = p.eval_with_derivative(z[i]);
            if pv.norm() <= noise(z[i]) {
                done[i] = true;
                continue;
            }
            let newton = if dp == ComplexScalar::zero() {
                // nudge off a critical point
                ComplexScalar::new(tol * scale, tol * scale)
            } else {
                pv / dp
            };
            let repulsion: ComplexScalar = (0..m)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = z[i] - z[j];
                    if d == ComplexScalar::zero() {
                        ComplexScalar::zero()
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let denom = ComplexScalar::one() - newton * repulsion;
            let step = if denom == ComplexScalar::zero() {
                newton
            } else {
                newton / denom
            };
            z[i] -= step;
            if step.norm() < tol * scale {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            if !z.iter().all(|&w| is_finite(w)) {
                break;
            }
            return RootSet::new(z);
        }
    }
    let residual = z.iter().map(|&w| p.eval(w).norm()).fold(0.0, f64::max);
    Err(Error::NonConvergence {
        iterations: ABERTH_MAX_ITERATIONS,
        residual,
    })
}

/// The tails `H_i(t) = sum_{k >= i} c_k t^{k-i}`, `i = 1..m`.
///
/// `H_i(a_j) = (-1)^{m-i} S_{m-i}` of the roots with `a_j` omitted, since the
/// `H_i(a)` are the coefficients of the deflated polynomial `p(t) / (t - a)`.
pub fn horner_tails(p: &MonicPolynomial) -> Vec<Polynomial> {
    let c = p.coeffs();
    (1..=p.degree())
        .map(|i| Polynomial {
            coeffs: c[i..].to_vec(),
        })
        .collect()
}
