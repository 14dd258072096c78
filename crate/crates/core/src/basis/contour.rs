//! Trapezoidal quadrature of `g_i(x) = (1 / 2πi) ∮ e^{tx} H_i(t) / p(t) dt`.
//!
//! `H_i` are the Horner tails of `p`, so the residue at each simple root `a_j`
//! is exactly the partial-fraction term of `g_i`. The circle is centred at the
//! centroid `c` of the roots with radius `R = max(ρ + 1, 1.5 ρ)`, `ρ` being the
//! largest distance from a root to `c`. The trapezoidal error decays like
//! `(ρ / R)^N` from the poles and like `(R |x|)^N / N!` from `e^{tx}`.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_traits::Zero;

use super::{check_x, Backend, BasisValues, ToleranceConfig};
use crate::polykernel::{horner_tails, poly_from_roots, MonicPolynomial, RootSet};
use crate::{is_finite, ComplexScalar, Error, Result};

const START_NODES: usize = 16;

/// Centre and radius of the integration circle for `roots`.
pub fn contour_circle(roots: &RootSet) -> (ComplexScalar, f64) {
    let centre = roots.centroid();
    let rho = roots
        .as_slice()
        .iter()
        .map(|a| (a - centre).norm())
        .fold(0.0, f64::max);
    (centre, (rho + 1.0).max(1.5 * rho))
}

pub fn eval_contour(
    roots: &RootSet,
    x: ComplexScalar,
    cfg: &ToleranceConfig,
) -> Result<BasisValues> {
    eval_contour_with_poly(&poly_from_roots(roots), roots, x, cfg)
}

/// Contour rule for `p`, with `circle_roots` (approximate roots of `p`) used
/// only to place the circle.
pub fn eval_contour_with_poly(
    p: &MonicPolynomial,
    circle_roots: &RootSet,
    x: ComplexScalar,
    cfg: &ToleranceConfig,
) -> Result<BasisValues> {
    check_x(x)?;
    cfg.validate()?;
    let m = p.degree();
    if circle_roots.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: circle_roots.len(),
        });
    }
    let tails = horner_tails(p);
    let (centre, radius) = contour_circle(circle_roots);

    let mut sums = vec![ComplexScalar::zero(); m];
    let mut abs_sums = vec![0.0f64; m];
    let accumulate = |sums: &mut [ComplexScalar],
                      abs_sums: &mut [f64],
                      n: usize,
                      indices: &mut dyn Iterator<Item = usize>|
     -> bool {
        for k in indices {
            let w = ComplexScalar::from_polar(radius, 2.0 * PI * k as f64 / n as f64);
            let t = centre + w;
            // dt / (2πi) = w dθ / 2π
            let common = (t * x).exp() * w / p.eval(t);
            for (i, tail) in tails.iter().enumerate() {
                let term = common * tail.eval(t);
                sums[i] += term;
                abs_sums[i] += term.norm();
            }
        }
        sums.iter().all(|&s| is_finite(s))
    };

    let mut n = START_NODES;
    let finite = accumulate(&mut sums, &mut abs_sums, n, &mut (0..n));
    let mut previous: Vec<ComplexScalar> = sums.iter().map(|&s| s / n as f64).collect();
    if !finite {
        return Err(Error::QuadratureNotConverged {
            nodes: n,
            last: previous.clone(),
            previous,
        });
    }
    while n < cfg.max_quad_nodes {
        let finer = 2 * n;
        let finite = accumulate(&mut sums, &mut abs_sums, finer, &mut (1..finer).step_by(2));
        n = finer;
        let current: Vec<ComplexScalar> = sums.iter().map(|&s| s / n as f64).collect();
        if !finite {
            return Err(Error::QuadratureNotConverged {
                nodes: n,
                last: current,
                previous,
            });
        }
        let converged = (0..m).all(|i| {
            let diff = (current[i] - previous[i]).norm();
            let floor = 64.0 * f64::EPSILON * abs_sums[i] / n as f64;
            diff <= (cfg.quad_tol * current[i].norm()).max(floor)
        });
        if converged {
            let mut out = BasisValues::new(current, x, Backend::Contour)?;
            out.diagnostics.quad_nodes = Some(n);
            return Ok(out);
        }
        previous = current;
    }
    let last: Vec<ComplexScalar> = sums.iter().map(|&s| s / n as f64).collect();
    Err(Error::QuadratureNotConverged {
        nodes: n,
        last,
        previous,
    })
}
