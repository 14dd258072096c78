use alloc::vec::Vec;

use num_traits::Zero;

use super::{check_x, Backend, BasisValues};
use crate::polykernel::RootSet;
use crate::vandermonde::vandermonde_inverse;
use crate::{ComplexScalar, Result};

/// `g_i(x) = sum_j [V^{-1}]_{i,j} e^{a_j x}` with the closed-form inverse.
///
/// Only exactly repeated roots are rejected; near-collisions are accepted
/// and lose roughly `log10(1 / separation)` digits to cancellation.
pub fn eval_partial_fraction(roots: &RootSet, x: ComplexScalar) -> Result<BasisValues> {
    check_x(x)?;
    let inv = vandermonde_inverse(roots, 0.0)?;
    let exps: Vec<ComplexScalar> = roots.as_slice().iter().map(|&a| (a * x).exp()).collect();
    let values = (0..roots.len())
        .map(|i| {
            inv.row(i)
                .iter()
                .zip(&exps)
                .fold(ComplexScalar::zero(), |acc, (&w, &e)| acc + w * e)
        })
        .collect();
    let mut out = BasisValues::new(values, x, Backend::PartialFraction)?;
    out.diagnostics.min_separation = Some(roots.min_separation());
    Ok(out)
}
