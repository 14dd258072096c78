//! Evaluators for the graceful basis `g_1(x), ..., g_m(x)`.
//!
//! All four backends compute the same entire functions; they differ in the
//! data they start from and in where they are accurate:
//!
//! | backend | input | regime |
//! |---|---|---|
//! | [`eval_partial_fraction`] | roots | well-separated roots |
//! | [`eval_companion_exp`] | coefficients | everywhere |
//! | [`eval_contour`] | roots | everywhere, cost grows with spread |
//! | [`eval_series`] | coefficients | moderate `|x| * max|a|` |
//!
//! [`eval_auto`] picks partial fractions when the roots are separated by more
//! than `sep_tol * (1 + max|a|)` and the companion exponential otherwise.

use alloc::vec::Vec;
use core::fmt;

use crate::polykernel::{poly_from_roots, RootSet};
use crate::{is_finite, ComplexScalar, Error, Result};

mod companion;
pub(crate) mod contour;
mod partial_fraction;
mod series;

pub use companion::{basis_derivatives, companion_matrix, eval_companion_exp};
pub use contour::{contour_circle, eval_contour, eval_contour_with_poly};
pub use partial_fraction::eval_partial_fraction;
pub use series::{eval_series, series_reference};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    PartialFraction,
    CompanionExp,
    Contour,
    Series,
}

impl Backend {
    pub const ALL: [Backend; 4] = [
        Backend::PartialFraction,
        Backend::CompanionExp,
        Backend::Contour,
        Backend::Series,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Backend::PartialFraction => "PartialFraction",
            Backend::CompanionExp => "CompanionExp",
            Backend::Contour => "Contour",
            Backend::Series => "Series",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-evaluation details reported by the backends.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Diagnostics {
    pub quad_nodes: Option<usize>,
    pub series_terms: Option<usize>,
    pub min_separation: Option<f64>,
}

/// `(g_1(x), ..., g_m(x))` at one point, tagged with the backend that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisValues {
    pub values: Vec<ComplexScalar>,
    pub x: ComplexScalar,
    pub backend: Backend,
    pub diagnostics: Diagnostics,
}

impl BasisValues {
    pub(crate) fn new(
        values: Vec<ComplexScalar>,
        x: ComplexScalar,
        backend: Backend,
    ) -> Result<Self> {
        if !values.iter().all(|&z| is_finite(z)) {
            return Err(Error::Overflow(backend.name()));
        }
        Ok(BasisValues {
            values,
            x,
            backend,
            diagnostics: Diagnostics::default(),
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ToleranceConfig {
    /// Relative root separation below which partial fractions are abandoned.
    pub sep_tol: f64,
    /// Relative agreement of successive trapezoidal estimates.
    pub quad_tol: f64,
    /// Series tail bound relative to the sum of term magnitudes.
    pub series_tol: f64,
    /// Node cap for the contour rule; a power of two, at least 16.
    pub max_quad_nodes: usize,
    pub max_series_terms: usize,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig {
            sep_tol: 1e-6,
            quad_tol: 1e-13,
            series_tol: 1e-16,
            max_quad_nodes: 4096,
            max_series_terms: 500,
        }
    }
}

impl ToleranceConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v > 0.0 && v.is_finite();
        if !positive(self.sep_tol) || !positive(self.quad_tol) || !positive(self.series_tol) {
            return Err(Error::InvalidInput(
                "tolerances must be positive and finite",
            ));
        }
        if self.max_quad_nodes < 16 || !self.max_quad_nodes.is_power_of_two() {
            return Err(Error::InvalidInput(
                "max_quad_nodes must be a power of two >= 16",
            ));
        }
        if self.max_series_terms == 0 {
            return Err(Error::InvalidInput("max_series_terms must be positive"));
        }
        Ok(())
    }
}

pub(crate) fn check_x(x: ComplexScalar) -> Result<()> {
    if is_finite(x) {
        Ok(())
    } else {
        Err(Error::NonFinite("x"))
    }
}

/// Partial fractions for separated roots, companion exponential otherwise.
pub fn eval_auto(roots: &RootSet, x: ComplexScalar, cfg: &ToleranceConfig) -> Result<BasisValues> {
    cfg.validate()?;
    if roots.is_well_separated(cfg.sep_tol) {
        eval_partial_fraction(roots, x)
    } else {
        let mut out = eval_companion_exp(&poly_from_roots(roots), x)?;
        out.diagnostics.min_separation = Some(roots.min_separation());
        Ok(out)
    }
}

/// Runs a specific backend on a root set.
pub fn eval_with(
    backend: Backend,
    roots: &RootSet,
    x: ComplexScalar,
    cfg: &ToleranceConfig,
) -> Result<BasisValues> {
    match backend {
        Backend::PartialFraction => eval_partial_fraction(roots, x),
        Backend::CompanionExp => eval_companion_exp(&poly_from_roots(roots), x),
        Backend::Contour => eval_contour(roots, x, cfg),
        Backend::Series => eval_series(&poly_from_roots(roots), x, cfg),
    }
}
