//! Executable checks of the basis properties.
//!
//! * [`wronskian`]: determinant of the derivative matrix, which must equal
//!   `e^{(a_1 + ... + a_m) x}` for every root configuration.
//! * [`check_graceful`]: per-sample report on both defining properties.
//!   Entirety cannot be tested directly; the surrogate is agreement of three
//!   evaluators (companion exponential, contour quadrature, Taylor series),
//!   each entire in the coefficients by construction. Independence is checked
//!   through the Wronskian against its closed form.
//! * [`stability_sweep`]: drives two roots together and records each
//!   backend's error against a double-double series reference.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::basis::{
    basis_derivatives, eval_companion_exp, eval_contour, eval_contour_with_poly,
    eval_partial_fraction, eval_series, series_reference, BasisValues, ToleranceConfig,
};
use crate::linalg::{determinant, Matrix};
use crate::polykernel::{poly_from_roots, roots_from_poly, MonicPolynomial, RootSet};
use crate::{ComplexScalar, Error, Result};

/// Agreement threshold for the entirety surrogate, `|a - b| <= tol * max(1, |a|, |b|)`.
pub const AGREEMENT_TOL: f64 = 1e-8;
/// Relative threshold for `|Wr - e^{sx}| / |e^{sx}|`.
pub const WRONSKIAN_TOL: f64 = 1e-8;
/// Term cap for the double-double reference series.
pub const REFERENCE_MAX_TERMS: usize = 2000;

pub const ENTIRETY_NOTE: &str =
    "entirety is checked by proxy: agreement of the companion-exponential, \
contour and series evaluators, each entire in the coefficients by construction";

/// Mixed absolute/relative distance, `max_i |a_i - b_i| / max(1, |a_i|, |b_i|)`.
pub fn mixed_error(a: &[ComplexScalar], b: &[ComplexScalar]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(u, v)| (u - v).norm() / 1f64.max(u.norm()).max(v.norm()))
        .fold(0.0, f64::max)
}

/// Error against a reference, `max_i |v_i - r_i| / max(1, |r_i|)`.
pub fn error_against(values: &[ComplexScalar], reference: &[ComplexScalar]) -> f64 {
    values
        .iter()
        .zip(reference)
        .map(|(v, r)| (v - r).norm() / r.norm().max(1.0))
        .fold(0.0, f64::max)
}

/// Wronskian of the basis at `x`: LU determinant of rows `0..m` of
/// [`basis_derivatives`].
pub fn wronskian(p: &MonicPolynomial, x: ComplexScalar) -> Result<ComplexScalar> {
    let d = basis_derivatives(p, x, p.degree() - 1)?;
    Ok(determinant(&d))
}

/// The value the Wronskian must take, `e^{sx}` with `s = -c_{m-1}`.
pub fn expected_wronskian(p: &MonicPolynomial, x: ComplexScalar) -> ComplexScalar {
    (p.root_sum() * x).exp()
}

/// A family of functions whose derivatives can be sampled. The graceful basis
/// is the default; tests substitute other families to confirm that the checks
/// can fail.
pub trait DerivativeSource {
    fn name(&self) -> &'static str;
    /// Matrix with entry `(k, i)` the `k`-th derivative of member `i` at `x`.
    fn derivatives(&self, x: ComplexScalar, max_order: usize) -> Result<Matrix>;
}

/// The graceful basis of `p`, through the companion exponential.
pub struct GracefulBasis<'a>(pub &'a MonicPolynomial);

impl DerivativeSource for GracefulBasis<'_> {
    fn name(&self) -> &'static str {
        "CompanionExp"
    }

    fn derivatives(&self, x: ComplexScalar, max_order: usize) -> Result<Matrix> {
        basis_derivatives(self.0, x, max_order)
    }
}

/// The canonical exponentials `e^{a_j x}`.
pub struct CanonicalExponentials<'a>(pub &'a RootSet);

impl DerivativeSource for CanonicalExponentials<'_> {
    fn name(&self) -> &'static str {
        "CanonicalExponentials"
    }

    fn derivatives(&self, x: ComplexScalar, max_order: usize) -> Result<Matrix> {
        let r = self.0.as_slice();
        let mut out = Matrix::zeros(max_order + 1, r.len());
        for (j, &a) in r.iter().enumerate() {
            let mut v = (a * x).exp();
            for k in 0..=max_order {
                out[(k, j)] = v;
                v *= a;
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SampleFailure {
    BackendFailed { backend: &'static str, error: Error },
    Disagreement { max_error: f64 },
    WronskianMismatch { relative_error: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleCheck {
    pub x: ComplexScalar,
    /// Largest pairwise [`mixed_error`] among the evaluators that succeeded.
    pub max_disagreement: Option<f64>,
    pub wronskian: Option<ComplexScalar>,
    pub expected_wronskian: ComplexScalar,
    pub wronskian_relative_error: Option<f64>,
    pub entire_pass: bool,
    pub independent_pass: bool,
    pub failures: Vec<SampleFailure>,
}

impl SampleCheck {
    pub fn passed(&self) -> bool {
        self.entire_pass && self.independent_pass
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub source: &'static str,
    pub samples: Vec<SampleCheck>,
    pub note: &'static str,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.samples.iter().all(SampleCheck::passed)
    }
}

/// Contour evaluation driven by the coefficients. Roots are located only to
/// place the circle; the integrand uses `p` itself, so root-finding error on
/// clustered roots does not leak into the values.
fn contour_for_poly(
    p: &MonicPolynomial,
    x: ComplexScalar,
    cfg: &ToleranceConfig,
) -> Result<BasisValues> {
    let roots = match roots_from_poly(p, 1e-14) {
        Ok(r) => r,
        Err(_) => {
            let bound = p.root_bound();
            RootSet::new(vec![
                ComplexScalar::new(bound, 0.0),
                ComplexScalar::new(-bound, 0.0),
            ])?
        }
    };
    eval_contour_with_poly(p, &roots, x, cfg)
}

pub fn check_graceful(
    p: &MonicPolynomial,
    sample_xs: &[ComplexScalar],
    cfg: &ToleranceConfig,
) -> Result<CheckReport> {
    check_graceful_with(p, sample_xs, cfg, &GracefulBasis(p))
}

/// [`check_graceful`] with an arbitrary family standing in for the basis.
/// Mathematical failures become report entries; only invalid input is an `Err`.
pub fn check_graceful_with(
    p: &MonicPolynomial,
    sample_xs: &[ComplexScalar],
    cfg: &ToleranceConfig,
    source: &dyn DerivativeSource,
) -> Result<CheckReport> {
    if sample_xs.is_empty() {
        return Err(Error::InvalidInput("sample set is empty"));
    }
    cfg.validate()?;
    let m = p.degree();
    let mut samples = Vec::with_capacity(sample_xs.len());
    for &x in sample_xs {
        if !crate::is_finite(x) {
            return Err(Error::NonFinite("x"));
        }
        let mut failures = Vec::new();
        let mut candidates: Vec<Vec<ComplexScalar>> = Vec::new();

        let derivs = source.derivatives(x, m - 1);
        match &derivs {
            Ok(d) => candidates.push(d.row(0).to_vec()),
            Err(e) => failures.push(SampleFailure::BackendFailed {
                backend: source.name(),
                error: e.clone(),
            }),
        }
        for (name, result) in [
            ("Contour", contour_for_poly(p, x, cfg)),
            ("Series", eval_series(p, x, cfg)),
        ] {
            match result {
                Ok(v) => candidates.push(v.values),
                Err(error) => failures.push(SampleFailure::BackendFailed {
                    backend: name,
                    error,
                }),
            }
        }
        let mut max_disagreement = None;
        for a in 0..candidates.len() {
            for b in a + 1..candidates.len() {
                let e = mixed_error(&candidates[a], &candidates[b]);
                max_disagreement = Some(max_disagreement.map_or(e, |d: f64| d.max(e)));
            }
        }
        let entire_pass =
            failures.is_empty() && max_disagreement.is_some_and(|d| d <= AGREEMENT_TOL);
        if let Some(d) = max_disagreement.filter(|&d| d > AGREEMENT_TOL) {
            failures.push(SampleFailure::Disagreement { max_error: d });
        }

        let expected = (p.root_sum() * x).exp();
        let wronskian = derivs.ok().map(|d| determinant(&d));
        let rel = wronskian.map(|w| (w - expected).norm() / expected.norm());
        let independent_pass =
            rel.is_some_and(|r| r <= WRONSKIAN_TOL) && wronskian != Some(ComplexScalar::zero());
        if let Some(r) = rel.filter(|_| !independent_pass) {
            failures.push(SampleFailure::WronskianMismatch { relative_error: r });
        }

        samples.push(SampleCheck {
            x,
            max_disagreement,
            wronskian,
            expected_wronskian: expected,
            wronskian_relative_error: rel,
            entire_pass,
            independent_pass,
            failures,
        });
    }
    Ok(CheckReport {
        source: source.name(),
        samples,
        note: ENTIRETY_NOTE,
    })
}

pub const REFERENCE_BACKEND: &str = "SeriesDoubleDouble";

/// One row of a sweep. Each error is measured with [`error_against`]; a
/// failed backend keeps its error.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRecord {
    pub separation: f64,
    pub partial_fraction_error: Result<f64>,
    pub companion_error: Result<f64>,
    pub contour_error: Result<f64>,
    pub reference_backend: &'static str,
    pub reference: Result<Vec<ComplexScalar>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepReport {
    pub roots_template: RootSet,
    pub x: ComplexScalar,
    pub eps_grid: Vec<f64>,
    pub records: Vec<SweepRecord>,
}

/// Template with its second root moved to `first + eps`.
pub fn collide(template: &RootSet, eps: f64) -> Result<RootSet> {
    if template.len() < 2 {
        return Err(Error::InvalidInput(
            "sweep template needs at least two roots",
        ));
    }
    let mut r = template.as_slice().to_vec();
    r[1] = r[0] + eps;
    RootSet::new(r)
}

/// Evaluates every backend at one separation. Never fails on numerical
/// grounds; failures land in the record.
pub fn sweep_point(
    template: &RootSet,
    eps: f64,
    x: ComplexScalar,
    cfg: &ToleranceConfig,
) -> Result<SweepRecord> {
    let roots = collide(template, eps)?;
    let reference = series_reference(&roots, x, REFERENCE_MAX_TERMS);
    let measure = |r: Result<BasisValues>| -> Result<f64> {
        let values = r?;
        match &reference {
            Ok(refv) => Ok(error_against(&values.values, refv)),
            Err(e) => Err(e.clone()),
        }
    };
    Ok(SweepRecord {
        separation: eps,
        partial_fraction_error: measure(eval_partial_fraction(&roots, x)),
        companion_error: measure(eval_companion_exp(&poly_from_roots(&roots), x)),
        contour_error: measure(eval_contour(&roots, x, cfg)),
        reference_backend: REFERENCE_BACKEND,
        reference,
    })
}

/// For each `eps` in the strictly decreasing grid, sets the second root to
/// `first + eps` and records the error of the partial-fraction, companion
/// and contour backends against the extended-precision series.
pub fn stability_sweep(
    template: &RootSet,
    eps_grid: &[f64],
    x: ComplexScalar,
    cfg: &ToleranceConfig,
) -> Result<SweepReport> {
    validate_grid(eps_grid)?;
    cfg.validate()?;
    let records = eps_grid
        .iter()
        .map(|&eps| sweep_point(template, eps, x, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport {
        roots_template: template.clone(),
        x,
        eps_grid: eps_grid.to_vec(),
        records,
    })
}

pub fn validate_grid(eps_grid: &[f64]) -> Result<()> {
    if eps_grid.is_empty() {
        return Err(Error::InvalidInput("eps grid is empty"));
    }
    if !eps_grid.iter().all(|e| e.is_finite() && *e >= 0.0) {
        return Err(Error::InvalidInput(
            "eps values must be finite and nonnegative",
        ));
    }
    if !eps_grid.windows(2).all(|w| w[0] > w[1]) {
        return Err(Error::InvalidInput("eps grid must be strictly decreasing"));
    }
    Ok(())
}
