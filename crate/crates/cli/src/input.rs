//! Wire formats: problem specs, complex literals and `@file` indirection.

use std::fs;

use graceful_core::{roots_from_poly, ComplexScalar, MonicPolynomial, RootSet, ToleranceConfig};
use serde::Deserialize;

use crate::CliError;

/// Step tolerance for the root finder on coefficient input.
pub const ROOT_TOL: f64 = 1e-15;

/// A complex number on the wire: `[re, im]` or a bare real.
#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(untagged)]
pub enum ComplexLit {
    Pair([f64; 2]),
    Real(f64),
}

impl From<ComplexLit> for ComplexScalar {
    fn from(lit: ComplexLit) -> Self {
        match lit {
            ComplexLit::Pair([re, im]) => ComplexScalar::new(re, im),
            ComplexLit::Real(re) => ComplexScalar::new(re, 0.0),
        }
    }
}

/// Optional overrides of [`ToleranceConfig`].
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TolerancesSpec {
    pub sep_tol: Option<f64>,
    pub quad_tol: Option<f64>,
    pub series_tol: Option<f64>,
    pub max_quad_nodes: Option<usize>,
    pub max_series_terms: Option<usize>,
}

impl TolerancesSpec {
    pub fn resolve(&self) -> Result<ToleranceConfig, CliError> {
        let d = ToleranceConfig::default();
        let cfg = ToleranceConfig {
            sep_tol: self.sep_tol.unwrap_or(d.sep_tol),
            quad_tol: self.quad_tol.unwrap_or(d.quad_tol),
            series_tol: self.series_tol.unwrap_or(d.series_tol),
            max_quad_nodes: self.max_quad_nodes.unwrap_or(d.max_quad_nodes),
            max_series_terms: self.max_series_terms.unwrap_or(d.max_series_terms),
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Problem description: exactly one of `roots` or `coeffs` (ascending, monic).
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub roots: Option<Vec<ComplexLit>>,
    pub coeffs: Option<Vec<ComplexLit>>,
    #[serde(default)]
    pub tolerances: TolerancesSpec,
}

/// Validated problem. Coefficient input keeps the exact polynomial next to
/// the roots found for it.
#[derive(Clone, Debug)]
pub enum Problem {
    Roots(RootSet),
    Coeffs {
        poly: MonicPolynomial,
        roots: RootSet,
    },
}

impl Problem {
    pub fn poly(&self) -> MonicPolynomial {
        match self {
            Problem::Roots(r) => graceful_core::poly_from_roots(r),
            Problem::Coeffs { poly, .. } => poly.clone(),
        }
    }

    pub fn roots(&self) -> &RootSet {
        match self {
            Problem::Roots(r) | Problem::Coeffs { roots: r, .. } => r,
        }
    }

    pub fn degree(&self) -> usize {
        self.roots().len()
    }
}

fn complex_list(list: Vec<ComplexLit>) -> Vec<ComplexScalar> {
    list.into_iter().map(Into::into).collect()
}

impl ProblemSpec {
    pub fn into_problem(self) -> Result<(Problem, ToleranceConfig), CliError> {
        let cfg = self.tolerances.resolve()?;
        let problem = match (self.roots, self.coeffs) {
            (Some(r), None) => Problem::Roots(RootSet::new(complex_list(r))?),
            (None, Some(c)) => {
                let poly = MonicPolynomial::new(complex_list(c))?;
                let roots = roots_from_poly(&poly, ROOT_TOL)?;
                log::debug!("roots from coefficients: {:?}", roots.as_slice());
                Problem::Coeffs { poly, roots }
            }
            (Some(_), Some(_)) => {
                return Err(CliError::input(
                    "give exactly one of roots or coeffs, not both",
                ))
            }
            (None, None) => return Err(CliError::input("problem needs roots or coeffs")),
        };
        Ok((problem, cfg))
    }
}

/// Reads `@path` arguments from disk; anything else is returned unchanged.
pub fn read_arg(arg: &str) -> Result<String, CliError> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(what: &str, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::input(format!("bad {what}: {e}")))
}

pub fn parse_complex(what: &str, text: &str) -> Result<ComplexScalar, CliError> {
    let lit: ComplexLit = parse_json(what, text.trim())?;
    let z = ComplexScalar::from(lit);
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(CliError::input(format!("{what} must be finite")));
    }
    Ok(z)
}

pub fn parse_complex_list(what: &str, text: &str) -> Result<Vec<ComplexScalar>, CliError> {
    let list: Vec<ComplexLit> = parse_json(what, text)?;
    Ok(complex_list(list))
}

/// Comma-separated list of reals, e.g. `1e-2,1e-4,0`.
pub fn parse_eps_list(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|e| CliError::input(format!("bad eps value {s:?}: {e}")))
        })
        .collect()
}

/// Builds a spec from the mutually exclusive `--spec`, `--roots` and `--coeffs`.
pub fn load_spec(
    spec: Option<&str>,
    roots: Option<&str>,
    coeffs: Option<&str>,
) -> Result<ProblemSpec, CliError> {
    match (spec, roots, coeffs) {
        (Some(s), None, None) => parse_json("spec", &read_arg(s)?),
        (None, Some(r), None) => Ok(ProblemSpec {
            roots: Some(parse_json("roots", &read_arg(r)?)?),
            coeffs: None,
            tolerances: TolerancesSpec::default(),
        }),
        (None, None, Some(c)) => Ok(ProblemSpec {
            roots: None,
            coeffs: Some(parse_json("coeffs", &read_arg(c)?)?),
            tolerances: TolerancesSpec::default(),
        }),
        (None, None, None) => Err(CliError::input(
            "one of --roots, --coeffs or --spec is required",
        )),
        _ => Err(CliError::input(
            "--roots, --coeffs and --spec are mutually exclusive",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        assert_eq!(
            parse_complex("x", "1.5").unwrap(),
            ComplexScalar::new(1.5, 0.0)
        );
        assert_eq!(
            parse_complex("x", "[1, -2]").unwrap(),
            ComplexScalar::new(1.0, -2.0)
        );
        assert!(parse_complex("x", "[1]").is_err());
        assert!(parse_complex("x", "1+2i").is_err());
    }

    #[test]
    fn spec_requires_exactly_one_source() {
        let both: ProblemSpec = parse_json("spec", r#"{"roots":[1],"coeffs":[1,1]}"#).unwrap();
        assert!(both.into_problem().unwrap_err().exit_code() == 2);
        let neither: ProblemSpec = parse_json("spec", "{}").unwrap();
        assert!(neither.into_problem().is_err());
        assert!(parse_json::<ProblemSpec>("spec", r#"{"roots":[1],"extra":0}"#).is_err());
    }

    #[test]
    fn coeffs_must_be_monic() {
        let spec: ProblemSpec = parse_json("spec", "{\"coeffs\":[[2,0],[-3,0],[2,0]]}").unwrap();
        let err = spec.into_problem().unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn tolerances_are_validated() {
        let spec: ProblemSpec = parse_json(
            "spec",
            r#"{"roots":[1],"tolerances":{"max_quad_nodes":100}}"#,
        )
        .unwrap();
        assert!(spec.into_problem().is_err());
        let spec: ProblemSpec =
            parse_json("spec", r#"{"roots":[1],"tolerances":{"quad_tol":1e-10}}"#).unwrap();
        assert_eq!(spec.into_problem().unwrap().1.quad_tol, 1e-10);
    }

    #[test]
    fn eps_list() {
        assert_eq!(
            parse_eps_list("1e-2, 1e-4,0").unwrap(),
            vec![1e-2, 1e-4, 0.0]
        );
        assert!(parse_eps_list("1e-2,,0").is_err());
    }
}
