//! Subcommand bodies. Each returns the text destined for stdout.

use std::fmt::Write;

use graceful_core::basis::{eval_contour_with_poly, eval_with};
use graceful_core::verify::{expected_wronskian, sweep_point, validate_grid, REFERENCE_BACKEND};
use graceful_core::{
    check_graceful, eval_auto, eval_companion_exp, eval_partial_fraction, eval_series,
    eval_solution, solve_ivp, wronskian, Backend, BasisValues, ComplexScalar, IVProblem,
    ToleranceConfig,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::input::Problem;
use crate::report::*;
use crate::CliError;

/// Radius of the disc that `verify` samples `x` from.
pub const VERIFY_RADIUS: f64 = 2.0;
/// Points of the real Wronskian grid reported by `verify`, spanning the same radius.
pub const WRONSKIAN_GRID_POINTS: usize = 9;
pub const DEFAULT_EPS_GRID: [f64; 14] = [
    1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9, 1e-10, 1e-11, 1e-12, 1e-13, 1e-14, 0.0,
];

/// Evaluates the basis. `None` selects automatically. Coefficient input goes
/// through the exact polynomial wherever the backend allows it.
pub fn evaluate(
    problem: &Problem,
    backend: Option<Backend>,
    x: ComplexScalar,
    cfg: &ToleranceConfig,
) -> graceful_core::Result<BasisValues> {
    match problem {
        Problem::Roots(roots) => match backend {
            None => eval_auto(roots, x, cfg),
            Some(b) => eval_with(b, roots, x, cfg),
        },
        Problem::Coeffs { poly, roots } => match backend {
            None if roots.is_well_separated(cfg.sep_tol) => eval_partial_fraction(roots, x),
            None => {
                cfg.validate()?;
                let mut out = eval_companion_exp(poly, x)?;
                out.diagnostics.min_separation = Some(roots.min_separation());
                Ok(out)
            }
            Some(Backend::PartialFraction) => eval_partial_fraction(roots, x),
            Some(Backend::CompanionExp) => eval_companion_exp(poly, x),
            Some(Backend::Contour) => eval_contour_with_poly(poly, roots, x, cfg),
            Some(Backend::Series) => eval_series(poly, x, cfg),
        },
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report types serialize");
    s.push('\n');
    s
}

pub fn cmd_eval(
    problem: &Problem,
    x: ComplexScalar,
    backend: Option<Backend>,
    cfg: &ToleranceConfig,
) -> Result<String, CliError> {
    let values = evaluate(problem, backend, x, cfg)?;
    log::info!("eval at {x} via {}", values.backend);
    Ok(to_json(&EvalRecord::from(&values)))
}

/// `n` equally spaced points from `x_min` to `x_max`, endpoints exact.
pub fn grid(x_min: f64, x_max: f64, n: usize) -> Result<Vec<f64>, CliError> {
    if n < 2 {
        return Err(CliError::input("--n must be at least 2"));
    }
    if !(x_min.is_finite() && x_max.is_finite() && x_min < x_max) {
        return Err(CliError::input("need finite x_min < x_max"));
    }
    let h = (x_max - x_min) / (n - 1) as f64;
    Ok((0..n)
        .map(|k| {
            if k == n - 1 {
                x_max
            } else {
                x_min + h * k as f64
            }
        })
        .collect())
}

pub fn cmd_table(
    problem: &Problem,
    x_min: f64,
    x_max: f64,
    n: usize,
    backend: Option<Backend>,
    cfg: &ToleranceConfig,
) -> Result<String, CliError> {
    let xs = grid(x_min, x_max, n)?;
    let rows = xs
        .par_iter()
        .map(|&x| evaluate(problem, backend, ComplexScalar::new(x, 0.0), cfg))
        .collect::<Vec<_>>();
    let mut out = String::from("x");
    for i in 1..=problem.degree() {
        write!(out, ",g{i}_re,g{i}_im").unwrap();
    }
    out.push_str(",backend\n");
    for (x, row) in xs.iter().zip(rows) {
        let row = row?;
        write!(out, "{x:.16e}").unwrap();
        for v in &row.values {
            write!(out, ",{:.16e},{:.16e}", v.re, v.im).unwrap();
        }
        writeln!(out, ",{}", row.backend).unwrap();
    }
    Ok(out)
}

/// Sample points for `verify`, uniform in the disc `|x| <= VERIFY_RADIUS`.
pub fn verify_samples(samples: usize, seed: u64) -> Vec<ComplexScalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let r = VERIFY_RADIUS * rng.random::<f64>().sqrt();
            let theta = rng.random_range(0.0..std::f64::consts::TAU);
            ComplexScalar::from_polar(r, theta)
        })
        .collect()
}

/// Returns the report and whether every check passed.
pub fn cmd_verify(
    problem: &Problem,
    samples: usize,
    seed: u64,
    cfg: &ToleranceConfig,
) -> Result<(String, bool), CliError> {
    if samples == 0 {
        return Err(CliError::input("--samples must be positive"));
    }
    cfg.validate()?;
    let p = problem.poly();
    let xs = verify_samples(samples, seed);
    let per_sample = xs
        .par_iter()
        .map(|&x| check_graceful(&p, &[x], cfg))
        .collect::<Result<Vec<_>, _>>()?;
    let mut report = per_sample[0].clone();
    report.samples = per_sample.into_iter().flat_map(|r| r.samples).collect();

    let wgrid = grid(-VERIFY_RADIUS, VERIFY_RADIUS, WRONSKIAN_GRID_POINTS)?
        .into_iter()
        .map(|x| {
            let z = ComplexScalar::new(x, 0.0);
            let expected = expected_wronskian(&p, z);
            match wronskian(&p, z) {
                Ok(w) => WronskianPoint {
                    x,
                    wronskian: Some(pair(w)),
                    expected: pair(expected),
                    relative_error: Some((w - expected).norm() / expected.norm()),
                    error: None,
                },
                Err(e) => WronskianPoint {
                    x,
                    wronskian: None,
                    expected: pair(expected),
                    relative_error: None,
                    error: Some((&e).into()),
                },
            }
        })
        .collect();
    let json = CheckReportJson::new(&report, seed, wgrid);
    log::info!("verify: {} samples, passed = {}", samples, json.passed);
    Ok((to_json(&json), json.passed))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepFormat {
    Json,
    Csv,
}

pub fn cmd_sweep(
    problem: &Problem,
    eps: &[f64],
    x: ComplexScalar,
    format: SweepFormat,
    cfg: &ToleranceConfig,
) -> Result<String, CliError> {
    validate_grid(eps)?;
    cfg.validate()?;
    let template = problem.roots();
    let records = eps
        .par_iter()
        .map(|&e| sweep_point(template, e, x, cfg))
        .collect::<Result<Vec<_>, _>>()?;
    let records: Vec<SweepRecordJson> = records.iter().map(Into::into).collect();
    Ok(match format {
        SweepFormat::Json => to_json(&SweepReportJson {
            roots_template: pairs(template.as_slice()),
            x: pair(x),
            reference_backend: REFERENCE_BACKEND,
            error_metric: "max_i |v_i - r_i| / max(1, |r_i|)",
            records,
        }),
        SweepFormat::Csv => {
            let mut out =
                String::from("eps,partial_fraction_error,companion_error,contour_error\n");
            for r in &records {
                writeln!(
                    out,
                    "{:.16e},{},{},{}",
                    r.separation,
                    r.partial_fraction.csv_cell(),
                    r.companion_exp.csv_cell(),
                    r.contour.csv_cell()
                )
                .unwrap();
            }
            out
        }
    })
}

pub fn cmd_ivp(
    problem: &Problem,
    x0: ComplexScalar,
    derivs: Vec<ComplexScalar>,
    points: &[ComplexScalar],
    cfg: &ToleranceConfig,
) -> Result<String, CliError> {
    let prob = match problem {
        Problem::Roots(r) => IVProblem::from_roots(r.clone(), x0, derivs)?,
        Problem::Coeffs { poly, .. } => IVProblem::new(poly.clone(), x0, derivs)?,
    };
    let sol = solve_ivp(&prob)?;
    let values = points
        .iter()
        .map(|&x| {
            Ok(IvpPoint {
                x: pair(x),
                value: pair(eval_solution(&sol, x, cfg)?),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(to_json(&IvpReport {
        x0: pair(x0),
        coefficients: pairs(&sol.coefficients),
        values,
    }))
}
