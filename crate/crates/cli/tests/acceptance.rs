//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Tolerances are pinned below.

use std::process::Command;
use std::time::Instant;

use graceful_core::basis::{eval_with, Backend};
use graceful_core::linalg::Lu;
use graceful_core::verify::{expected_wronskian, mixed_error, sweep_point};
use graceful_core::{
    basis_derivatives, elementary_symmetric, eval_auto, eval_partial_fraction, eval_series,
    poly_from_roots, vandermonde_inverse, vandermonde_matrix, wronskian, ComplexScalar, Error,
    Matrix, MonicPolynomial, RootSet, ToleranceConfig,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EXAMPLE_TOL: f64 = 1e-12;
const MONOMIAL_TOL: f64 = 1e-11;
const WRONSKIAN_TOL: f64 = 1e-8;
const AGREEMENT_TOL: f64 = 1e-8;
const COMPANION_SWEEP_TOL: f64 = 1e-9;
const PF_DEGRADED_ABOVE: f64 = 1e-4;
const PF_DEGRADED_BY_EPS: f64 = 1e-12;
const IDENTITY_TOL: f64 = 1e-9;
const RESIDUAL_TOL: f64 = 1e-8;
const VANDERMONDE_TOL: f64 = 1e-8;
const ROUND_TRIP_TOL: f64 = 1e-9;

const CAUCHY_RADIUS: f64 = 1.0;
const CAUCHY_NODES: usize = 64;

type C = ComplexScalar;

fn c(re: f64) -> C {
    C::new(re, 0.0)
}

fn in_disc(rng: &mut ChaCha8Rng, radius: f64) -> C {
    let r = radius * rng.random::<f64>().sqrt();
    C::from_polar(r, rng.random_range(0.0..std::f64::consts::TAU))
}

fn separated(rng: &mut ChaCha8Rng, m: usize, radius: f64, min_sep: f64) -> RootSet {
    loop {
        let set = RootSet::new((0..m).map(|_| in_disc(rng, radius)).collect()).unwrap();
        if set.min_separation() >= min_sep {
            return set;
        }
    }
}

/// Random roots; one in four configurations is fully confluent and others
/// contain a double or triple root.
fn with_collisions(rng: &mut ChaCha8Rng, m: usize, radius: f64, case: usize) -> RootSet {
    let mut r: Vec<C> = (0..m).map(|_| in_disc(rng, radius)).collect();
    match case % 4 {
        0 => {
            let a = r[0];
            r.iter_mut().for_each(|v| *v = a);
        }
        1 if m >= 2 => r[1] = r[0],
        2 if m >= 3 => {
            r[1] = r[0];
            r[2] = r[0];
        }
        _ => {}
    }
    RootSet::new(r).unwrap()
}

fn rel(v: C, r: C) -> f64 {
    if r == c(0.0) {
        v.norm()
    } else {
        (v - r).norm() / r.norm()
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn m2_example() -> Outcome {
    // closed forms evaluated to 40 digits
    let table: [(f64, f64, f64); 5] = [
        (0.0, 1.0, 0.0),
        (0.5, 0.5791607129412110583370141, 1.069560557758917088511637),
        (
            -0.5,
            0.8451818782538245256120753,
            -0.2386512185411911020082758,
        ),
        (1.0, -1.952492442012559756509853, 4.67077427047160499187014),
        (
            -1.0,
            0.600423599106271951297048,
            -0.2325441579348296297015243,
        ),
    ];
    let roots = RootSet::from_real(&[1.0, 2.0]).unwrap();
    let cfg = ToleranceConfig::default();
    let mut worst = 0f64;
    for (x, g1, g2) in table {
        let v = eval_auto(&roots, c(x), &cfg).unwrap().values;
        worst = worst.max(rel(v[0], c(g1))).max(rel(v[1], c(g2)));
    }
    outcome(
        worst <= EXAMPLE_TOL,
        format!("max relative error {worst:.2e} (tol {EXAMPLE_TOL:e})"),
    )
}

fn m3_example() -> Outcome {
    let table: [(f64, [f64; 3]); 2] = [
        (0.0, [1.0, 0.0, 0.0]),
        (
            1.0,
            [
                10.67002268907756653253667,
                -14.26299842616358444169964,
                6.311257565545063144523259,
            ],
        ),
    ];
    let roots = RootSet::from_real(&[1.0, 2.0, 4.0]).unwrap();
    let cfg = ToleranceConfig::default();
    let mut worst = 0f64;
    for (x, want) in table {
        let v = eval_auto(&roots, c(x), &cfg).unwrap().values;
        for i in 0..3 {
            worst = worst.max(rel(v[i], c(want[i])));
        }
    }
    outcome(
        worst <= EXAMPLE_TOL,
        format!("max relative error {worst:.2e} (tol {EXAMPLE_TOL:e})"),
    )
}

fn monomial_limit() -> Outcome {
    let cfg = ToleranceConfig::default();
    let mut worst = 0f64;
    for m in 1..=8 {
        let roots = RootSet::from_real(&vec![0.0; m]).unwrap();
        for k in 0..10 {
            let x = -3.0 + 6.0 * k as f64 / 9.0;
            let v = eval_auto(&roots, c(x), &cfg).unwrap().values;
            let mut want = 1.0;
            for (i, g) in v.iter().enumerate() {
                worst = worst.max(rel(*g, c(want)));
                want *= x / (i + 1) as f64;
            }
        }
    }
    outcome(
        worst <= MONOMIAL_TOL,
        format!("max relative error {worst:.2e} (tol {MONOMIAL_TOL:e})"),
    )
}

fn wronskian_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst = 0f64;
    let mut confluent = 0;
    for case in 0..100 {
        let m = 1 + case % 6;
        let roots = with_collisions(&mut rng, m, 2.0, case / 6);
        if roots.min_separation() == 0.0 {
            confluent += 1;
        }
        let p = poly_from_roots(&roots);
        let x = in_disc(&mut rng, 2.0);
        let e = expected_wronskian(&p, x);
        let err = match wronskian(&p, x) {
            Ok(w) => (w - e).norm() / e.norm(),
            Err(_) => f64::INFINITY,
        };
        worst = worst.max(err);
    }
    outcome(
        worst <= WRONSKIAN_TOL,
        format!("100 configurations ({confluent} confluent), max relative error {worst:.2e} (tol {WRONSKIAN_TOL:e})"),
    )
}

fn cross_agreement() -> Outcome {
    let cfg = ToleranceConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = 0f64;
    let mut failures = 0;
    for case in 0..200 {
        let m = 1 + case % 8;
        let roots = separated(&mut rng, m, 3.0, 0.05);
        let mut xs: Vec<C> = (0..13).map(|k| c(-3.0 + 0.5 * k as f64)).collect();
        xs.extend((0..7).map(|_| in_disc(&mut rng, 3.0)));
        for &x in &xs {
            let results: Vec<_> = Backend::ALL
                .iter()
                .map(|&b| eval_with(b, &roots, x, &cfg))
                .collect();
            if results.iter().any(Result::is_err) {
                failures += 1;
                continue;
            }
            let values: Vec<_> = results.into_iter().map(|r| r.unwrap().values).collect();
            for a in 0..values.len() {
                for b in a + 1..values.len() {
                    worst = worst.max(mixed_error(&values[a], &values[b]));
                }
            }
        }
    }
    outcome(
        failures == 0 && worst <= AGREEMENT_TOL,
        format!("200 configurations x 20 points, {failures} backend failures, max pairwise mixed error {worst:.2e} (tol {AGREEMENT_TOL:e})"),
    )
}

fn collision_sweep() -> Outcome {
    let cfg = ToleranceConfig::default();
    let template = RootSet::from_real(&[1.0, 1.0]).unwrap();
    let x = c(1.0);
    let grid = [
        1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9, 1e-10, 1e-11, 1e-12, 1e-13, 1e-14, 0.0,
    ];
    let mut companion_worst = 0f64;
    let mut pf_by_threshold = 0f64;
    let mut pf_confluent_error = false;
    let mut column = Vec::new();
    for eps in grid {
        let rec = sweep_point(&template, eps, x, &cfg).unwrap();
        companion_worst =
            companion_worst.max(*rec.companion_error.as_ref().unwrap_or(&f64::INFINITY));
        match &rec.partial_fraction_error {
            Ok(e) => {
                if eps >= PF_DEGRADED_BY_EPS {
                    pf_by_threshold = pf_by_threshold.max(*e);
                }
                column.push(format!("{eps:.0e}:{e:.1e}"));
            }
            Err(Error::ConfluentRoots { .. }) if eps == 0.0 => pf_confluent_error = true,
            Err(e) => column.push(format!("{eps:.0e}:{}", e.kind())),
        }
    }
    let pass = companion_worst <= COMPANION_SWEEP_TOL
        && pf_by_threshold > PF_DEGRADED_ABOVE
        && pf_confluent_error;
    outcome(
        pass,
        format!(
            "x = 1: companion max error {companion_worst:.2e} (tol {COMPANION_SWEEP_TOL:e}); \
             partial-fraction max error for eps >= {PF_DEGRADED_BY_EPS:e} is {pf_by_threshold:.2e} (needs > {PF_DEGRADED_ABOVE:e}); \
             ConfluentRoots at eps = 0: {pf_confluent_error}; partial-fraction column [{}]",
            column.join(", ")
        ),
    )
}

fn derivative_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0f64;
    let mut worst_cauchy = 0f64;
    for m in 1..=8 {
        for case in 0..4 {
            let roots = with_collisions(&mut rng, m, 3.0, case);
            let p = poly_from_roots(&roots);
            let d = basis_derivatives(&p, c(0.0), m - 1).unwrap();
            worst = worst.max(d.max_abs_diff(&Matrix::identity(m)));
            let cd = cauchy_derivatives(&p, c(0.0), m - 1);
            for (k, row) in cd.iter().enumerate() {
                for (i, v) in row.iter().enumerate() {
                    let want = if i == k { c(1.0) } else { c(0.0) };
                    worst_cauchy = worst_cauchy.max((v - want).norm());
                }
            }
        }
    }
    outcome(
        worst <= IDENTITY_TOL && worst_cauchy <= IDENTITY_TOL,
        format!("m = 1..8, max |D - I| {worst:.2e} from derivative rows, {worst_cauchy:.2e} from Cauchy integrals of the series backend (tol {IDENTITY_TOL:e})"),
    )
}

/// Derivatives `0..=order` of every basis function at `x` from Cauchy's
/// integral formula on a circle of radius `CAUCHY_RADIUS`, sampling the series
/// backend. Independent of the companion-matrix derivative rows.
fn cauchy_derivatives(p: &MonicPolynomial, x: C, order: usize) -> Vec<Vec<C>> {
    let cfg = ToleranceConfig::default();
    let m = p.degree();
    let mut d = vec![vec![c(0.0); m]; order + 1];
    for n in 0..CAUCHY_NODES {
        let w = C::from_polar(1.0, std::f64::consts::TAU * n as f64 / CAUCHY_NODES as f64);
        let g = eval_series(p, x + w * CAUCHY_RADIUS, &cfg).unwrap().values;
        let mut factor = c(1.0);
        for row in d.iter_mut() {
            for (acc, gi) in row.iter_mut().zip(&g) {
                *acc += gi * factor;
            }
            factor /= w * CAUCHY_RADIUS;
        }
    }
    let mut fact = 1.0;
    for (k, row) in d.iter_mut().enumerate() {
        if k > 0 {
            fact *= k as f64;
        }
        for v in row.iter_mut() {
            *v *= fact / CAUCHY_NODES as f64;
        }
    }
    d
}

fn ode_residual() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst = 0f64;
    let mut confluent = 0;
    for case in 0..50 {
        let m = 1 + case % 8;
        let roots = with_collisions(&mut rng, m, 2.0, case / 8);
        if roots.min_separation() == 0.0 {
            confluent += 1;
        }
        let p = poly_from_roots(&roots);
        let x = in_disc(&mut rng, 2.0);
        let d = cauchy_derivatives(&p, x, m);
        for i in 0..m {
            let terms: Vec<C> = (0..=m).map(|k| p.coeffs()[k] * d[k][i]).collect();
            let largest = terms.iter().map(|t| t.norm()).fold(0.0, f64::max);
            let residual: C = terms.iter().sum();
            worst = worst.max(residual.norm() / largest);
        }
    }
    outcome(
        worst <= RESIDUAL_TOL,
        format!("50 configurations ({confluent} confluent), derivatives by Cauchy integrals of the series backend, max relative residual {worst:.2e} (tol {RESIDUAL_TOL:e})"),
    )
}

fn vandermonde() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut worst = 0f64;
    let mut exact = true;
    for case in 0..80 {
        let m = 1 + case % 8;
        let roots = separated(&mut rng, m, 2.0, 0.1);
        let inv = vandermonde_inverse(&roots, 0.0).unwrap();
        let oracle = Lu::factor(&vandermonde_matrix(&roots))
            .solve(&Matrix::identity(m))
            .unwrap();
        worst = worst.max(inv.max_abs_diff(&oracle));

        // the same elementary-symmetric expression gives the partial-fraction weights bit for bit
        let r = roots.as_slice();
        for j in 0..m {
            let denom = (0..m)
                .filter(|&k| k != j)
                .fold(c(1.0), |acc, k| acc * (r[j] - r[k]));
            let rest = roots.without(j);
            for i in 1..=m {
                let sign = if (m - i) % 2 == 0 { 1.0 } else { -1.0 };
                exact &= inv[(i - 1, j)] == elementary_symmetric(&rest, m - i) * sign / denom;
            }
        }
        let x = in_disc(&mut rng, 2.0);
        let pf = eval_partial_fraction(&roots, x).unwrap().values;
        for i in 0..m {
            let direct = (0..m).fold(c(0.0), |acc, j| acc + inv[(i, j)] * (r[j] * x).exp());
            exact &= pf[i] == direct;
        }
    }
    outcome(
        worst <= VANDERMONDE_TOL && exact,
        format!("80 configurations, max |inverse - LU oracle| {worst:.2e} (tol {VANDERMONDE_TOL:e}); closed-form rows match partial-fraction weights exactly: {exact}"),
    )
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_graceful"))
        .args(args)
        .output()
        .expect("run graceful");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn eval_values(args: &[&str]) -> Vec<C> {
    let (code, stdout) = run_cli(args);
    assert_eq!(code, 0, "graceful {args:?} failed");
    let v: serde_json::Value = serde_json::from_slice(&stdout).unwrap();
    v["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| C::new(p[0].as_f64().unwrap(), p[1].as_f64().unwrap()))
        .collect()
}

fn to_wire(zs: &[C]) -> String {
    let items: Vec<String> = zs
        .iter()
        .map(|z| format!("[{:?},{:?}]", z.re, z.im))
        .collect();
    format!("[{}]", items.join(","))
}

fn cli_determinism_and_round_trip() -> Outcome {
    let invocations: [&[&str]; 4] = [
        &[
            "eval",
            "--roots",
            "[[1,0],[2,0],[-0.5,1.5]]",
            "--x",
            "[0.7,-0.3]",
        ],
        &[
            "table",
            "--roots",
            "[[1,0],[1,0],[0,2]]",
            "--x-min",
            "-2",
            "--x-max",
            "2",
            "--n",
            "41",
        ],
        &[
            "verify",
            "--roots",
            "[[1,0],[2,0],[4,0]]",
            "--seed",
            "7",
            "--samples",
            "12",
        ],
        &["sweep", "--roots", "[[1,0],[1,0]]", "--format", "csv"],
    ];
    let mut identical = true;
    for args in invocations {
        let a = run_cli(args);
        let b = run_cli(args);
        identical &= a == b && a.0 == 0 && !a.1.is_empty();
    }

    let root_sets = [
        RootSet::from_real(&[1.0, 2.0]).unwrap(),
        RootSet::from_real(&[1.0, 2.0, 4.0]).unwrap(),
        RootSet::new(vec![C::new(0.5, 1.0), C::new(0.5, -1.0), c(-2.0), c(1.5)]).unwrap(),
        RootSet::from_real(&[-1.0, 0.3, 2.5, -2.2, 1.1]).unwrap(),
        RootSet::from_real(&[1.0, 1.0]).unwrap(),
    ];
    let mut worst = 0f64;
    for roots in &root_sets {
        let roots_arg = to_wire(roots.as_slice());
        let coeffs_arg = to_wire(poly_from_roots(roots).coeffs());
        for x in ["-1.5", "0.5", "[1,1]", "2"] {
            let a = eval_values(&["eval", "--roots", &roots_arg, "--x", x]);
            let b = eval_values(&["eval", "--coeffs", &coeffs_arg, "--x", x]);
            worst = worst.max(mixed_error(&a, &b));
        }
    }
    outcome(
        identical && worst <= ROUND_TRIP_TOL,
        format!("repeated runs byte-identical: {identical}; roots vs coeffs max mixed error {worst:.2e} (tol {ROUND_TRIP_TOL:e})"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("m = 2 example fidelity", m2_example),
        ("m = 3 example fidelity", m3_example),
        ("monomial limit", monomial_limit),
        ("Wronskian identity", wronskian_identity),
        ("backend cross-agreement", cross_agreement),
        ("gracefulness under collision", collision_sweep),
        ("canonical IVP structure", derivative_identity),
        ("ODE residual", ode_residual),
        ("Vandermonde inverse", vandermonde),
        (
            "CLI determinism and round trip",
            cli_determinism_and_round_trip,
        ),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        failed += usize::from(!o.pass);
        println!(
            "{} [{}] {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            n + 1,
            o.detail
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1}s",
        criteria.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
