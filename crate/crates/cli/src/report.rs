//! JSON shapes written to stdout.

use graceful_core::verify::{SampleCheck, SampleFailure, SweepRecord};
use graceful_core::{BasisValues, CheckReport, ComplexScalar, Diagnostics, Error};
use serde::Serialize;

pub type Pair = [f64; 2];

pub fn pair(z: ComplexScalar) -> Pair {
    [z.re, z.im]
}

pub fn pairs(zs: &[ComplexScalar]) -> Vec<Pair> {
    zs.iter().copied().map(pair).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ErrorJson {
    pub error: String,
    pub message: String,
}

impl From<&Error> for ErrorJson {
    fn from(e: &Error) -> Self {
        ErrorJson {
            error: e.kind().to_string(),
            message: e.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiagnosticsJson {
    pub quad_nodes: Option<usize>,
    pub series_terms: Option<usize>,
    pub min_separation: Option<f64>,
}

impl From<&Diagnostics> for DiagnosticsJson {
    fn from(d: &Diagnostics) -> Self {
        DiagnosticsJson {
            quad_nodes: d.quad_nodes,
            series_terms: d.series_terms,
            min_separation: d.min_separation,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EvalRecord {
    pub x: Pair,
    pub backend_used: &'static str,
    pub values: Vec<Pair>,
    pub diagnostics: DiagnosticsJson,
}

impl From<&BasisValues> for EvalRecord {
    fn from(b: &BasisValues) -> Self {
        EvalRecord {
            x: pair(b.x),
            backend_used: b.backend.name(),
            values: pairs(&b.values),
            diagnostics: (&b.diagnostics).into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum FailureJson {
    BackendFailed {
        backend: &'static str,
        error: ErrorJson,
    },
    Disagreement {
        max_error: f64,
    },
    WronskianMismatch {
        relative_error: f64,
    },
}

impl From<&SampleFailure> for FailureJson {
    fn from(f: &SampleFailure) -> Self {
        match f {
            SampleFailure::BackendFailed { backend, error } => FailureJson::BackendFailed {
                backend,
                error: error.into(),
            },
            SampleFailure::Disagreement { max_error } => FailureJson::Disagreement {
                max_error: *max_error,
            },
            SampleFailure::WronskianMismatch { relative_error } => FailureJson::WronskianMismatch {
                relative_error: *relative_error,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleJson {
    pub x: Pair,
    pub passed: bool,
    pub entire_pass: bool,
    pub independent_pass: bool,
    pub max_disagreement: Option<f64>,
    pub wronskian: Option<Pair>,
    pub expected_wronskian: Pair,
    pub wronskian_relative_error: Option<f64>,
    pub failures: Vec<FailureJson>,
}

impl From<&SampleCheck> for SampleJson {
    fn from(s: &SampleCheck) -> Self {
        SampleJson {
            x: pair(s.x),
            passed: s.passed(),
            entire_pass: s.entire_pass,
            independent_pass: s.independent_pass,
            max_disagreement: s.max_disagreement,
            wronskian: s.wronskian.map(pair),
            expected_wronskian: pair(s.expected_wronskian),
            wronskian_relative_error: s.wronskian_relative_error,
            failures: s.failures.iter().map(Into::into).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WronskianPoint {
    pub x: f64,
    pub wronskian: Option<Pair>,
    pub expected: Pair,
    pub relative_error: Option<f64>,
    pub error: Option<ErrorJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReportJson {
    pub passed: bool,
    pub source: &'static str,
    pub seed: u64,
    pub note: &'static str,
    pub samples: Vec<SampleJson>,
    pub wronskian_grid: Vec<WronskianPoint>,
}

impl CheckReportJson {
    pub fn new(report: &CheckReport, seed: u64, wronskian_grid: Vec<WronskianPoint>) -> Self {
        let grid_ok = wronskian_grid.iter().all(|w| {
            w.relative_error
                .is_some_and(|e| e <= graceful_core::verify::WRONSKIAN_TOL)
        });
        CheckReportJson {
            passed: report.all_passed() && grid_ok,
            source: report.source,
            seed,
            note: report.note,
            samples: report.samples.iter().map(Into::into).collect(),
            wronskian_grid,
        }
    }
}

/// Either the measured error or why the backend could not produce one.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Error(f64),
    Failure(ErrorJson),
}

impl From<&graceful_core::Result<f64>> for Outcome {
    fn from(r: &graceful_core::Result<f64>) -> Self {
        match r {
            Ok(e) => Outcome::Error(*e),
            Err(e) => Outcome::Failure(e.into()),
        }
    }
}

impl Outcome {
    pub fn csv_cell(&self) -> String {
        match self {
            Outcome::Error(e) => format!("{e:.16e}"),
            Outcome::Failure(f) => f.error.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRecordJson {
    pub separation: f64,
    pub partial_fraction: Outcome,
    pub companion_exp: Outcome,
    pub contour: Outcome,
    pub reference: Reference,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reference {
    Values(Vec<Pair>),
    Failure(ErrorJson),
}

impl From<&SweepRecord> for SweepRecordJson {
    fn from(r: &SweepRecord) -> Self {
        SweepRecordJson {
            separation: r.separation,
            partial_fraction: (&r.partial_fraction_error).into(),
            companion_exp: (&r.companion_error).into(),
            contour: (&r.contour_error).into(),
            reference: match &r.reference {
                Ok(v) => Reference::Values(pairs(v)),
                Err(e) => Reference::Failure(e.into()),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReportJson {
    pub roots_template: Vec<Pair>,
    pub x: Pair,
    pub reference_backend: &'static str,
    pub error_metric: &'static str,
    pub records: Vec<SweepRecordJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IvpPoint {
    pub x: Pair,
    pub value: Pair,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IvpReport {
    pub x0: Pair,
    pub coefficients: Vec<Pair>,
    pub values: Vec<IvpPoint>,
}
