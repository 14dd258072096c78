//! Command-line front end for `graceful-core`.
//!
//! Complex numbers travel as `[re, im]` pairs (a bare real is also accepted).
//! Problems are given with `--roots`, `--coeffs` (ascending and monic) or a
//! full `--spec` object; each takes inline JSON or `@path`. Exit status is 0
//! on success, 2 for bad input and 3 for numerical failure, with a JSON
//! `{error, message}` object on stderr in the latter two cases.

pub mod commands;
pub mod input;
pub mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graceful_core::Backend;

use commands::SweepFormat;
use report::ErrorJson;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] graceful_core::Error),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Core(e) if e.is_input_error() => 2,
            CliError::Core(_) => 3,
        }
    }

    pub fn to_json(&self) -> ErrorJson {
        match self {
            CliError::Input(msg) => ErrorJson {
                error: "InputError".into(),
                message: msg.clone(),
            },
            CliError::Core(e) => e.into(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "graceful",
    version,
    about = "Evaluate and verify graceful bases of linear ODEs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ProblemArgs {
    /// Characteristic roots, e.g. '[[1,0],[2,0]]' or @roots.json
    #[arg(long)]
    pub roots: Option<String>,
    /// Ascending monic coefficients c_0..c_m
    #[arg(long)]
    pub coeffs: Option<String>,
    /// Full problem object {roots|coeffs, tolerances}
    #[arg(long)]
    pub spec: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum BackendArg {
    Auto,
    Pf,
    Exp,
    Contour,
    Series,
}

impl BackendArg {
    pub fn backend(self) -> Option<Backend> {
        match self {
            BackendArg::Auto => None,
            BackendArg::Pf => Some(Backend::PartialFraction),
            BackendArg::Exp => Some(Backend::CompanionExp),
            BackendArg::Contour => Some(Backend::Contour),
            BackendArg::Series => Some(Backend::Series),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Basis values at one point, as JSON
    Eval {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, value_enum, default_value = "auto")]
        backend: BackendArg,
    },
    /// Basis values on a real grid, as CSV
    Table {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long, allow_hyphen_values = true)]
        x_min: f64,
        #[arg(long, allow_hyphen_values = true)]
        x_max: f64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "auto")]
        backend: BackendArg,
    },
    /// Gracefulness checks at seeded random points; exit 3 if any fails
    Verify {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long, default_value_t = 16)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Move the second root towards the first and record backend errors
    Sweep {
        #[command(flatten)]
        problem: ProblemArgs,
        /// Strictly decreasing separations, comma separated
        #[arg(long)]
        eps: Option<String>,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        x: String,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Solve an initial value problem and evaluate it
    Ivp {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        x0: String,
        /// f(x0), f'(x0), ..., as a JSON list
        #[arg(long)]
        derivs: String,
        /// Evaluation points, as a JSON list
        #[arg(long, default_value = "[]")]
        points: String,
    },
}

/// What a successful run prints, and its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub status: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, status: 0 }
    }
}

fn load(args: &ProblemArgs) -> Result<(input::Problem, graceful_core::ToleranceConfig), CliError> {
    input::load_spec(
        args.spec.as_deref(),
        args.roots.as_deref(),
        args.coeffs.as_deref(),
    )?
    .into_problem()
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Eval {
            problem,
            x,
            backend,
        } => {
            let (p, cfg) = load(problem)?;
            let x = input::parse_complex("x", x)?;
            commands::cmd_eval(&p, x, backend.backend(), &cfg).map(Output::ok)
        }
        Command::Table {
            problem,
            x_min,
            x_max,
            n,
            backend,
        } => {
            let (p, cfg) = load(problem)?;
            commands::cmd_table(&p, *x_min, *x_max, *n, backend.backend(), &cfg).map(Output::ok)
        }
        Command::Verify {
            problem,
            samples,
            seed,
        } => {
            let (p, cfg) = load(problem)?;
            let (stdout, passed) = commands::cmd_verify(&p, *samples, *seed, &cfg)?;
            Ok(Output {
                stdout,
                status: if passed { 0 } else { 3 },
            })
        }
        Command::Sweep {
            problem,
            eps,
            x,
            format,
        } => {
            let (p, cfg) = load(problem)?;
            let eps = match eps {
                Some(list) => input::parse_eps_list(list)?,
                None => commands::DEFAULT_EPS_GRID.to_vec(),
            };
            let x = input::parse_complex("x", x)?;
            let format = match format {
                FormatArg::Json => SweepFormat::Json,
                FormatArg::Csv => SweepFormat::Csv,
            };
            commands::cmd_sweep(&p, &eps, x, format, &cfg).map(Output::ok)
        }
        Command::Ivp {
            problem,
            x0,
            derivs,
            points,
        } => {
            let (p, cfg) = load(problem)?;
            let x0 = input::parse_complex("x0", x0)?;
            let derivs = input::parse_complex_list("derivs", &input::read_arg(derivs)?)?;
            let points = input::parse_complex_list("points", &input::read_arg(points)?)?;
            commands::cmd_ivp(&p, x0, derivs, &points, &cfg).map(Output::ok)
        }
    }
}
