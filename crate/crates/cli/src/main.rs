use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use graceful_cli::{report::ErrorJson, run, Cli};

fn fail(err: &ErrorJson, code: u8) -> ExitCode {
    eprintln!("{}", serde_json::to_string(err).expect("error json"));
    ExitCode::from(code)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("GRACEFUL_LOG", "warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = ErrorJson {
                error: "UsageError".into(),
                message: e.to_string().trim_end().to_string(),
            };
            return fail(&err, 2);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.stdout.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            if out.status != 0 {
                log::warn!("verification failed");
            }
            ExitCode::from(out.status as u8)
        }
        Err(e) => fail(&e.to_json(), e.exit_code() as u8),
    }
}
