//! Command-line runner for traffic distributions of random matrices.
//!
//! [`run`] parses arguments, applies the settings file and thread count,
//! and returns the text the binary prints. Failures become one-line JSON
//! records on stderr.
//!
//! ```
//! let out = traffic_cli::run(["traffic", "moments", "--poly", "x", "--order", "4"], None);
//! assert_eq!(out.code, 0);
//! assert!(out.stdout.ends_with("4,2,2.000000\n"));
//! ```

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod selftest;
pub mod specs;

use std::ffi::OsString;

use clap::Parser;

pub use args::Cli;
pub use commands::{Output, CSV_HEADER};
pub use config::Config;
pub use error::CliError;

fn dispatch(cli: &Cli, config: &Config) -> Result<Output, CliError> {
    use args::Command;
    match &cli.command {
        Command::Ltd(a) => commands::ltd(a, config),
        Command::Estimate(a) => commands::estimate(a, config),
        Command::Concentration(a) => commands::concentration(a, config),
        Command::Independence(a) => commands::independence(a, config),
        Command::Moments(a) => commands::moments(a, config),
        Command::Selftest(a) => commands::selftest(a, config),
    }
}

fn execute(cli: &Cli, env_threads: Option<String>) -> Result<Output, CliError> {
    let config = match &cli.config {
        Some(path) => Config::parse(
            &std::fs::read_to_string(path)
                .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?,
        )?,
        None => Config::default(),
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = config::threads(cli.threads, &config, env_threads)? {
        if t == 0 {
            return Err(CliError::usage("thread count must be positive"));
        }
        builder = builder.num_threads(t);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::input(e.to_string()))?;
    let mut out = pool.install(|| dispatch(cli, &config))?;
    if let Some(path) = &cli.out {
        std::fs::write(path, &out.stdout)?;
        out.stdout.clear();
    }
    Ok(out)
}

/// Runs the command line `args`. `env_threads` is the value of
/// `TRAFFIC_THREADS`, if set.
pub fn run<I, T>(args: I, env_threads: Option<String>) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            return Output {
                stdout: e.to_string(),
                stderr: String::new(),
                code: 0,
            };
        }
        Err(e) => {
            let message = e
                .to_string()
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ")
                .to_string();
            let err = CliError::usage(message);
            return Output {
                stdout: String::new(),
                stderr: format!("{}\n", err.record()),
                code: 64,
            };
        }
    };
    match execute(&cli, env_threads) {
        Ok(out) => out,
        Err(e) => Output {
            stdout: String::new(),
            stderr: format!("{}\n", e.record()),
            code: 1,
        },
    }
}
