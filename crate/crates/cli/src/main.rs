mod args;
mod commands;
mod config;
mod error;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Format};
use commands::Env;
use config::FileConfig;
use error::CliError;

fn run(cli: &Cli) -> Result<(), CliError> {
    let config = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let env = Env {
        format: cli.format.or(config.format).unwrap_or(Format::Table),
        precision: cli.precision.or(config.precision),
        quiet: cli.quiet,
        config: &config,
    };
    if env.precision == Some(0) {
        return Err(CliError::usage("precision must be at least 1"));
    }
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match &cli.command {
        Command::Table1 { alphas, refine } => commands::table1(&env, alphas, *refine, &mut out),
        Command::Eig {
            alpha,
            tol,
            max_brackets,
        } => commands::eig(&env, alpha, *tol, *max_brackets, &mut out),
        Command::Ml { delta, theta, z } => commands::ml(&env, *delta, *theta, *z, &mut out),
        Command::Fss {
            equation,
            alpha,
            lambda,
            interval,
            grid,
        } => commands::fss(&env, *equation, *alpha, *lambda, interval, grid, &mut out),
    }?;
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fslp: {e}");
            e.exit_code()
        }
    }
}
