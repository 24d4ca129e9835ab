//! `dbessel`: evaluation, cross-checking, identity suites and density tables
//! for the generalized Bessel functions of dihedral groups.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 convergence or
//! tolerance failure.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::Failure;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Eval(a) => commands::eval(a, cli.seed),
        Command::Crosscheck(a) => commands::crosscheck(a, cli.seed),
        Command::Identity(a) => commands::identity(a, cli.seed),
        Command::Density(a) => commands::density(a, cli.seed),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {f}");
            f.exit_code()
        }
    }
}

impl Failure {
    fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            Failure::Usage(_) => 2,
            Failure::Numeric(_) => 3,
            Failure::Io(_) => 1,
        })
    }
}
