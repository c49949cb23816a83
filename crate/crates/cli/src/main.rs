mod args;
mod commands;
mod config;
mod evidence;

use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Command};

/// Outcome of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

fn run() -> anyhow::Result<Outcome> {
    let argv = config::expand_args(std::env::args_os().collect())?;
    let cli = Cli::parse_from(argv);
    match cli.command {
        Command::Gen(a) => commands::gen(a),
        Command::Verify(a) => commands::verify(a),
        Command::Spectrum(a) => commands::spectrum(a),
        Command::Check(a) => commands::check(a),
        Command::Bounds(a) => commands::bounds(a),
    }
}

/// 1 for a misused construction, 3 for a cap or feasibility guard, 2 otherwise.
fn exit_code(err: &anyhow::Error) -> u8 {
    use magic_core::Error;
    match err.chain().find_map(|e| e.downcast_ref::<Error>()) {
        Some(Error::Resource { .. } | Error::Feasibility(_)) => 3,
        Some(Error::ConstructionMisuse(_)) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
