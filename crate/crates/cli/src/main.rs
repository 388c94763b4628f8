//! `fraczeta` command-line front end.

mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;
use fraczeta::ErrorKind;

/// Exit codes: 0 success, 2 usage, 3 input, 4 capacity, 5 domain, 6 parse, 7 i/o.
fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::Input => 3,
        ErrorKind::Capacity => 4,
        ErrorKind::Domain => 5,
        ErrorKind::Parse => 6,
        ErrorKind::Io => 7,
    }
}

fn main() -> ExitCode {
    let cli = commands::Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(e.kind()))
        }
    }
}
