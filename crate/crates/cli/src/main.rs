use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    nafil_cli::run(nafil_cli::Cli::parse())
}
