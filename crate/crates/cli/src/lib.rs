//! Command-line front end: construct family members, analyze table files,
//! and spot-check identities on counter-cyclic quasigroups.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};

pub mod commands;
pub mod report;

pub use commands::CmdError;

#[derive(Debug, Parser)]
#[command(
    name = "nafil",
    version,
    about = "Construct and analyze non-associative finite invertible loops of odd order"
)]
pub struct Cli {
    /// Suppress informational output (construct messages and the analyze
    /// summary).
    #[arg(long, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the family member of odd order n = 2m+1 and write its table.
    Construct(ConstructArgs),
    /// Parse a table file, certify it as a loop, and report its
    /// properties.
    Analyze(AnalyzeArgs),
    /// Check an inverse-free identity on the order-k counter-cyclic
    /// quasigroup.
    Qcheck(QcheckArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("size").required(true).args(["order", "m"])))]
pub struct ConstructArgs {
    /// Target order n; must be odd and at least 5.
    #[arg(long)]
    pub order: Option<usize>,

    /// Family index m (at least 2); the resulting order is 2m+1.
    #[arg(long)]
    pub m: Option<usize>,

    /// Table file holding a standard-form group of order m to use as the
    /// top-left subgroup instead of the cyclic group.
    #[arg(long, value_name = "FILE")]
    pub lm_source: Option<PathBuf>,

    /// Where to write the constructed table.
    #[arg(long, value_name = "FILE")]
    pub out: PathBuf,

    /// Also write the intermediate blocks to <OUT>.trace.
    #[arg(long)]
    pub emit_trace: bool,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Table file to analyze.
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,

    /// Write the JSON report to this file.
    #[arg(long, value_name = "FILE")]
    pub json_out: Option<PathBuf>,

    /// Also check the Jacobi identity of the commutator algebra.
    #[arg(long)]
    pub jacobi: bool,

    /// Raise the exhaustive-analysis order caps (property sweeps are
    /// capped at 256, subloop enumeration at 64) to this value.
    #[arg(long, value_name = "N")]
    pub max_order_override: Option<usize>,
}

#[derive(Debug, Args)]
pub struct QcheckArgs {
    /// Order of the counter-cyclic quasigroup; at least 3.
    #[arg(long)]
    pub k: usize,

    /// Identity to check: one of ASSOC, COMM, FLEX, LBOL, RBOL, MOUFANG
    /// (case-insensitive).
    #[arg(long)]
    pub property: String,
}

/// Runs a parsed invocation and maps the outcome to the exit-code
/// contract: 0 on success, 1 on failed input or construction, 2 on usage
/// errors.
pub fn run(cli: Cli) -> ExitCode {
    let result = match &cli.command {
        Command::Construct(args) => commands::construct_cmd(args, cli.quiet),
        Command::Analyze(args) => commands::analyze_cmd(args, cli.quiet),
        Command::Qcheck(args) => commands::qcheck_cmd(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CmdError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
