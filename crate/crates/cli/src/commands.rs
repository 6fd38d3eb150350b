//! The three subcommands. Errors split into usage errors (bad arguments,
//! exit 2) and failures (unreadable, unparsable, or uncertifiable input,
//! exit 1).

use std::fs;
use std::path::{Path, PathBuf};

use nafil_core::construct::{self, ConstructionParams};
use nafil_core::loops::{Loop, Quasigroup};
use nafil_core::properties::{self, PropertyId};
use nafil_core::subloops;
use nafil_core::textio;

use crate::report::{self, AnalyzeOptions, ReportEnvelope, SourceInfo};
use crate::{AnalyzeArgs, ConstructArgs, QcheckArgs};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CmdError {
    /// The invocation itself is wrong; exits 2.
    Usage(String),
    /// The invocation is fine but the work failed; exits 1.
    Failure(String),
}

type CmdResult = Result<(), CmdError>;

fn fail_at(path: &Path, err: impl std::fmt::Display) -> CmdError {
    CmdError::Failure(format!("{}: {err}", path.display()))
}

pub fn construct_cmd(args: &ConstructArgs, quiet: bool) -> CmdResult {
    let params = match (args.order, args.m) {
        (Some(n), None) => ConstructionParams::from_order(n),
        (None, Some(m)) => ConstructionParams::new(m),
        _ => unreachable!("the argument group admits exactly one of --order/--m"),
    }
    .map_err(|e| CmdError::Usage(e.to_string()))?;

    let params = match &args.lm_source {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| fail_at(path, e))?;
            let table = textio::parse_table(&text).map_err(|e| fail_at(path, e))?;
            params
                .with_subgroup(table)
                .map_err(|e| fail_at(path, e))?
        }
        None => params,
    };

    let (l, trace) =
        construct::construct(&params).map_err(|e| CmdError::Failure(e.to_string()))?;
    fs::write(&args.out, textio::write_table(l.table()))
        .map_err(|e| fail_at(&args.out, e))?;
    if !quiet {
        println!("wrote order-{} table to {}", l.n(), args.out.display());
    }
    if args.emit_trace {
        let trace_path = sibling_trace_path(&args.out);
        fs::write(&trace_path, textio::render_trace(&trace))
            .map_err(|e| fail_at(&trace_path, e))?;
        if !quiet {
            println!("wrote construction trace to {}", trace_path.display());
        }
    }
    Ok(())
}

/// The trace lands next to the table as `<out>.trace`.
pub fn sibling_trace_path(out: &Path) -> PathBuf {
    let mut os = out.as_os_str().to_owned();
    os.push(".trace");
    PathBuf::from(os)
}

pub fn analyze_cmd(args: &AnalyzeArgs, quiet: bool) -> CmdResult {
    let text = fs::read_to_string(&args.input).map_err(|e| fail_at(&args.input, e))?;
    let table = textio::parse_table(&text).map_err(|e| fail_at(&args.input, e))?;
    let bump = args.max_order_override.unwrap_or(0);
    let sweep_cap = report::MAX_EXHAUSTIVE_ORDER.max(bump);
    if table.n() > sweep_cap {
        return Err(CmdError::Usage(format!(
            "order {} exceeds the exhaustive analysis cap {sweep_cap}; raise it with --max-order-override",
            table.n()
        )));
    }
    let q = Quasigroup::certify(table).map_err(|e| fail_at(&args.input, e))?;
    let l = Loop::certify(q).map_err(|e| fail_at(&args.input, e))?;
    let opts = AnalyzeOptions {
        jacobi: args.jacobi,
        subloop_cap: subloops::DEFAULT_ORDER_CAP.max(bump),
    };
    let source = SourceInfo::External {
        path: args.input.display().to_string(),
    };
    let analysis = report::build_report(&l, source, &opts);
    if let Some(path) = &args.json_out {
        let envelope = ReportEnvelope::now(analysis.clone());
        let mut json = serde_json::to_string_pretty(&envelope)
            .expect("reports contain no non-serializable values");
        json.push('\n');
        fs::write(path, json).map_err(|e| fail_at(path, e))?;
    }
    if !quiet {
        print!("{}", report::render_summary(&analysis));
    }
    Ok(())
}

pub fn qcheck_cmd(args: &QcheckArgs) -> CmdResult {
    if args.k < 3 {
        return Err(CmdError::Usage(format!(
            "k must be at least 3, got {}",
            args.k
        )));
    }
    let property: PropertyId = args
        .property
        .parse()
        .map_err(|e| CmdError::Usage(format!("{e}; known properties: {}", property_names())))?;
    if !properties::QUASIGROUP_IDENTITIES.contains(&property) {
        return Err(CmdError::Usage(format!(
            "property {property} needs a loop with inverses; on a bare quasigroup choose one of {}",
            quasigroup_property_names()
        )));
    }
    let table = construct::counter_cyclic_transpose(args.k)
        .to_table()
        .expect("counter-cyclic blocks are square over 1..=k");
    let q = Quasigroup::certify(table).expect("counter-cyclic blocks are Latin");
    let result = properties::check_identity_on_quasigroup(&q, property)
        .expect("membership in the inverse-free set was checked");
    match &result.witness {
        None => println!("{property}: holds"),
        Some(w) => {
            let parts: Vec<String> = w.iter().map(u16::to_string).collect();
            println!("{property}: fails, witness ({})", parts.join(", "));
        }
    }
    Ok(())
}

fn property_names() -> String {
    let names: Vec<&str> = PropertyId::ALL.iter().map(|p| p.name()).collect();
    names.join(", ")
}

fn quasigroup_property_names() -> String {
    let names: Vec<&str> = properties::QUASIGROUP_IDENTITIES
        .iter()
        .map(|p| p.name())
        .collect();
    names.join(", ")
}
