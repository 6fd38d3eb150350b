//! The JSON analysis report and its human-readable summary.
//!
//! The report body is deterministic for a given input: maps are ordered,
//! witnesses are the deterministic first ones, and the only varying field
//! is the timestamp, which lives on the envelope rather than the body.

use std::collections::BTreeMap;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use nafil_core::algebra::{self, JacobiCheck};
use nafil_core::latin::Label;
use nafil_core::loops::Loop;
use nafil_core::properties::{self, PropertyId, PropertyOutcome};
use nafil_core::subloops;

/// Largest order `analyze` sweeps without an explicit override: n^3
/// exhaustive checks stay interactive up to here.
pub const MAX_EXHAUSTIVE_ORDER: usize = 256;

pub const FORMAT_VERSION: &str = "1";

/// Terms the analysis deliberately leaves alone, with the reason.
pub fn not_evaluated() -> BTreeMap<String, String> {
    ["A_m", "RIF"]
        .into_iter()
        .map(|t| (t.to_string(), "not evaluated (undefined in source)".to_string()))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub generated_at_unix: u64,
    pub report: AnalysisReport,
}

impl ReportEnvelope {
    pub fn now(report: AnalysisReport) -> Self {
        let generated_at_unix = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        ReportEnvelope {
            generated_at_unix,
            report,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SourceInfo {
    /// Built in memory by the family construction.
    Constructed { m: usize },
    /// Parsed from a table file.
    External { path: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certifications {
    pub latin: bool,
    pub standard_form: bool,
    #[serde(rename = "loop")]
    pub is_loop: bool,
    pub invertible: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub format_version: String,
    pub order: usize,
    pub source: SourceInfo,
    pub certifications: Certifications,
    pub identity_element: Label,
    pub properties: BTreeMap<PropertyId, PropertyOutcome>,
    pub not_evaluated: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup_census: Option<BTreeMap<usize, usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nonassociative_subloop_orders: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simple: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lagrange_violations: Option<Vec<(usize, usize)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subloop_analysis_skipped: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jacobi: Option<JacobiCheck>,
}

#[derive(Debug, Clone, Copy)]
pub struct AnalyzeOptions {
    pub jacobi: bool,
    /// Orders above this skip the subloop section instead of failing.
    pub subloop_cap: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            jacobi: false,
            subloop_cap: subloops::DEFAULT_ORDER_CAP,
        }
    }
}

/// Runs the full analysis of a certified loop. `Latin` and `loop` are
/// vouched for by the argument type; standard form, invertibility, the
/// property sweeps, and the subloop section are computed here.
pub fn build_report(l: &Loop, source: SourceInfo, opts: &AnalyzeOptions) -> AnalysisReport {
    let property_report = properties::full_report(l);
    let mut report = AnalysisReport {
        format_version: FORMAT_VERSION.to_string(),
        order: l.n(),
        source,
        certifications: Certifications {
            latin: true,
            standard_form: l.table().is_standard_form(),
            is_loop: true,
            invertible: l.inverse_map().is_ok(),
        },
        identity_element: l.identity(),
        properties: property_report.results,
        not_evaluated: not_evaluated(),
        subgroup_census: None,
        nonassociative_subloop_orders: None,
        simple: None,
        lagrange_violations: None,
        subloop_analysis_skipped: None,
        jacobi: None,
    };
    match subloops::enumerate_subloops_with_cap(l, opts.subloop_cap) {
        Ok(subs) => {
            report.subgroup_census = Some(subloops::subgroup_census(&subs));
            report.nonassociative_subloop_orders = Some(subs.nonassociative_proper_orders());
            report.lagrange_violations = Some(subloops::lagrange_violations(&subs));
            report.simple = Some(
                subloops::is_simple_with_cap(l, opts.subloop_cap)
                    .expect("cap already admitted this order"),
            );
        }
        Err(e) => {
            report.subloop_analysis_skipped = Some(e.to_string());
        }
    }
    if opts.jacobi {
        let d = algebra::commutator_constants(&algebra::structure_constants(l));
        report.jacobi = Some(algebra::jacobi_holds(&d));
    }
    report
}

fn witness_text(witness: &[Label]) -> String {
    let parts: Vec<String> = witness.iter().map(Label::to_string).collect();
    format!("({})", parts.join(", "))
}

fn yes_no(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

/// Renders the report for terminals, one fact per line.
pub fn render_summary(report: &AnalysisReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("order: {}\n", report.order));
    match &report.source {
        SourceInfo::Constructed { m } => out.push_str(&format!("source: constructed (m = {m})\n")),
        SourceInfo::External { path } => out.push_str(&format!("source: {path}\n")),
    }
    let c = &report.certifications;
    out.push_str(&format!(
        "certifications: latin={} standard_form={} loop={} invertible={}\n",
        yes_no(c.latin),
        yes_no(c.standard_form),
        yes_no(c.is_loop),
        yes_no(c.invertible)
    ));
    out.push_str(&format!("identity element: {}\n", report.identity_element));
    for p in PropertyId::ALL {
        let Some(outcome) = report.properties.get(&p) else {
            continue;
        };
        match outcome {
            PropertyOutcome::Checked {
                holds: true, ..
            } => out.push_str(&format!("{p}: holds\n")),
            PropertyOutcome::Checked {
                witness: Some(w), ..
            } => out.push_str(&format!("{p}: fails, witness {}\n", witness_text(w))),
            PropertyOutcome::Checked { .. } => out.push_str(&format!("{p}: fails\n")),
            PropertyOutcome::Skipped { skipped, .. } => {
                out.push_str(&format!("{p}: skipped ({skipped})\n"))
            }
        }
    }
    for (term, reason) in &report.not_evaluated {
        out.push_str(&format!("{term}: {reason}\n"));
    }
    if let Some(reason) = &report.subloop_analysis_skipped {
        out.push_str(&format!("subloop analysis: skipped ({reason})\n"));
    } else {
        if let Some(census) = &report.subgroup_census {
            if census.is_empty() {
                out.push_str("subgroups: none\n");
            } else {
                let parts: Vec<String> = census
                    .iter()
                    .map(|(order, count)| format!("{count} of order {order}"))
                    .collect();
                out.push_str(&format!("subgroups: {}\n", parts.join(", ")));
            }
        }
        if let Some(orders) = &report.nonassociative_subloop_orders {
            if !orders.is_empty() {
                let parts: Vec<String> = orders.iter().map(usize::to_string).collect();
                out.push_str(&format!(
                    "non-associative proper subloops of order: {}\n",
                    parts.join(", ")
                ));
            }
        }
        if let Some(simple) = report.simple {
            out.push_str(&format!("simple: {}\n", yes_no(simple)));
        }
        if let Some(violations) = &report.lagrange_violations {
            out.push_str(&format!("lagrange violations: {}\n", violations.len()));
        }
    }
    if let Some(jacobi) = &report.jacobi {
        match &jacobi.witness {
            None => out.push_str("jacobi: holds\n"),
            Some(w) => out.push_str(&format!(
                "jacobi: fails, witness {}\n",
                witness_text(&w.triple)
            )),
        }
    }
    out
}
