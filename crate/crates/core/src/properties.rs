//! Exhaustive checks for the standard loop identities.
//!
//! Every check is a full sweep over all element pairs or triples in
//! lexicographic order, and the reported witness is always the first
//! failing tuple in that order. The parallel mode partitions the sweep by
//! the first coordinate and keeps the earliest hit, so both modes return
//! the same witness; parallelism changes wall time only.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::latin::Label;
use crate::loops::{self, InverseMap, Loop, LoopError, Quasigroup};

/// The checkable properties, in report order.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(rename_all = "UPPERCASE")]
pub enum PropertyId {
    Assoc,
    Comm,
    Flex,
    Lip,
    Rip,
    Ip,
    Aip,
    Cip,
    Wip,
    LBol,
    RBol,
    Moufang,
    Pap,
}

use PropertyId::*;

/// Identities that mention neither inverses nor the identity element, so
/// they make sense on a bare quasigroup.
pub const QUASIGROUP_IDENTITIES: [PropertyId; 6] = [Assoc, Comm, Flex, LBol, RBol, Moufang];

impl PropertyId {
    pub const ALL: [PropertyId; 13] = [
        Assoc, Comm, Flex, Lip, Rip, Ip, Aip, Cip, Wip, LBol, RBol, Moufang, Pap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Assoc => "ASSOC",
            Comm => "COMM",
            Flex => "FLEX",
            Lip => "LIP",
            Rip => "RIP",
            Ip => "IP",
            Aip => "AIP",
            Cip => "CIP",
            Wip => "WIP",
            LBol => "LBOL",
            RBol => "RBOL",
            Moufang => "MOUFANG",
            Pap => "PAP",
        }
    }

    /// The exact statement the sweep evaluates, quantified over all
    /// elements. This string is emitted verbatim in reports.
    pub fn identity_text(self) -> &'static str {
        match self {
            Assoc => "(x*y)*z = x*(y*z)",
            Comm => "x*y = y*x",
            Flex => "x*(y*x) = (x*y)*x",
            Lip => "inv(x)*(x*y) = y",
            Rip => "(y*x)*inv(x) = y",
            Ip => "inv(x)*(x*y) = y and (y*x)*inv(x) = y",
            Aip => "inv(x*y) = inv(x)*inv(y)",
            Cip => "(x*y)*inv(x) = y",
            Wip => "x*inv(y*x) = inv(y)",
            LBol => "x*(y*(x*z)) = (x*(y*x))*z",
            RBol => "((z*x)*y)*x = z*((x*y)*x)",
            Moufang => "(x*y)*(z*x) = (x*(y*z))*x",
            Pap => "every subloop generated by a single element is associative",
        }
    }

    /// Number of bound variables the sweep ranges over.
    pub fn arity(self) -> usize {
        match self {
            Assoc | LBol | RBol | Moufang => 3,
            Pap => 1,
            _ => 2,
        }
    }

    /// Whether the statement mentions `inv`, and so needs an invertible
    /// loop to evaluate.
    pub fn needs_inverses(self) -> bool {
        matches!(self, Lip | Rip | Ip | Aip | Cip | Wip)
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownProperty(pub String);

impl fmt::Display for UnknownProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown property '{}'", self.0)
    }
}

impl std::error::Error for UnknownProperty {}

impl FromStr for PropertyId {
    type Err = UnknownProperty;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PropertyId::ALL
            .iter()
            .copied()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownProperty(s.to_string()))
    }
}

/// Sweep scheduling. Both modes visit the same tuples and agree on the
/// reported witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    Sequential,
    Parallel,
}

/// Outcome of one exhaustive property sweep.
///
/// `witness` is `Some` exactly when `holds` is false, and `checked_count`
/// is the 1-based lexicographic rank of the witness, or the full tuple
/// count when the property holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub property: PropertyId,
    pub holds: bool,
    pub witness: Option<Vec<Label>>,
    pub checked_count: u64,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PropertyError {
    #[error("property {property} needs inverses: {source}")]
    NotInvertible {
        property: PropertyId,
        source: LoopError,
    },
    #[error("property {property} is not an inverse-free identity; it needs a loop, not a bare quasigroup")]
    RequiresLoop { property: PropertyId },
}

fn holds_pair(
    q: &Quasigroup,
    inv: Option<&InverseMap>,
    p: PropertyId,
    x: Label,
    y: Label,
) -> bool {
    let m = |a, b| q.prod(a, b);
    let i = |a| inv.expect("inverse-based property ran without inverses").of(a);
    match p {
        Comm => m(x, y) == m(y, x),
        Flex => m(x, m(y, x)) == m(m(x, y), x),
        Lip => m(i(x), m(x, y)) == y,
        Rip => m(m(y, x), i(x)) == y,
        Ip => m(i(x), m(x, y)) == y && m(m(y, x), i(x)) == y,
        Aip => i(m(x, y)) == m(i(x), i(y)),
        Cip => m(m(x, y), i(x)) == y,
        Wip => m(x, i(m(y, x))) == i(y),
        _ => unreachable!("{p} is not a pair identity"),
    }
}

fn holds_triple(q: &Quasigroup, p: PropertyId, x: Label, y: Label, z: Label) -> bool {
    let m = |a, b| q.prod(a, b);
    match p {
        Assoc => m(m(x, y), z) == m(x, m(y, z)),
        LBol => m(x, m(y, m(x, z))) == m(m(x, m(y, x)), z),
        RBol => m(m(m(z, x), y), x) == m(z, m(m(x, y), x)),
        Moufang => m(m(x, y), m(z, x)) == m(m(x, m(y, z)), x),
        _ => unreachable!("{p} is not a triple identity"),
    }
}

/// Runs `scan` over `1..=n` first coordinates, returning the result for
/// the smallest coordinate that yields one.
fn first_hit<F>(n: usize, mode: SweepMode, scan: F) -> Option<Vec<Label>>
where
    F: Fn(Label) -> Option<Vec<Label>> + Sync + Send,
{
    match mode {
        SweepMode::Sequential => (1..=n as Label).find_map(scan),
        SweepMode::Parallel => (1..=n as Label).into_par_iter().find_map_first(scan),
    }
}

fn sweep_pairs<F>(n: usize, mode: SweepMode, holds: F) -> (Option<Vec<Label>>, u64)
where
    F: Fn(Label, Label) -> bool + Sync,
{
    let last = n as Label;
    let witness = first_hit(n, mode, |x| {
        (1..=last).find(|&y| !holds(x, y)).map(|y| vec![x, y])
    });
    let count = match &witness {
        Some(w) => (w[0] as u64 - 1) * n as u64 + w[1] as u64,
        None => (n * n) as u64,
    };
    (witness, count)
}

fn sweep_triples<F>(n: usize, mode: SweepMode, holds: F) -> (Option<Vec<Label>>, u64)
where
    F: Fn(Label, Label, Label) -> bool + Sync,
{
    let last = n as Label;
    let witness = first_hit(n, mode, |x| {
        for y in 1..=last {
            for z in 1..=last {
                if !holds(x, y, z) {
                    return Some(vec![x, y, z]);
                }
            }
        }
        None
    });
    let count = match &witness {
        Some(w) => {
            ((w[0] as u64 - 1) * n as u64 + (w[1] as u64 - 1)) * n as u64 + w[2] as u64
        }
        None => (n as u64).pow(3),
    };
    (witness, count)
}

pub(crate) fn run_identity(
    q: &Quasigroup,
    inv: Option<&InverseMap>,
    p: PropertyId,
    mode: SweepMode,
) -> CheckResult {
    let n = q.n();
    let (witness, checked_count) = match p.arity() {
        2 => sweep_pairs(n, mode, |x, y| holds_pair(q, inv, p, x, y)),
        3 => sweep_triples(n, mode, |x, y, z| holds_triple(q, p, x, y, z)),
        _ => unreachable!("PAP has a dedicated sweep"),
    };
    CheckResult {
        property: p,
        holds: witness.is_none(),
        witness,
        checked_count,
    }
}

/// PAP quantifies over single generators; the witness is the first
/// element whose generated subloop fails to associate.
fn run_pap(l: &Loop, mode: SweepMode) -> CheckResult {
    let n = l.n();
    let witness = first_hit(n, mode, |x| {
        let sub = l.generated_subloop(&[x]);
        if loops::elements_associative(l.quasigroup(), &sub) {
            None
        } else {
            Some(vec![x])
        }
    });
    let checked_count = match &witness {
        Some(w) => w[0] as u64,
        None => n as u64,
    };
    CheckResult {
        property: Pap,
        holds: witness.is_none(),
        witness,
        checked_count,
    }
}

/// Exhaustively checks one property on a loop. Inverse-based properties
/// require the loop to be invertible.
pub fn check(l: &Loop, p: PropertyId) -> Result<CheckResult, PropertyError> {
    check_with_mode(l, p, SweepMode::Parallel)
}

pub fn check_with_mode(
    l: &Loop,
    p: PropertyId,
    mode: SweepMode,
) -> Result<CheckResult, PropertyError> {
    let inv = if p.needs_inverses() {
        Some(
            l.inverse_map()
                .map_err(|source| PropertyError::NotInvertible {
                    property: p,
                    source,
                })?,
        )
    } else {
        None
    };
    Ok(match p {
        Pap => run_pap(l, mode),
        _ => run_identity(l.quasigroup(), inv.as_ref(), p, mode),
    })
}

/// Checks one of the [`QUASIGROUP_IDENTITIES`] on a bare quasigroup.
pub fn check_identity_on_quasigroup(
    q: &Quasigroup,
    p: PropertyId,
) -> Result<CheckResult, PropertyError> {
    check_identity_on_quasigroup_with_mode(q, p, SweepMode::Parallel)
}

pub fn check_identity_on_quasigroup_with_mode(
    q: &Quasigroup,
    p: PropertyId,
    mode: SweepMode,
) -> Result<CheckResult, PropertyError> {
    if !QUASIGROUP_IDENTITIES.contains(&p) {
        return Err(PropertyError::RequiresLoop { property: p });
    }
    Ok(run_identity(q, None, p, mode))
}

/// One property's entry in a full report: either a completed sweep or the
/// reason it was skipped. Every entry carries the statement it evaluates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PropertyOutcome {
    Checked {
        holds: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        witness: Option<Vec<Label>>,
        checked_count: u64,
        identity: String,
    },
    Skipped { skipped: String, identity: String },
}

impl PropertyOutcome {
    pub fn holds(&self) -> Option<bool> {
        match self {
            PropertyOutcome::Checked { holds, .. } => Some(*holds),
            PropertyOutcome::Skipped { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&[Label]> {
        match self {
            PropertyOutcome::Checked { witness, .. } => witness.as_deref(),
            PropertyOutcome::Skipped { .. } => None,
        }
    }
}

/// All thirteen properties checked on one loop.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub order: usize,
    pub identity_element: Label,
    pub results: BTreeMap<PropertyId, PropertyOutcome>,
}

/// Runs every property on `l`. When the loop is not invertible, the
/// inverse-based properties are reported as skipped rather than failing
/// the whole report.
pub fn full_report(l: &Loop) -> PropertyReport {
    let invertible = l.inverse_map();
    let mut results = BTreeMap::new();
    for p in PropertyId::ALL {
        let outcome = match (&invertible, p.needs_inverses()) {
            (Err(e), true) => PropertyOutcome::Skipped {
                skipped: format!("loop is not invertible: {e}"),
                identity: p.identity_text().to_string(),
            },
            _ => {
                let r = check(l, p).expect("invertibility was established above");
                PropertyOutcome::Checked {
                    holds: r.holds,
                    witness: r.witness,
                    checked_count: r.checked_count,
                    identity: p.identity_text().to_string(),
                }
            }
        };
        results.insert(p, outcome);
    }
    PropertyReport {
        order: l.n(),
        identity_element: l.identity(),
        results,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::latin::Table;

    fn to_loop(rows: &[Vec<Label>]) -> Loop {
        Loop::certify(Quasigroup::certify(Table::from_rows(rows).unwrap()).unwrap()).unwrap()
    }

    fn cyclic(n: usize) -> Vec<Vec<Label>> {
        (0..n)
            .map(|i| (0..n).map(|j| ((i + j) % n + 1) as Label).collect())
            .collect()
    }

    fn l5() -> Loop {
        to_loop(&[
            vec![1, 2, 3, 4, 5],
            vec![2, 1, 5, 3, 4],
            vec![3, 4, 1, 5, 2],
            vec![4, 5, 2, 1, 3],
            vec![5, 3, 4, 2, 1],
        ])
    }

    #[test]
    fn names_round_trip_through_from_str() {
        for p in PropertyId::ALL {
            assert_eq!(p.name().parse::<PropertyId>().unwrap(), p);
            assert_eq!(p.name().to_lowercase().parse::<PropertyId>().unwrap(), p);
        }
        assert!("frobnicate".parse::<PropertyId>().is_err());
    }

    #[test]
    fn serde_names_match_display_names() {
        for p in PropertyId::ALL {
            let json = serde_json::to_string(&p).unwrap();
            assert_eq!(json, format!("\"{}\"", p.name()));
        }
    }

    #[test]
    fn cyclic_groups_satisfy_everything() {
        let l = to_loop(&cyclic(6));
        for p in PropertyId::ALL {
            let r = check(&l, p).unwrap();
            assert!(r.holds, "{p} should hold on a cyclic group");
            assert!(r.witness.is_none());
        }
    }

    #[test]
    fn order_5_member_profile() {
        let l = l5();
        for (p, expect) in [
            (Assoc, false),
            (Comm, false),
            (Flex, true),
            (Lip, false),
            (Rip, false),
            (Ip, false),
            (Aip, true),
            (Cip, true),
            (Wip, true),
            (LBol, false),
            (RBol, false),
            (Moufang, false),
            (Pap, true),
        ] {
            let r = check(&l, p).unwrap();
            assert_eq!(r.holds, expect, "{p} on the order-5 member");
        }
    }

    #[test]
    fn comm_witness_on_the_order_5_member() {
        let r = check(&l5(), Comm).unwrap();
        assert_eq!(r.witness, Some(vec![2, 3]));
        // 2*3 = 5, 3*2 = 4; the pairs before (2, 3) involve the identity
        // or equal factors.
        assert_eq!(r.checked_count, 8);
    }

    #[test]
    fn parallel_and_sequential_agree_on_the_witness() {
        let l = l5();
        for p in PropertyId::ALL {
            let seq = check_with_mode(&l, p, SweepMode::Sequential).unwrap();
            let par = check_with_mode(&l, p, SweepMode::Parallel).unwrap();
            assert_eq!(seq, par, "{p} witness must not depend on scheduling");
        }
    }

    #[test]
    fn quasigroup_checks_reject_inverse_based_properties() {
        let q = Quasigroup::certify(Table::from_rows(&cyclic(4)).unwrap()).unwrap();
        assert_eq!(
            check_identity_on_quasigroup(&q, Cip),
            Err(PropertyError::RequiresLoop { property: Cip })
        );
        assert!(check_identity_on_quasigroup(&q, Comm).unwrap().holds);
    }

    #[test]
    fn full_report_covers_all_properties() {
        let report = full_report(&l5());
        assert_eq!(report.order, 5);
        assert_eq!(report.identity_element, 1);
        assert_eq!(report.results.len(), PropertyId::ALL.len());
        assert_eq!(report.results[&Cip].holds(), Some(true));
        assert_eq!(report.results[&Assoc].witness(), Some(&[2, 2, 3][..]));
    }

    #[test]
    fn report_skips_inverse_properties_on_non_invertible_loops() {
        // A loop of order 5 in which element 2 has unequal one-sided
        // inverses: 2*3 = 1 but 5*2 = 1.
        let l = to_loop(&[
            vec![1, 2, 3, 4, 5],
            vec![2, 3, 1, 5, 4],
            vec![3, 4, 5, 1, 2],
            vec![4, 5, 2, 3, 1],
            vec![5, 1, 4, 2, 3],
        ]);
        assert!(l.inverse_map().is_err());
        let report = full_report(&l);
        assert!(matches!(
            report.results[&Lip],
            PropertyOutcome::Skipped { .. }
        ));
        assert!(matches!(
            report.results[&Assoc],
            PropertyOutcome::Checked { .. }
        ));
        let err = check(&l, Aip).unwrap_err();
        assert!(matches!(err, PropertyError::NotInvertible { .. }));
    }
}
