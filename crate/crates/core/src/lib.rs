//! Construction and exhaustive analysis of non-associative finite
//! invertible loops of odd order.
//!
//! The centerpiece is [`construct::construct`], which glues a group of
//! order m and cyclic blocks on the remaining k = m+1 labels into a loop
//! of order n = 2m+1 that is certifiably a Latin square in standard form,
//! has two-sided inverses, and fails associativity. Around it sit:
//!
//! - [`latin`]: blocks, tables, and the block surgery the gluing uses;
//! - [`loops`]: quasigroup/loop certification, division, inverses,
//!   generated subloops;
//! - [`properties`]: exhaustive sweeps for the standard loop identities
//!   with deterministic witnesses;
//! - [`subloops`]: subloop enumeration, subgroup census, normality,
//!   simplicity, Lagrange bookkeeping;
//! - [`algebra`]: structure constants, commutator tensors, and an exact
//!   integer Jacobi check;
//! - [`textio`]: the plain-text table format shared by all tools.
//!
//! Everything is exhaustive and deterministic: checks sweep all tuples,
//! parallel sweeps return the same witness as sequential ones, and no
//! routine samples randomly.

pub mod algebra;
pub mod construct;
pub mod latin;
pub mod loops;
pub mod properties;
pub mod subloops;
pub mod textio;

pub use algebra::{
    commutator_constants, commutator_table_text, jacobi_holds, structure_constants, JacobiCheck,
    JacobiWitness, StructureTensor,
};
pub use construct::{construct, ConstructionError, ConstructionParams, ConstructionTrace};
pub use latin::{assemble, Axis, Block, BlockError, Label, Quadrant, Table};
pub use loops::{InverseMap, Loop, LoopError, Quasigroup};
pub use properties::{
    check, check_identity_on_quasigroup, full_report, CheckResult, PropertyError, PropertyId,
    PropertyOutcome, PropertyReport, SweepMode,
};
pub use subloops::{
    enumerate_subloops, is_normal, is_simple, lagrange_violations, subgroup_census, SubloopError,
    SubloopInfo, SubloopSet,
};
pub use textio::{parse_table, render_trace, write_table, ParseError};
