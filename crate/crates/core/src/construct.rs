//! The block construction of non-associative invertible loops of every
//! odd order n = 2m+1, m >= 2.
//!
//! Writing k = m+1, the table of order n is glued from four blocks:
//!
//! ```text
//! [ G(m)            | R(k) minus row k-1   ]      m rows
//! [ R(k) minus      | counter-cyclic block ]      k rows
//! [   column k      |   with k's patched   ]
//! ```
//!
//! where G(m) is a group table on `1..=m` (the cyclic group by default),
//! R(k) is the cyclic-group block on the shifted labels `m+1..=2m+1`, and
//! the bottom-right block is the transposed counter-cyclic table on
//! `1..=k` whose k-entries are overwritten with the last column of R(k).
//! Deleting row k-1 on top and column k on the left removes exactly the
//! labels the patching re-inserts, which is why every row and column of
//! the glued table stays a permutation.
//!
//! The result is certified from scratch before it is returned: Latin,
//! standard form, identity 1, unique two-sided inverses, and at least one
//! associativity failure.

use thiserror::Error;

use crate::latin::{assemble, Block, BlockError, Label, Table};
use crate::loops::{Loop, LoopError, Quasigroup};
use crate::properties::{self, PropertyId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("m must be at least 2, got {0}")]
    SubgroupOrderTooSmall(usize),
    #[error("order must be odd and >= 5, got {0}")]
    InvalidOrder(usize),
    #[error("subgroup table has order {found}, expected {expected}")]
    SubgroupOrder { expected: usize, found: usize },
    #[error("subgroup table is not a Latin square: {0}")]
    SubgroupNotLatin(LoopError),
    #[error("subgroup table is not in standard form")]
    SubgroupNotStandardForm,
    #[error("subgroup table is not associative: witness ({0}, {1}, {2})")]
    SubgroupNotAssociative(Label, Label, Label),
    #[error("block assembly failed: {0}")]
    Assembly(#[from] BlockError),
    #[error("assembled table is not a Latin square: {0}")]
    NotLatin(LoopError),
    #[error("assembled table is not in standard form")]
    NotStandardForm,
    #[error("assembled table has no identity: {0}")]
    NoIdentity(LoopError),
    #[error("assembled loop is not invertible: {0}")]
    NotInvertible(LoopError),
    #[error("assembled table is associative; the family must be non-associative")]
    UnexpectedlyAssociative,
}

/// The cyclic-group block of the given size on labels shifted up by
/// `offset`: entry `(i, j)` is `offset + ((i + j - 2) mod size) + 1`.
/// Size must be at least 1.
pub fn cyclic_block(size: usize, offset: usize) -> Block {
    assert!(size >= 1, "cyclic blocks have at least one row");
    let mut entries = Vec::with_capacity(size * size);
    for i in 1..=size {
        for j in 1..=size {
            entries.push((offset + (i + j - 2) % size + 1) as Label);
        }
    }
    let universe = (offset + 1) as Label..=(offset + size) as Label;
    Block::new(size, size, entries, universe).expect("cyclic entries lie in the shifted range")
}

/// The transposed counter-cyclic block on `1..=k`: entry `(i, j)` is
/// `((i - j) mod k) + 1`. Its diagonal is all 1s and it has no two-sided
/// identity for k >= 3. Requires k >= 2.
///
/// Column j of this block is column `((1 - j) mod k) + 1` of
/// `cyclic_block(k, 0)`, which is how it inherits Latin-ness.
pub fn counter_cyclic_transpose(k: usize) -> Block {
    assert!(k >= 2, "counter-cyclic blocks need k >= 2");
    let mut entries = Vec::with_capacity(k * k);
    for i in 1..=k {
        for j in 1..=k {
            entries.push(((i + k - j) % k + 1) as Label);
        }
    }
    Block::new(k, k, entries, 1..=k as Label).expect("entries lie in 1..=k")
}

/// Top-right block: the shifted cyclic block of size k = m+1 with row k-1
/// deleted, leaving m rows.
pub fn top_right_block(m: usize) -> Block {
    assert!(m >= 2, "the family starts at m = 2");
    let k = m + 1;
    cyclic_block(k, m)
        .delete_row(k - 1)
        .expect("row k-1 exists in a k-row block")
}

/// Bottom-left block: the shifted cyclic block of size k = m+1 with
/// column k deleted, leaving m columns.
pub fn bottom_left_block(m: usize) -> Block {
    assert!(m >= 2, "the family starts at m = 2");
    let k = m + 1;
    cyclic_block(k, m)
        .delete_column(k)
        .expect("column k exists in a k-column block")
}

/// Bottom-right block: the transposed counter-cyclic block on `1..=k`
/// with its k-entries overwritten by the last column of the shifted
/// cyclic block, i.e. `2m+1, m+1, m+2, ..., 2m-1` along positions
/// `(1,2), (2,3), ..., (k-1,k)` and `2m` at `(k,1)`.
///
/// Each overwritten value re-inserts, in its row and column, exactly the
/// label removed by the deletions in the off-diagonal blocks; that
/// bookkeeping is what `construct` re-certifies.
pub fn bottom_right_block(m: usize) -> Block {
    assert!(m >= 2, "the family starts at m = 2");
    let k = m + 1;
    let n = 2 * m + 1;
    let mut assignments: Vec<(usize, usize, Label)> = Vec::with_capacity(k);
    assignments.push((1, 2, n as Label));
    for i in 2..k {
        assignments.push((i, i + 1, (m + i - 1) as Label));
    }
    assignments.push((k, 1, (2 * m) as Label));
    counter_cyclic_transpose(k)
        .substitute(&assignments)
        .expect("the patched path visits each position once")
}

/// Parameters of one family member: the index m (so n = 2m+1) and an
/// optional replacement for the default cyclic top-left group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionParams {
    m: usize,
    subgroup: Option<Table>,
}

impl ConstructionParams {
    pub fn new(m: usize) -> Result<Self, ConstructionError> {
        if m < 2 {
            return Err(ConstructionError::SubgroupOrderTooSmall(m));
        }
        Ok(ConstructionParams { m, subgroup: None })
    }

    /// Parameters from the target order n = 2m+1.
    pub fn from_order(n: usize) -> Result<Self, ConstructionError> {
        if n < 5 || n.is_multiple_of(2) {
            return Err(ConstructionError::InvalidOrder(n));
        }
        ConstructionParams::new((n - 1) / 2)
    }

    /// Replaces the top-left group with `table`, which must be a
    /// standard-form associative Latin square of order m. Any group works;
    /// the rest of the construction never looks inside it.
    pub fn with_subgroup(mut self, table: Table) -> Result<Self, ConstructionError> {
        if table.n() != self.m {
            return Err(ConstructionError::SubgroupOrder {
                expected: self.m,
                found: table.n(),
            });
        }
        let q = Quasigroup::certify(table).map_err(ConstructionError::SubgroupNotLatin)?;
        if !q.table().is_standard_form() {
            return Err(ConstructionError::SubgroupNotStandardForm);
        }
        let assoc = properties::check_identity_on_quasigroup(&q, PropertyId::Assoc)
            .expect("ASSOC is an inverse-free identity");
        if let Some(w) = assoc.witness {
            return Err(ConstructionError::SubgroupNotAssociative(w[0], w[1], w[2]));
        }
        self.subgroup = Some(q.table().clone());
        Ok(self)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.m + 1
    }

    pub fn order(&self) -> usize {
        2 * self.m + 1
    }

    /// The top-left block: the supplied group, or the cyclic group on
    /// `1..=m` when none was given.
    pub fn subgroup_block(&self) -> Block {
        match &self.subgroup {
            Some(t) => t.as_block(),
            None => cyclic_block(self.m, 0),
        }
    }
}

/// The intermediate blocks of one construction, kept for inspection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    /// Top-left group block on `1..=m`.
    pub group_m: Block,
    /// The full shifted cyclic block on `m+1..=2m+1` the off-diagonal
    /// blocks are cut from.
    pub group_k: Block,
    pub top_right: Block,
    pub bottom_left: Block,
    pub bottom_right: Block,
    pub table: Table,
}

/// Builds the family member for `params` and certifies every claimed
/// property of the result from scratch.
pub fn construct(params: &ConstructionParams) -> Result<(Loop, ConstructionTrace), ConstructionError> {
    let m = params.m;
    let k = params.k();
    let group_m = params.subgroup_block();
    let group_k = cyclic_block(k, m);
    let top_right = top_right_block(m);
    let bottom_left = bottom_left_block(m);
    let bottom_right = bottom_right_block(m);
    let table = assemble(&group_m, &top_right, &bottom_left, &bottom_right)?;

    let q = Quasigroup::certify(table.clone()).map_err(ConstructionError::NotLatin)?;
    if !q.table().is_standard_form() {
        return Err(ConstructionError::NotStandardForm);
    }
    let l = Loop::certify(q).map_err(ConstructionError::NoIdentity)?;
    debug_assert_eq!(l.identity(), 1, "standard form pins the identity to 1");
    l.inverse_map().map_err(ConstructionError::NotInvertible)?;
    if l.associativity_witness().holds {
        return Err(ConstructionError::UnexpectedlyAssociative);
    }

    Ok((
        l,
        ConstructionTrace {
            group_m,
            group_k,
            top_right,
            bottom_left,
            bottom_right,
            table,
        },
    ))
}
