//! Subloop enumeration, the subgroup census, normality, simplicity, and
//! Lagrange bookkeeping.
//!
//! Enumeration closes seed sets one generator at a time, so its cost
//! scales with the number of distinct subloops rather than with 2^n, but
//! it is still exhaustive search; `DEFAULT_ORDER_CAP` keeps it away from
//! orders where that stops being a desk-side computation.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::latin::Label;
use crate::loops::{self, Loop};

/// Largest order `enumerate_subloops` accepts without an explicit cap.
pub const DEFAULT_ORDER_CAP: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubloopError {
    #[error("loop order {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("the subset is not closed: it generates extra element {extra}")]
    NotASubloop { extra: Label },
}

/// One subloop: its sorted elements and whether its induced table
/// associates (making it a subgroup).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubloopInfo {
    pub elements: Vec<Label>,
    pub is_group: bool,
}

impl SubloopInfo {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Every subloop of one loop, sorted by order and then by elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubloopSet {
    pub loop_order: usize,
    pub subloops: Vec<SubloopInfo>,
}

impl SubloopSet {
    /// Subloops other than the trivial one and the whole loop.
    pub fn proper_nontrivial(&self) -> impl Iterator<Item = &SubloopInfo> {
        self.subloops
            .iter()
            .filter(move |s| s.order() > 1 && s.order() < self.loop_order)
    }

    /// Orders of proper nontrivial subloops that fail associativity.
    pub fn nonassociative_proper_orders(&self) -> Vec<usize> {
        self.proper_nontrivial()
            .filter(|s| !s.is_group)
            .map(SubloopInfo::order)
            .collect()
    }
}

/// Enumerates every subloop, using [`DEFAULT_ORDER_CAP`].
pub fn enumerate_subloops(l: &Loop) -> Result<SubloopSet, SubloopError> {
    enumerate_subloops_with_cap(l, DEFAULT_ORDER_CAP)
}

/// Enumerates every subloop of `l`: starts from the closure of the
/// identity and repeatedly extends each known subloop by one outside
/// generator, closing under product and both divisions. Every subloop is
/// reached this way because a subloop is the closure of any of its
/// generating sets, built up one element at a time.
pub fn enumerate_subloops_with_cap(l: &Loop, cap: usize) -> Result<SubloopSet, SubloopError> {
    let n = l.n();
    if n > cap {
        return Err(SubloopError::CapExceeded { n, cap });
    }
    let trivial = l.generated_subloop(&[]);
    let mut found: BTreeSet<Vec<Label>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<Label>> = VecDeque::new();
    found.insert(trivial.clone());
    queue.push_back(trivial);
    while let Some(base) = queue.pop_front() {
        if base.len() == n {
            continue;
        }
        let mut seed = base.clone();
        for g in 1..=n as Label {
            if base.binary_search(&g).is_ok() {
                continue;
            }
            seed.push(g);
            let closed = l.generated_subloop(&seed);
            seed.pop();
            if found.insert(closed.clone()) {
                queue.push_back(closed);
            }
        }
    }
    let mut subloops: Vec<SubloopInfo> = found
        .into_iter()
        .map(|elements| {
            let is_group = loops::elements_associative(l.quasigroup(), &elements);
            SubloopInfo { elements, is_group }
        })
        .collect();
    subloops.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    Ok(SubloopSet {
        loop_order: n,
        subloops,
    })
}

/// Counts proper nontrivial subgroups by order.
pub fn subgroup_census(s: &SubloopSet) -> BTreeMap<usize, usize> {
    let mut census = BTreeMap::new();
    for sub in s.proper_nontrivial().filter(|s| s.is_group) {
        *census.entry(sub.order()).or_insert(0) += 1;
    }
    census
}

/// Subloop orders that do not divide the loop order, one entry per
/// offending subloop, as `(subloop_order, loop_order)` pairs.
pub fn lagrange_violations(s: &SubloopSet) -> Vec<(usize, usize)> {
    s.subloops
        .iter()
        .filter(|sub| !s.loop_order.is_multiple_of(sub.order()))
        .map(|sub| (sub.order(), s.loop_order))
        .collect()
}

/// Whether the subloop `nset` is normal in `l`: for all x, y the sets
/// x*N = N*x, (N*x)*y = N*(x*y), and y*(x*N) = (y*x)*N must agree.
/// `nset` must itself be a subloop (in any element order).
pub fn is_normal(l: &Loop, nset: &[Label]) -> Result<bool, SubloopError> {
    let n = l.n();
    let mut members: Vec<Label> = nset.to_vec();
    members.sort_unstable();
    members.dedup();
    let closed = l.generated_subloop(&members);
    if closed != members {
        let extra = closed
            .iter()
            .find(|v| members.binary_search(v).is_err())
            .copied()
            .expect("a non-closed subset generates something new");
        return Err(SubloopError::NotASubloop { extra });
    }

    let coset = |f: &dyn Fn(Label) -> Label| -> Vec<Label> {
        let mut out: Vec<Label> = members.iter().map(|&v| f(v)).collect();
        out.sort_unstable();
        out
    };
    // left_cosets[x-1] = x*N, right_cosets[x-1] = N*x
    let left_cosets: Vec<Vec<Label>> = (1..=n as Label)
        .map(|x| coset(&|v| l.prod(x, v)))
        .collect();
    let right_cosets: Vec<Vec<Label>> = (1..=n as Label)
        .map(|x| coset(&|v| l.prod(v, x)))
        .collect();
    for x in 0..n {
        if left_cosets[x] != right_cosets[x] {
            return Ok(false);
        }
    }
    for x in 1..=n as Label {
        for y in 1..=n as Label {
            let xy = l.prod(x, y);
            // (N*x)*y against N*(x*y)
            let shifted = coset(&|v| l.prod(l.prod(v, x), y));
            if shifted != right_cosets[xy as usize - 1] {
                return Ok(false);
            }
            // y*(x*N) against (y*x)*N
            let yx = l.prod(y, x);
            let lifted = coset(&|v| l.prod(y, l.prod(x, v)));
            if lifted != left_cosets[yx as usize - 1] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `l` has no normal subloop other than the trivial one and
/// itself. Uses [`DEFAULT_ORDER_CAP`].
pub fn is_simple(l: &Loop) -> Result<bool, SubloopError> {
    is_simple_with_cap(l, DEFAULT_ORDER_CAP)
}

pub fn is_simple_with_cap(l: &Loop, cap: usize) -> Result<bool, SubloopError> {
    let subs = enumerate_subloops_with_cap(l, cap)?;
    for sub in subs.proper_nontrivial() {
        if is_normal(l, &sub.elements)? {
            return Ok(false);
        }
    }
    Ok(true)
}
