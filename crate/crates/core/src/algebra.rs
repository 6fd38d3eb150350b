//! The linearization of a loop: 0/1 structure constants, their
//! antisymmetrized commutator, and an exact Jacobi-identity check over the
//! integers.
//!
//! All arithmetic is integer arithmetic. Entries of the raw tensor are 0
//! or 1, commutator entries lie in {-1, 0, 1}, and a Jacobi coefficient is
//! a sum of three inner products with at most 2n nonzero terms of modulus
//! 1, so i64 accumulators can never overflow at representable orders.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::latin::Label;
use crate::loops::Loop;
use crate::properties::SweepMode;

/// A cubic integer tensor `t[i][j][k]` over a loop's basis, 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTensor {
    n: usize,
    entries: Vec<i8>,
}

impl StructureTensor {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        ((i - 1) * self.n + (j - 1)) * self.n + (k - 1)
    }

    /// Entry at 1-based `(i, j, k)`. Panics out of range.
    pub fn get(&self, i: usize, j: usize, k: usize) -> i64 {
        assert!(
            (1..=self.n).contains(&i) && (1..=self.n).contains(&j) && (1..=self.n).contains(&k),
            "tensor index ({i}, {j}, {k}) out of range for order {}",
            self.n
        );
        self.entries[self.idx(i, j, k)] as i64
    }
}

/// The multiplication tensor of `l`: `c[i][j][k]` is 1 exactly when
/// `i * j = k`.
pub fn structure_constants(l: &Loop) -> StructureTensor {
    let n = l.n();
    let mut entries = vec![0i8; n * n * n];
    for i in 1..=n {
        for j in 1..=n {
            let k = l.prod(i as Label, j as Label) as usize;
            entries[((i - 1) * n + (j - 1)) * n + (k - 1)] = 1;
        }
    }
    StructureTensor { n, entries }
}

/// The commutator tensor `d[i][j][k] = c[i][j][k] - c[j][i][k]`,
/// i.e. the structure constants of the bracket `[a, b] = ab - ba` in the
/// algebra spanned by the loop's elements.
pub fn commutator_constants(c: &StructureTensor) -> StructureTensor {
    let n = c.n;
    let mut entries = vec![0i8; n * n * n];
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                entries[((i - 1) * n + (j - 1)) * n + (k - 1)] =
                    c.entries[c.idx(i, j, k)] - c.entries[c.idx(j, i, k)];
            }
        }
    }
    StructureTensor { n, entries }
}

/// A failed Jacobi triple: the first `(i, j, l)` in lexicographic order
/// whose Jacobi sum is nonzero, with the nonzero coefficients of that sum
/// by basis element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiWitness {
    pub triple: [Label; 3],
    pub coefficients: Vec<(Label, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiCheck {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<JacobiWitness>,
    pub checked_count: u64,
}

/// Exhaustively checks `J(i,j,l) = [[i,j],l] + [[j,l],i] + [[l,i],j] = 0`
/// for the bracket described by the commutator tensor `d`, expanding each
/// outer bracket through `d` again. Deterministic first witness.
pub fn jacobi_holds(d: &StructureTensor) -> JacobiCheck {
    jacobi_holds_with_mode(d, SweepMode::Parallel)
}

pub fn jacobi_holds_with_mode(d: &StructureTensor, mode: SweepMode) -> JacobiCheck {
    let n = d.n;
    // nonzeros[(a-1)*n + (b-1)] lists the (k, coefficient) pairs of [a, b].
    let nonzeros: Vec<Vec<(usize, i64)>> = (1..=n)
        .flat_map(|a| (1..=n).map(move |b| (a, b)))
        .map(|(a, b)| {
            (1..=n)
                .filter_map(|k| {
                    let v = d.entries[d.idx(a, b, k)];
                    (v != 0).then_some((k, v as i64))
                })
                .collect()
        })
        .collect();

    let scan_i = |i: Label| -> Option<JacobiWitness> {
        let i = i as usize;
        let mut sum = vec![0i64; n + 1];
        let mut touched: Vec<usize> = Vec::with_capacity(12);
        for j in 1..=n {
            for l in 1..=n {
                for (a, b, c) in [(i, j, l), (j, l, i), (l, i, j)] {
                    for &(t, w1) in &nonzeros[(a - 1) * n + (b - 1)] {
                        for &(k, w2) in &nonzeros[(t - 1) * n + (c - 1)] {
                            if sum[k] == 0 {
                                touched.push(k);
                            }
                            sum[k] += w1 * w2;
                            debug_assert!(sum[k].unsigned_abs() <= 2 * n as u64);
                        }
                    }
                }
                let mut coefficients: Vec<(Label, i64)> = touched
                    .iter()
                    .filter(|&&k| sum[k] != 0)
                    .map(|&k| (k as Label, sum[k]))
                    .collect();
                for &k in &touched {
                    sum[k] = 0;
                }
                touched.clear();
                if !coefficients.is_empty() {
                    coefficients.sort_unstable();
                    return Some(JacobiWitness {
                        triple: [i as Label, j as Label, l as Label],
                        coefficients,
                    });
                }
            }
        }
        None
    };

    let witness = match mode {
        SweepMode::Sequential => (1..=n as Label).find_map(scan_i),
        SweepMode::Parallel => (1..=n as Label).into_par_iter().find_map_first(scan_i),
    };
    let checked_count = match &witness {
        Some(w) => {
            let [i, j, l] = w.triple;
            ((i as u64 - 1) * n as u64 + (j as u64 - 1)) * n as u64 + l as u64
        }
        None => (n as u64).pow(3),
    };
    JacobiCheck {
        holds: witness.is_none(),
        witness,
        checked_count,
    }
}

/// Renders the commutator table of `d` as text: one line per unordered
/// basis pair `i < j`, each bracket written as a signed sum of basis
/// elements, `0` when the pair commutes.
pub fn commutator_table_text(d: &StructureTensor) -> String {
    let n = d.n;
    let mut out = String::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            let mut terms = String::new();
            for k in 1..=n {
                let v = d.entries[d.idx(i, j, k)];
                if v == 0 {
                    continue;
                }
                if terms.is_empty() {
                    if v < 0 {
                        terms.push('-');
                    }
                } else {
                    terms.push_str(if v > 0 { " + " } else { " - " });
                }
                terms.push_str(&format!("e{k}"));
            }
            if terms.is_empty() {
                terms.push('0');
            }
            out.push_str(&format!("[e{i}, e{j}] = {terms}\n"));
        }
    }
    out
}
