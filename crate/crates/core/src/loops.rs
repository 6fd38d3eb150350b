//! Quasigroup and loop certification over square tables.
//!
//! A [`Quasigroup`] is a table that passed the Latin check; it carries
//! precomputed left/right division tables so that `multiply`,
//! `left_divide`, and `right_divide` are all O(1). A [`Loop`] is a
//! quasigroup with a certified two-sided identity. Certification only goes
//! forward: once a value of one of these types exists, its invariants
//! hold.

use thiserror::Error;

use crate::latin::{Axis, Label, Table};
use crate::properties::{self, CheckResult, PropertyId, SweepMode};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LoopError {
    #[error("not a Latin square: {axis} {index} repeats label {label}")]
    NotLatin {
        axis: Axis,
        index: usize,
        label: Label,
    },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has left inverse {left} but right inverse {right}")]
    NotInvertible {
        element: Label,
        left: Label,
        right: Label,
    },
    #[error("element {element} is out of range 1..={n}")]
    OutOfRange { element: Label, n: usize },
}

/// A binary system on `1..=n` in which both division equations have unique
/// solutions, i.e. a certified Latin square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quasigroup {
    table: Table,
    // ldiv[(a-1)*n + (b-1)] = the unique x with a*x = b
    ldiv: Vec<Label>,
    // rdiv[(a-1)*n + (b-1)] = the unique x with x*a = b
    rdiv: Vec<Label>,
}

impl Quasigroup {
    /// Certifies that `table` is a Latin square and precomputes divisions.
    /// On failure reports the first offending line, scanning rows before
    /// columns, and within a line the first label seen twice.
    pub fn certify(table: Table) -> Result<Self, LoopError> {
        let n = table.n();
        let cells = table.cells();
        let mut seen = vec![false; n + 1];
        for r in 0..n {
            seen.fill(false);
            for c in 0..n {
                let label = cells[r * n + c];
                if seen[label as usize] {
                    return Err(LoopError::NotLatin {
                        axis: Axis::Row,
                        index: r + 1,
                        label,
                    });
                }
                seen[label as usize] = true;
            }
        }
        for c in 0..n {
            seen.fill(false);
            for r in 0..n {
                let label = cells[r * n + c];
                if seen[label as usize] {
                    return Err(LoopError::NotLatin {
                        axis: Axis::Column,
                        index: c + 1,
                        label,
                    });
                }
                seen[label as usize] = true;
            }
        }
        let mut ldiv = vec![0 as Label; n * n];
        let mut rdiv = vec![0 as Label; n * n];
        for a in 0..n {
            for x in 0..n {
                let b = cells[a * n + x] as usize - 1;
                ldiv[a * n + b] = (x + 1) as Label; // a * x = b
                rdiv[x * n + b] = (a + 1) as Label; // a * x = b, solved for the left factor
            }
        }
        Ok(Quasigroup { table, ldiv, rdiv })
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    fn check_range(&self, element: Label) -> Result<(), LoopError> {
        if element == 0 || element as usize > self.n() {
            Err(LoopError::OutOfRange {
                element,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    /// `x * y`, rejecting out-of-range elements.
    pub fn multiply(&self, x: Label, y: Label) -> Result<Label, LoopError> {
        self.check_range(x)?;
        self.check_range(y)?;
        Ok(self.prod(x, y))
    }

    /// `x * y` without the range check; for certified-in-range callers.
    #[inline]
    pub(crate) fn prod(&self, x: Label, y: Label) -> Label {
        let n = self.n();
        debug_assert!(x >= 1 && x as usize <= n && y >= 1 && y as usize <= n);
        self.table.cells()[(x as usize - 1) * n + (y as usize - 1)]
    }

    /// The unique `x` with `a * x = b`. Panics out of range.
    #[inline]
    pub fn left_divide(&self, a: Label, b: Label) -> Label {
        let n = self.n();
        assert!(
            a >= 1 && a as usize <= n && b >= 1 && b as usize <= n,
            "left_divide({a}, {b}) out of range for order {n}"
        );
        self.ldiv[(a as usize - 1) * n + (b as usize - 1)]
    }

    /// The unique `x` with `x * a = b`. Panics out of range.
    #[inline]
    pub fn right_divide(&self, a: Label, b: Label) -> Label {
        let n = self.n();
        assert!(
            a >= 1 && a as usize <= n && b >= 1 && b as usize <= n,
            "right_divide({a}, {b}) out of range for order {n}"
        );
        self.rdiv[(a as usize - 1) * n + (b as usize - 1)]
    }

    /// Exhaustive associativity sweep; deterministic first witness in
    /// lexicographic `(x, y, z)` order.
    pub fn associativity_witness(&self) -> CheckResult {
        self.associativity_witness_with_mode(SweepMode::Parallel)
    }

    pub fn associativity_witness_with_mode(&self, mode: SweepMode) -> CheckResult {
        properties::run_identity(self, None, PropertyId::Assoc, mode)
    }
}

/// A quasigroup with a certified two-sided identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loop {
    q: Quasigroup,
    identity: Label,
}

impl Loop {
    /// Finds the two-sided identity, if any. At most one element can act
    /// as an identity on both sides, so the first hit is the only one.
    pub fn certify(q: Quasigroup) -> Result<Self, LoopError> {
        let n = q.n();
        let identity = (1..=n as Label).find(|&e| {
            (1..=n as Label).all(|x| q.prod(e, x) == x && q.prod(x, e) == x)
        });
        match identity {
            Some(identity) => Ok(Loop { q, identity }),
            None => Err(LoopError::NoIdentity),
        }
    }

    pub fn n(&self) -> usize {
        self.q.n()
    }

    pub fn identity(&self) -> Label {
        self.identity
    }

    pub fn quasigroup(&self) -> &Quasigroup {
        &self.q
    }

    pub fn table(&self) -> &Table {
        self.q.table()
    }

    pub fn multiply(&self, x: Label, y: Label) -> Result<Label, LoopError> {
        self.q.multiply(x, y)
    }

    #[inline]
    pub(crate) fn prod(&self, x: Label, y: Label) -> Label {
        self.q.prod(x, y)
    }

    pub fn left_divide(&self, a: Label, b: Label) -> Label {
        self.q.left_divide(a, b)
    }

    pub fn right_divide(&self, a: Label, b: Label) -> Label {
        self.q.right_divide(a, b)
    }

    pub fn associativity_witness(&self) -> CheckResult {
        self.q.associativity_witness()
    }

    /// The two-sided inverse of every element, or the first element whose
    /// left and right inverses disagree (scanning 1 upward).
    pub fn inverse_map(&self) -> Result<InverseMap, LoopError> {
        let e = self.identity;
        let n = self.n();
        let mut inv = Vec::with_capacity(n);
        for x in 1..=n as Label {
            let left = self.q.right_divide(x, e); // left * x = e
            let right = self.q.left_divide(x, e); // x * right = e
            if left != right {
                return Err(LoopError::NotInvertible {
                    element: x,
                    left,
                    right,
                });
            }
            inv.push(left);
        }
        Ok(InverseMap { inv })
    }

    /// The smallest subset containing the identity and `seed` that is
    /// closed under multiplication and both divisions, returned sorted.
    /// Panics if a seed element is out of range.
    pub fn generated_subloop(&self, seed: &[Label]) -> Vec<Label> {
        let n = self.n();
        let mut member = vec![false; n + 1];
        let mut elems: Vec<Label> = Vec::new();
        let add = |member: &mut Vec<bool>, elems: &mut Vec<Label>, v: Label| {
            if !member[v as usize] {
                member[v as usize] = true;
                elems.push(v);
            }
        };
        add(&mut member, &mut elems, self.identity);
        for &s in seed {
            assert!(
                s >= 1 && s as usize <= n,
                "seed element {s} out of range for order {n}"
            );
            add(&mut member, &mut elems, s);
        }
        let mut i = 0;
        while i < elems.len() {
            let a = elems[i];
            for j in 0..=i {
                let b = elems[j];
                for v in [
                    self.q.prod(a, b),
                    self.q.prod(b, a),
                    self.q.left_divide(a, b),
                    self.q.left_divide(b, a),
                    self.q.right_divide(a, b),
                    self.q.right_divide(b, a),
                ] {
                    add(&mut member, &mut elems, v);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }
}

/// Whether multiplication restricted to `elems` associates. Callers pass a
/// set already closed under the product.
pub(crate) fn elements_associative(q: &Quasigroup, elems: &[Label]) -> bool {
    elems.iter().all(|&a| {
        elems.iter().all(|&b| {
            let ab = q.prod(a, b);
            elems
                .iter()
                .all(|&c| q.prod(ab, c) == q.prod(a, q.prod(b, c)))
        })
    })
}

/// Two-sided inverses of a loop, indexed by element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseMap {
    inv: Vec<Label>,
}

impl InverseMap {
    pub fn n(&self) -> usize {
        self.inv.len()
    }

    /// The inverse of `x`. Panics out of range.
    #[inline]
    pub fn of(&self, x: Label) -> Label {
        assert!(
            x >= 1 && x as usize <= self.inv.len(),
            "element {x} out of range for order {}",
            self.inv.len()
        );
        self.inv[x as usize - 1]
    }

    /// Pairs `(x, inverse of x)` in element order.
    pub fn iter(&self) -> impl Iterator<Item = (Label, Label)> + '_ {
        self.inv
            .iter()
            .enumerate()
            .map(|(i, &v)| ((i + 1) as Label, v))
    }
}
