//! Cross-checks the generator-closure subloop enumeration against a
//! brute-force oracle that tests all 2^n subsets, on every loop small
//! enough for that to be feasible.

use std::collections::BTreeSet;

use nafil_core::construct::{self, ConstructionParams};
use nafil_core::latin::{Label, Table};
use nafil_core::loops::{Loop, Quasigroup};
use nafil_core::subloops;

/// Every subset of `1..=n` that contains the identity and is closed under
/// multiplication and both divisions. Exponential; callers keep n small.
fn brute_force_subloops(l: &Loop) -> BTreeSet<Vec<Label>> {
    let n = l.n();
    assert!(n <= 16, "the oracle enumerates 2^n subsets");
    let mut found = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        if mask & (1 << (l.identity() - 1)) == 0 {
            continue;
        }
        let elems: Vec<Label> = (1..=n as Label)
            .filter(|&x| mask & (1 << (x - 1)) != 0)
            .collect();
        let closed = elems.iter().all(|&a| {
            elems.iter().all(|&b| {
                elems.binary_search(&l.multiply(a, b).unwrap()).is_ok()
                    && elems.binary_search(&l.left_divide(a, b)).is_ok()
                    && elems.binary_search(&l.right_divide(a, b)).is_ok()
            })
        });
        if closed {
            found.insert(elems);
        }
    }
    found
}

fn to_loop(rows: &[Vec<Label>]) -> Loop {
    Loop::certify(Quasigroup::certify(Table::from_rows(rows).unwrap()).unwrap()).unwrap()
}

fn cyclic(n: usize) -> Loop {
    to_loop(
        &(0..n)
            .map(|i| (0..n).map(|j| ((i + j) % n + 1) as Label).collect())
            .collect::<Vec<_>>(),
    )
}

fn corpus() -> Vec<(String, Loop)> {
    let mut out: Vec<(String, Loop)> = Vec::new();
    for m in 2..=7 {
        let (l, _) = construct::construct(&ConstructionParams::new(m).unwrap()).unwrap();
        out.push((format!("constructed n={}", 2 * m + 1), l));
    }
    for n in 1..=12 {
        out.push((format!("cyclic n={n}"), cyclic(n)));
    }
    out.push((
        "klein".to_string(),
        to_loop(&[
            vec![1, 2, 3, 4],
            vec![2, 1, 4, 3],
            vec![3, 4, 1, 2],
            vec![4, 3, 2, 1],
        ]),
    ));
    // A loop with a non-group subloop: the direct product of the order-5
    // member with the cyclic group of order 2, elements (x, s) numbered
    // x + 5s. Its copy of the order-5 member is a non-associative proper
    // subloop of order 5.
    let l5 = construct::construct(&ConstructionParams::new(2).unwrap())
        .unwrap()
        .0;
    let product_rows: Vec<Vec<Label>> = (1..=10)
        .map(|a: usize| {
            (1..=10)
                .map(|b: usize| {
                    let (x, s) = (((a - 1) % 5 + 1) as Label, (a - 1) / 5);
                    let (y, t) = (((b - 1) % 5 + 1) as Label, (b - 1) / 5);
                    let prod = l5.multiply(x, y).unwrap();
                    prod + 5 * ((s + t) % 2) as Label
                })
                .collect()
        })
        .collect();
    out.push(("l5 x c2".to_string(), to_loop(&product_rows)));
    out
}

#[test]
fn closure_enumeration_agrees_with_the_exponential_oracle() {
    for (name, l) in corpus() {
        let enumerated = subloops::enumerate_subloops(&l).unwrap();
        let from_closure: BTreeSet<Vec<Label>> = enumerated
            .subloops
            .iter()
            .map(|s| s.elements.clone())
            .collect();
        assert_eq!(
            from_closure.len(),
            enumerated.subloops.len(),
            "{name}: duplicate subloops"
        );
        assert_eq!(from_closure, brute_force_subloops(&l), "{name}");
    }
}

#[test]
fn product_loop_exposes_a_nonassociative_proper_subloop() {
    let (_, l) = corpus().pop().map(|p| (p.0, p.1)).unwrap();
    let subs = subloops::enumerate_subloops(&l).unwrap();
    assert_eq!(subs.nonassociative_proper_orders(), vec![5]);
    // The census only counts associative subloops, so the order-5 copy is
    // absent while the nine order-2 subgroups (four inside it, five
    // through the odd-parity square roots of the identity) are counted.
    let census = subloops::subgroup_census(&subs);
    assert_eq!(census.get(&2), Some(&9));
    assert!(!census.contains_key(&5));
}
