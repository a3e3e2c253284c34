#![allow(dead_code)]

use std::collections::BTreeMap;

use hypergroup_core::constructions::{s_family, utumi, SFamilySizes, UtumiInput};
use hypergroup_core::corpus::{coset_cases, tiny_hypergroups};
use hypergroup_core::constructions::{left_coset_hypergroup, right_coset_hypergroup};
use hypergroup_core::groups::cyclic_group;
use hypergroup_core::presentations::{Presentation, Trame};
use hypergroup_core::{EquivalenceRelation, Hypergroup, Multistructure, Subset};
use proptest::prelude::*;

/// Hypergroups with at most `max_n` elements drawn from the corpus, Utumi and S-family examples.
pub fn hypergroup_pool(max_n: usize) -> Vec<Hypergroup> {
    let mut pool: Vec<Hypergroup> = tiny_hypergroups().unwrap().into_iter().map(|(_, h)| h).collect();
    for case in coset_cases(max_n) {
        pool.push(right_coset_hypergroup(&case.group, &case.subgroup).unwrap());
        pool.push(left_coset_hypergroup(&case.group, &case.subgroup).unwrap());
    }
    let z8 = Hypergroup::new(cyclic_group(8).unwrap().as_multistructure().unwrap()).unwrap();
    let part = EquivalenceRelation::from_blocks(8, &[vec![0], vec![1, 4, 7], vec![2, 3, 5, 6]]).unwrap();
    pool.push(Hypergroup::new(utumi(&UtumiInput::new(z8, part, 0).unwrap())).unwrap());
    for sizes in [vec![3, 4], vec![4, 4], vec![3, 3], vec![5, 3]] {
        if let Ok(h) = Hypergroup::new(s_family(&SFamilySizes::new(sizes).unwrap())) {
            pool.push(h);
        }
    }
    pool.retain(|h| h.len() <= max_n);
    pool
}

pub fn arb_hypergroup(max_n: usize) -> impl Strategy<Value = Hypergroup> {
    prop::sample::select(hypergroup_pool(max_n))
}

pub fn arb_multistructure(max_n: usize) -> impl Strategy<Value = Multistructure> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u64..(1 << n), n * n)
            .prop_map(move |cells| Multistructure::from_fn(n, |i, j| Subset::from_bits(cells[i * n + j])).unwrap())
    })
}

pub fn arb_labels(n: usize) -> impl Strategy<Value = EquivalenceRelation> {
    prop::collection::vec(0..n.max(1), n).prop_map(|l| EquivalenceRelation::from_labels(&l))
}

pub fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Arbitrary trame on at most `max_t` elements with an arbitrary equivalence.
pub fn arb_trame(max_t: usize) -> impl Strategy<Value = Presentation> {
    (1..=max_t).prop_flat_map(|t| {
        (
            prop::collection::vec(prop::option::weighted(0.6, 0..t), t * t),
            prop::collection::vec(0..t, t),
        )
            .prop_map(move |(cells, labels)| {
                let op: BTreeMap<_, _> = cells
                    .iter()
                    .enumerate()
                    .filter_map(|(i, w)| w.map(|w| ((i / t, i % t), w)))
                    .collect();
                let names = (0..t).map(|i| format!("t{i}")).collect();
                Presentation::new(Trame::new(names, op).unwrap(), EquivalenceRelation::from_labels(&labels))
                    .unwrap()
            })
    })
}

/// A canonical-style presentation of a pool hypergroup with a random subset of its witnessing
/// compositions removed, so adequacy holds often but not always.
pub fn arb_thinned_presentation(max_n: usize) -> impl Strategy<Value = Presentation> {
    arb_hypergroup(max_n).prop_flat_map(|h| {
        let n = h.len();
        let count: usize = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).map(|(x, y)| h.product(x, y).len()).sum();
        prop::collection::vec(prop::bool::weighted(0.9), count).prop_map(move |keep| {
            // T = pairs (x, k) with k indexing the composition triples
            let mut triples = Vec::new();
            for x in 0..n {
                for y in 0..n {
                    for z in h.product(x, y) {
                        triples.push((x, y, z));
                    }
                }
            }
            let k = triples.len();
            let elem = |x: usize, t: usize| x * k + t;
            let mut op = BTreeMap::new();
            for (t, &(x, y, z)) in triples.iter().enumerate() {
                if keep[t] {
                    op.insert((elem(x, t), elem(y, t)), elem(z, t));
                }
            }
            let names = (0..n * k).map(|i| format!("t{i}")).collect();
            let labels: Vec<usize> = (0..n * k).map(|i| i / k).collect();
            Presentation::new(Trame::new(names, op).unwrap(), EquivalenceRelation::from_labels(&labels)).unwrap()
        })
    })
}
