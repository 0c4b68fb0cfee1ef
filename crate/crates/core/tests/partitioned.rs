mod common;

use std::collections::HashMap;

use common::{catalan, compositions, shape};
use wigner_moments::annular::AnnulusShape;
use wigner_moments::combinat::{pairings, partitions, permutations, Permutation, SetPartition};
use wigner_moments::partitioned::*;

/// Every partition `U` with `0_π ≤ U`, built from partitions of the cycle set.
fn coarsenings(p: &Permutation) -> Vec<SetPartition> {
    let cycles = p.cycles();
    partitions(cycles.len())
        .map(|q| {
            let mut labels = vec![0; p.size()];
            for (i, c) in cycles.iter().enumerate() {
                for &x in c {
                    labels[x] = q.block_of(i);
                }
            }
            SetPartition::from_labels(&labels)
        })
        .collect()
}

fn check_tree_equals_product(s: &AnnulusShape, perms: impl Iterator<Item = Permutation>) {
    for p in perms {
        for u in coarsenings(&p) {
            let pp = PartitionedPermutation::new(u, p.clone()).unwrap();
            assert_eq!(is_nc_partitioned(&pp, s).unwrap(), is_nc_by_product(&pp, s).unwrap(), "{s} {pp}");
        }
    }
}

#[test]
fn tree_condition_matches_product_on_all_small_shapes() {
    for o in compositions(5, 5) {
        let s = shape(&o);
        check_tree_equals_product(&s, permutations(s.total()));
    }
}

#[test]
fn enumeration_agrees_with_filtering() {
    // the pruned search returns exactly the tree-like coarsenings
    for o in compositions(6, 3) {
        let s = shape(&o);
        let mut listed: Vec<PartitionedPermutation> = enumerate_ps_nc(&s).collect();
        listed.sort();
        let mut filtered = Vec::new();
        for p in permutations(s.total()) {
            for u in coarsenings(&p) {
                let pp = PartitionedPermutation::new(u, p.clone()).unwrap();
                if is_nc_partitioned(&pp, &s).unwrap() {
                    filtered.push(pp);
                }
            }
        }
        filtered.sort();
        assert_eq!(listed, filtered, "{o:?}");
    }
}

#[test]
fn loop_free_pairings_by_filtering() {
    for o in compositions(6, 6).into_iter().filter(|o| o.iter().sum::<usize>() % 2 == 0) {
        let s = shape(&o);
        let mut listed: Vec<_> = enumerate_ps_nc2_loop_free(&s).collect();
        listed.sort();
        let mut filtered = Vec::new();
        for pairing in pairings(s.total()) {
            let sigma = Permutation::from_partition_pairs(&pairing).unwrap();
            for u in coarsenings(&sigma) {
                let pp = PartitionedPermutation::new(u, sigma.clone()).unwrap();
                if is_nc_partitioned(&pp, &s).unwrap() && is_loop_free(&pp, &s).unwrap() {
                    filtered.push(pp);
                }
            }
        }
        filtered.sort();
        assert_eq!(listed, filtered, "{o:?}");
    }
    assert_eq!(enumerate_ps_nc2_loop_free(&shape(&[2, 2])).count(), 3);
}

#[test]
fn one_circle_cycle_partitions_are_catalan() {
    for m in 1..=7 {
        let s = shape(&[m]);
        let n = enumerate_ps_nc(&s).filter(|pp| *pp.part() == pp.perm().cycle_partition()).count();
        assert_eq!(n as u64, catalan(m));
    }
}

#[test]
fn restricted_families_are_nested() {
    for o in [vec![2, 2], vec![1, 3], vec![2, 2, 2], vec![1, 1, 2, 2]] {
        let s = shape(&o);
        let all: Vec<_> = enumerate_ps_nc(&s).collect();
        let small: Vec<_> = enumerate_ps_nc21(&s).collect();
        let pairs: Vec<_> = enumerate_ps_nc2(&s).collect();
        assert!(small.iter().all(|pp| all.contains(pp)));
        assert!(pairs.iter().all(|pp| small.contains(pp)));
        assert_eq!(small.len(), all.iter().filter(|pp| pp.perm().cycles().iter().all(|c| c.len() <= 2)).count());
    }
}

#[test]
fn loop_free_pairing_is_unique_per_partition() {
    for o in compositions(8, 8).into_iter().filter(|o| o.iter().sum::<usize>() % 2 == 0) {
        let s = shape(&o);
        let mut seen: HashMap<SetPartition, Permutation> = HashMap::new();
        for pp in enumerate_ps_nc2_loop_free(&s) {
            if let Some(other) = seen.insert(pp.part().clone(), pp.perm().clone()) {
                panic!("{o:?}: {} carries {} and {}", pp.part(), other, pp.perm());
            }
        }
    }
}

#[test]
fn related_blocks_are_symmetric() {
    for o in [vec![2, 2, 2, 2], vec![4, 2, 2], vec![3, 3, 2]] {
        let s = shape(&o);
        for pp in enumerate_ps_nc2_loop_free(&s) {
            let rel = related_blocks(&pp, &s).unwrap();
            for (b, set) in rel.iter().enumerate() {
                assert!(!set.contains(&b));
                assert!(set.iter().all(|&c| rel[c].contains(&b)));
            }
        }
    }
}
