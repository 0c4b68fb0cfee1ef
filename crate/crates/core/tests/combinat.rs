use proptest::prelude::*;
use wigner_moments::combinat::{pairings, partitions, permutations, Permutation, SetPartition};

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n).prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle()).prop_map(|v| Permutation::from_images(v).unwrap())
}

fn two_permutations(max_n: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=max_n).prop_flat_map(|n| {
        let ids: Vec<usize> = (0..n).collect();
        (Just(ids.clone()).prop_shuffle(), Just(ids).prop_shuffle())
    })
    .prop_map(|(a, b)| (Permutation::from_images(a).unwrap(), Permutation::from_images(b).unwrap()))
}

fn labels(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0..n, n)
}

fn three_partitions(max_n: usize) -> impl Strategy<Value = (SetPartition, SetPartition, SetPartition)> {
    (1..=max_n)
        .prop_flat_map(|n| (labels(n), labels(n), labels(n)))
        .prop_map(|(a, b, c)| (SetPartition::from_labels(&a), SetPartition::from_labels(&b), SetPartition::from_labels(&c)))
}

proptest! {
    #[test]
    fn composition_is_associative_and_inverse_cancels((p, q) in two_permutations(9)) {
        let r = q.inverse();
        prop_assert_eq!(p.compose(&q).unwrap().compose(&r).unwrap(), p.compose(&q.compose(&r).unwrap()).unwrap());
        prop_assert_eq!(p.compose(&p.inverse()).unwrap(), Permutation::identity(p.size()));
    }

    #[test]
    fn length_is_subadditive((p, q) in two_permutations(9)) {
        prop_assert!(p.compose(&q).unwrap().length() <= p.length() + q.length());
        prop_assert_eq!(p.length(), p.inverse().length());
    }

    #[test]
    fn cycles_round_trip(p in permutation(10)) {
        let rebuilt = Permutation::from_cycles(p.size(), &p.cycles()).unwrap();
        prop_assert_eq!(&rebuilt, &p);
        prop_assert_eq!(Permutation::parse(p.size(), &p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(p.cycles().len(), p.cycle_count());
    }

    #[test]
    fn restriction_is_a_bijection_of_the_subset(p in permutation(10), mask in proptest::collection::vec(any::<bool>(), 10)) {
        let subset: Vec<usize> = (0..p.size()).filter(|&i| mask[i]).collect();
        prop_assume!(!subset.is_empty());
        let r = p.restrict(&subset).unwrap();
        let mut images: Vec<usize> = subset.iter().map(|&x| r.apply(x)).collect();
        images.sort_unstable();
        prop_assert_eq!(images, subset.clone());
        // cycles of the restriction are the cycles of p with outside points deleted
        let inside = |x: &usize| subset.contains(x);
        let mut expected: Vec<Vec<usize>> = p.cycles().into_iter().map(|c| c.into_iter().filter(inside).collect::<Vec<_>>()).filter(|c: &Vec<usize>| !c.is_empty()).collect();
        expected.sort();
        let mut got: Vec<Vec<usize>> = r.cycles().into_iter().filter(|c| inside(&c[0])).collect();
        got.sort();
        // compare as sets of cyclic sequences: rotate each to start at its minimum
        let canon = |v: Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            let mut out: Vec<Vec<usize>> = v.into_iter().map(|mut c| {
                let i = c.iter().enumerate().min_by_key(|(_, &x)| x).unwrap().0;
                c.rotate_left(i);
                c
            }).collect();
            out.sort();
            out
        };
        prop_assert_eq!(canon(got), canon(expected));
    }

    #[test]
    fn join_is_a_lattice_operation((a, b, c) in three_partitions(9)) {
        let ab = a.join(&b).unwrap();
        prop_assert_eq!(&ab, &b.join(&a).unwrap());
        prop_assert_eq!(ab.join(&c).unwrap(), a.join(&b.join(&c).unwrap()).unwrap());
        prop_assert_eq!(a.join(&a).unwrap(), a.clone());
        prop_assert!(a.refines(&ab).unwrap() && b.refines(&ab).unwrap());
        prop_assert!(a.meet(&b).unwrap().refines(&a).unwrap());
        // join is the finest common coarsening: anything above both is above the join
        prop_assert!(ab.refines(&a.join(&c).unwrap().join(&b).unwrap()).unwrap());
    }

    #[test]
    fn join_agrees_with_closure_definition((a, b, _c) in three_partitions(8)) {
        // x ~ y iff connected by a chain alternating between a-blocks and b-blocks
        let n = a.size();
        let mut reach = vec![vec![false; n]; n];
        for x in 0..n {
            for y in 0..n {
                reach[x][y] = a.same_block(x, y) || b.same_block(x, y);
            }
        }
        for k in 0..n {
            for x in 0..n {
                for y in 0..n {
                    if reach[x][k] && reach[k][y] {
                        reach[x][y] = true;
                    }
                }
            }
        }
        let j = a.join(&b).unwrap();
        for x in 0..n {
            for y in 0..n {
                prop_assert_eq!(j.same_block(x, y), reach[x][y]);
            }
        }
    }

    #[test]
    fn partition_text_round_trip((a, _b, _c) in three_partitions(9)) {
        prop_assert_eq!(SetPartition::parse(a.size(), &a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(a.length(), a.size() - a.blocks().len());
    }
}

#[test]
fn enumerations_are_canonical_and_exhaustive() {
    // every partition of 6 appears once, each in canonical form
    let all: Vec<SetPartition> = partitions(6).collect();
    for p in &all {
        assert_eq!(&SetPartition::parse(6, &p.to_string()).unwrap(), p);
    }
    assert_eq!(all.len(), 203);
    assert_eq!(pairings(8).count(), 105);
    assert_eq!(permutations(6).count(), 720);
    assert_eq!(pairings(7).count(), 0);
}
