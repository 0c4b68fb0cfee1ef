mod common;

use common::{compositions, shape};
use proptest::prelude::*;
use wigner_moments::combinat::SetPartition;
use wigner_moments::graph::LabeledDigraph;

fn shape_and_partition() -> impl Strategy<Value = (Vec<usize>, SetPartition)> {
    proptest::collection::vec(1usize..5, 1..4).prop_flat_map(|o| {
        let m: usize = o.iter().sum();
        (Just(o), proptest::collection::vec(0..m, m).prop_map(|l| SetPartition::from_labels(&l)))
    })
}

proptest! {
    #[test]
    fn quotient_keeps_labels_and_merges_vertices((o, p) in shape_and_partition()) {
        let s = shape(&o);
        let t = LabeledDigraph::of_shape(&s);
        let q = t.quotient(&p).unwrap();
        prop_assert_eq!(q.edges().len(), s.total());
        prop_assert_eq!(q.vertices().len(), p.block_count());
        for (e, f) in t.edges().iter().zip(q.edges()) {
            prop_assert_eq!(e.label, f.label);
            prop_assert!(p.same_block(e.src, f.src) && p.same_block(e.trg, f.trg));
        }
        // edge classes partition the labels; each is balanced iff directions pair up
        let classes = q.edge_classes();
        let total: usize = classes.classes.iter().map(Vec::len).sum();
        prop_assert_eq!(total, s.total());
        for (i, c) in classes.classes.iter().enumerate() {
            let (a, b) = classes.endpoints[i];
            let forward = c.iter().filter(|&&l| q.edge(l).unwrap().src == a).count();
            prop_assert_eq!(q.orientation_balance(c).unwrap(), a == b || 2 * forward == c.len());
        }
    }
}

#[test]
fn components_of_t_are_the_circles() {
    for o in compositions(6, 3) {
        let s = shape(&o);
        let comps = LabeledDigraph::of_shape(&s).connected_components();
        assert_eq!(comps.len(), o.len());
        assert_eq!(SetPartition::from_blocks(s.total(), &comps).unwrap(), s.circle_partition());
    }
}
