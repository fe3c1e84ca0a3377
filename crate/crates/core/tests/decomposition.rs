mod common;

use common::{arb_graph, hole_with_hat_oracle};
use hatfree::decomposition::{all_y_fractures, homogeneous_partition, is_Y_split, is_optimal_Y_split, optimalize_split};
use hatfree::graph::Side;
use hatfree::{Graph, VertexSet};
use proptest::prelude::*;

/// No vertex of `z` outside `h` is mixed on `h`.
fn homogeneous_in(g: &Graph, h: VertexSet, z: VertexSet) -> bool {
    (z - h).iter().all(|v| {
        let k = (g.neighbours(v) & h).len();
        k == 0 || k == h.len()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn y_fractures_revalidate(g in arb_graph(3, 8)) {
        prop_assume!(!hole_with_hat_oracle(&g));
        for f in all_y_fractures(&g) {
            prop_assert!(f.is_valid_in(&g));
            prop_assert!(is_optimal_Y_split(&g, &f.split(), f.y).unwrap());
        }
    }

    #[test]
    fn optimalized_splits_are_optimal(g in arb_graph(3, 8), c: u64) {
        let c = VertexSet::from_bits(c & g.vertices().bits());
        let d = g.complete_to(c);
        let rest = g.vertices() - c - d;
        for y in g.components(rest, Side::Direct) {
            if is_Y_split(&g, c, d, y) {
                let s = optimalize_split(&g, c, d, y).unwrap();
                prop_assert!(c.is_subset(s.c));
                prop_assert!(is_Y_split(&g, s.c, s.d, y));
                prop_assert!(is_optimal_Y_split(&g, &s, y).unwrap());
            }
        }
    }

    #[test]
    fn homogeneous_parts_partition_and_are_maximal(g in arb_graph(4, 7)) {
        for z in g.vertices().subsets() {
            if z.len() < 2 || !g.is_connected(z) || !g.is_anticonnected(z) {
                continue;
            }
            let p = homogeneous_partition(&g, z).unwrap();
            prop_assert!(p.parts.len() > 1);
            let mut union = VertexSet::EMPTY;
            for &part in &p.parts {
                prop_assert!(part.is_disjoint(union));
                union |= part;
                prop_assert!(homogeneous_in(&g, part, z));
                for sup in z.subsets() {
                    if sup != z && part.is_subset(sup) && sup != part {
                        prop_assert!(!homogeneous_in(&g, sup, z), "{} extends {}", sup, part);
                    }
                }
            }
            prop_assert_eq!(union, z);
        }
    }
}
