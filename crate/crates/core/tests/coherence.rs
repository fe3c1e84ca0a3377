mod common;

use common::{arb_graph, r};
use hatfree::coherence::{big_component, check_coherence, WeightMap};
use hatfree::graph::Side;
use hatfree::{Graph, VertexSet};
use num_rational::BigRational;
use proptest::prelude::*;

fn arb_instance() -> impl Strategy<Value = (Graph, WeightMap)> {
    arb_graph(1, 7).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), prop::collection::vec(1i64..6, n)).prop_map(|(g, raw)| {
            let total: i64 = raw.iter().sum();
            (g, WeightMap::new(raw.iter().map(|&x| r(x, total)).collect()).unwrap())
        })
    })
}

fn eps_list() -> Vec<BigRational> {
    vec![r(1, 10), r(1, 6), r(1, 5), r(1, 4), r(1, 3), r(1, 2), r(1, 1)]
}

/// Condition 3 by enumerating every ordered pair of disjoint sets.
fn anticomplete_ok(g: &Graph, w: &WeightMap, eps: &BigRational, x: VertexSet) -> bool {
    for a in x.subsets().filter(|a| !a.is_empty() && &w.weight(*a) >= eps) {
        for b in (x - a).subsets() {
            if !b.is_empty() && g.is_anticomplete(a, b) && &w.weight(b) >= eps {
                return false;
            }
        }
    }
    true
}

fn coherence_oracle(g: &Graph, w: &WeightMap, eps: &BigRational) -> bool {
    g.vertices().iter().all(|v| w.get(v) < eps && &w.weight(g.neighbours(v)) < eps)
        && anticomplete_ok(g, w, eps, g.vertices())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn verdict_matches_oracle_and_violations_replay((g, w) in arb_instance(), i in 0usize..7) {
        let eps = &eps_list()[i];
        let rep = check_coherence(&g, &w, eps).unwrap();
        prop_assert_eq!(rep.ok, coherence_oracle(&g, &w, eps));
        prop_assert_eq!(rep.ok, rep.violations.is_empty());
        for v in &rep.violations {
            prop_assert!(v.replays(&g, &w, eps));
        }
    }

    #[test]
    fn coherence_is_monotone_in_eps((g, w) in arb_instance()) {
        let eps = eps_list();
        let verdicts: Vec<bool> = eps.iter().map(|e| check_coherence(&g, &w, e).unwrap().ok).collect();
        for k in 1..verdicts.len() {
            prop_assert!(!verdicts[k - 1] || verdicts[k]);
        }
    }

    #[test]
    fn big_component_leaves_less_than_eps((g, w) in arb_instance(), i in 0usize..4, x: u64) {
        let eps = &eps_list()[i];
        let x = VertexSet::from_bits(x & g.vertices().bits());
        let three = BigRational::from_integer(3.into());
        prop_assume!(w.weight(x) >= eps * &three);
        match big_component(&g, &w, eps, x) {
            Ok(y) => {
                prop_assert!(g.components(x, Side::Direct).contains(&y));
                prop_assert!(w.weight(x - y) < *eps);
            }
            Err(hatfree::Error::NotCoherent { .. }) => prop_assert!(!anticomplete_ok(&g, &w, eps, x)),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }
}
