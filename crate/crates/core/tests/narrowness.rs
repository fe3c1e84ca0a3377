mod common;

use common::{arb_graph, grid_max, r};
use hatfree::coherence::WeightMap;
use hatfree::harness::enumerate::{enumerate_levels, Filter};
use hatfree::narrowness::{certify_narrow, is_good, Value, Verdict};
use hatfree::Graph;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn graphs_upto(n: usize) -> Vec<Graph> {
    enumerate_levels(n, &[]).unwrap().into_iter().flatten().filter(|g| g.n() > 0).collect()
}

fn exact(v: &Value) -> BigRational {
    v.as_exact().expect("integer alpha stays exact").clone()
}

#[test]
fn vertex_maximum_matches_grid_oracle() {
    for g in graphs_upto(6) {
        for alpha in [1u32, 2] {
            let cert = certify_narrow(&g, &r(alpha as i64, 1)).unwrap();
            let best = exact(&cert.max_value);
            let lcm = cert.argmax.iter().fold(1i64, |l, x| l.lcm(&x.denom().to_i64().unwrap()));
            // the grid must contain the argmax at n = 6 only when cheap
            let k = if g.n() <= 5 { lcm.max(12) } else { lcm.max(4) };
            let grid = grid_max(&g, k, alpha);
            assert!(grid <= best, "{} alpha={alpha}: grid {grid} beats {best}", hatfree::formats::to_graph6(&g));
            if k % lcm == 0 {
                let diff = (&best - &grid).to_f64().unwrap();
                assert!(diff.abs() < 1e-6, "{} alpha={alpha}: grid {grid} vs {best}", hatfree::formats::to_graph6(&g));
            }
        }
    }
}

#[test]
fn argmax_is_good() {
    for g in graphs_upto(6) {
        for alpha in [r(1, 1), r(3, 2), r(2, 1)] {
            let cert = certify_narrow(&g, &alpha).unwrap();
            let f = WeightMap::new(cert.argmax.clone()).unwrap();
            assert!(is_good(&g, &f).unwrap().0);
        }
    }
}

#[test]
fn narrowness_is_hereditary() {
    for g in graphs_upto(6) {
        for alpha in [r(1, 1), r(2, 1)] {
            if certify_narrow(&g, &alpha).unwrap().is_narrow() {
                for v in 0..g.n() {
                    let h = g.delete_vertex(v);
                    if h.n() > 0 {
                        assert!(certify_narrow(&h, &alpha).unwrap().is_narrow());
                    }
                }
            }
        }
    }
}

#[test]
fn perfect_graphs_have_maximum_one() {
    for g in enumerate_levels(6, &[Filter::Perfect]).unwrap().into_iter().flatten().filter(|g| g.n() > 0) {
        let cert = certify_narrow(&g, &r(1, 1)).unwrap();
        assert_eq!(exact(&cert.max_value), r(1, 1));
        assert_eq!(cert.verdict, Verdict::Narrow);
    }
}

const ALPHAS: [(i64, i64); 6] = [(1, 1), (9, 8), (5, 4), (3, 2), (2, 1), (3, 1)];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn verdict_is_monotone_in_alpha(g in arb_graph(1, 6), i in 0usize..6, j in 0usize..6) {
        let (lo, hi) = (ALPHAS[i.min(j)], ALPHAS[i.max(j)]);
        let a = certify_narrow(&g, &r(lo.0, lo.1)).unwrap();
        let b = certify_narrow(&g, &r(hi.0, hi.1)).unwrap();
        if a.verdict == Verdict::Narrow {
            prop_assert_eq!(b.verdict, Verdict::Narrow);
        }
        prop_assert!(b.max_value.to_f64() <= a.max_value.to_f64() + 1e-12);
    }
}

#[test]
fn grid_oracle_sees_the_c5_vertex() {
    let c5 = hatfree::graph::named::cycle(5);
    assert_eq!(grid_max(&c5, 4, 1), r(5, 4));
    assert_eq!(grid_max(&c5, 3, 1), r(1, 1));
}
