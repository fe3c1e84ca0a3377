//! Exact coherence checks and the big component.

use hatfree::coherence::{big_component, check_coherence, WeightMap};
use hatfree::graph::named;
use num_rational::BigRational;

fn main() -> hatfree::Result<()> {
    let eps = BigRational::new(1.into(), 6.into());
    let two_k5 = named::disjoint_union(&named::complete(5), &named::complete(5));
    let w = WeightMap::uniform(10);
    let rep = check_coherence(&two_k5, &w, &eps)?;
    println!("two K5, eps = {eps}: coherent = {}", rep.ok);
    for v in &rep.violations {
        println!("  {:?} {:?}", v.condition, v.witness.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    }

    // one heavy clique and a light tail: the clique is the big component
    let g = named::disjoint_union(&named::complete(6), &named::path(2));
    let w = WeightMap::from_ratios(&[(3, 20), (3, 20), (3, 20), (3, 20), (3, 20), (3, 20), (1, 20), (1, 20)])?;
    let eps = BigRational::new(1.into(), 5.into());
    println!("big component of K6 + K2: {}", big_component(&g, &w, &eps, g.vertices())?);
    Ok(())
}
