//! Search for coherent hole-with-hat-free weighted graphs, and the split
//! pipeline run on those that contain a forcer.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coherence::{is_coherent, WeightMap};
use crate::decomposition::{fracture_from_split, is_Y_split, optimalize_split, split_from_forcer_traced, Fracture, Split};
use crate::detectors::{find_forcer, has_hole_with_hat, forcers};
use crate::error::{Error, Result};
use crate::graph::{named, Graph};

/// Largest instance the search will emit.
pub const MAX_INSTANCE_N: usize = 20;

#[derive(Clone, Debug)]
pub enum Builder {
    /// Every vertex of `base` blown up to a clique or stable set of size
    /// `1..=max_part`.
    Substitution { base: Graph, max_part: usize },
    /// `trials` random graphs on `n` vertices with edge probability `p`.
    RandomFiltered { n: usize, p: f64, trials: usize },
}

#[derive(Clone, Debug)]
pub struct InstanceSearchSpec {
    pub builder: Builder,
    pub eps: BigRational,
    pub seed: u64,
    /// Cap on candidates examined.
    pub limit: usize,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: Graph,
    pub weights: WeightMap,
    pub eps: BigRational,
}

/// Uniform weights, and for substitutions also weights that give every
/// base vertex the same total.
fn weightings(n: usize, owner: Option<&[usize]>, parts: usize) -> Vec<WeightMap> {
    let mut out = vec![WeightMap::uniform(n)];
    if let Some(owner) = owner {
        let mut count = vec![0i64; parts];
        for &o in owner {
            count[o] += 1;
        }
        let w: Vec<BigRational> =
            owner.iter().map(|&o| BigRational::new(1.into(), (count[o] * parts as i64).into())).collect();
        let w = WeightMap::new(w).expect("positive weights");
        if !out.contains(&w) {
            out.push(w);
        }
    }
    out
}

fn accept(g: &Graph, ws: Vec<WeightMap>, eps: &BigRational, out: &mut Vec<Instance>) -> Result<()> {
    if g.n() > MAX_INSTANCE_N || has_hole_with_hat(g) {
        return Ok(());
    }
    for w in ws {
        if is_coherent(g, &w, eps)? {
            out.push(Instance { graph: g.clone(), weights: w, eps: eps.clone() });
        }
    }
    Ok(())
}

/// Candidates from `spec.builder` that pass exact hole-with-hat and
/// coherence checks. Nothing is assumed about closure under substitution;
/// an empty result means none was found.
pub fn search_instances(spec: &InstanceSearchSpec) -> Result<Vec<Instance>> {
    if spec.eps <= BigRational::from_integer(0.into()) || spec.eps.clone() * BigRational::from_integer(5.into()) > BigRational::from_integer(1.into()) {
        return Err(Error::precondition("eps must satisfy 0 < 5*eps <= 1"));
    }
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match &spec.builder {
        Builder::Substitution { base, max_part } => {
            let k = base.n();
            let mut sizes = vec![1usize; k];
            let mut seen = 0;
            'outer: loop {
                for mask in 0u64..(1u64 << k) {
                    if seen >= spec.limit {
                        break 'outer;
                    }
                    seen += 1;
                    let cliques: Vec<bool> = (0..k).map(|i| mask >> i & 1 == 1).collect();
                    if sizes.iter().sum::<usize>() <= MAX_INSTANCE_N {
                        let (g, owner) = base.substitute(&sizes, &cliques)?;
                        accept(&g, weightings(g.n(), Some(&owner), k), &spec.eps, &mut out)?;
                    }
                }
                // odometer over part sizes
                let mut i = 0;
                loop {
                    if i == k {
                        break 'outer;
                    }
                    if sizes[i] < *max_part {
                        sizes[i] += 1;
                        break;
                    }
                    sizes[i] = 1;
                    i += 1;
                }
            }
        }
        Builder::RandomFiltered { n, p, trials } => {
            if *n > MAX_INSTANCE_N {
                return Err(Error::TooLarge { what: format!("n = {n}"), limit: format!("n <= {MAX_INSTANCE_N}") });
            }
            for _ in 0..(*trials).min(spec.limit) {
                let edges: Vec<(usize, usize)> = (1..*n)
                    .flat_map(|j| (0..j).map(move |i| (i, j)))
                    .filter(|_| rng.gen_bool(*p))
                    .collect();
                let g = Graph::new(*n, &edges)?;
                accept(&g, weightings(*n, None, 0), &spec.eps, &mut out)?;
            }
        }
    }
    Ok(out)
}

/// The searches run by default: substitutions into a few small templates
/// and random graphs, all at `eps = 1/5`.
pub fn default_search_specs(seed: u64) -> Vec<InstanceSearchSpec> {
    let eps = BigRational::new(1.into(), 5.into());
    let templates = [named::forcer(), named::cycle(5), named::cycle(6), named::path(4), named::complete_bipartite(3, 3)];
    let mut specs: Vec<InstanceSearchSpec> = templates
        .into_iter()
        .map(|base| InstanceSearchSpec {
            builder: Builder::Substitution { base, max_part: 2 },
            eps: eps.clone(),
            seed,
            limit: 20_000,
        })
        .collect();
    for n in [10, 14, 18] {
        specs.push(InstanceSearchSpec {
            builder: Builder::RandomFiltered { n, p: 0.5, trials: 300 },
            eps: eps.clone(),
            seed,
            limit: 300,
        });
    }
    specs
}

#[derive(Clone, Debug)]
pub struct PipelineRun {
    pub split: Split,
    pub optimal: Split,
    pub y: crate::graph::VertexSet,
    pub fracture: Fracture,
}

/// For every forcer: construct a split, make it optimal for the designated
/// component, and build the fracture, re-validating each output.
pub fn run_pipeline(inst: &Instance) -> Result<Vec<PipelineRun>> {
    let g = &inst.graph;
    let mut out = Vec::new();
    for f in forcers(g) {
        let (split, sc, big) = split_from_forcer_traced(g, &inst.weights, &inst.eps, &f)?;
        let y = sc.designated(g, &split, big);
        if !is_Y_split(g, split.c, split.d, y) {
            return Err(Error::internal("constructed split is not a Y-split"));
        }
        let optimal = optimalize_split(g, split.c, split.d, y)?;
        let fracture = fracture_from_split(g, &optimal, y)?;
        if !fracture.is_valid_in(g) {
            return Err(Error::internal("fracture fails its invariants"));
        }
        out.push(PipelineRun { split, optimal, y, fracture });
    }
    Ok(out)
}

/// Emitted instances that contain a forcer.
pub fn with_forcer(instances: &[Instance]) -> Vec<&Instance> {
    instances.iter().filter(|i| find_forcer(&i.graph).is_some()).collect()
}
