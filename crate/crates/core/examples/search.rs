//! Search for coherent hole-with-hat-free weighted graphs and run the split
//! pipeline on any that contain a forcer.

use hatfree::formats::to_graph6;
use hatfree::harness::search::{default_search_specs, run_pipeline, search_instances, with_forcer, Builder};

fn main() -> hatfree::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let mut found = Vec::new();
    for spec in default_search_specs(seed) {
        let got = search_instances(&spec)?;
        let what = match &spec.builder {
            Builder::Substitution { base, max_part } => format!("substitution into {} (parts <= {max_part})", to_graph6(base)),
            Builder::RandomFiltered { n, p, trials } => format!("{trials} random graphs, n = {n}, p = {p}"),
        };
        println!("{what}, eps = {}: {} instances", spec.eps, got.len());
        found.extend(got);
    }
    for inst in with_forcer(&found) {
        for run in run_pipeline(inst)? {
            println!("{}: C={} D={} -> fracture A={} Y={}", to_graph6(&inst.graph), run.optimal.c, run.optimal.d, run.fracture.a, run.fracture.y);
        }
    }
    if found.is_empty() {
        println!("no instance found");
    }
    Ok(())
}
