//! Narrowness certificates, the threshold of C5, and critical pairs.

use hatfree::coherence::WeightMap;
use hatfree::graph::named;
use hatfree::narrowness::{certify_narrow, critical_consequences, eh_from_narrow, narrowness_threshold, parse_rational};

fn main() -> hatfree::Result<()> {
    let c5 = named::cycle(5);
    for a in ["1", "5/4", "2"] {
        let alpha = parse_rational(a)?;
        let cert = certify_narrow(&c5, &alpha)?;
        println!("C5 at alpha = {a}: max {} ({:?})", cert.max_value, cert.verdict);
    }
    if let Some(t) = narrowness_threshold(&c5, 1e-12)? {
        println!("C5 becomes narrow at alpha = {t:.12} (log 5 / log 4 = {:.12})", 5f64.ln() / 4f64.ln());
    }

    let one = parse_rational("1")?;
    let f = WeightMap::from_ratios(&[(1, 4); 5])?;
    let cons = critical_consequences(&c5, &f, &one)?;
    println!("uniform 1/4 on C5: strong pair check, {} violations", cons.strong_eh.violations.len());

    let g = named::path(6);
    let s = eh_from_narrow(&g, &one)?;
    println!("P6 is 1-narrow; homogeneous set {s} of size {}", s.len());
    Ok(())
}
