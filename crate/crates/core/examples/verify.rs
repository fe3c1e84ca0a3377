//! Exhaustive lemma verification over small hole-with-hat-free graphs.
//!
//! `cargo run --release --example verify -- 7`

use std::time::Instant;

use hatfree::harness::enumerate::Filter;
use hatfree::harness::lemmas::{replays, verify_lemma_upto};
use hatfree::report::LemmaId;

fn main() -> hatfree::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    for lemma in LemmaId::ALL {
        let start = Instant::now();
        let filters: &[Filter] = match lemma {
            LemmaId::HomogPartition => &[],
            _ => &[Filter::HoleWithHatFree],
        };
        let rep = verify_lemma_upto(lemma, n, filters)?;
        let s = rep.summary(start.elapsed());
        println!("{}", serde_json::to_string(&s).expect("summary serializes"));
    }

    // without the filter the first lemma fails, and every failure replays
    let rep = verify_lemma_upto(LemmaId::Wiggly1, 5, &[])?;
    for v in rep.violations.iter().take(3) {
        println!("{}  replays: {}", v.line(LemmaId::Wiggly1), replays(LemmaId::Wiggly1, v)?);
    }
    Ok(())
}
