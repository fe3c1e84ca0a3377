//! Class counts per size and filter, and the smallest homogeneous number.

use hatfree::harness::enumerate::{enumerate_levels, Filter};
use hatfree::harness::stats::eh_statistics;

fn main() -> hatfree::Result<()> {
    let max_n = 7;
    println!("n  all  hwh-free  house-free  perfect  forcer-free");
    let all = enumerate_levels(max_n, &[])?;
    let per: Vec<_> = [Filter::HoleWithHatFree, Filter::HouseFree, Filter::Perfect, Filter::ForcerFree]
        .iter()
        .map(|f| enumerate_levels(max_n, &[*f]))
        .collect::<hatfree::Result<_>>()?;
    for n in 1..=max_n {
        print!("{n}  {}", all[n].len());
        for level in &per {
            print!("  {}", level[n].len());
        }
        println!();
    }
    for n in 4..=7 {
        let s = eh_statistics(n, &[Filter::HoleWithHatFree])?;
        println!("n = {n}: min max(clique, stable) = {} at {}, exponent {:.3}", s.min, s.argmin, s.exponent);
    }
    Ok(())
}
