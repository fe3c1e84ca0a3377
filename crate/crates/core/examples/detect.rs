//! Run the structure detectors on a few named graphs.

use hatfree::detectors::{extremal_set, find_forcer, find_hole_with_hat, is_perfect, ExtremalKind};
use hatfree::formats::{parse_graph, to_graph6};
use hatfree::graph::named;

fn main() -> hatfree::Result<()> {
    let house = parse_graph("5 6\n0 1\n1 2\n2 3\n3 0\n0 4\n1 4\n")?;
    let graphs = [("house", house), ("C5", named::cycle(5)), ("forcer", named::forcer()), ("C6", named::cycle(6))];
    for (name, g) in &graphs {
        println!("{name} ({})", to_graph6(g));
        match find_hole_with_hat(g) {
            Some(h) => println!("  hole-with-hat: hole {:?}, hat {}", h.hole.cycle, h.hat),
            None => println!("  hole-with-hat free"),
        }
        if let Some(f) = find_forcer(g) {
            println!("  forcer: {:?} complete to {:?}", f.path1, f.path2);
        }
        let p = is_perfect(g);
        match p.witness {
            Some(w) => println!("  imperfect, odd {} {:?}", if w.antihole { "antihole" } else { "hole" }, w.cycle),
            None => println!("  perfect"),
        }
        println!(
            "  largest clique {}, largest stable set {}",
            extremal_set(g, ExtremalKind::Clique),
            extremal_set(g, ExtremalKind::Stable)
        );
    }
    Ok(())
}
