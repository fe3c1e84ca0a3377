//! Y-fractures, optimal splits and the homogeneous partition of small graphs.

use hatfree::decomposition::{all_y_fractures, homogeneous_partition, optimalize_split, Split};
use hatfree::graph::Side;
use hatfree::{Graph, VertexSet};

fn main() -> hatfree::Result<()> {
    // the gem (path 0-1-2-3 under a dominating vertex 4) with a pendant 5 on 4
    let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4), (4, 5)])?;
    for f in all_y_fractures(&g) {
        println!("fracture A={} C={} D={} B={} Y={}", f.a, f.c, f.d, f.b, f.y);
    }

    let s = Split::from_c(&g, VertexSet::from_bits(0b1111));
    for y in g.components(s.rest(&g), Side::Direct) {
        let opt = optimalize_split(&g, s.c, s.d, y)?;
        println!("split C={} D={} is optimal for Y={}: {}", s.c, s.d, y, opt == s);
    }

    // a 4-vertex path whose end 0 is doubled into the clique {0,4}
    let h = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (4, 1), (0, 4)])?;
    let parts = homogeneous_partition(&h, h.vertices())?;
    let shown: Vec<String> = parts.parts.iter().map(|x| x.to_string()).collect();
    println!("homogeneous partition: {}", shown.join(" "));
    Ok(())
}
