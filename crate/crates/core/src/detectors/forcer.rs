use crate::graph::{Graph, VertexSet};

/// Two induced 4-vertex paths of the host graph, complete to each other.
/// These are its constituent paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Forcer {
    pub path1: [usize; 4],
    pub path2: [usize; 4],
}

impl Forcer {
    pub fn path1_set(&self) -> VertexSet {
        self.path1.iter().copied().collect()
    }

    pub fn path2_set(&self) -> VertexSet {
        self.path2.iter().copied().collect()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.path1_set() | self.path2_set()
    }

    /// Checks every defining property against `g`, including the 22-edge count.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let all = self.vertex_set();
        if all.len() != 8 || all.last().is_some_and(|v| v >= g.n()) {
            return false;
        }
        let (g8, _) = g.induced(all);
        is_induced_p4(g, &self.path1)
            && is_induced_p4(g, &self.path2)
            && g.is_complete(self.path1_set(), self.path2_set())
            && g8.edge_count() == 22
    }
}

/// Whether `p` in the listed order is an induced path of `g`.
pub fn is_induced_p4(g: &Graph, p: &[usize; 4]) -> bool {
    let set: VertexSet = p.iter().copied().collect();
    if set.len() != 4 {
        return false;
    }
    (0..4).all(|i| {
        let mut expected = VertexSet::EMPTY;
        if i > 0 {
            expected.insert(p[i - 1]);
        }
        if i < 3 {
            expected.insert(p[i + 1]);
        }
        g.neighbours(p[i]) & set == expected
    })
}

/// Every induced `P4` of `g` inside `within`, once each, oriented so that the
/// first endpoint is the smaller one.
pub fn induced_p4s(g: &Graph, within: VertexSet) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for b in within {
        for c in g.neighbours(b) & within {
            let a_cands = (g.neighbours(b) & within) - g.neighbours(c) - VertexSet::singleton(c);
            let d_cands = (g.neighbours(c) & within) - g.neighbours(b) - VertexSet::singleton(b);
            for a in a_cands {
                for d in d_cands - g.neighbours(a) {
                    if a < d {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

fn orientations(p: [usize; 4]) -> [[usize; 4]; 2] {
    [p, [p[3], p[2], p[1], p[0]]]
}

/// The least ordered representation of the forcer on two path sets.
fn canonical_forcer(p: [usize; 4], q: [usize; 4]) -> Forcer {
    let mut best: Option<Forcer> = None;
    for (x, y) in [(p, q), (q, p)] {
        for a in orientations(x) {
            for b in orientations(y) {
                let f = Forcer { path1: a, path2: b };
                if best.as_ref().is_none_or(|cur| f < *cur) {
                    best = Some(f);
                }
            }
        }
    }
    best.unwrap()
}

/// Every forcer of `g` (one per unordered pair of constituent paths), each
/// in its least ordered representation, sorted by 8-vertex set then tuple.
pub fn forcers(g: &Graph) -> Vec<Forcer> {
    let p4s = induced_p4s(g, g.vertices());
    let sets: Vec<VertexSet> = p4s.iter().map(|p| p.iter().copied().collect()).collect();
    let mut out = Vec::new();
    for i in 0..p4s.len() {
        let common = g.common_neighbours(sets[i]);
        for j in i + 1..p4s.len() {
            if sets[j].is_subset(common) {
                out.push(canonical_forcer(p4s[i], p4s[j]));
            }
        }
    }
    out.sort_by_key(|f| (f.vertex_set().to_vec(), f.clone()));
    out.dedup();
    out
}

/// The least forcer of `g` by sorted vertex set, then tuple order.
pub fn find_forcer(g: &Graph) -> Option<Forcer> {
    if g.n() < 8 {
        return None;
    }
    forcers(g).into_iter().next()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn the_forcer_is_found() {
        let g = forcer();
        assert_eq!(g.edge_count(), 22);
        let f = find_forcer(&g).unwrap();
        assert_eq!(f, Forcer { path1: [0, 1, 2, 3], path2: [4, 5, 6, 7] });
        assert!(f.is_valid_in(&g));
        assert_eq!(forcers(&g).len(), 1);
    }

    #[test]
    fn small_and_complete_graphs_have_none() {
        assert!(find_forcer(&path(7)).is_none());
        assert!(find_forcer(&complete(8)).is_none());
        assert!(induced_p4s(&complete(8), VertexSet::full(8)).is_empty());
    }

    #[test]
    fn p4_listing() {
        assert_eq!(induced_p4s(&path(4), VertexSet::full(4)), vec![[0, 1, 2, 3]]);
        assert_eq!(induced_p4s(&cycle(5), VertexSet::full(5)).len(), 5);
    }

    #[test]
    fn invalid_forcers_are_rejected() {
        let g = forcer();
        let bad = Forcer { path1: [0, 2, 1, 3], path2: [4, 5, 6, 7] };
        assert!(!bad.is_valid_in(&g));
        let mut edges = g.edges();
        edges.retain(|&e| e != (0, 4));
        let g2 = Graph::new(8, &edges).unwrap();
        assert!(find_forcer(&g2).is_none());
    }
}
