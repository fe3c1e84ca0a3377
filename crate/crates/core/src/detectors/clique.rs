use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtremalKind {
    Clique,
    Stable,
}

/// Size of a largest clique of `g` inside `within`.
pub fn clique_number_within(g: &Graph, within: VertexSet) -> usize {
    let mut best = 0;
    expand(g, VertexSet::EMPTY, within, &mut best);
    best
}

pub fn clique_number(g: &Graph) -> usize {
    clique_number_within(g, g.vertices())
}

/// Greedy colouring of `p`; returns vertices in colour order with their
/// colour numbers (1-based), non-decreasing.
fn colour_sort(g: &Graph, p: VertexSet) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(p.len());
    let mut uncoloured = p;
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut q = uncoloured;
        while let Some(v) = q.first() {
            out.push((v, colour));
            uncoloured.remove(v);
            q = q - g.neighbours(v) - VertexSet::singleton(v);
        }
    }
    out
}

fn expand(g: &Graph, clique: VertexSet, mut p: VertexSet, best: &mut usize) {
    if p.is_empty() {
        *best = (*best).max(clique.len());
        return;
    }
    let order = colour_sort(g, p);
    for &(v, colour) in order.iter().rev() {
        if clique.len() + colour <= *best {
            return;
        }
        expand(g, clique.with(v), p & g.neighbours(v), best);
        p.remove(v);
    }
}

/// A maximum clique of `g`; among those, the one with the least bitmask.
pub fn max_clique(g: &Graph) -> VertexSet {
    let omega = clique_number(g);
    let mut forced = VertexSet::EMPTY;
    let mut pool = g.vertices();
    // deciding from the top bit down minimises the bitmask
    for v in (0..g.n()).rev() {
        if !pool.contains(v) {
            continue;
        }
        let without = pool.without(v);
        if forced.len() + clique_number_within(g, without) >= omega {
            pool = without;
        } else {
            forced.insert(v);
            pool = without & g.neighbours(v);
        }
    }
    debug_assert!(g.is_clique(forced) && forced.len() == omega);
    forced
}

/// A maximum clique or maximum stable set, ties broken by least bitmask.
pub fn extremal_set(g: &Graph, kind: ExtremalKind) -> VertexSet {
    match kind {
        ExtremalKind::Clique => max_clique(g),
        ExtremalKind::Stable => max_clique(&g.complement()),
    }
}

/// Larger of the clique number and the stability number.
pub fn homogeneous_number(g: &Graph) -> usize {
    clique_number(g).max(clique_number(&g.complement()))
}

/// Chromatic number by exhaustive search over colour classes. Only meant for
/// small graphs.
pub fn chromatic_number(g: &Graph) -> usize {
    let all = g.vertices();
    if all.is_empty() {
        return 0;
    }
    (1..=g.n()).find(|&k| colourable(g, all, k)).unwrap_or(g.n())
}

fn colourable(g: &Graph, rest: VertexSet, k: usize) -> bool {
    let Some(v) = rest.first() else { return true };
    if k == 0 {
        return false;
    }
    // the class containing the least uncoloured vertex
    let cands = rest - g.neighbours(v) - VertexSet::singleton(v);
    for extra in cands.subsets() {
        if g.is_stable(extra) && colourable(g, rest - extra.with(v), k - 1) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn spec_examples() {
        assert_eq!(extremal_set(&complete(5), ExtremalKind::Clique), VertexSet::full(5));
        assert_eq!(extremal_set(&cycle(5), ExtremalKind::Clique).len(), 2);
        assert_eq!(extremal_set(&cycle(5), ExtremalKind::Stable).len(), 2);
        let h = extremal_set(&house(), ExtremalKind::Clique);
        assert_eq!(h, [0, 1, 2].into_iter().collect());
    }

    #[test]
    fn least_bitmask_tie_break() {
        assert_eq!(max_clique(&cycle(5)), [0, 1].into_iter().collect());
        assert_eq!(extremal_set(&cycle(5), ExtremalKind::Stable), [0, 2].into_iter().collect());
        assert_eq!(max_clique(&Graph::empty(3).unwrap()), VertexSet::singleton(0));
        assert_eq!(max_clique(&Graph::empty(0).unwrap()), VertexSet::EMPTY);
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&cycle(5)), 3);
        assert_eq!(chromatic_number(&cycle(6)), 2);
        assert_eq!(chromatic_number(&complete(4)), 4);
        assert_eq!(chromatic_number(&cycle(7).complement()), 4);
    }
}
