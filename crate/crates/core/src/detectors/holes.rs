use std::ops::ControlFlow;

use crate::graph::{Graph, VertexSet};

/// An induced cycle of length at least four, listed from its smallest vertex
/// towards the smaller of that vertex's two cycle-neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hole {
    pub cycle: Vec<usize>,
}

impl Hole {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.cycle.iter().copied().collect()
    }

    /// Whether the listed order is an induced cycle of `g` of length >= 4.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        is_induced_cycle(g, &self.cycle) && self.cycle.len() >= 4
    }
}

/// Whether `cycle` (in order) is an induced cycle of `g`.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let set: VertexSet = cycle.iter().copied().collect();
    if set.len() != k || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    cycle.iter().enumerate().all(|(i, &v)| {
        let expected = VertexSet::singleton(cycle[(i + 1) % k]).with(cycle[(i + k - 1) % k]);
        g.neighbours(v) & set == expected
    })
}

/// Calls `visit` once for every hole of `g` contained in `within`, with
/// `min_len <= length`. Stops early when `visit` breaks.
///
/// Cycles are grown as chordless paths rooted at their smallest vertex; a
/// path is abandoned as soon as its newest vertex sees an interior one.
pub fn for_each_hole<B>(
    g: &Graph,
    within: VertexSet,
    min_len: usize,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Option<B> {
    let min_len = min_len.max(4);
    let mut path = Vec::with_capacity(g.n());
    for s in within {
        let allowed = within.above(s);
        for p1 in g.neighbours(s) & allowed {
            path.clear();
            path.push(s);
            path.push(p1);
            if let ControlFlow::Break(b) =
                extend(g, allowed, min_len, &mut path, VertexSet::EMPTY, &mut visit)
            {
                return Some(b);
            }
        }
    }
    None
}

fn extend<B>(
    g: &Graph,
    allowed: VertexSet,
    min_len: usize,
    path: &mut Vec<usize>,
    blocked: VertexSet,
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let s = path[0];
    let p1 = path[1];
    let last = *path.last().unwrap();
    let on_path: VertexSet = path.iter().copied().collect();
    let candidates = (g.neighbours(last) & allowed) - on_path - blocked;
    for w in candidates {
        if g.has_edge(w, s) {
            // closing vertex; a triangle is not a hole
            if path.len() >= 3 && w > p1 && path.len() + 1 >= min_len {
                path.push(w);
                let r = visit(path);
                path.pop();
                r?;
            }
            continue;
        }
        // `last` becomes interior: nothing later may see it
        let new_blocked = blocked | (g.neighbours(last) - VertexSet::singleton(s));
        path.push(w);
        let r = extend(g, allowed, min_len, path, new_blocked, visit);
        path.pop();
        r?;
    }
    ControlFlow::Continue(())
}

/// All holes of `g` inside `within` with length >= `min_len`.
pub fn holes(g: &Graph, within: VertexSet, min_len: usize) -> Vec<Hole> {
    let mut out = Vec::new();
    for_each_hole::<()>(g, within, min_len, |c| {
        out.push(Hole { cycle: c.to_vec() });
        ControlFlow::Continue(())
    });
    out
}

/// A hole together with a vertex that has exactly two neighbours on it,
/// adjacent to each other.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HoleWithHat {
    pub hole: Hole,
    pub hat: usize,
}

impl HoleWithHat {
    pub fn vertex_set(&self) -> VertexSet {
        self.hole.vertex_set().with(self.hat)
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let h = self.hole.vertex_set();
        self.hole.is_valid_in(g) && !h.contains(self.hat) && self.hat < g.n() && is_hat(g, h, self.hat)
    }
}

#[inline]
fn is_hat(g: &Graph, hole: VertexSet, v: usize) -> bool {
    let nb = g.neighbours(v) & hole;
    if nb.len() != 2 {
        return false;
    }
    let mut it = nb.iter();
    let (a, b) = (it.next().unwrap(), it.next().unwrap());
    g.has_edge(a, b)
}

/// Hats of a given hole, ascending.
pub fn hats(g: &Graph, hole: VertexSet) -> VertexSet {
    (g.vertices() - hole).iter().filter(|&v| is_hat(g, hole, v)).collect()
}

/// The least hole-with-hat of `g`, ordered by (hole length, sorted hole
/// vertex set, hat), or `None` when `g` is hole-with-hat-free.
pub fn find_hole_with_hat(g: &Graph) -> Option<HoleWithHat> {
    let mut best: Option<(usize, Vec<usize>, usize, Vec<usize>)> = None;
    for_each_hole::<()>(g, g.vertices(), 4, |c| {
        let set: VertexSet = c.iter().copied().collect();
        if let Some(hat) = hats(g, set).first() {
            let key = (c.len(), set.to_vec(), hat);
            let better = match &best {
                None => true,
                Some((l, s, h, _)) => key < (*l, s.clone(), *h),
            };
            if better {
                best = Some((key.0, key.1, key.2, c.to_vec()));
            }
        }
        ControlFlow::Continue(())
    });
    best.map(|(_, _, hat, cycle)| HoleWithHat { hole: Hole { cycle }, hat })
}

/// The least house. Holes are ordered by length first, so this is the least
/// hole-with-hat whenever that has a 4-hole.
pub fn find_house(g: &Graph) -> Option<HoleWithHat> {
    find_hole_with_hat(g).filter(|h| h.hole.len() == 4)
}

/// Early-exit test for any hole-with-hat.
pub fn has_hole_with_hat(g: &Graph) -> bool {
    for_each_hole(g, g.vertices(), 4, |c| {
        let set: VertexSet = c.iter().copied().collect();
        if hats(g, set).is_empty() {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    })
    .is_some()
}

/// Whether `g` contains an induced house (a hole-with-hat whose hole has length 4).
pub fn has_house(g: &Graph) -> bool {
    for_each_hole(g, g.vertices(), 4, |c| {
        if c.len() == 4 && !hats(g, c.iter().copied().collect()).is_empty() {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
    .is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn house_has_a_hole_with_hat_of_length_four() {
        let h = find_hole_with_hat(&house()).expect("house");
        assert_eq!(h.hole.len(), 4);
        assert_eq!(h.hat, 0);
        assert!(h.is_valid_in(&house()));
        assert!(has_house(&house()));
    }

    #[test]
    fn c5_has_no_hat() {
        assert!(find_hole_with_hat(&cycle(5)).is_none());
        assert_eq!(holes(&cycle(5), VertexSet::full(5), 4).len(), 1);
    }

    #[test]
    fn long_hole_with_hat() {
        let mut edges = cycle(6).edges();
        edges.extend([(6, 2), (6, 3)]);
        let g = Graph::new(7, &edges).unwrap();
        let h = find_hole_with_hat(&g).unwrap();
        assert_eq!(h.hole.len(), 6);
        assert_eq!(h.hat, 6);
        assert!(!has_house(&g));
    }

    #[test]
    fn holes_are_listed_once() {
        // K_{3,3} has 9 induced 4-cycles and nothing longer
        let g = complete_bipartite(3, 3);
        let hs = holes(&g, g.vertices(), 4);
        assert_eq!(hs.len(), 9);
        assert!(hs.iter().all(|h| h.is_valid_in(&g)));
        // C7: one hole; its complement has 7 holes of length 4 and none longer
        assert_eq!(holes(&cycle(7), VertexSet::full(7), 4).len(), 1);
        let c7bar = cycle(7).complement();
        let hs = holes(&c7bar, c7bar.vertices(), 4);
        assert!(hs.iter().all(|h| h.len() == 4));
        assert_eq!(hs.len(), 7);
    }

    #[test]
    fn chords_are_rejected() {
        assert!(holes(&complete(5), VertexSet::full(5), 4).is_empty());
        let mut e = cycle(6).edges();
        e.push((0, 3));
        let g = Graph::new(6, &e).unwrap();
        // two 4-holes, the 6-cycle has a chord
        assert_eq!(holes(&g, g.vertices(), 4).len(), 2);
    }
}
