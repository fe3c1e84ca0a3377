use crate::error::{Error, Result};
use crate::graph::{Graph, Side, VertexSet};
use crate::report::{LemmaId, LemmaReport, Violation};

use super::split::{is_Y_split, is_component_of, is_optimal_Y_split, Split};

/// `(A, C, D, B)` with designated component `Y ⊆ B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fracture {
    pub a: VertexSet,
    pub c: VertexSet,
    pub d: VertexSet,
    pub b: VertexSet,
    pub y: VertexSet,
}

impl Fracture {
    pub fn split(&self) -> Split {
        Split { c: self.c, d: self.d }
    }

    /// The type invariants: a partition, a split, `Y` a component of the
    /// rest without attachments in `C`, `A` exactly the components attaching
    /// to `C`, and `A ∪ C` anticomplete to `B`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let parts = [self.a, self.c, self.d, self.b];
        let union = parts.iter().fold(VertexSet::EMPTY, |u, &p| u | p);
        let total: usize = parts.iter().map(|p| p.len()).sum();
        if union != g.vertices() || total != g.n() {
            return false;
        }
        if !is_Y_split(g, self.c, self.d, self.y) || !self.y.is_subset(self.b) {
            return false;
        }
        let rest = self.a | self.b;
        let expected_a = g
            .components(rest, Side::Direct)
            .into_iter()
            .filter(|comp| g.attachments(*comp).intersects(self.c))
            .fold(VertexSet::EMPTY, |u, comp| u | comp);
        expected_a == self.a && g.is_anticomplete(self.a | self.c, self.b)
    }

    /// Whether `Y` has at least one attachment. Without one, `Y` is a whole
    /// component of `G` and the first fracture property can fail.
    pub fn is_anchored(&self, g: &Graph) -> bool {
        !g.attachments(self.y).is_empty()
    }

    pub fn config(&self) -> [(&'static str, VertexSet); 5] {
        [("A", self.a), ("C", self.c), ("D", self.d), ("B", self.b), ("Y", self.y)]
    }
}

/// Assembles `A` and `B` around a `Y`-split; no optimality check.
pub fn assemble_fracture(g: &Graph, s: &Split, y: VertexSet) -> Fracture {
    let mut a = VertexSet::EMPTY;
    let mut b = VertexSet::EMPTY;
    for comp in g.components(s.rest(g), Side::Direct) {
        if g.attachments(comp).intersects(s.c) {
            a |= comp;
        } else {
            b |= comp;
        }
    }
    Fracture { a, c: s.c, d: s.d, b, y }
}

/// The fracture of an optimal `Y`-split.
pub fn fracture_from_split(g: &Graph, s: &Split, y: VertexSet) -> Result<Fracture> {
    if !is_Y_split(g, s.c, s.d, y) {
        return Err(Error::precondition("not a Y-split"));
    }
    if !is_optimal_Y_split(g, s, y)? {
        return Err(Error::precondition("Y-split is not optimal"));
    }
    let fr = assemble_fracture(g, s, y);
    debug_assert!(fr.is_valid_in(g));
    Ok(fr)
}

/// Every fracture whose split is an optimal `Y`-split, for every choice of
/// `Y`, in increasing `(C, Y)` order. Exponential; meant for small graphs.
pub fn all_y_fractures(g: &Graph) -> Vec<Fracture> {
    let mut out = Vec::new();
    for c in g.vertices().subsets() {
        if c.len() < 2 || !g.is_connected(c) || !g.is_anticonnected(c) {
            continue;
        }
        let s = Split::from_c(g, c);
        if s.d.is_empty() {
            continue;
        }
        for y in g.components(s.rest(g), Side::Direct) {
            if g.attachments(y).intersects(c) {
                continue;
            }
            out.push((s, y));
        }
    }
    // optimal: no other Y-split with the same Y has a strictly larger side
    let mut fractures = Vec::new();
    for &(s, y) in &out {
        let dominated = out.iter().any(|&(s2, y2)| y2 == y && s.c != s2.c && s.c.is_subset(s2.c));
        if !dominated {
            fractures.push(assemble_fracture(g, &s, y));
        }
    }
    fractures.sort_by_key(|f| (f.c, f.y));
    fractures
}

/// For each `a ∈ A`: some attachment of `Y` is nonadjacent to `a`, and `a`
/// is not mixed on any anticomponent of `G[D]`.
pub fn check_fracture_properties(g: &Graph, fr: &Fracture) -> LemmaReport {
    let mut rep = LemmaReport::new(LemmaId::FractureProps);
    rep.graphs_checked = 1;
    let att = g.attachments(fr.y);
    let anti = g.components(fr.d, Side::Complement);
    for a in fr.a {
        rep.configs_checked += 1;
        let base = fr.config();
        if att.is_subset(g.neighbours(a)) {
            let mut cfg = base.to_vec();
            cfg.push(("a", VertexSet::singleton(a)));
            rep.violations.push(Violation::new(g, &cfg));
        }
        for &x in &anti {
            if g.is_mixed_on(a, x) {
                let mut cfg = base.to_vec();
                cfg.push(("a", VertexSet::singleton(a)));
                cfg.push(("X", x));
                rep.violations.push(Violation::new(g, &cfg));
            }
        }
    }
    rep
}

/// Either every component of `G[A1 ∪ A2]` lies in `A1` or in `A2`, or the
/// two designated components coincide.
pub fn crossing_check(g: &Graph, f1: &Fracture, f2: &Fracture) -> Result<LemmaReport> {
    if !f1.y.intersects(f2.y) {
        return Err(Error::precondition("designated components are disjoint"));
    }
    let mut rep = LemmaReport::new(LemmaId::Crossing);
    rep.graphs_checked = 1;
    rep.configs_checked = 1;
    if f1.y != f2.y {
        let bad = g
            .components(f1.a | f2.a, Side::Direct)
            .into_iter()
            .find(|z| !z.is_subset(f1.a) && !z.is_subset(f2.a));
        if let Some(z) = bad {
            let mut cfg: Vec<_> = f1.config().to_vec();
            cfg.extend([("A'", f2.a), ("C'", f2.c), ("D'", f2.d), ("B'", f2.b), ("Y'", f2.y), ("Z", z)]);
            rep.violations.push(Violation::new(g, &cfg));
        }
    }
    Ok(rep)
}

/// Each component of `G[∪ A_i]` together with the index of the first
/// fracture whose `Y` is disjoint from and anticomplete to it.
pub fn small_side_certificates(g: &Graph, fractures: &[Fracture]) -> Result<Vec<(VertexSet, Option<usize>)>> {
    for (i, f) in fractures.iter().enumerate() {
        if fractures[i + 1..].iter().any(|h| !h.y.intersects(f.y)) {
            return Err(Error::precondition("designated components are not pairwise intersecting"));
        }
    }
    let union = fractures.iter().fold(VertexSet::EMPTY, |u, f| u | f.a);
    Ok(g.components(union, Side::Direct)
        .into_iter()
        .map(|z| {
            let cert = fractures.iter().position(|f| z.is_disjoint(f.y) && g.is_anticomplete(z, f.y));
            (z, cert)
        })
        .collect())
}

pub fn small_side_components(g: &Graph, fractures: &[Fracture]) -> Result<LemmaReport> {
    let mut rep = LemmaReport::new(LemmaId::SmallSide);
    rep.graphs_checked = 1;
    for (z, cert) in small_side_certificates(g, fractures)? {
        rep.configs_checked += 1;
        if cert.is_none() {
            let ys = fractures.iter().fold(VertexSet::EMPTY, |u, f| u | f.y);
            rep.violations.push(Violation::new(g, &[("Z", z), ("Ys", ys)]));
        }
    }
    Ok(rep)
}

/// Whether `y` is a component of `G ∖ (C ∪ D)` for the split of `fr`.
pub fn designates(g: &Graph, fr: &Fracture, y: VertexSet) -> bool {
    is_component_of(g, y, fr.a | fr.b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    /// P4 on 0..3, apex 4, tail 4-5-6 and a pendant 7 on 0 (also on 4 if `apex`).
    fn sample(apex: bool) -> Graph {
        let mut edges = path(4).edges();
        edges.extend([(4, 0), (4, 1), (4, 2), (4, 3), (4, 5), (5, 6), (7, 0)]);
        if apex {
            edges.push((7, 4));
        }
        Graph::new(8, &edges).unwrap()
    }

    #[test]
    fn fracture_round_trip() {
        let g = sample(false);
        let c: VertexSet = [0, 1, 2, 3].into_iter().collect();
        let y: VertexSet = [5, 6].into_iter().collect();
        let s = Split::from_c(&g, c);
        let fr = fracture_from_split(&g, &s, y).unwrap();
        assert!(fr.is_valid_in(&g));
        assert_eq!(fr.a, VertexSet::singleton(7));
        assert!(check_fracture_properties(&g, &fr).ok());
    }

    #[test]
    fn a_may_be_empty() {
        let mut edges = path(4).edges();
        edges.extend([(4, 0), (4, 1), (4, 2), (4, 3), (4, 5)]);
        let g = Graph::new(6, &edges).unwrap();
        let c: VertexSet = [0, 1, 2, 3].into_iter().collect();
        let fr = fracture_from_split(&g, &Split::from_c(&g, c), VertexSet::singleton(5)).unwrap();
        assert!(fr.a.is_empty());
        let rep = check_fracture_properties(&g, &fr);
        assert_eq!(rep.configs_checked, 0);
        assert!(rep.ok());
    }

    #[test]
    fn corrupted_fracture_is_reported() {
        // 7 now sees the only attachment of Y, and C is no longer optimal
        let g = sample(true);
        let c: VertexSet = [0, 1, 2, 3].into_iter().collect();
        let y: VertexSet = [5, 6].into_iter().collect();
        let s = Split::from_c(&g, c);
        assert!(fracture_from_split(&g, &s, y).is_err());
        let fr = assemble_fracture(&g, &s, y);
        assert_eq!(fr.a, VertexSet::singleton(7));
        let rep = check_fracture_properties(&g, &fr);
        assert!(!rep.ok());
        assert_eq!(rep.violations[0].get("a"), Some(VertexSet::singleton(7)));
    }

    #[test]
    fn crossing_trivial_cases() {
        let g = sample(true);
        for fr in all_y_fractures(&g) {
            assert!(fr.is_valid_in(&g));
            assert!(crossing_check(&g, &fr, &fr).unwrap().ok());
            assert!(small_side_components(&g, &[fr]).unwrap().ok());
        }
    }
}
