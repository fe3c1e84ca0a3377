use num_rational::BigRational;

use crate::coherence::{big_component, check_coherence, WeightMap};
use crate::detectors::holes::find_hole_with_hat;
use crate::detectors::Forcer;
use crate::error::{Error, Result};
use crate::graph::{Graph, Side, VertexSet};

/// Largest candidate pool `optimalize_split` will search exhaustively.
pub const MAX_AUGMENT_POOL: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Split {
    pub c: VertexSet,
    pub d: VertexSet,
}

impl Split {
    /// The split with side `c`, deriving `d` as everything complete to `c`.
    pub fn from_c(g: &Graph, c: VertexSet) -> Self {
        Split { c, d: g.complete_to(c) }
    }

    /// `G ∖ (C ∪ D)`.
    pub fn rest(&self, g: &Graph) -> VertexSet {
        g.vertices() - self.c - self.d
    }

    /// The weight-independent invariants: `|C| >= 2`, `G[C]` connected and
    /// anticonnected, `D` nonempty and exactly the vertices complete to `C`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.c.len() >= 2
            && self.c.is_subset(g.vertices())
            && g.is_connected(self.c)
            && g.is_anticonnected(self.c)
            && !self.d.is_empty()
            && self.d == g.complete_to(self.c)
    }
}

/// Whether `Y` is a component of `G[rest]`.
pub fn is_component_of(g: &Graph, y: VertexSet, rest: VertexSet) -> bool {
    match y.first() {
        Some(v) => y.is_subset(rest) && g.component_of(rest, v, Side::Direct) == y,
        None => false,
    }
}

/// `(C, D)` is a split and `Y` is a component of `G ∖ (C ∪ D)` with no
/// attachment in `C`.
#[allow(non_snake_case)]
pub fn is_Y_split(g: &Graph, c: VertexSet, d: VertexSet, y: VertexSet) -> bool {
    let s = Split { c, d };
    s.is_valid_in(g) && is_component_of(g, y, s.rest(g)) && !g.attachments(y).intersects(c)
}

/// The weighted notion: `(C, D)` is a split of `(G, w)` at `eps`, with the
/// big component of `G ∖ (C ∪ D)` taken from the weights.
pub fn is_weighted_split(g: &Graph, w: &WeightMap, eps: &BigRational, s: &Split) -> Result<bool> {
    if !s.is_valid_in(g) {
        return Ok(false);
    }
    let y = big_component(g, w, eps, s.rest(g))?;
    Ok(!g.attachments(y).intersects(s.c))
}

/// Grows a complete pair of connected, anticonnected sets one vertex at a
/// time, smallest vertex first and side one before side two, until no single
/// vertex can join either side.
pub fn maximal_complete_pair(g: &Graph, seed1: VertexSet, seed2: VertexSet) -> Result<(VertexSet, VertexSet)> {
    for (i, s) in [seed1, seed2].into_iter().enumerate() {
        if s.is_empty() || !s.is_subset(g.vertices()) {
            return Err(Error::precondition(format!("seed {} is empty or out of range", i + 1)));
        }
        if !g.is_connected(s) || !g.is_anticonnected(s) {
            return Err(Error::precondition(format!("seed {} is not connected and anticonnected", i + 1)));
        }
    }
    if seed1.intersects(seed2) {
        return Err(Error::precondition("seeds overlap"));
    }
    if !g.is_complete(seed1, seed2) {
        return Err(Error::precondition("seeds are not complete to each other"));
    }
    let (mut x1, mut x2) = (seed1, seed2);
    'grow: loop {
        for v in g.vertices() - x1 - x2 {
            // joining a connected, anticonnected set keeps both properties
            // exactly when v is mixed on it
            if g.is_mixed_on(v, x1) && x2.is_subset(g.neighbours(v)) {
                x1.insert(v);
                continue 'grow;
            }
            if g.is_mixed_on(v, x2) && x1.is_subset(g.neighbours(v)) {
                x2.insert(v);
                continue 'grow;
            }
        }
        return Ok((x1, x2));
    }
}

/// The eight-part partition built from a maximal complete pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitConstruction {
    pub x1: VertexSet,
    pub x2: VertexSet,
    pub x3: VertexSet,
    pub r1: VertexSet,
    pub r2: VertexSet,
    pub s1: VertexSet,
    pub s2: VertexSet,
    pub s3: VertexSet,
}

impl SplitConstruction {
    /// Builds the partition from a maximal complete pair and checks every
    /// required pair relation.
    pub fn build(g: &Graph, x1: VertexSet, x2: VertexSet) -> Result<Self> {
        let x3 = g.complete_to(x1 | x2);
        let r = g.vertices() - x1 - x2 - x3;
        let r1 = r & g.common_neighbours(x1);
        let r2 = r & g.common_neighbours(x2);
        let rest = r - r1 - r2;
        let mut s1 = VertexSet::EMPTY;
        let mut s2 = VertexSet::EMPTY;
        for comp in g.components(rest, Side::Direct) {
            let att = g.attachments(comp);
            if att.intersects(x1) {
                s1 |= comp;
            }
            if att.intersects(x2) {
                s2 |= comp;
            }
        }
        let s3 = rest - s1 - s2;
        let sc = SplitConstruction { x1, x2, x3, r1, r2, s1, s2, s3 };
        let failures = sc.failures(g);
        if !failures.is_empty() {
            return Err(Error::internal(format!("split construction violates {}", failures.join(", "))));
        }
        Ok(sc)
    }

    /// From the constituent paths of a forcer, with no weights involved.
    pub fn from_forcer(g: &Graph, f: &Forcer) -> Result<Self> {
        let (x1, x2) = maximal_complete_pair(g, f.path1_set(), f.path2_set())?;
        Self::build(g, x1, x2)
    }

    pub fn parts(&self) -> [(&'static str, VertexSet); 8] {
        [
            ("X1", self.x1),
            ("X2", self.x2),
            ("X3", self.x3),
            ("R1", self.r1),
            ("R2", self.r2),
            ("S1", self.s1),
            ("S2", self.s2),
            ("S3", self.s3),
        ]
    }

    fn complete_pairs(&self) -> [(&'static str, VertexSet, VertexSet); 5] {
        [
            ("(X1,X2) complete", self.x1, self.x2),
            ("(X1,X3) complete", self.x1, self.x3),
            ("(X2,X3) complete", self.x2, self.x3),
            ("(R1,X1) complete", self.r1, self.x1),
            ("(R2,X2) complete", self.r2, self.x2),
        ]
    }

    fn anticomplete_pairs(&self) -> [(&'static str, VertexSet, VertexSet); 11] {
        [
            ("(R1,X2) anticomplete", self.r1, self.x2),
            ("(R2,X1) anticomplete", self.r2, self.x1),
            ("(S1,X2) anticomplete", self.s1, self.x2),
            ("(S2,X1) anticomplete", self.s2, self.x1),
            ("(S3,X1) anticomplete", self.s3, self.x1),
            ("(S3,X2) anticomplete", self.s3, self.x2),
            ("(S1,R2) anticomplete", self.s1, self.r2),
            ("(S2,R1) anticomplete", self.s2, self.r1),
            ("(S1,S2) anticomplete", self.s1, self.s2),
            ("(S1,S3) anticomplete", self.s1, self.s3),
            ("(S2,S3) anticomplete", self.s2, self.s3),
        ]
    }

    /// Names of the violated invariants (partition plus the 16 pair relations).
    pub fn failures(&self, g: &Graph) -> Vec<&'static str> {
        let mut out = Vec::new();
        let parts = self.parts();
        let mut union = VertexSet::EMPTY;
        let mut total = 0;
        for (_, p) in parts {
            union |= p;
            total += p.len();
        }
        if union != g.vertices() || total != g.n() {
            out.push("partition of V(G)");
        }
        for (name, a, b) in self.complete_pairs() {
            if !a.is_disjoint(b) || !g.is_complete(a, b) {
                out.push(name);
            }
        }
        for (name, a, b) in self.anticomplete_pairs() {
            if !a.is_disjoint(b) || !g.is_anticomplete(a, b) {
                out.push(name);
            }
        }
        out
    }

    /// `X1 ∪ X2 ∪ X3 ∪ R1 ∪ R2`.
    pub fn t(&self) -> VertexSet {
        self.x1 | self.x2 | self.x3 | self.r1 | self.r2
    }

    /// The split that keeps `Y`, a component of `G ∖ T`, away from `C`:
    /// `(X1, X2 ∪ X3 ∪ R1)` unless `Y` meets `S1`, else the mirror image.
    pub fn select(&self, g: &Graph, y: VertexSet) -> Result<Split> {
        if !is_component_of(g, y, g.vertices() - self.t()) {
            return Err(Error::precondition("Y is not a component of G minus T"));
        }
        let s = if !y.intersects(self.s1) {
            Split { c: self.x1, d: self.x2 | self.x3 | self.r1 }
        } else if !y.intersects(self.s2) {
            Split { c: self.x2, d: self.x1 | self.x3 | self.r2 }
        } else {
            return Err(Error::internal("Y meets both S1 and S2"));
        };
        if !s.is_valid_in(g) {
            return Err(Error::internal(format!("selected sides C={} D={} do not form a split", s.c, s.d)));
        }
        Ok(s)
    }

    /// The component of `G ∖ (C ∪ D)` that contains `Y`.
    pub fn designated(&self, g: &Graph, s: &Split, y: VertexSet) -> VertexSet {
        g.component_of(s.rest(g), y.first().expect("nonempty Y"), Side::Direct)
    }
}

/// A split with one constituent path of `f` on each side, built from a
/// maximal complete pair.
pub fn split_from_forcer(g: &Graph, w: &WeightMap, eps: &BigRational, f: &Forcer) -> Result<Split> {
    Ok(split_from_forcer_traced(g, w, eps, f)?.0)
}

/// [`split_from_forcer`] together with the intermediate partition and the
/// big component of `G ∖ T`.
pub fn split_from_forcer_traced(
    g: &Graph,
    w: &WeightMap,
    eps: &BigRational,
    f: &Forcer,
) -> Result<(Split, SplitConstruction, VertexSet)> {
    if eps * BigRational::from_integer(5.into()) > BigRational::from_integer(1.into()) {
        return Err(Error::precondition("5*eps exceeds 1"));
    }
    let report = check_coherence(g, w, eps)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::NotCoherent {
            eps: eps.to_string(),
            detail: format!("{:?} witnessed by {:?}", v.condition, v.witness),
        });
    }
    if let Some(h) = find_hole_with_hat(g) {
        return Err(Error::HoleWithHat { hole: h.hole.cycle, hat: h.hat });
    }
    if !f.is_valid_in(g) {
        return Err(Error::precondition("forcer is not valid in g"));
    }
    let sc = SplitConstruction::from_forcer(g, f)?;
    let y = big_component(g, w, eps, g.vertices() - sc.t())?;
    let s = sc.select(g, y)?;
    if !is_weighted_split(g, w, eps, &s)? {
        return Err(Error::internal("constructed sides fail the weighted split condition"));
    }
    Ok((s, sc, y))
}

/// Grows `C` to a `Y`-split that no strictly larger `Y`-split contains.
///
/// Any larger `Y`-split side avoids `Y` and its attachments and is complete
/// to those attachments, so only that pool is searched: single vertices in
/// increasing order first, then subsets by size and bitmask, restarting after
/// every growth.
pub fn optimalize_split(g: &Graph, c: VertexSet, d: VertexSet, y: VertexSet) -> Result<Split> {
    if !is_Y_split(g, c, d, y) {
        return Err(Error::precondition("input is not a Y-split"));
    }
    let att = g.attachments(y);
    let pool_of = |c: VertexSet| g.common_neighbours(att) - y - att - c;
    let mut c = c;
    'grow: loop {
        let pool = pool_of(c);
        for v in pool {
            let c2 = c.with(v);
            if is_Y_split(g, c2, g.complete_to(c2), y) {
                c = c2;
                continue 'grow;
            }
        }
        if pool.len() > MAX_AUGMENT_POOL {
            return Err(Error::TooLarge {
                what: format!("augmentation pool of {} vertices", pool.len()),
                limit: format!("at most {MAX_AUGMENT_POOL}"),
            });
        }
        for k in 2..=pool.len() {
            if let Some(extra) = subsets_of_size(pool, k).find(|&e| {
                let c2 = c | e;
                is_Y_split(g, c2, g.complete_to(c2), y)
            }) {
                c |= extra;
                continue 'grow;
            }
        }
        return Ok(Split::from_c(g, c));
    }
}

/// Whether no `Y`-split has a side strictly containing `s.c`.
#[allow(non_snake_case)]
pub fn is_optimal_Y_split(g: &Graph, s: &Split, y: VertexSet) -> Result<bool> {
    Ok(optimalize_split(g, s.c, s.d, y)?.c == s.c)
}

/// Subsets of `pool` with exactly `k` members, in increasing bitmask order.
fn subsets_of_size(pool: VertexSet, k: usize) -> impl Iterator<Item = VertexSet> {
    let members = pool.to_vec();
    let n = members.len();
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out: VertexSet = idx.iter().map(|&i| members[i]).collect();
        // advance the combination; the top index moves slowest
        let mut j = 0;
        loop {
            if j == k {
                done = true;
                break;
            }
            let limit = if j + 1 < k { idx[j + 1] } else { n };
            if idx[j] + 1 < limit {
                idx[j] += 1;
                for (t, slot) in idx.iter_mut().enumerate().take(j) {
                    *slot = t;
                }
                break;
            }
            j += 1;
        }
        Some(out)
    })
}
