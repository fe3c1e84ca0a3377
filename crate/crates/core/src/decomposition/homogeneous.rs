use crate::detectors::{forcers, Forcer};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// The smallest homogeneous set of `G[within]` containing `s`.
pub fn module_closure(g: &Graph, s: VertexSet, within: VertexSet) -> VertexSet {
    let mut m = s;
    loop {
        let split = g.splitters(m, within);
        if split.is_empty() {
            return m;
        }
        m |= split;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousPartition {
    pub parts: Vec<VertexSet>,
}

/// The maximal proper homogeneous sets of `G[Z]`, sorted by least member.
///
/// With `G[Z]` connected and anticonnected these partition `Z`: `u` and `v`
/// share a part exactly when the smallest homogeneous set containing both is
/// not all of `Z`.
pub fn homogeneous_partition(g: &Graph, z: VertexSet) -> Result<HomogeneousPartition> {
    if z.len() < 2 || !z.is_subset(g.vertices()) {
        return Err(Error::precondition("Z needs at least two vertices of g"));
    }
    if !g.is_connected(z) {
        return Err(Error::precondition("G[Z] is not connected"));
    }
    if !g.is_anticonnected(z) {
        return Err(Error::precondition("G[Z] is not anticonnected"));
    }
    let mut parts = Vec::new();
    let mut rest = z;
    while let Some(v) = rest.first() {
        let mut part = VertexSet::singleton(v);
        for u in z.without(v) {
            if module_closure(g, VertexSet::singleton(v).with(u), z) != z {
                part.insert(u);
            }
        }
        parts.push(part);
        rest -= part;
    }
    let out = HomogeneousPartition { parts };
    if !out.is_valid_for(g, z) {
        return Err(Error::internal(format!("homogeneous parts {:?} do not partition Z", out.parts)));
    }
    Ok(out)
}

impl HomogeneousPartition {
    /// Parts are disjoint, cover `Z`, are proper homogeneous sets of `G[Z]`,
    /// and there are at least two of them.
    pub fn is_valid_for(&self, g: &Graph, z: VertexSet) -> bool {
        let mut union = VertexSet::EMPTY;
        for &p in &self.parts {
            if p.is_empty() || p.intersects(union) || p == z || !g.splitters(p, z).is_empty() {
                return false;
            }
            union |= p;
        }
        union == z && self.parts.len() > 1
    }
}

/// Whether every forcer has a constituent path inside a homogeneous set other
/// than `V(G)`; otherwise the first forcer without one.
pub fn is_guarded(g: &Graph) -> (bool, Option<Forcer>) {
    let all = g.vertices();
    for f in forcers(g) {
        let covered = [f.path1_set(), f.path2_set()]
            .into_iter()
            .any(|p| module_closure(g, p, all) != all);
        if !covered {
            return (false, Some(f));
        }
    }
    (true, None)
}
