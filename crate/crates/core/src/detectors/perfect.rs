use std::ops::ControlFlow;

use super::holes::{for_each_hole, is_induced_cycle};
use crate::graph::{Graph, VertexSet};

/// An odd hole (`antihole == false`) or odd antihole of length >= 5. For an
/// antihole, `cycle` is an induced cycle of the complement.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OddWitness {
    pub cycle: Vec<usize>,
    pub antihole: bool,
}

impl OddWitness {
    pub fn vertex_set(&self) -> VertexSet {
        self.cycle.iter().copied().collect()
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let ok_len = self.cycle.len() >= 5 && self.cycle.len() % 2 == 1;
        if self.antihole {
            ok_len && is_induced_cycle(&g.complement(), &self.cycle)
        } else {
            ok_len && is_induced_cycle(g, &self.cycle)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectnessWitness {
    pub perfect: bool,
    pub witness: Option<OddWitness>,
}

fn least_odd_hole(g: &Graph, within: VertexSet) -> Option<Vec<usize>> {
    let mut best: Option<(usize, Vec<usize>, Vec<usize>)> = None;
    for_each_hole::<()>(g, within, 5, |c| {
        if c.len() % 2 == 1 {
            let key = (c.len(), {
                let mut s = c.to_vec();
                s.sort_unstable();
                s
            });
            if best.as_ref().is_none_or(|(l, s, _)| key < (*l, s.clone())) {
                best = Some((key.0, key.1, c.to_vec()));
            }
        }
        ControlFlow::Continue(())
    });
    best.map(|(_, _, c)| c)
}

/// Perfectness by the odd-hole / odd-antihole characterisation. The witness
/// is the least odd hole by (length, vertex set), else the least odd antihole.
pub fn is_perfect(g: &Graph) -> PerfectnessWitness {
    if let Some(cycle) = least_odd_hole(g, g.vertices()) {
        return PerfectnessWitness { perfect: false, witness: Some(OddWitness { cycle, antihole: false }) };
    }
    if let Some(cycle) = least_odd_hole(&g.complement(), g.vertices()) {
        return PerfectnessWitness { perfect: false, witness: Some(OddWitness { cycle, antihole: true }) };
    }
    PerfectnessWitness { perfect: true, witness: None }
}

/// Boolean shortcut for [`is_perfect`].
pub fn is_perfect_graph(g: &Graph) -> bool {
    let odd = |h: &Graph| {
        for_each_hole(h, h.vertices(), 5, |c| {
            if c.len() % 2 == 1 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .is_some()
    };
    !odd(g) && !odd(&g.complement())
}

/// Vertex sets of every odd hole and odd antihole of `g` inside `within`.
///
/// A subset `S` induces a perfect graph exactly when it contains none of
/// these sets, since induced cycles of `G[S]` are induced cycles of `G`.
pub fn imperfect_cores(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let comp = g.complement();
    for h in [g, &comp] {
        for_each_hole::<()>(h, within, 5, |c| {
            if c.len() % 2 == 1 {
                out.push(c.iter().copied().collect());
            }
            ControlFlow::Continue(())
        });
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Whether `s` induces a perfect subgraph, given the imperfect cores.
#[inline]
pub fn avoids_cores(s: VertexSet, cores: &[VertexSet]) -> bool {
    cores.iter().all(|c| !c.is_subset(s))
}

/// Inclusion-maximal `S ⊆ restrict` with `G[S]` perfect, sorted by bitmask.
///
/// These are the complements (within `restrict`) of the minimal transversals
/// of the imperfect cores, computed with Berge's incremental algorithm.
pub fn max_perfect_subsets(g: &Graph, restrict: VertexSet) -> Vec<VertexSet> {
    let cores = minimal_sets(imperfect_cores(g, restrict));
    let mut transversals = vec![VertexSet::EMPTY];
    for &core in &cores {
        let mut next = Vec::new();
        for &t in &transversals {
            if t.intersects(core) {
                next.push(t);
            } else {
                for v in core {
                    next.push(t.with(v));
                }
            }
        }
        transversals = minimal_sets(next);
    }
    let mut out: Vec<VertexSet> = transversals.into_iter().map(|t| restrict - t).collect();
    out.sort_unstable();
    out
}

/// Inclusion-minimal members of a family, deduplicated and sorted.
fn minimal_sets(mut family: Vec<VertexSet>) -> Vec<VertexSet> {
    family.sort_unstable_by_key(|s| (s.len(), s.bits()));
    family.dedup();
    let mut out: Vec<VertexSet> = Vec::with_capacity(family.len());
    for s in family {
        if !out.iter().any(|m| m.is_subset(s)) {
            out.push(s);
        }
    }
    out.sort_unstable();
    out
}
