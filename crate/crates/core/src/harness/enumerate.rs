//! Isomorphism-free enumeration of small graphs by canonical augmentation.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::detectors::{find_forcer, has_hole_with_hat, has_house, is_perfect_graph};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exhaustive enumeration cap.
pub const MAX_ENUM_N: usize = 10;
/// Cap for labelled (non-canonical) enumeration.
pub const MAX_LABELLED_N: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    Connected,
    HoleWithHatFree,
    ForcerFree,
    HouseFree,
    Perfect,
}

impl Filter {
    pub const ALL: [Filter; 5] =
        [Filter::Connected, Filter::HoleWithHatFree, Filter::ForcerFree, Filter::HouseFree, Filter::Perfect];

    pub fn name(self) -> &'static str {
        match self {
            Filter::Connected => "connected",
            Filter::HoleWithHatFree => "hwh-free",
            Filter::ForcerFree => "forcer-free",
            Filter::HouseFree => "house-free",
            Filter::Perfect => "perfect",
        }
    }

    /// Closed under induced subgraphs, so it may prune during generation.
    pub fn is_hereditary(self) -> bool {
        !matches!(self, Filter::Connected)
    }

    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            Filter::Connected => g.is_connected(g.vertices()),
            Filter::HoleWithHatFree => !has_hole_with_hat(g),
            Filter::ForcerFree => find_forcer(g).is_none(),
            Filter::HouseFree => !has_house(g),
            Filter::Perfect => is_perfect_graph(g),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase();
        let alias = match s.as_str() {
            "hole-with-hat-free" | "hwhfree" => "hwh-free",
            other => other,
        };
        Filter::ALL
            .into_iter()
            .find(|f| f.name() == alias)
            .ok_or_else(|| Error::precondition(format!("unknown filter `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumSpec {
    pub n: usize,
    pub filters: Vec<Filter>,
    pub canonical: bool,
}

impl EnumSpec {
    pub fn new(n: usize, filters: &[Filter]) -> Self {
        EnumSpec { n, filters: filters.to_vec(), canonical: true }
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        self.filters.iter().all(|f| f.accepts(g))
    }
}

/// Canonical adjacency code: upper-triangle bits in graph6 order, most
/// significant first, packed into words.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonCode(Vec<u64>);

fn code_of(g: &Graph, order: &[usize]) -> CanonCode {
    let n = order.len();
    let bits = n * n.saturating_sub(1) / 2;
    let mut words = vec![0u64; bits.div_ceil(64).max(1)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                words[k / 64] |= 1u64 << (63 - k % 64);
            }
            k += 1;
        }
    }
    CanonCode(words)
}

#[derive(Clone, Debug)]
pub struct Canonical {
    pub graph: Graph,
    pub code: CanonCode,
    /// `order[i]` is the input vertex placed at position `i`.
    pub order: Vec<usize>,
}

/// Splits cells by neighbour counts into other cells until stable. The
/// result depends only on the graph and the input partition, not on labels.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut changed = true;
    while changed {
        changed = false;
        let mut i = 0;
        while i < cells.len() {
            let mut split_here = false;
            for w in 0..cells.len() {
                if cells[i].len() == 1 {
                    break;
                }
                let wset: crate::graph::VertexSet = cells[w].iter().copied().collect();
                let mut keyed: Vec<(usize, usize)> =
                    cells[i].iter().map(|&v| ((g.neighbours(v) & wset).len(), v)).collect();
                if keyed.iter().all(|k| k.0 == keyed[0].0) {
                    continue;
                }
                keyed.sort_unstable();
                let mut parts: Vec<Vec<usize>> = Vec::new();
                let mut last = usize::MAX;
                for (k, v) in keyed {
                    if k != last {
                        parts.push(Vec::new());
                        last = k;
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(i..=i, parts);
                split_here = true;
                changed = true;
                break;
            }
            if !split_here {
                i += 1;
            }
        }
    }
    cells
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbours(u).without(v) == g.neighbours(v).without(u)
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<(CanonCode, Vec<usize>)>) {
    let cells = refine(g, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
        let code = code_of(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell = &cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        // swapping twins of one cell is an automorphism fixing the partition
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = cells.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&u| u != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        search(g, next, best);
    }
}

/// The least adjacency code over all relabellings, found by partition
/// refinement and individualisation.
pub fn canonical_form(g: &Graph) -> Canonical {
    let n = g.n();
    if n == 0 {
        return Canonical { graph: g.clone(), code: CanonCode(vec![0]), order: Vec::new() };
    }
    let mut best = None;
    search(g, vec![(0..n).collect()], &mut best);
    let (code, order) = best.expect("at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Canonical { graph: g.permute(&perm), code, order }
}

fn hereditary_ok(filters: &[Filter], g: &Graph) -> bool {
    filters.iter().filter(|f| f.is_hereditary()).all(|f| f.accepts(g))
}

/// All graphs obtained by adding one vertex (with every possible
/// neighbourhood) to the given graphs, kept only if they pass the
/// hereditary filters, one per isomorphism class, sorted by code.
pub fn extend_classes(parents: &[Graph], filters: &[Filter]) -> Vec<Graph> {
    let mut found: Vec<(CanonCode, Graph)> = parents
        .par_iter()
        .flat_map_iter(|h| {
            let m = h.n();
            let mut local: Vec<(CanonCode, Graph)> = Vec::new();
            let mut seen = HashSet::new();
            for nb in 0u64..(1u64 << m) {
                let mut edges = h.edges();
                edges.extend((0..m).filter(|&u| nb >> u & 1 == 1).map(|u| (u, m)));
                let g = Graph::new(m + 1, &edges).expect("valid extension");
                if !hereditary_ok(filters, &g) {
                    continue;
                }
                let c = canonical_form(&g);
                if seen.insert(c.code.clone()) {
                    local.push((c.code, c.graph));
                }
            }
            local
        })
        .collect();
    found.sort_by(|a, b| a.0.cmp(&b.0));
    found.dedup_by(|a, b| a.0 == b.0);
    found.into_iter().map(|(_, g)| g).collect()
}

/// Every graph on `spec.n` vertices passing the filters; one per
/// isomorphism class in code order when `spec.canonical`, else every
/// labelled graph in edge-bitmask order.
pub fn enumerate_graphs(spec: &EnumSpec) -> Result<Vec<Graph>> {
    if spec.canonical {
        if spec.n > MAX_ENUM_N {
            return Err(Error::TooLarge { what: format!("n = {}", spec.n), limit: format!("n <= {MAX_ENUM_N}") });
        }
        let mut level = vec![Graph::empty(0)?];
        for _ in 0..spec.n {
            level = extend_classes(&level, &spec.filters);
        }
        level.retain(|g| spec.accepts(g));
        Ok(level)
    } else {
        if spec.n > MAX_LABELLED_N {
            return Err(Error::TooLarge {
                what: format!("labelled n = {}", spec.n),
                limit: format!("n <= {MAX_LABELLED_N}"),
            });
        }
        let pairs: Vec<(usize, usize)> = (1..spec.n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let count = 1u64 << pairs.len();
        let out: Vec<Graph> = (0..count)
            .into_par_iter()
            .filter_map(|mask| {
                let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
                let g = Graph::new(spec.n, &edges).expect("valid pairs");
                spec.accepts(&g).then_some(g)
            })
            .collect();
        Ok(out)
    }
}

/// Canonical classes for every `n` up to `max_n`, index `k` holding the
/// graphs on `k` vertices.
pub fn enumerate_levels(max_n: usize, filters: &[Filter]) -> Result<Vec<Vec<Graph>>> {
    if max_n > MAX_ENUM_N {
        return Err(Error::TooLarge { what: format!("n = {max_n}"), limit: format!("n <= {MAX_ENUM_N}") });
    }
    let mut levels = vec![vec![Graph::empty(0)?]];
    for _ in 0..max_n {
        let next = extend_classes(levels.last().unwrap(), filters);
        levels.push(next);
    }
    for l in &mut levels {
        l.retain(|g| filters.iter().all(|f| f.accepts(g)));
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn canonical_form_is_label_invariant() {
        let g = house();
        let c1 = canonical_form(&g);
        let c2 = canonical_form(&g.permute(&[4, 2, 0, 3, 1]));
        assert_eq!(c1.code, c2.code);
        assert_eq!(c1.graph, c2.graph);
        assert_ne!(canonical_form(&cycle(5)).code, canonical_form(&house()).code);
    }

    #[test]
    fn small_class_counts() {
        let counts: Vec<usize> =
            (0..=5).map(|n| enumerate_graphs(&EnumSpec::new(n, &[])).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
        let conn = enumerate_graphs(&EnumSpec::new(5, &[Filter::Connected])).unwrap();
        assert_eq!(conn.len(), 21);
    }

    #[test]
    fn filters_parse() {
        assert_eq!("hwh-free".parse::<Filter>().unwrap(), Filter::HoleWithHatFree);
        assert!("bogus".parse::<Filter>().is_err());
    }
}
