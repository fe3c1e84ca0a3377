//! Dense bitmask graphs on at most 64 vertices and the set predicates used
//! by every other module: complete / anticomplete / mixed pairs, components,
//! anticomponents and attachments.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Sub, SubAssign};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

#[inline]
const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

/// A set of vertices of some host graph, one bit per vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(bit(v))
    }

    /// `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | bit(v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !bit(v))
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub const fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Largest member.
    #[inline]
    pub const fn last(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    /// Members strictly greater than `v`.
    #[inline]
    pub const fn above(self, v: usize) -> Self {
        if v >= 63 {
            VertexSet(0)
        } else {
            VertexSet(self.0 & !low_bits(v + 1))
        }
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing bitmask order, including the
    /// empty set and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, next: Some(0) }
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: Self) {
        self.0 &= rhs.0;
    }
}

impl BitXor for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitxor(self, rhs: Self) -> Self {
        VertexSet(self.0 ^ rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: Self) {
        self.0 &= !rhs.0;
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::LowerHex for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Members {}

/// Iterator over all subsets of a mask (increasing numeric order).
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            // next subset of `mask` in increasing order
            Some(((cur | !self.mask).wrapping_add(1)) & self.mask)
        };
        Some(VertexSet(cur))
    }
}

/// How two disjoint vertex sets (or a vertex and a set) relate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SetRelation {
    Complete,
    Anticomplete,
    Mixed,
}

/// Which graph a connectivity query runs in: the graph itself, or its complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Direct,
    Complement,
}

/// A finite simple graph on vertices `0..n`, `n <= 64`.
///
/// Row `v` of the adjacency matrix is the neighbour bitmask of `v`. Rows are
/// symmetric, irreflexive and empty beyond `n`. Graphs never change after
/// construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    /// Graph on `n` vertices with the given edges; duplicate pairs collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = [0u64; MAX_VERTICES];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Graph { n, adj })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    /// Builds a graph from raw neighbour rows, checking every invariant.
    pub fn from_rows(rows: &[u64]) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = [0u64; MAX_VERTICES];
        for (v, &row) in rows.iter().enumerate() {
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            if row & !low_bits(n) != 0 {
                let u = 63 - (row & !low_bits(n)).leading_zeros() as usize;
                return Err(Error::VertexOutOfRange { u: v, v: u, n });
            }
            adj[v] = row;
        }
        for u in 0..n {
            for v in VertexSet(adj[u]).iter() {
                if adj[v] & bit(u) == 0 {
                    return Err(Error::precondition(format!(
                        "adjacency rows not symmetric at ({u}, {v})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Neighbours of `v` in the complement graph.
    #[inline]
    pub fn non_neighbours(&self, v: usize) -> VertexSet {
        VertexSet(!self.adj[v] & low_bits(self.n) & !bit(v))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u]).above(u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    pub fn complement(&self) -> Graph {
        let mut adj = [0u64; MAX_VERTICES];
        for v in 0..self.n {
            adj[v] = self.non_neighbours(v).bits();
        }
        Graph { n: self.n, adj }
    }

    /// `G[S]` relabelled onto `0..|S|` in increasing vertex order. The
    /// returned vector maps new labels back to old ones.
    pub fn induced(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.iter().collect();
        let mut adj = [0u64; MAX_VERTICES];
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= bit(j);
                }
            }
        }
        (Graph { n: map.len(), adj }, map)
    }

    /// `G` with vertex `v` deleted, relabelled.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertices().without(v)).0
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = [0u64; MAX_VERTICES];
        for u in 0..self.n {
            for v in self.neighbours(u) {
                adj[perm[u]] |= bit(perm[v]);
            }
        }
        Graph { n: self.n, adj }
    }

    /// Union of the neighbourhoods of the members of `x`.
    pub fn neighbourhood(&self, x: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for v in x {
            out |= self.adj[v];
        }
        VertexSet(out)
    }

    /// Vertices adjacent to every member of `x` (all vertices if `x` is empty).
    pub fn common_neighbours(&self, x: VertexSet) -> VertexSet {
        let mut out = low_bits(self.n);
        for v in x {
            out &= self.adj[v];
        }
        VertexSet(out)
    }

    /// Vertices outside `x` that are complete to `x`.
    pub fn complete_to(&self, x: VertexSet) -> VertexSet {
        self.common_neighbours(x) - x
    }

    /// Vertices outside `a` with at least one neighbour in `a`.
    pub fn attachments(&self, a: VertexSet) -> VertexSet {
        self.neighbourhood(a) - a
    }

    #[inline]
    fn side_neighbours(&self, v: usize, side: Side) -> u64 {
        match side {
            Side::Direct => self.adj[v],
            Side::Complement => !self.adj[v] & !bit(v),
        }
    }

    /// The component (or anticomponent) of `x` containing `start`.
    pub fn component_of(&self, x: VertexSet, start: usize, side: Side) -> VertexSet {
        let x = x.bits();
        let mut comp = bit(start) & x;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.side_neighbours(v, side);
            }
            next &= x & !comp;
            comp |= next;
            frontier = next;
        }
        VertexSet(comp)
    }

    /// Partition of `x` into components of `G[x]` (or anticomponents),
    /// ordered by smallest member.
    pub fn components(&self, x: VertexSet, side: Side) -> Vec<VertexSet> {
        let mut rest = x;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(rest, v, side);
            out.push(c);
            rest -= c;
        }
        out
    }

    /// Whether `G[x]` is connected. The empty set counts as connected.
    pub fn is_connected(&self, x: VertexSet) -> bool {
        match x.first() {
            None => true,
            Some(v) => self.component_of(x, v, Side::Direct) == x,
        }
    }

    /// Whether `G[x]` is anticonnected (its complement is connected).
    pub fn is_anticonnected(&self, x: VertexSet) -> bool {
        match x.first() {
            None => true,
            Some(v) => self.component_of(x, v, Side::Complement) == x,
        }
    }

    pub fn is_complete(&self, a: VertexSet, b: VertexSet) -> bool {
        a.iter().all(|v| b.is_subset(self.neighbours(v)))
    }

    pub fn is_anticomplete(&self, a: VertexSet, b: VertexSet) -> bool {
        !self.neighbourhood(a).intersects(b)
    }

    /// Whether `x` is a clique.
    pub fn is_clique(&self, x: VertexSet) -> bool {
        x.iter().all(|v| (x.without(v)).is_subset(self.neighbours(v)))
    }

    pub fn is_stable(&self, x: VertexSet) -> bool {
        !self.neighbourhood(x).intersects(x)
    }

    /// Relation between two disjoint nonempty sets.
    pub fn relation(&self, a: VertexSet, b: VertexSet) -> Result<SetRelation> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptySet);
        }
        if a.intersects(b) {
            return Err(Error::OverlappingSets);
        }
        Ok(self.relation_unchecked(a, b))
    }

    pub(crate) fn relation_unchecked(&self, a: VertexSet, b: VertexSet) -> SetRelation {
        if self.is_complete(a, b) {
            SetRelation::Complete
        } else if self.is_anticomplete(a, b) {
            SetRelation::Anticomplete
        } else {
            SetRelation::Mixed
        }
    }

    /// Relation of a single vertex `v ∉ c` to a nonempty set `c`.
    pub fn vertex_vs_set(&self, v: usize, c: VertexSet) -> Result<SetRelation> {
        if c.contains(v) {
            return Err(Error::VertexInSet(v));
        }
        if c.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(self.vertex_relation(v, c))
    }

    #[inline]
    pub(crate) fn vertex_relation(&self, v: usize, c: VertexSet) -> SetRelation {
        let nb = self.neighbours(v) & c;
        if nb == c {
            SetRelation::Complete
        } else if nb.is_empty() {
            SetRelation::Anticomplete
        } else {
            SetRelation::Mixed
        }
    }

    /// `v` has both a neighbour and a non-neighbour in `c`.
    #[inline]
    pub fn is_mixed_on(&self, v: usize, c: VertexSet) -> bool {
        let nb = self.neighbours(v) & c;
        !nb.is_empty() && nb != c
    }

    /// Whether `x` is a homogeneous set: every vertex outside is complete or
    /// anticomplete to it.
    pub fn is_homogeneous(&self, x: VertexSet) -> bool {
        self.splitters(x, self.vertices()).is_empty()
    }

    /// Vertices of `within ∖ x` mixed on `x`.
    pub fn splitters(&self, x: VertexSet, within: VertexSet) -> VertexSet {
        (within - x).iter().filter(|&v| self.is_mixed_on(v, x)).collect()
    }

    /// Graph obtained by replacing each vertex `v` with a clique
    /// (`cliques[v] == true`) or stable set of `sizes[v]` vertices; copies of
    /// adjacent vertices are complete to each other.
    pub fn substitute(&self, sizes: &[usize], cliques: &[bool]) -> Result<(Graph, Vec<usize>)> {
        if sizes.len() != self.n || cliques.len() != self.n {
            return Err(Error::precondition("one size and one kind per vertex"));
        }
        let total: usize = sizes.iter().sum();
        if total > MAX_VERTICES {
            return Err(Error::TooManyVertices(total));
        }
        let mut owner = Vec::with_capacity(total);
        for (v, &s) in sizes.iter().enumerate() {
            owner.extend(std::iter::repeat_n(v, s));
        }
        let mut edges = Vec::new();
        for i in 0..total {
            for j in i + 1..total {
                let (a, b) = (owner[i], owner[j]);
                if (a == b && cliques[a]) || (a != b && self.has_edge(a, b)) {
                    edges.push((i, j));
                }
            }
        }
        Ok((Graph::new(total, &edges)?, owner))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Small named graphs used throughout tests and examples.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path fits")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("cycle fits")
    }

    pub fn complete(n: usize) -> Graph {
        Graph::empty(n).expect("n fits").complement()
    }

    /// The house: 4-cycle `1-2-4-3` with hat `0` adjacent to `1` and `2`.
    pub fn house() -> Graph {
        Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 4), (3, 4), (1, 3)]).expect("house")
    }

    /// Two induced paths `0-1-2-3` and `4-5-6-7`, complete to each other.
    pub fn forcer() -> Graph {
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)];
        for a in 0..4 {
            for b in 4..8 {
                edges.push((a, b));
            }
        }
        Graph::new(8, &edges).expect("forcer")
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::new(a + b, &edges).expect("bipartite fits")
    }

    /// Disjoint union.
    pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
        let off = g.n();
        let mut edges = g.edges();
        edges.extend(h.edges().into_iter().map(|(u, v)| (u + off, v + off)));
        Graph::new(g.n() + h.n(), &edges).expect("union fits")
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn vs(items: &[usize]) -> VertexSet {
        items.iter().copied().collect()
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert!(matches!(Graph::new(3, &[(0, 0)]), Err(Error::SelfLoop(0))));
        assert!(matches!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { u: 0, v: 3, n: 3 })
        ));
        assert!(matches!(Graph::new(65, &[]), Err(Error::TooManyVertices(65))));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn p5_and_c5() {
        let p5 = path(5);
        assert_eq!(p5.edges(), vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
        let c5 = cycle(5);
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.has_edge(4, 0));
    }

    #[test]
    fn complement_of_p5_is_the_house() {
        let h = path(5).complement();
        // house: 4-cycle plus a vertex adjacent to two adjacent cycle vertices
        assert_eq!(h.edge_count(), 6);
        let mut degrees: Vec<_> = (0..5).map(|v| h.degree(v)).collect();
        degrees.sort();
        assert_eq!(degrees, vec![2, 2, 2, 3, 3]);
        assert_eq!(complete(4), Graph::empty(4).unwrap().complement());
    }

    #[test]
    fn complement_is_an_involution_on_small_graphs() {
        for n in 0..=5usize {
            let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<_> =
                    pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                let g = Graph::new(n, &edges).unwrap();
                assert_eq!(g.complement().complement(), g);
            }
        }
    }

    #[test]
    fn components_and_anticomponents() {
        let g = disjoint_union(&path(5), &Graph::empty(1).unwrap());
        let parts = g.components(g.vertices(), Side::Direct);
        assert_eq!(parts.iter().map(|p| p.len()).collect::<Vec<_>>(), vec![5, 1]);

        let c5 = cycle(5);
        assert_eq!(c5.components(c5.vertices(), Side::Complement).len(), 1);

        let k4 = complete(4);
        let anti = k4.components(k4.vertices(), Side::Complement);
        assert_eq!(anti, (0..4).map(VertexSet::singleton).collect::<Vec<_>>());

        assert!(g.components(VertexSet::EMPTY, Side::Direct).is_empty());
    }

    #[test]
    fn relations() {
        let k23 = complete_bipartite(2, 3);
        assert_eq!(k23.relation(vs(&[0, 1]), vs(&[2, 3, 4])).unwrap(), SetRelation::Complete);
        let g = disjoint_union(&path(2), &path(2));
        assert_eq!(g.relation(vs(&[0, 1]), vs(&[2, 3])).unwrap(), SetRelation::Anticomplete);
        // P5 on v1..v5 = 0..4: {v1} vs {v2, v4}
        let p5 = path(5);
        assert_eq!(p5.relation(vs(&[0]), vs(&[1, 3])).unwrap(), SetRelation::Mixed);
        assert!(matches!(p5.relation(vs(&[0]), vs(&[0, 1])), Err(Error::OverlappingSets)));
        assert!(matches!(p5.relation(VertexSet::EMPTY, vs(&[1])), Err(Error::EmptySet)));
    }

    #[test]
    fn vertex_against_set() {
        let h = house();
        assert_eq!(h.vertex_vs_set(0, vs(&[1, 2])).unwrap(), SetRelation::Complete);
        assert_eq!(h.vertex_vs_set(0, vs(&[1, 2, 3, 4])).unwrap(), SetRelation::Mixed);
        let g = disjoint_union(&path(3), &Graph::empty(1).unwrap());
        assert_eq!(g.vertex_vs_set(3, vs(&[0, 1, 2])).unwrap(), SetRelation::Anticomplete);
        assert!(matches!(h.vertex_vs_set(1, vs(&[1, 2])), Err(Error::VertexInSet(1))));
    }

    #[test]
    fn attachments_examples() {
        let p5 = path(5);
        assert_eq!(p5.attachments(vs(&[0])), vs(&[1]));
        let g = disjoint_union(&path(3), &path(2));
        assert_eq!(g.attachments(vs(&[0, 1, 2])), VertexSet::EMPTY);
        // C5 on v1..v5 = 0..4: attachments of {v2, v3}
        assert_eq!(cycle(5).attachments(vs(&[1, 2])), vs(&[0, 3]));
    }

    #[test]
    fn subsets_iterates_everything_once() {
        let m = vs(&[1, 4, 6]);
        let all: Vec<_> = m.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|s| s.is_subset(m)));
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn substitution_blows_up_vertices() {
        let (g, owner) = path(2).substitute(&[2, 3], &[true, false]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(owner, vec![0, 0, 1, 1, 1]);
        assert!(g.has_edge(0, 1));
        assert!(!g.has_edge(2, 3));
        assert_eq!(g.edge_count(), 1 + 6);
    }
}
