//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! Adjacency is stored twice: as sorted neighbor lists for iteration and
//! as bitsets for constant-time adjacency tests and fast neighborhood
//! unions.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::error::GraphError;

pub type Vertex = usize;
pub type Edge = (Vertex, Vertex);

/// Normalizes an edge so that the smaller endpoint comes first.
#[inline]
pub fn ordered(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph.
///
/// Immutable once built: no self-loops, no parallel edges, symmetric
/// adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<Vertex>>,
    bits: Vec<FixedBitSet>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            m: 0,
            adj: vec![Vec::new(); n],
            bits: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate and reversed pairs
    /// collapse to one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut bits = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange {
                        line: 0,
                        vertex: x,
                        n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            bits[u].insert(v);
            bits[v].insert(u);
        }
        Ok(Self::from_bits(bits))
    }

    fn from_bits(bits: Vec<FixedBitSet>) -> Self {
        let n = bits.len();
        let adj: Vec<Vec<Vertex>> = bits.iter().map(|b| b.ones().collect()).collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { n, m, adj, bits }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut bits = vec![FixedBitSet::with_capacity(n); n];
        for (v, b) in bits.iter_mut().enumerate() {
            b.insert_range(..);
            b.set(v, false);
        }
        Self::from_bits(bits)
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    /// The star `K_{1,leaves}` centered at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid star")
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`,
    /// spokes `i -- i+5`.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Self::from_edges(10, edges).expect("valid petersen")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn neighbor_bits(&self, v: Vertex) -> &FixedBitSet {
        &self.bits[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.bits[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.n < 2 || 2 * self.m == self.n * (self.n - 1)
    }

    /// Number of neighbors of `v` inside `set`.
    pub fn degree_in(&self, v: Vertex, set: &VertexSet) -> usize {
        self.bits[v].intersection_count(&set.bits)
    }

    /// Neighbors of `v` inside `set`, ascending.
    pub fn neighbors_in(&self, v: Vertex, set: &VertexSet) -> VertexSet {
        let mut bits = self.bits[v].clone();
        bits.intersect_with(&set.bits);
        VertexSet { bits }
    }

    /// Subgraph induced by `vertices`. Returns the subgraph (relabelled to
    /// `0..k` in the given order) and the local-to-global vertex map.
    pub fn induced(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let k = vertices.len();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut bits = vec![FixedBitSet::with_capacity(k); k];
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = local[w];
                if j != usize::MAX {
                    bits[i].insert(j);
                }
            }
        }
        (Self::from_bits(bits), vertices.to_vec())
    }

    /// A new graph with the given extra edges.
    pub fn with_edges<I: IntoIterator<Item = Edge>>(&self, extra: I) -> Result<Self, GraphError> {
        Self::from_edges(self.n, self.edges().chain(extra))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// A set of vertices of some host graph with `n` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn from_iter<I: IntoIterator<Item = Vertex>>(n: usize, it: I) -> Self {
        let mut s = Self::new(n);
        for v in it {
            s.insert(v);
        }
        s
    }

    /// Host graph order this set lives in.
    #[inline]
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.bits.contains(v)
    }

    #[inline]
    pub fn insert(&mut self, v: Vertex) {
        self.bits.insert(v);
    }

    #[inline]
    pub fn remove(&mut self, v: Vertex) {
        self.bits.set(v, false);
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.bits.ones().collect()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.bits.minimum()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        VertexSet { bits }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        VertexSet { bits }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        VertexSet { bits }
    }

    pub fn complement(&self) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        VertexSet { bits }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.bits.intersection_count(&other.bits)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// The edges leaving `side`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeCut {
    pub side: VertexSet,
    /// Crossing edges `(inside, outside)`, sorted.
    pub boundary: Vec<Edge>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicates_and_reversals_collapse() {
        let g = Graph::from_edges(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn rejects_loops_and_range() {
        assert_eq!(
            Graph::from_edges(3, [(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn named_graphs() {
        assert_eq!(Graph::complete(4).m(), 6);
        assert_eq!(Graph::path(4).m(), 3);
        let p = Graph::petersen();
        assert_eq!(p.m(), 15);
        assert!(p.vertices().all(|v| p.degree(v) == 3));
        assert!(Graph::complete(1).is_complete());
        assert!(!Graph::cycle(4).is_complete());
    }

    #[test]
    fn induced_relabels() {
        let g = Graph::path(4);
        let (h, map) = g.induced(&[1, 2, 3]);
        assert_eq!(h.m(), 2);
        assert_eq!(map, vec![1, 2, 3]);
        assert!(h.has_edge(0, 1) && h.has_edge(1, 2));
    }

    #[test]
    fn vertex_set_algebra() {
        let a = VertexSet::from_iter(6, [0, 1, 2]);
        let b = VertexSet::from_iter(6, [2, 3]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(a.intersection(&b).to_vec(), vec![2]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 1]);
        assert_eq!(a.complement().to_vec(), vec![3, 4, 5]);
    }
}
