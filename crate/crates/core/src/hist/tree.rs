//! Spanning trees, subtrees, and the quasi-HIT extension lemmas.
//!
//! A HIT is a subtree with no vertex of degree 2. A 1-quasi-HIT has exactly
//! one degree-2 vertex (its center) and a 2-quasi-HIT exactly two. Gluing a
//! HIST of an attached vertex set onto each center raises the center's
//! degree above 2 and yields a HIT.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::dsu::RollbackDsu;
use crate::error::{domain, DomainError};
use crate::graph::{ordered, Edge, Graph, Vertex, VertexSet};

/// An edge set claimed to be a spanning tree of a graph on `host_n`
/// vertices. Edges are stored normalized and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpanningTree {
    pub host_n: usize,
    pub edges: Vec<Edge>,
}

impl SpanningTree {
    pub fn new(host_n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut edges: Vec<Edge> = edges.into_iter().map(|(u, v)| ordered(u, v)).collect();
        edges.sort_unstable();
        SpanningTree { host_n, edges }
    }

    /// The star centered at `center` over all vertices of `g`.
    pub fn star(g: &Graph, center: Vertex) -> Self {
        Self::new(
            g.n(),
            g.vertices().filter(|&v| v != center).map(|v| (center, v)),
        )
    }

    pub fn degrees(&self) -> Vec<usize> {
        degree_vector(self.host_n, &self.edges)
    }
}

impl Serialize for SpanningTree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.edges.iter().map(|&(u, v)| [u, v]))
    }
}

fn degree_vector(n: usize, edges: &[Edge]) -> Vec<usize> {
    let mut d = vec![0; n];
    for &(u, v) in edges {
        d[u] += 1;
        d[v] += 1;
    }
    d
}

/// Why an edge set fails to be a HIST.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeDefect {
    OrderMismatch { graph: usize, tree: usize },
    EdgeNotInGraph(Edge),
    DuplicateEdge(Edge),
    WrongEdgeCount { expected: usize, found: usize },
    Cycle(Edge),
    DegreeTwo(Vec<Vertex>),
}

impl fmt::Display for TreeDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeDefect::OrderMismatch { graph, tree } => {
                write!(f, "tree is over {tree} vertices but the graph has {graph}")
            }
            TreeDefect::EdgeNotInGraph((u, v)) => write!(f, "edge not in graph: {u} {v}"),
            TreeDefect::DuplicateEdge((u, v)) => write!(f, "duplicate edge: {u} {v}"),
            TreeDefect::WrongEdgeCount { expected, found } => {
                write!(f, "wrong edge count: expected {expected}, found {found}")
            }
            TreeDefect::Cycle((u, v)) => write!(f, "cycle closed by edge {u} {v}"),
            TreeDefect::DegreeTwo(vs) => {
                let list: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                write!(f, "degree-2 vertices: {}", list.join(","))
            }
        }
    }
}

/// Checks that `t` is a spanning tree of `g` without degree-2 vertices.
pub fn check_hist(g: &Graph, t: &SpanningTree) -> Result<(), TreeDefect> {
    check_spanning_tree(g, t)?;
    let twos: Vec<Vertex> = t
        .degrees()
        .iter()
        .enumerate()
        .filter(|&(_, &d)| d == 2)
        .map(|(v, _)| v)
        .collect();
    if twos.is_empty() {
        Ok(())
    } else {
        Err(TreeDefect::DegreeTwo(twos))
    }
}

/// Checks that `t` is a spanning tree of `g`; degrees are not inspected.
pub fn check_spanning_tree(g: &Graph, t: &SpanningTree) -> Result<(), TreeDefect> {
    let n = g.n();
    if t.host_n != n {
        return Err(TreeDefect::OrderMismatch {
            graph: n,
            tree: t.host_n,
        });
    }
    for &(u, v) in &t.edges {
        if u >= n || v >= n || !g.has_edge(u, v) {
            return Err(TreeDefect::EdgeNotInGraph((u, v)));
        }
    }
    let mut sorted = t.edges.clone();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(TreeDefect::DuplicateEdge(w[0]));
    }
    let expected = n.saturating_sub(1);
    if t.edges.len() != expected {
        return Err(TreeDefect::WrongEdgeCount {
            expected,
            found: t.edges.len(),
        });
    }
    let mut dsu = RollbackDsu::new(n);
    for &(u, v) in &t.edges {
        if !dsu.union(u, v) {
            return Err(TreeDefect::Cycle((u, v)));
        }
    }
    Ok(())
}

pub fn verify_hist(g: &Graph, t: &SpanningTree) -> bool {
    check_hist(g, t).is_ok()
}

/// A tree on a subset of the vertices of some graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subtree {
    /// Vertices, ascending.
    pub vertices: Vec<Vertex>,
    /// Edges, normalized and sorted.
    pub edges: Vec<Edge>,
}

impl Subtree {
    pub fn singleton(v: Vertex) -> Self {
        Subtree {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    /// Builds a subtree from a nonempty edge list, checking that it is
    /// acyclic and connected.
    pub fn from_edges(edges: impl IntoIterator<Item = Edge>) -> Result<Self, DomainError> {
        let mut edges: Vec<Edge> = edges.into_iter().map(|(u, v)| ordered(u, v)).collect();
        edges.sort_unstable();
        edges.dedup();
        if edges.is_empty() {
            return domain("subtree: empty edge set (use Subtree::singleton)");
        }
        let mut vertices: Vec<Vertex> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        if edges.len() + 1 != vertices.len() {
            return domain("subtree: edge set is not a tree");
        }
        let index: BTreeMap<Vertex, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut dsu = RollbackDsu::new(vertices.len());
        for &(u, v) in &edges {
            if !dsu.union(index[&u], index[&v]) {
                return domain("subtree: edge set contains a cycle");
            }
        }
        Ok(Subtree { vertices, edges })
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_iter(n, self.vertices.iter().copied())
    }

    pub fn into_spanning(self, host_n: usize) -> SpanningTree {
        SpanningTree::new(host_n, self.edges)
    }

    fn degree_map(&self) -> BTreeMap<Vertex, usize> {
        let mut d: BTreeMap<Vertex, usize> = self.vertices.iter().map(|&v| (v, 0)).collect();
        for &(u, v) in &self.edges {
            *d.get_mut(&u).expect("endpoint") += 1;
            *d.get_mut(&v).expect("endpoint") += 1;
        }
        d
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum QuasiKind {
    Hit,
    Quasi1,
    Quasi2,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiClass {
    pub class: QuasiKind,
    pub deg2_vertices: Vec<Vertex>,
}

/// Classifies a tree by how many degree-2 vertices it has.
pub fn classify_quasi(edges: &[Edge]) -> Result<QuasiClass, DomainError> {
    if edges.is_empty() {
        return Ok(QuasiClass {
            class: QuasiKind::Hit,
            deg2_vertices: Vec::new(),
        });
    }
    let t = Subtree::from_edges(edges.iter().copied())?;
    Ok(classify_subtree(&t))
}

pub fn classify_subtree(t: &Subtree) -> QuasiClass {
    let deg2_vertices: Vec<Vertex> = t
        .degree_map()
        .into_iter()
        .filter(|&(_, d)| d == 2)
        .map(|(v, _)| v)
        .collect();
    let class = match deg2_vertices.len() {
        0 => QuasiKind::Hit,
        1 => QuasiKind::Quasi1,
        2 => QuasiKind::Quasi2,
        _ => QuasiKind::Neither,
    };
    QuasiClass {
        class,
        deg2_vertices,
    }
}

/// Checks that `edges` form a HIST of the subgraph of `g` induced by `set`.
pub fn check_induced_hist(g: &Graph, set: &VertexSet, edges: &[Edge]) -> Result<(), DomainError> {
    for &(u, v) in edges {
        if !set.contains(u) || !set.contains(v) {
            return domain(format!("edge {u} {v} leaves the attached vertex set"));
        }
        if !g.has_edge(u, v) {
            return domain(format!("edge {u} {v} is not in the graph"));
        }
    }
    if set.len() == 1 {
        return if edges.is_empty() {
            Ok(())
        } else {
            domain("a single vertex carries no edges")
        };
    }
    let t = Subtree::from_edges(edges.iter().copied())?;
    if t.vertices.len() != set.len() {
        return domain("attached tree does not span its vertex set");
    }
    if classify_subtree(&t).class != QuasiKind::Hit {
        return domain("attached tree has a degree-2 vertex");
    }
    Ok(())
}

fn check_subgraph(g: &Graph, t: &Subtree) -> Result<(), DomainError> {
    match t.edges.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
        Some((u, v)) => domain(format!("tree edge {u} {v} is not in the graph")),
        None => Ok(()),
    }
}

fn check_attachment(
    g: &Graph,
    t: &Subtree,
    center: Vertex,
    set: &VertexSet,
    set_tree: &[Edge],
    label: &str,
) -> Result<(), DomainError> {
    let overlap: Vec<Vertex> = t.vertices.iter().copied().filter(|&x| set.contains(x)).collect();
    if overlap != [center] {
        return domain(format!(
            "{label} must meet the quasi-HIT exactly in its center {center}, found {overlap:?}"
        ));
    }
    check_induced_hist(g, set, set_tree).map_err(|e| DomainError::new(format!("{label}: {e}")))?;
    if !set_tree.iter().any(|&(a, b)| a == center || b == center) {
        return domain(format!("{label}: center {center} gains no edge"));
    }
    Ok(())
}

/// Glues a HIST of `G[S]` onto the center of a 1-quasi-HIT.
pub fn extend_quasi1(
    g: &Graph,
    t: &Subtree,
    s: &VertexSet,
    s_tree: &[Edge],
) -> Result<Subtree, DomainError> {
    check_subgraph(g, t)?;
    let q = classify_subtree(t);
    if q.class != QuasiKind::Quasi1 {
        return domain(format!("extend_quasi1: input is {:?}, not a 1-quasi-HIT", q.class));
    }
    let v = q.deg2_vertices[0];
    check_attachment(g, t, v, s, s_tree, "S")?;
    let out = Subtree::from_edges(t.edges.iter().chain(s_tree).copied())?;
    match classify_subtree(&out).class {
        QuasiKind::Hit => Ok(out),
        other => domain(format!("extend_quasi1: result is {other:?}")),
    }
}

/// Glues HISTs of `G[S]` and `G[U]` onto the two centers of a 2-quasi-HIT.
/// `s` attaches at `v` and `u_set` at `w`, where `{v, w}` are the centers.
pub fn extend_quasi2(
    g: &Graph,
    t: &Subtree,
    v: Vertex,
    s: &VertexSet,
    s_tree: &[Edge],
    w: Vertex,
    u_set: &VertexSet,
    u_tree: &[Edge],
) -> Result<Subtree, DomainError> {
    check_subgraph(g, t)?;
    let q = classify_subtree(t);
    if q.class != QuasiKind::Quasi2 {
        return domain(format!("extend_quasi2: input is {:?}, not a 2-quasi-HIT", q.class));
    }
    let mut centers = [v, w];
    centers.sort_unstable();
    if q.deg2_vertices != centers {
        return domain(format!(
            "extend_quasi2: centers {:?} differ from the degree-2 vertices {:?}",
            centers, q.deg2_vertices
        ));
    }
    if !s.is_disjoint(u_set) {
        return domain("extend_quasi2: S and U overlap");
    }
    check_attachment(g, t, v, s, s_tree, "S")?;
    check_attachment(g, t, w, u_set, u_tree, "U")?;
    let out = Subtree::from_edges(t.edges.iter().chain(s_tree).chain(u_tree).copied())?;
    match classify_subtree(&out).class {
        QuasiKind::Hit => Ok(out),
        other => domain(format!("extend_quasi2: result is {other:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_examples() {
        let k4 = Graph::complete(4);
        assert!(verify_hist(&k4, &SpanningTree::star(&k4, 0)));
        let p4 = Graph::path(4);
        let t = SpanningTree::new(4, p4.edges());
        assert_eq!(check_hist(&p4, &t), Err(TreeDefect::DegreeTwo(vec![1, 2])));
        assert_eq!(
            check_hist(&p4, &t).unwrap_err().to_string(),
            "degree-2 vertices: 1,2"
        );
    }

    #[test]
    fn verify_failure_reasons() {
        let p4 = Graph::path(4);
        let foreign = SpanningTree::new(4, [(0, 1), (1, 2), (0, 3)]);
        assert!(matches!(check_hist(&p4, &foreign), Err(TreeDefect::EdgeNotInGraph(_))));
        assert!(check_hist(&p4, &foreign).unwrap_err().to_string().starts_with("edge not in graph"));
        let short = SpanningTree::new(4, [(0, 1)]);
        assert!(matches!(check_hist(&p4, &short), Err(TreeDefect::WrongEdgeCount { .. })));
        let k4 = Graph::complete(4);
        let cyc = SpanningTree::new(4, [(0, 1), (1, 2), (0, 2)]);
        assert!(matches!(check_hist(&k4, &cyc), Err(TreeDefect::Cycle(_))));
        let dup = SpanningTree { host_n: 4, edges: vec![(0, 1), (0, 1), (0, 2)] };
        assert!(matches!(check_hist(&k4, &dup), Err(TreeDefect::DuplicateEdge(_))));
        assert!(matches!(
            check_hist(&k4, &SpanningTree::new(5, [])),
            Err(TreeDefect::OrderMismatch { .. })
        ));
    }

    #[test]
    fn trivial_trees_are_hists() {
        assert!(verify_hist(&Graph::complete(1), &SpanningTree::new(1, [])));
        assert!(verify_hist(&Graph::complete(2), &SpanningTree::new(2, [(0, 1)])));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_quasi(&[(0, 1), (1, 2)]).unwrap().class, QuasiKind::Quasi1);
        assert_eq!(classify_quasi(&[(0, 1), (0, 2), (0, 3)]).unwrap().class, QuasiKind::Hit);
        let p5 = [(0, 1), (1, 2), (2, 3), (3, 4)];
        let q = classify_quasi(&p5).unwrap();
        assert_eq!(q.class, QuasiKind::Neither);
        assert_eq!(q.deg2_vertices, vec![1, 2, 3]);
        assert!(classify_quasi(&[(0, 1), (1, 2), (0, 2)]).is_err());
        assert!(classify_quasi(&[(0, 1), (2, 3)]).is_err());
    }

    #[test]
    fn extend_quasi1_star_attachment() {
        // a(0) - v(1) - b(2), S = {1, 3, 4, 5} with a star at v.
        let g = Graph::complete(6);
        let t = Subtree::from_edges([(0, 1), (1, 2)]).unwrap();
        let s = VertexSet::from_iter(6, [1, 3, 4, 5]);
        let out = extend_quasi1(&g, &t, &s, &[(1, 3), (1, 4), (1, 5)]).unwrap();
        assert_eq!(out.degree(1), 5);
        assert_eq!(classify_subtree(&out).class, QuasiKind::Hit);
    }

    #[test]
    fn extend_quasi1_rejects_bad_inputs() {
        let g = Graph::complete(6);
        let t = Subtree::from_edges([(0, 1), (1, 2)]).unwrap();
        let single = VertexSet::from_iter(6, [1]);
        assert!(extend_quasi1(&g, &t, &single, &[]).is_err());
        let overlap = VertexSet::from_iter(6, [1, 2, 3]);
        assert!(extend_quasi1(&g, &t, &overlap, &[(1, 3), (2, 3)]).is_err());
        let path = VertexSet::from_iter(6, [1, 3, 4]);
        assert!(extend_quasi1(&g, &t, &path, &[(1, 3), (3, 4)]).is_err());
    }

    #[test]
    fn extend_quasi2_double_p3() {
        // Centers 1 and 2 hang off the hub 0.
        let g = Graph::complete(12);
        let t = Subtree::from_edges([(0, 1), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(classify_subtree(&t).class, QuasiKind::Quasi2);
        let s = VertexSet::from_iter(12, [1, 6, 7, 8]);
        let s_tree = [(1, 6), (1, 7), (1, 8)];
        let u = VertexSet::from_iter(12, [2, 9, 10, 11]);
        let u_tree = [(2, 9), (2, 10), (2, 11)];
        let out = extend_quasi2(&g, &t, 1, &s, &s_tree, 2, &u, &u_tree).unwrap();
        assert_eq!(classify_subtree(&out).class, QuasiKind::Hit);
        assert_eq!(out.vertices.len(), 12);

        let clash = VertexSet::from_iter(12, [2, 6, 9, 10]);
        let err = extend_quasi2(&g, &t, 1, &s, &s_tree, 2, &clash, &[(2, 6), (2, 9), (2, 10)]);
        assert!(err.unwrap_err().0.contains("overlap"));
    }
}
