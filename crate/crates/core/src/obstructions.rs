//! Certified structures that rule out a HIST, and generators for the three
//! exceptional families.
//!
//! A degree-2 cut vertex `v` forces both of its edges into every spanning
//! tree, so `v` ends with tree degree 2. A triangle whose three vertices
//! all have degree at most 3 and whose removal leaves exactly two
//! components forces a degree-2 vertex on the triangle. The families
//! `H1`, `H2`, `H3` are instances of these two patterns built from two
//! cliques.

use serde::Serialize;

use crate::error::{domain, DomainError};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::structure::{components, cut_vertices, is_clique};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    H1,
    H2,
    H3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ObstructionKind {
    None,
    CutVertexDeg2,
    PendantAtDeg2,
    TriangleSplit,
    H1,
    H2,
    H3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub kind: ObstructionKind,
    /// Certifying vertices, ascending.
    pub witness: Vec<Vertex>,
}

impl ObstructionReport {
    pub fn none() -> Self {
        ObstructionReport {
            kind: ObstructionKind::None,
            witness: Vec::new(),
        }
    }

    pub fn is_obstruction(&self) -> bool {
        self.kind != ObstructionKind::None
    }

    fn new(kind: ObstructionKind, mut witness: Vec<Vertex>) -> Self {
        witness.sort_unstable();
        witness.dedup();
        ObstructionReport { kind, witness }
    }
}

/// Smallest articulation point of degree 2.
pub fn detect_cut_vertex_deg2(g: &Graph) -> Option<Vertex> {
    let cuts = cut_vertices(g).ok()?;
    let found = cuts.iter().find(|&v| g.degree(v) == 2);
    found
}

/// Least `(pendant, neighbor)` with the neighbor of degree 2.
pub fn detect_pendant_at_deg2(g: &Graph) -> Option<(Vertex, Vertex)> {
    g.vertices().find_map(|p| match g.neighbors(p) {
        [q] if g.degree(*q) == 2 => Some((p, *q)),
        _ => None,
    })
}

fn low_degree_triangles(g: &Graph) -> impl Iterator<Item = [Vertex; 3]> + '_ {
    let low = |v: Vertex| g.degree(v) <= 3;
    g.vertices().filter(move |&a| low(a)).flat_map(move |a| {
        g.neighbors(a)
            .iter()
            .copied()
            .filter(move |&b| b > a && low(b))
            .flat_map(move |b| {
                g.neighbors(b)
                    .iter()
                    .copied()
                    .filter(move |&c| c > b && low(c) && g.has_edge(a, c))
                    .map(move |c| [a, b, c])
            })
    })
}

fn components_without(g: &Graph, removed: &[Vertex]) -> Vec<VertexSet> {
    let mut rest = VertexSet::full(g.n());
    for &v in removed {
        rest.remove(v);
    }
    components(g, Some(&rest))
}

/// First triangle, in lexicographic order, whose vertices all have degree
/// at most 3 and whose removal leaves exactly two components.
pub fn detect_triangle_split(g: &Graph) -> Option<VertexSet> {
    low_degree_triangles(g)
        .find(|t| components_without(g, t).len() == 2)
        .map(|t| VertexSet::from_iter(g.n(), t))
}

fn match_h1(g: &Graph) -> Option<ObstructionReport> {
    let n = g.n();
    if n < 5 || n % 2 == 0 {
        return None;
    }
    let half = (n - 1) / 2;
    g.vertices().filter(|&v| g.degree(v) == 2).find_map(|v| {
        let comps = components_without(g, &[v]);
        let ok = comps.len() == 2 && comps.iter().all(|c| c.len() == half && is_clique(g, c));
        ok.then(|| {
            let mut w = vec![v];
            w.extend_from_slice(g.neighbors(v));
            ObstructionReport::new(ObstructionKind::H1, w)
        })
    })
}

/// Matches the triangle-plus-two-cliques skeleton shared by `H2` and `H3`.
fn match_h23(g: &Graph) -> Option<ObstructionReport> {
    let n = g.n();
    if n < 5 || n % 2 == 0 {
        return None;
    }
    let block = (n - 3) / 2;
    low_degree_triangles(g).find_map(|t| {
        let comps = components_without(g, &t);
        if comps.len() != 2 || !comps.iter().all(|c| c.len() == block && is_clique(g, c)) {
            return None;
        }
        // For each triangle vertex, its external neighbors and their component.
        let mut attach: Vec<(Vertex, Vertex, usize)> = Vec::new();
        for &v in &t {
            for &w in g.neighbors(v) {
                if t.contains(&w) {
                    continue;
                }
                let side = usize::from(comps[1].contains(w));
                attach.push((v, w, side));
            }
        }
        let on_side = |s: usize| attach.iter().filter(|a| a.2 == s).count();
        let per_vertex_ok = t
            .iter()
            .all(|&v| attach.iter().filter(|a| a.0 == v).count() <= 1);
        if !per_vertex_ok {
            return None;
        }
        let mut witness: Vec<Vertex> = t.to_vec();
        witness.extend(attach.iter().map(|a| a.1));
        match (attach.len(), on_side(0), on_side(1)) {
            (2, 1, 1) => Some(ObstructionReport::new(ObstructionKind::H2, witness)),
            (3, 1, 2) | (3, 2, 1) => Some(ObstructionReport::new(ObstructionKind::H3, witness)),
            _ => None,
        }
    })
}

/// Exact structural match for the exceptional families, falling back to the
/// generic certificates in the order cut vertex, pendant, triangle split.
pub fn match_family(g: &Graph) -> ObstructionReport {
    if let Some(r) = match_h1(g) {
        return r;
    }
    if let Some(r) = match_h23(g) {
        return r;
    }
    if let Some(v) = detect_cut_vertex_deg2(g) {
        return ObstructionReport::new(ObstructionKind::CutVertexDeg2, vec![v]);
    }
    if let Some((p, q)) = detect_pendant_at_deg2(g) {
        return ObstructionReport::new(ObstructionKind::PendantAtDeg2, vec![p, q]);
    }
    if let Some(t) = detect_triangle_split(g) {
        return ObstructionReport::new(ObstructionKind::TriangleSplit, t.to_vec());
    }
    ObstructionReport::none()
}

/// Builds `H1`, `H2` or `H3` on `n` vertices.
///
/// Labeling:
/// * `H1`: the degree-2 vertex is `0`; the cliques are `1..=k` and
///   `k+1..=2k` with `k = (n-1)/2`; `0` is joined to `1` and `k+1`.
/// * `H2`: the triangle is `0, 1, 2` (vertex `2` has degree 2); the cliques
///   are `3..3+k` and `3+k..n` with `k = (n-3)/2`; `0 -- 3` and `1 -- 3+k`.
/// * `H3`: `H2` plus `2 -- 4+k`, or `2 -- 3+k` when `coincide` is set.
pub fn generate_h(which: Family, n: usize, coincide: bool) -> Result<Graph, DomainError> {
    if n % 2 == 0 {
        return domain(format!("generate_h: n = {n} must be odd"));
    }
    let min = match which {
        Family::H1 => 5,
        Family::H2 | Family::H3 => 9,
    };
    if n < min {
        return domain(format!("generate_h: n = {n} is below the minimum {min} for {which:?}"));
    }
    let mut edges = Vec::new();
    let clique = |edges: &mut Vec<(usize, usize)>, lo: usize, hi: usize| {
        for a in lo..hi {
            for b in (a + 1)..hi {
                edges.push((a, b));
            }
        }
    };
    match which {
        Family::H1 => {
            let k = (n - 1) / 2;
            clique(&mut edges, 1, k + 1);
            clique(&mut edges, k + 1, n);
            edges.extend([(0, 1), (0, k + 1)]);
        }
        Family::H2 | Family::H3 => {
            let k = (n - 3) / 2;
            edges.extend([(0, 1), (0, 2), (1, 2)]);
            clique(&mut edges, 3, 3 + k);
            clique(&mut edges, 3 + k, n);
            edges.extend([(0, 3), (1, 3 + k)]);
            if which == Family::H3 {
                edges.push((2, if coincide { 3 + k } else { 4 + k }));
            }
        }
    }
    Ok(Graph::from_edges(n, edges).expect("family construction is simple"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(generate_h(Family::H1, 9, false).unwrap().m(), 14);
        assert_eq!(generate_h(Family::H2, 9, false).unwrap().m(), 11);
        assert_eq!(generate_h(Family::H3, 9, false).unwrap().m(), 12);
        assert_eq!(generate_h(Family::H3, 9, true).unwrap().m(), 12);
        assert!(generate_h(Family::H1, 8, false).is_err());
        assert!(generate_h(Family::H1, 3, false).is_err());
        assert!(generate_h(Family::H2, 7, false).is_err());
    }

    #[test]
    fn cut_vertex_examples() {
        assert_eq!(detect_cut_vertex_deg2(&Graph::path(4)), Some(1));
        assert_eq!(detect_cut_vertex_deg2(&generate_h(Family::H1, 9, false).unwrap()), Some(0));
        assert_eq!(detect_cut_vertex_deg2(&Graph::complete(4)), None);
    }

    #[test]
    fn pendant_examples() {
        assert_eq!(detect_pendant_at_deg2(&Graph::path(4)), Some((0, 1)));
        assert_eq!(detect_pendant_at_deg2(&Graph::star(3)), None);
        assert_eq!(detect_pendant_at_deg2(&Graph::path(3)), Some((0, 1)));
    }

    #[test]
    fn triangle_split_examples() {
        let h2 = generate_h(Family::H2, 9, false).unwrap();
        assert_eq!(detect_triangle_split(&h2).unwrap().to_vec(), vec![0, 1, 2]);
        let h3 = generate_h(Family::H3, 9, false).unwrap();
        let t = detect_triangle_split(&h3).unwrap();
        assert_eq!(t.to_vec(), vec![0, 1, 2]);
        assert!(t.iter().all(|v| h3.degree(v) <= 3));
        assert_eq!(components_without(&h3, &t.to_vec()).len(), 2);
        assert_eq!(detect_triangle_split(&Graph::complete(4)), None);
    }

    #[test]
    fn match_family_examples() {
        let r = match_family(&generate_h(Family::H1, 9, false).unwrap());
        assert_eq!(r.kind, ObstructionKind::H1);
        assert_eq!(r.witness, vec![0, 1, 5]);
        let r = match_family(&generate_h(Family::H3, 11, true).unwrap());
        assert_eq!(r.kind, ObstructionKind::H3);
        assert_eq!(r.witness, vec![0, 1, 2, 3, 7]);
        assert_eq!(match_family(&Graph::petersen()).kind, ObstructionKind::None);
        assert_eq!(match_family(&Graph::path(4)).kind, ObstructionKind::CutVertexDeg2);
    }

    #[test]
    fn families_round_trip_through_matcher() {
        for n in (9..=41).step_by(2) {
            for (fam, co, kind) in [
                (Family::H1, false, ObstructionKind::H1),
                (Family::H2, false, ObstructionKind::H2),
                (Family::H3, false, ObstructionKind::H3),
                (Family::H3, true, ObstructionKind::H3),
            ] {
                let g = generate_h(fam, n, co).unwrap();
                assert_eq!(match_family(&g).kind, kind, "{fam:?} n={n} coincide={co}");
            }
        }
    }

    #[test]
    fn relabeled_family_still_matches() {
        let g = generate_h(Family::H2, 11, false).unwrap();
        let n = g.n();
        let perm: Vec<usize> = (0..n).map(|i| (i * 7 + 3) % n).collect();
        let h = Graph::from_edges(n, g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap();
        assert_eq!(match_family(&h).kind, ObstructionKind::H2);
    }
}
