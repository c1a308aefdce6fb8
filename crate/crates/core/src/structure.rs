//! Elementary structural queries: components, cuts, articulation points,
//! induced 3-paths and shortest set-to-set paths.

use std::collections::VecDeque;

use crate::error::{domain, DomainError};
use crate::graph::{Edge, EdgeCut, Graph, Vertex, VertexSet};

/// Connected components of the subgraph induced by `restrict` (all of
/// `V(g)` when `None`), ordered by smallest member.
pub fn components(g: &Graph, restrict: Option<&VertexSet>) -> Vec<VertexSet> {
    let allowed = match restrict {
        Some(s) => s.clone(),
        None => VertexSet::full(g.n()),
    };
    let mut seen = VertexSet::new(g.n());
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for s in allowed.iter() {
        if seen.contains(s) {
            continue;
        }
        let mut comp = VertexSet::new(g.n());
        seen.insert(s);
        comp.insert(s);
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if allowed.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    comp.insert(w);
                    queue.push_back(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() <= 1 || components(g, None).len() == 1
}

/// Whether `set` induces a connected subgraph. The empty set counts as
/// connected.
pub fn is_connected_within(g: &Graph, set: &VertexSet) -> bool {
    components(g, Some(set)).len() <= 1
}

pub fn is_clique(g: &Graph, set: &VertexSet) -> bool {
    let k = set.len();
    set.iter().all(|v| g.degree_in(v, set) == k - 1)
}

pub fn edge_cut(g: &Graph, side: &VertexSet) -> Result<EdgeCut, DomainError> {
    let k = side.len();
    if k == 0 || k == g.n() {
        return domain("edge_cut: side must be a proper nonempty subset of V");
    }
    let mut boundary: Vec<Edge> = Vec::new();
    for u in side.iter() {
        for &v in g.neighbors(u) {
            if !side.contains(v) {
                boundary.push((u, v));
            }
        }
    }
    boundary.sort_unstable();
    Ok(EdgeCut {
        side: side.clone(),
        boundary,
    })
}

/// Articulation points of a connected graph.
pub fn cut_vertices(g: &Graph) -> Result<VertexSet, DomainError> {
    if !is_connected(g) {
        return domain("cut_vertices: graph is disconnected");
    }
    let n = g.n();
    let mut out = VertexSet::new(n);
    if n < 3 {
        return Ok(out);
    }
    // Iterative Tarjan lowpoint computation rooted at 0.
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut next_edge = vec![0usize; n];
    let mut root_children = 0;
    let mut timer = 0;
    let mut stack = vec![0usize];
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    while let Some(&v) = stack.last() {
        let nb = g.neighbors(v);
        if next_edge[v] < nb.len() {
            let w = nb[next_edge[v]];
            next_edge[v] += 1;
            if disc[w] == usize::MAX {
                parent[w] = v;
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                if v == 0 {
                    root_children += 1;
                }
                stack.push(w);
            } else if w != parent[v] {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            let p = parent[v];
            if p != usize::MAX {
                low[p] = low[p].min(low[v]);
                if p != 0 && low[v] >= disc[p] {
                    out.insert(p);
                }
            }
        }
    }
    if root_children > 1 {
        out.insert(0);
    }
    Ok(out)
}

/// Finds an induced path `z x y` with `x, y` in `x_set`.
///
/// Among all valid pairs the lexicographically least `(x, y)` is returned.
pub fn find_induced_p3(
    g: &Graph,
    x_set: &VertexSet,
    z: Vertex,
) -> Result<(Vertex, Vertex), DomainError> {
    if x_set.contains(z) {
        return domain("find_induced_p3: z must lie outside x_set");
    }
    let nz = g.degree_in(z, x_set);
    if nz == 0 {
        return domain("find_induced_p3: z has no neighbor in x_set");
    }
    if nz >= x_set.len() {
        return domain("find_induced_p3: z is adjacent to every vertex of x_set");
    }
    if !is_connected_within(g, x_set) {
        return domain("find_induced_p3: x_set does not induce a connected subgraph");
    }
    for x in g.neighbors_in(z, x_set).iter() {
        if let Some(&y) = g
            .neighbors(x)
            .iter()
            .find(|&&y| x_set.contains(y) && !g.has_edge(z, y))
        {
            return Ok((x, y));
        }
    }
    unreachable!("a connected x_set with a non-neighbor of z always has an induced z-x-y path")
}

/// A shortest `(X, Y)`-path: starts in `x_set`, ends in `y_set`, interior
/// avoids both. If the sets meet, the path is the single least common vertex.
pub fn find_xy_path(
    g: &Graph,
    x_set: &VertexSet,
    y_set: &VertexSet,
) -> Result<Vec<Vertex>, DomainError> {
    find_xy_path_within(g, x_set, y_set, &VertexSet::full(g.n()))
}

/// As [`find_xy_path`], restricted to the subgraph induced by `within`.
pub fn find_xy_path_within(
    g: &Graph,
    x_set: &VertexSet,
    y_set: &VertexSet,
    within: &VertexSet,
) -> Result<Vec<Vertex>, DomainError> {
    let x_set = x_set.intersection(within);
    let y_set = y_set.intersection(within);
    if x_set.is_empty() || y_set.is_empty() {
        return domain("find_xy_path: endpoint sets must be nonempty");
    }
    if let Some(v) = x_set.intersection(&y_set).first() {
        return Ok(vec![v]);
    }
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = x_set.clone();
    let mut queue: VecDeque<Vertex> = x_set.iter().collect();
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !within.contains(w) || seen.contains(w) {
                continue;
            }
            seen.insert(w);
            parent[w] = v;
            if y_set.contains(w) {
                let mut path = vec![w];
                let mut cur = w;
                while parent[cur] != usize::MAX {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Ok(path);
            }
            queue.push_back(w);
        }
    }
    domain("find_xy_path: no path joins the two sets")
}

/// `2·δ(g) > n − 2`, a sufficient condition for connectivity.
pub fn min_degree_connectivity_guard(g: &Graph) -> bool {
    2 * g.min_degree() as i64 > g.n() as i64 - 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::obstructions::{generate_h, Family};

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, v.iter().copied())
    }

    #[test]
    fn components_examples() {
        let p4 = Graph::path(4);
        let c = components(&p4, Some(&set(4, &[0, 1, 3])));
        assert_eq!(c.iter().map(|s| s.to_vec()).collect::<Vec<_>>(), vec![vec![0, 1], vec![3]]);
        assert_eq!(components(&Graph::complete(4), None).len(), 1);
        let h1 = generate_h(Family::H1, 9, false).unwrap();
        let rest = VertexSet::full(9).difference(&set(9, &[0]));
        let c = components(&h1, Some(&rest));
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|s| s.len() == 4));
    }

    #[test]
    fn edge_cut_examples() {
        let p4 = Graph::path(4);
        assert_eq!(edge_cut(&p4, &set(4, &[0])).unwrap().boundary, vec![(0, 1)]);
        let k4 = Graph::complete(4);
        assert_eq!(edge_cut(&k4, &set(4, &[0, 1])).unwrap().boundary.len(), 4);
        let h2 = generate_h(Family::H2, 9, false).unwrap();
        // Vertices 3..6 form the first K3 block.
        assert_eq!(edge_cut(&h2, &set(9, &[3, 4, 5])).unwrap().boundary.len(), 1);
        assert!(edge_cut(&p4, &VertexSet::new(4)).is_err());
        assert!(edge_cut(&p4, &VertexSet::full(4)).is_err());
    }

    #[test]
    fn cut_vertex_examples() {
        assert_eq!(cut_vertices(&Graph::path(4)).unwrap().to_vec(), vec![1, 2]);
        assert!(cut_vertices(&Graph::complete(4)).unwrap().is_empty());
        // The degree-2 vertex and both of its clique neighbors separate H1.
        let h1 = generate_h(Family::H1, 9, false).unwrap();
        assert_eq!(cut_vertices(&h1).unwrap().to_vec(), vec![0, 1, 5]);
        let disconnected = Graph::empty(3);
        assert!(cut_vertices(&disconnected).is_err());
    }

    #[test]
    fn induced_p3_examples() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(find_induced_p3(&g, &set(3, &[1, 2]), 0).unwrap(), (1, 2));

        let g = Graph::from_edges(4, [(1, 2), (2, 3), (1, 3), (0, 1), (0, 2)]).unwrap();
        assert_eq!(find_induced_p3(&g, &set(4, &[1, 2, 3]), 0).unwrap(), (1, 3));

        let g = Graph::from_edges(4, [(1, 2), (2, 3), (0, 1), (0, 3)]).unwrap();
        assert_eq!(find_induced_p3(&g, &set(4, &[1, 2, 3]), 0).unwrap(), (1, 2));

        let k4 = Graph::complete(4);
        let err = find_induced_p3(&k4, &set(4, &[1, 2, 3]), 0).unwrap_err();
        assert!(err.0.contains("every vertex"));
        assert!(find_induced_p3(&k4, &set(4, &[0, 1]), 0).is_err());
    }

    #[test]
    fn xy_path_examples() {
        let p4 = Graph::path(4);
        assert_eq!(find_xy_path(&p4, &set(4, &[0]), &set(4, &[0])).unwrap(), vec![0]);
        assert_eq!(find_xy_path(&p4, &set(4, &[0]), &set(4, &[3])).unwrap(), vec![0, 1, 2, 3]);
        let p = Graph::petersen();
        let far: Vec<usize> = (1..10).filter(|&v| !p.has_edge(0, v)).collect();
        let path = find_xy_path(&p, &set(10, &[0]), &set(10, &far)).unwrap();
        assert_eq!(path.len(), 3);
    }

    #[test]
    fn guard_examples() {
        assert!(min_degree_connectivity_guard(&Graph::complete(4)));
        assert!(!min_degree_connectivity_guard(&Graph::path(4)));
        assert!(min_degree_connectivity_guard(&Graph::cycle(5)));
    }
}
