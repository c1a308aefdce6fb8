use serde::Serialize;

use crate::error::{domain, DomainError};
use crate::graph::{Edge, Graph, Vertex, VertexSet};
use crate::hist::{
    classify_subtree, constrained_search, dense_hist, exact_search, DegreeRules, QuasiKind,
    SearchOutcome, Subtree,
};
use crate::structure::{find_induced_p3, is_clique, is_connected_within};

/// Node budget for exact searches on sub-instances.
pub const SUB_BUDGET: u64 = 200_000;

pub(crate) fn star(center: Vertex, leaves: impl IntoIterator<Item = Vertex>) -> Vec<Edge> {
    leaves.into_iter().filter(|&x| x != center).map(|x| (center, x)).collect()
}

pub(crate) fn without(set: &VertexSet, drop: &[Vertex]) -> VertexSet {
    let mut s = set.clone();
    for &v in drop {
        s.remove(v);
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum SubFailure {
    NoHist(String),
    Budget(String),
}

/// HIST edges of `G[set]`: star on cliques, then the dense heuristic, then
/// exact search.
pub(crate) fn sub_hist(g: &Graph, set: &VertexSet, budget: u64) -> Result<Vec<Edge>, SubFailure> {
    let k = set.len();
    let first = set.first();
    match k {
        0 => return Err(SubFailure::NoHist("empty vertex set".into())),
        1 => return Ok(Vec::new()),
        3 if is_clique(g, set) => return Err(SubFailure::NoHist("a triangle has no HIST".into())),
        _ => {}
    }
    if !is_connected_within(g, set) {
        return Err(SubFailure::NoHist(format!("subgraph on {k} vertices is disconnected")));
    }
    if is_clique(g, set) {
        return Ok(star(first.expect("nonempty"), set.iter()));
    }
    let verts = set.to_vec();
    let (h, map) = g.induced(&verts);
    let lift = |t: &crate::hist::SpanningTree| t.edges.iter().map(|&(a, b)| (map[a], map[b])).collect();
    if let Some(t) = dense_hist(&h) {
        return Ok(lift(&t));
    }
    match exact_search(&h, budget) {
        Ok(r) => match r.outcome {
            SearchOutcome::Found(t) => Ok(lift(&t)),
            SearchOutcome::NoHist => Err(SubFailure::NoHist(format!("subgraph on {k} vertices has no HIST"))),
            SearchOutcome::BudgetExceeded => Err(SubFailure::Budget(format!(
                "search on a {k}-vertex subgraph exceeded {budget} nodes"
            ))),
        },
        Err(e) => Err(SubFailure::NoHist(e.0)),
    }
}

/// A HIST of the subgraph induced by `component ∖ removed`.
pub fn component_hist(
    g: &Graph,
    component: &VertexSet,
    removed: &VertexSet,
) -> Result<Subtree, DomainError> {
    if removed.len() > 2 {
        return domain("component_hist: at most two vertices may be removed");
    }
    if !removed.is_subset(component) {
        return domain("component_hist: removed vertices must lie in the component");
    }
    let rest = component.difference(removed);
    let edges = sub_hist(g, &rest, SUB_BUDGET).map_err(|f| match f {
        SubFailure::NoHist(m) | SubFailure::Budget(m) => DomainError::new(format!("component_hist: {m}")),
    })?;
    match rest.first() {
        Some(v) if edges.is_empty() => Ok(Subtree::singleton(v)),
        _ => Subtree::from_edges(edges),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Lemma214Branch {
    /// `u_l` sees all of `C`: star at `u_l`.
    Full,
    /// `u_l` has one neighbor in `C`.
    One,
    /// `u_l` has several but not all neighbors in `C`.
    Mid,
}

impl Lemma214Branch {
    pub fn case_id(self) -> &'static str {
        match self {
            Lemma214Branch::Full => "L2.14-full",
            Lemma214Branch::One => "L2.14-one",
            Lemma214Branch::Mid => "L2.14-mid",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentTree {
    pub branch: Lemma214Branch,
    pub tree: Subtree,
    /// The branch's explicit shape was unavailable and a degree-constrained
    /// search produced the tree instead.
    pub searched: bool,
}

/// Checks the shape required of a component tree.
pub fn check_component_tree(
    g: &Graph,
    component: &VertexSet,
    u_l: Vertex,
    t: &Subtree,
) -> Result<(), String> {
    let mut span = component.clone();
    span.insert(u_l);
    if t.vertices != span.to_vec() {
        return Err("tree does not span C + u_l".into());
    }
    if let Some(&(a, b)) = t.edges.iter().find(|&&(a, b)| !g.has_edge(a, b)) {
        return Err(format!("edge {a} {b} is not in the graph"));
    }
    let q = classify_subtree(t);
    if q.deg2_vertices.iter().any(|&x| x != u_l) {
        return Err(format!("degree-2 vertices other than u_l: {:?}", q.deg2_vertices));
    }
    let need = g.degree_in(u_l, component).min(2);
    if t.degree(u_l) < need {
        return Err(format!("u_l has tree degree {} < {need}", t.degree(u_l)));
    }
    Ok(())
}

/// A spanning tree of `G[C + u_l]` in which only `u_l` may have degree 2 and
/// `d_T(u_l) ≥ min(2, |N_C(u_l)|)`.
pub fn lemma214_component_tree(
    g: &Graph,
    component: &VertexSet,
    u_l: Vertex,
) -> Result<ComponentTree, DomainError> {
    if component.contains(u_l) {
        return domain("lemma214_component_tree: u_l must lie outside the component");
    }
    let nc = g.neighbors_in(u_l, component);
    if nc.is_empty() {
        return domain("lemma214_component_tree: u_l has no neighbor in the component");
    }
    if !is_connected_within(g, component) {
        return domain("lemma214_component_tree: component is disconnected");
    }
    let branch = if nc.len() == component.len() {
        Lemma214Branch::Full
    } else if nc.len() == 1 {
        Lemma214Branch::One
    } else {
        Lemma214Branch::Mid
    };
    let direct: Option<Vec<Edge>> = match branch {
        Lemma214Branch::Full => Some(star(u_l, component.iter())),
        _ => {
            let (x1, x2) = find_induced_p3(g, component, u_l)?;
            if branch == Lemma214Branch::One {
                sub_hist(g, &without(component, &[x2]), SUB_BUDGET).ok().map(|mut e| {
                    e.extend([(x1, u_l), (x1, x2)]);
                    e
                })
            } else {
                let x3 = nc.iter().find(|&x| x != x1).expect("at least two neighbors");
                sub_hist(g, &without(component, &[x2, x3]), SUB_BUDGET).ok().map(|mut e| {
                    e.extend([(x1, x2), (u_l, x1), (u_l, x3)]);
                    e
                })
            }
        }
    };
    if let Some(edges) = direct {
        if let Ok(t) = Subtree::from_edges(edges) {
            if check_component_tree(g, component, u_l, &t).is_ok() {
                return Ok(ComponentTree {
                    branch,
                    tree: t,
                    searched: false,
                });
            }
        }
    }
    let t = constrained_component_tree(g, component, u_l)?;
    Ok(ComponentTree {
        branch,
        tree: t,
        searched: true,
    })
}

fn constrained_component_tree(
    g: &Graph,
    component: &VertexSet,
    u_l: Vertex,
) -> Result<Subtree, DomainError> {
    let mut span = component.clone();
    span.insert(u_l);
    let verts = span.to_vec();
    let (h, map) = g.induced(&verts);
    let local = verts.iter().position(|&v| v == u_l).expect("u_l in span");
    let mut rules = DegreeRules::hist(h.n());
    rules.allow_two[local] = true;
    rules.min_degree[local] = g.degree_in(u_l, component).min(2);
    match constrained_search(&h, &rules, SUB_BUDGET)?.outcome {
        SearchOutcome::Found(t) => {
            let st = Subtree::from_edges(t.edges.iter().map(|&(a, b)| (map[a], map[b])))?;
            debug_assert!(classify_subtree(&st).class != QuasiKind::Neither || st.degree(u_l) == 2);
            Ok(st)
        }
        SearchOutcome::NoHist => domain("lemma214_component_tree: no tree with the required degrees exists"),
        SearchOutcome::BudgetExceeded => domain("lemma214_component_tree: search budget exceeded"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k5_plus(attach: &[Vertex]) -> (Graph, VertexSet) {
        let mut edges: Vec<Edge> = Graph::complete(5).edges().collect();
        edges.extend(attach.iter().map(|&x| (5, x)));
        (Graph::from_edges(6, edges).unwrap(), VertexSet::from_iter(6, 0..5))
    }

    #[test]
    fn full_branch_is_star() {
        let (g, c) = k5_plus(&[0, 1, 2, 3, 4]);
        let ct = lemma214_component_tree(&g, &c, 5).unwrap();
        assert_eq!(ct.branch, Lemma214Branch::Full);
        assert_eq!(ct.tree.degree(5), 5);
        assert!(!ct.searched);
    }

    #[test]
    fn one_branch_hangs_off_x1() {
        let (g, c) = k5_plus(&[2]);
        let ct = lemma214_component_tree(&g, &c, 5).unwrap();
        assert_eq!(ct.branch, Lemma214Branch::One);
        assert!(!ct.searched);
        assert_eq!(ct.tree.degree(5), 1);
        assert_eq!(classify_subtree(&ct.tree).class, QuasiKind::Hit);
        assert!(ct.tree.edges.contains(&(2, 5)));
    }

    #[test]
    fn mid_branch_on_k5() {
        let (g, c) = k5_plus(&[1, 3]);
        let ct = lemma214_component_tree(&g, &c, 5).unwrap();
        assert_eq!(ct.branch, Lemma214Branch::Mid);
        assert_eq!(ct.tree.degree(5), 2);
        assert_eq!(classify_subtree(&ct.tree).deg2_vertices, vec![5]);
        check_component_tree(&g, &c, 5, &ct.tree).unwrap();
    }

    #[test]
    fn mid_branch_on_larger_clique_uses_the_direct_shape() {
        let mut edges: Vec<Edge> = Graph::complete(8).edges().collect();
        edges.extend([(8, 0), (8, 4)]);
        let g = Graph::from_edges(9, edges).unwrap();
        let c = VertexSet::from_iter(9, 0..8);
        let ct = lemma214_component_tree(&g, &c, 8).unwrap();
        assert!(!ct.searched);
        assert_eq!(ct.tree.degree(8), 2);
    }

    #[test]
    fn no_neighbor_is_an_error() {
        let (g, c) = k5_plus(&[]);
        assert!(lemma214_component_tree(&g, &c, 5).is_err());
    }

    #[test]
    fn component_hist_examples() {
        let g = Graph::complete(6);
        let c = VertexSet::full(6);
        let t = component_hist(&g, &c, &VertexSet::from_iter(6, [4, 5])).unwrap();
        assert_eq!(t.vertices, vec![0, 1, 2, 3]);
        assert_eq!(t.degree(0), 3);
        let k3 = Graph::complete(3);
        assert!(component_hist(&k3, &VertexSet::full(3), &VertexSet::new(3)).is_err());
        let t = component_hist(&g, &c, &VertexSet::from_iter(6, [0])).unwrap();
        assert_eq!(t.vertices.len(), 5);
    }
}
