use serde::Serialize;

use crate::error::{domain, DomainError};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::structure::{components, is_clique, is_connected};

/// The partition `V = {u} ∪ N(u) ∪ W` around a minimum-degree vertex `u`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionContext {
    pub n: usize,
    pub delta: usize,
    /// Least vertex of minimum degree.
    pub u: Vertex,
    /// `N(u)` in ascending order.
    pub nbrs: Vec<Vertex>,
    /// `W = V ∖ N[u]`.
    pub w_set: VertexSet,
    /// `U_i = N_W(nbrs[i])`.
    pub u_sets: Vec<VertexSet>,
    /// Components of `G[W]`, ordered by least vertex.
    pub w_components: Vec<VertexSet>,
    /// Vertices `w ∈ W` with `2·d_W(w) < n − 1 − 2δ`. Empty whenever
    /// `2·NC ≥ n − 1`.
    pub degree_deficit: Vec<Vertex>,
}

impl DecompositionContext {
    pub fn closed_nbhd(&self) -> VertexSet {
        let mut s = VertexSet::from_iter(self.n, self.nbrs.iter().copied());
        s.insert(self.u);
        s
    }

    /// `|U_i|` for `nbrs[i]`.
    pub fn u_size(&self, i: usize) -> usize {
        self.u_sets[i].len()
    }

    pub fn w_connected(&self) -> bool {
        self.w_components.len() == 1
    }
}

pub fn build_context(g: &Graph) -> Result<DecompositionContext, DomainError> {
    let n = g.n();
    if n == 0 {
        return domain("build_context: graph has no vertices");
    }
    if !is_connected(g) {
        return domain("build_context: graph is disconnected");
    }
    if g.is_complete() {
        return domain("build_context: graph is complete, so W is empty");
    }
    let delta = g.min_degree();
    let u = g.vertices().find(|&v| g.degree(v) == delta).expect("n > 0");
    let nbrs = g.neighbors(u).to_vec();
    let mut w_set = VertexSet::full(n);
    w_set.remove(u);
    for &x in &nbrs {
        w_set.remove(x);
    }
    let u_sets = nbrs.iter().map(|&x| g.neighbors_in(x, &w_set)).collect();
    let w_components = components(g, Some(&w_set));
    let degree_deficit = w_set
        .iter()
        .filter(|&w| 2 * g.degree_in(w, &w_set) + 2 * delta + 1 < n)
        .collect();
    Ok(DecompositionContext {
        n,
        delta,
        u,
        nbrs,
        w_set,
        u_sets,
        w_components,
        degree_deficit,
    })
}

/// Whether `{u_i : |U_i| ≤ 1}` is a clique.
pub fn lemma28_clique_check(ctx: &DecompositionContext, g: &Graph) -> bool {
    let small = VertexSet::from_iter(
        ctx.n,
        ctx.nbrs
            .iter()
            .enumerate()
            .filter(|&(i, _)| ctx.u_size(i) <= 1)
            .map(|(_, &v)| v),
    );
    is_clique(g, &small)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::obstructions::{generate_h, Family};

    #[test]
    fn h1_context() {
        let g = generate_h(Family::H1, 9, false).unwrap();
        let ctx = build_context(&g).unwrap();
        assert_eq!((ctx.u, ctx.delta), (0, 2));
        assert_eq!(ctx.nbrs, vec![1, 5]);
        assert_eq!(ctx.w_components.len(), 2);
        assert!(ctx.w_components.iter().all(|c| c.len() <= 4));
        assert!(ctx.degree_deficit.is_empty());
        // N(u) = {1, 5} is not a clique, but both have three W-neighbors.
        assert!(lemma28_clique_check(&ctx, &g));
    }

    #[test]
    fn petersen_context() {
        let ctx = build_context(&Graph::petersen()).unwrap();
        assert_eq!(ctx.delta, 3);
        assert_eq!(ctx.w_set.len(), 6);
        assert!(ctx.w_connected());
        assert!(ctx.u_sets.iter().all(|s| s.len() == 2));
    }

    #[test]
    fn complete_rejected() {
        assert!(build_context(&Graph::complete(4)).is_err());
    }

    #[test]
    fn lemma28_detects_non_clique() {
        // u = 0 with neighbors 1, 2 (non-adjacent), each with one W-neighbor.
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 4), (3, 5), (4, 5)]).unwrap();
        let ctx = build_context(&g).unwrap();
        assert_eq!(ctx.u, 0);
        assert!(!lemma28_clique_check(&ctx, &g));
    }
}
