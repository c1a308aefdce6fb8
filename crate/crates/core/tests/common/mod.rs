//! Reference implementations used to cross-check the library. They share no
//! code with it beyond the `Graph` adjacency queries.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use hist::Graph;

/// Why `edges` is not a HIST of `g`, if it is not one.
pub fn hist_defect(g: &Graph, edges: &[(usize, usize)]) -> Option<String> {
    let n = g.n();
    let distinct: HashSet<(usize, usize)> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    if distinct.len() != edges.len() {
        return Some("repeated edge".into());
    }
    if edges.len() + 1 != n {
        return Some(format!("{} edges for {n} vertices", edges.len()));
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        if a >= n || b >= n || !g.has_edge(a, b) {
            return Some(format!("{a} {b} is not an edge"));
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Some("not connected".into());
    }
    if let Some(v) = (0..n).find(|&v| adj[v].len() == 2) {
        return Some(format!("vertex {v} has degree 2"));
    }
    None
}

/// `(σ, NC)` by direct pair enumeration, or `None` for complete graphs.
pub fn naive_sigma_nc(g: &Graph) -> Option<(usize, usize)> {
    let n = g.n();
    let nbrs: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut best: Option<(usize, usize)> = None;
    for u in 0..n {
        for v in u + 1..n {
            if nbrs[u].contains(&v) {
                continue;
            }
            let sigma = nbrs[u].len() + nbrs[v].len();
            let nc = nbrs[u].union(&nbrs[v]).count();
            best = Some(match best {
                None => (sigma, nc),
                Some((s, c)) => (s.min(sigma), c.min(nc)),
            });
        }
    }
    best
}

/// Whether `g` has a HIST, by trying every `(n − 1)`-subset of edges.
/// Only for graphs with a handful of edges.
pub fn brute_force_has_hist(g: &Graph) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    let k = g.n().saturating_sub(1);
    if g.n() == 1 {
        return true;
    }
    assert!(m <= 20, "brute force is limited to 20 edges");
    (0u32..1 << m)
        .filter(|mask| mask.count_ones() as usize == k)
        .any(|mask| {
            let chosen: Vec<(usize, usize)> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
            hist_defect(g, &chosen).is_none()
        })
}
