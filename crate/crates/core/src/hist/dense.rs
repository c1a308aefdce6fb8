//! Greedy HIST builder for graphs with large minimum degree.
//!
//! The tree grows from a maximum-degree root. At each step one tree vertex
//! absorbs all of its unreached neighbors, preferring, in order, a vertex
//! stuck at degree 2, a leaf with at least two unreached neighbors, any
//! internal vertex, and finally a leaf with a single unreached neighbor.
//! Degree-2 vertices left over are removed by local edge swaps.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::graph::{ordered, Graph, Vertex};
use crate::hist::tree::{verify_hist, SpanningTree};

/// Deterministic attempt rooted at the least vertex of maximum degree.
pub fn dense_hist(g: &Graph) -> Option<SpanningTree> {
    let root = g.vertices().max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))?;
    let keys: Vec<u64> = (0..g.n() as u64).collect();
    attempt(g, root, &keys)
}

/// [`dense_hist`] followed by up to `restarts` randomized attempts with
/// random roots and tie-breaking.
pub fn dense_hist_seeded(g: &Graph, seed: u64, restarts: usize) -> Option<SpanningTree> {
    if let Some(t) = dense_hist(g) {
        return Some(t);
    }
    let n = g.n();
    let mut rng = SplitMix64::seed_from_u64(seed);
    (0..restarts).find_map(|_| {
        let root = rng.random_range(0..n);
        let keys: Vec<u64> = (0..n).map(|_| rng.random()).collect();
        attempt(g, root, &keys)
    })
}

fn attempt(g: &Graph, root: Vertex, keys: &[u64]) -> Option<SpanningTree> {
    let n = g.n();
    if n <= 2 {
        let t = SpanningTree::new(n, g.edges());
        return verify_hist(g, &t).then_some(t);
    }
    let mut b = Builder::new(n);
    let mut unreached = FixedBitSet::with_capacity(n);
    unreached.insert_range(..);
    unreached.set(root, false);
    let mut members = vec![root];
    let grow = |b: &mut Builder, members: &mut Vec<Vertex>, unreached: &mut FixedBitSet, x: Vertex| {
        let fresh: Vec<Vertex> = g.neighbor_bits(x).intersection(unreached).collect();
        for w in fresh {
            unreached.set(w, false);
            b.link(x, w);
            members.push(w);
        }
    };
    grow(&mut b, &mut members, &mut unreached, root);
    while unreached.count_ones(..) > 0 {
        let pick = members
            .iter()
            .filter_map(|&x| {
                let c = g.neighbor_bits(x).intersection_count(&unreached);
                if c == 0 {
                    return None;
                }
                let class = match (b.deg[x], c) {
                    (2, _) => 0,
                    (1, c) if c >= 2 => 1,
                    (d, _) if d >= 3 => 2,
                    _ => 3,
                };
                Some(((class, std::cmp::Reverse(c), keys[x]), x))
            })
            .min()
            .map(|(_, x)| x)?;
        grow(&mut b, &mut members, &mut unreached, pick);
    }
    b.repair(g);
    let t = SpanningTree::new(n, b.edges());
    verify_hist(g, &t).then_some(t)
}

struct Builder {
    adj: Vec<Vec<Vertex>>,
    deg: Vec<usize>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder {
            adj: vec![Vec::new(); n],
            deg: vec![0; n],
        }
    }

    fn link(&mut self, a: Vertex, b: Vertex) {
        self.adj[a].push(b);
        self.adj[b].push(a);
        self.deg[a] += 1;
        self.deg[b] += 1;
    }

    fn unlink(&mut self, a: Vertex, b: Vertex) {
        self.adj[a].retain(|&x| x != b);
        self.adj[b].retain(|&x| x != a);
        self.deg[a] -= 1;
        self.deg[b] -= 1;
    }

    fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for (a, ns) in self.adj.iter().enumerate() {
            out.extend(ns.iter().filter(|&&b| a < b).map(|&b| ordered(a, b)));
        }
        out
    }

    /// Degree-2 count among `touched` after applying `delta` to each.
    fn twos_after(&self, touched: &[(Vertex, isize)]) -> (usize, usize) {
        let mut vs: Vec<Vertex> = touched.iter().map(|t| t.0).collect();
        vs.sort_unstable();
        vs.dedup();
        let before = vs.iter().filter(|&&v| self.deg[v] == 2).count();
        let after = vs
            .iter()
            .filter(|&&v| {
                let d: isize = touched.iter().filter(|t| t.0 == v).map(|t| t.1).sum();
                self.deg[v] as isize + d == 2
            })
            .count();
        (before, after)
    }

    /// Tree vertices on `start`'s side once the edge to `cut` is removed.
    fn side(&self, start: Vertex, cut: Vertex) -> FixedBitSet {
        let mut seen = FixedBitSet::with_capacity(self.adj.len());
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if !(x == start && y == cut) && !seen.contains(y) {
                    seen.insert(y);
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    fn repair(&mut self, g: &Graph) {
        let n = self.adj.len();
        for _ in 0..4 * n {
            let twos: Vec<Vertex> = (0..n).filter(|&v| self.deg[v] == 2).collect();
            if twos.is_empty() || !twos.iter().any(|&v| self.fix(g, v)) {
                return;
            }
        }
    }

    fn fix(&mut self, g: &Graph, v: Vertex) -> bool {
        // Pull a leaf over to v.
        for &l in g.neighbors(v) {
            if self.deg[l] != 1 {
                continue;
            }
            let p = self.adj[l][0];
            if p == v {
                continue;
            }
            let (before, after) = self.twos_after(&[(v, 1), (p, -1)]);
            if after < before && self.deg[p] > 1 {
                self.unlink(l, p);
                self.link(l, v);
                return true;
            }
        }
        // Cut one of v's tree edges and reconnect around v.
        for b in self.adj[v].clone() {
            let side = self.side(b, v);
            for x in side.ones() {
                for &y in g.neighbors(x) {
                    if y == v || side.contains(y) {
                        continue;
                    }
                    let (before, after) = self.twos_after(&[(v, -1), (b, -1), (x, 1), (y, 1)]);
                    if after < before {
                        self.unlink(v, b);
                        self.link(x, y);
                        return true;
                    }
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_gives_star_at_zero() {
        let g = Graph::complete(300);
        let t = dense_hist(&g).unwrap();
        assert_eq!(t, SpanningTree::star(&g, 0));
    }

    #[test]
    fn cycles_and_paths_fail() {
        assert_eq!(dense_hist(&Graph::cycle(5)), None);
        assert_eq!(dense_hist(&Graph::path(4)), None);
        assert_eq!(dense_hist(&Graph::complete(3)), None);
        assert_eq!(dense_hist(&Graph::empty(4)), None);
    }

    #[test]
    fn petersen_succeeds() {
        let g = Graph::petersen();
        let t = dense_hist_seeded(&g, 7, 50).unwrap();
        assert!(verify_hist(&g, &t));
    }

    #[test]
    fn tiny_graphs() {
        assert!(dense_hist(&Graph::complete(1)).is_some());
        assert!(dense_hist(&Graph::complete(2)).is_some());
        assert!(dense_hist(&Graph::complete(4)).is_some());
    }
}
