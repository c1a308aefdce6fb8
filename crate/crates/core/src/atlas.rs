//! Exhaustive generation of small connected graphs up to isomorphism.
//!
//! Every connected graph on `n` vertices arises from a connected graph on
//! `n − 1` vertices by adding a vertex with a nonempty neighborhood (delete
//! any non-cut vertex to go back). Each level augments every graph of the
//! previous level in all ways and keeps one representative per canonical
//! form.
//!
//! The canonical form is the largest upper-triangle adjacency code over the
//! leaves of an individualization-refinement search, with subtrees pruned by
//! automorphisms discovered along the way.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{domain, DomainError};
use crate::graph::Graph;

/// Largest order the atlas enumerates.
pub const ATLAS_MAX_ORDER: usize = 9;
/// Largest order [`canonical_code`] supports.
pub const CANON_MAX_ORDER: usize = 11;

/// Upper-triangle adjacency code of a labeled graph: bit `(i, j)` for
/// `i < j` in lexicographic pair order, first pair most significant.
pub type Code = u64;

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn encode(n: usize, adj: &[u16], order: &[u8]) -> Code {
    let mut code: Code = 0;
    for i in 0..n {
        let row = adj[order[i] as usize];
        for j in i + 1..n {
            code = (code << 1) | ((row >> order[j]) & 1) as Code;
        }
    }
    code
}

/// Rebuilds a graph from its code.
pub fn graph_from_code(n: usize, code: Code) -> Graph {
    let total = pair_count(n);
    let mut edges = Vec::new();
    let mut idx = 0;
    for i in 0..n {
        for j in i + 1..n {
            if (code >> (total - 1 - idx)) & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, edges).expect("code edges are in range")
}

/// Splits cells by neighbor counts into every other cell until the
/// partition is equitable. Fragments are ordered by count, so the result
/// does not depend on vertex labels.
fn refine(adj: &[u16], cells: &mut Vec<u16>) {
    let mut changed = true;
    while changed {
        changed = false;
        'outer: for s in 0..cells.len() {
            let splitter = cells[s];
            for c in 0..cells.len() {
                let cell = cells[c];
                if cell.count_ones() < 2 {
                    continue;
                }
                let mut buckets: Vec<(u32, u16)> = Vec::new();
                let mut bits = cell;
                while bits != 0 {
                    let v = bits.trailing_zeros();
                    bits &= bits - 1;
                    let k = (adj[v as usize] & splitter).count_ones();
                    match buckets.iter_mut().find(|b| b.0 == k) {
                        Some(b) => b.1 |= 1 << v,
                        None => buckets.push((k, 1 << v)),
                    }
                }
                if buckets.len() > 1 {
                    buckets.sort_unstable_by_key(|b| b.0);
                    cells.splice(c..=c, buckets.into_iter().map(|b| b.1));
                    changed = true;
                    break 'outer;
                }
            }
        }
    }
}

struct Search<'a> {
    n: usize,
    adj: &'a [u16],
    first: Option<(Code, Vec<u8>)>,
    best: Option<(Code, Vec<u8>)>,
    autos: Vec<Vec<u8>>,
}

impl Search<'_> {
    /// `order[i]` is the vertex at position `i`; an automorphism maps
    /// `a[i] ↦ b[i]`.
    fn record_auto(&mut self, a: &[u8], b: &[u8]) {
        let mut gamma = vec![0u8; self.n];
        for i in 0..self.n {
            gamma[a[i] as usize] = b[i];
        }
        if gamma.iter().enumerate().any(|(i, &x)| i as u8 != x) {
            self.autos.push(gamma);
        }
    }

    /// Orbit representative of each vertex under the automorphisms found so
    /// far that fix every vertex of `fixed`.
    fn orbits(&self, fixed: &[u8]) -> Vec<u8> {
        let mut rep: Vec<u8> = (0..self.n as u8).collect();
        fn root(rep: &mut [u8], mut x: u8) -> u8 {
            while rep[x as usize] != x {
                x = rep[x as usize];
            }
            x
        }
        for g in self.autos.iter().filter(|g| fixed.iter().all(|&f| g[f as usize] == f)) {
            for (i, &j) in g.iter().enumerate() {
                let (a, b) = (root(&mut rep, i as u8), root(&mut rep, j));
                if a != b {
                    rep[a.max(b) as usize] = a.min(b);
                }
            }
        }
        (0..self.n as u8).map(|x| root(&mut rep, x)).collect()
    }

    fn run(&mut self, cells: Vec<u16>, fixed: &mut Vec<u8>) {
        if cells.len() == self.n {
            let order: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
            let code = encode(self.n, self.adj, &order);
            match (&self.first, &self.best) {
                (None, _) => {
                    self.first = Some((code, order.clone()));
                    self.best = Some((code, order));
                }
                (Some((fc, fo)), Some((bc, bo))) => {
                    if code == *fc {
                        let fo = fo.clone();
                        self.record_auto(&fo, &order);
                    } else if code == *bc {
                        let bo = bo.clone();
                        self.record_auto(&bo, &order);
                    } else if code > *bc {
                        self.best = Some((code, order));
                    }
                }
                _ => unreachable!(),
            }
            return;
        }
        let t = cells.iter().position(|c| c.count_ones() > 1).expect("not discrete");
        let target = cells[t];
        let mut explored: Vec<u8> = Vec::new();
        let mut bits = target;
        while bits != 0 {
            let v = bits.trailing_zeros() as u8;
            bits &= bits - 1;
            if !explored.is_empty() {
                let orb = self.orbits(fixed);
                if explored.iter().any(|&e| orb[e as usize] == orb[v as usize]) {
                    continue;
                }
            }
            let mut next = cells.clone();
            next.splice(t..=t, [1u16 << v, target & !(1u16 << v)]);
            refine(self.adj, &mut next);
            fixed.push(v);
            self.run(next, fixed);
            fixed.pop();
            explored.push(v);
        }
    }
}

/// Canonical code of `g`: equal for two graphs exactly when they are
/// isomorphic.
pub fn canonical_code(g: &Graph) -> Result<Code, DomainError> {
    let n = g.n();
    if n > CANON_MAX_ORDER {
        return domain(format!("canonical_code: n = {n} exceeds {CANON_MAX_ORDER}"));
    }
    Ok(canonical_masks(n, &masks(g)))
}

fn masks(g: &Graph) -> Vec<u16> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | 1 << w))
        .collect()
}

fn canonical_masks(n: usize, adj: &[u16]) -> Code {
    if n <= 1 {
        return 0;
    }
    let mut cells = vec![((1u32 << n) - 1) as u16];
    refine(adj, &mut cells);
    let mut s = Search {
        n,
        adj,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    s.run(cells, &mut Vec::new());
    s.best.expect("at least one leaf").0
}

/// Canonical codes of all connected graphs on `n` vertices, ascending.
pub fn connected_codes(n: usize) -> Result<Vec<Code>, DomainError> {
    Ok(connected_codes_upto(n)?.pop().expect("n ≥ 1"))
}

/// [`connected_codes`] for every order `1..=n_max`, built in one pass.
pub fn connected_codes_upto(n_max: usize) -> Result<Vec<Vec<Code>>, DomainError> {
    if n_max == 0 || n_max > ATLAS_MAX_ORDER {
        return domain(format!("atlas: n must lie in 1..={ATLAS_MAX_ORDER}"));
    }
    let mut levels: Vec<Vec<Code>> = vec![vec![0]];
    for k in 2..=n_max {
        let prev = k - 1;
        let found: HashSet<Code> = levels[prev - 1]
            .par_iter()
            .flat_map_iter(|&code| {
                let base = masks(&graph_from_code(prev, code));
                (1u16..(1u16 << prev)).map(move |nb| {
                    let mut adj = base.clone();
                    adj.push(nb);
                    for (v, m) in adj.iter_mut().enumerate().take(prev) {
                        if nb >> v & 1 == 1 {
                            *m |= 1 << prev;
                        }
                    }
                    canonical_masks(k, &adj)
                })
            })
            .collect();
        let mut level: Vec<Code> = found.into_iter().collect();
        level.par_sort_unstable();
        levels.push(level);
    }
    Ok(levels)
}

/// All connected graphs on `n` vertices up to isomorphism, in canonical
/// labeling and ascending code order.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>, DomainError> {
    Ok(connected_codes(n)?.into_iter().map(|c| graph_from_code(n, c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{gnp, shuffle_labels};

    #[test]
    fn counts_match_the_known_sequence() {
        let expected = [1, 1, 2, 6, 21, 112, 853];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(connected_codes(i + 1).unwrap().len(), e, "n = {}", i + 1);
        }
    }

    #[test]
    fn code_is_label_invariant() {
        for seed in 0..40 {
            let g = gnp(9, 0.45, seed).unwrap();
            let h = shuffle_labels(&g, seed + 1000);
            assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
        }
        let p = Graph::petersen();
        assert_eq!(
            canonical_code(&p).unwrap(),
            canonical_code(&shuffle_labels(&p, 3)).unwrap()
        );
    }

    #[test]
    fn code_separates_non_isomorphic_graphs() {
        assert_ne!(
            canonical_code(&Graph::path(4)).unwrap(),
            canonical_code(&Graph::star(3)).unwrap()
        );
    }

    #[test]
    fn round_trip() {
        let g = Graph::cycle(7);
        let c = canonical_code(&g).unwrap();
        assert_eq!(canonical_code(&graph_from_code(7, c)).unwrap(), c);
    }
}
