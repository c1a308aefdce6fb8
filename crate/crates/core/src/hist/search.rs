//! Exact branch-and-bound search for a HIST.
//!
//! Edges are decided one at a time (include first, then exclude) in order
//! of decreasing endpoint degree. After each decision the state is closed
//! under forced moves:
//!
//! * an edge whose endpoints are already joined is excluded;
//! * a vertex whose only admissible final degree is its potential degree
//!   takes all its undecided edges;
//! * a vertex whose only admissible final degree is its current degree
//!   drops all its undecided edges.
//!
//! A branch dies when some vertex has no admissible final degree, when the
//! included and undecided edges no longer connect the graph, or when the
//! smallest admissible degrees already sum past `2(n − 1)`.

use std::cmp::Reverse;

use crate::dsu::RollbackDsu;
use crate::error::{domain, DomainError};
use crate::graph::{Edge, Graph, Vertex};
use crate::hist::tree::SpanningTree;
use crate::structure::is_connected;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(SpanningTree),
    NoHist,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    /// Search nodes expanded.
    pub nodes: u64,
}

/// Per-vertex admissible tree degrees: at least `min_degree[v]`, and not 2
/// unless `allow_two[v]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeRules {
    pub allow_two: Vec<bool>,
    pub min_degree: Vec<usize>,
}

impl DegreeRules {
    /// The HIST rules: no degree 2, every vertex covered.
    pub fn hist(n: usize) -> Self {
        DegreeRules {
            allow_two: vec![false; n],
            min_degree: vec![usize::from(n >= 2); n],
        }
    }
}

/// Searches for a HIST of `g`, expanding at most `budget` nodes.
pub fn exact_search(g: &Graph, budget: u64) -> Result<SearchReport, DomainError> {
    constrained_search(g, &DegreeRules::hist(g.n()), budget)
}

/// Searches for a spanning tree of `g` whose degrees obey `rules`.
pub fn constrained_search(
    g: &Graph,
    rules: &DegreeRules,
    budget: u64,
) -> Result<SearchReport, DomainError> {
    if g.n() == 0 {
        return domain("exact_search: graph has no vertices");
    }
    if rules.allow_two.len() != g.n() || rules.min_degree.len() != g.n() {
        return domain("exact_search: degree rules do not match the graph order");
    }
    if !is_connected(g) {
        return domain("exact_search: graph is disconnected");
    }
    Ok(Search::new(g, rules, budget).run())
}

const UNDECIDED: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

struct Frame {
    edge: usize,
    trail: usize,
    checkpoint: usize,
    tried_out: bool,
}

struct Search<'a> {
    n: usize,
    edges: Vec<Edge>,
    incident: Vec<Vec<usize>>,
    state: Vec<u8>,
    din: Vec<usize>,
    dpot: Vec<usize>,
    dsu: RollbackDsu,
    in_count: usize,
    trail: Vec<usize>,
    rules: &'a DegreeRules,
    nodes: u64,
    budget: u64,
    scratch: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &Graph, rules: &'a DegreeRules, budget: u64) -> Self {
        let n = g.n();
        let mut edges: Vec<Edge> = g.edges().collect();
        edges.sort_by_key(|&(u, v)| {
            let (a, b) = (g.degree(u), g.degree(v));
            (Reverse(a.max(b)), Reverse(a.min(b)), u.min(v), u.max(v))
        });
        let mut incident = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        Search {
            n,
            state: vec![UNDECIDED; edges.len()],
            din: vec![0; n],
            dpot: (0..n).map(|v| g.degree(v)).collect(),
            dsu: RollbackDsu::new(n),
            in_count: 0,
            trail: Vec::new(),
            rules,
            nodes: 0,
            budget,
            scratch: vec![0; n],
            edges,
            incident,
        }
    }

    fn admissible(&self, v: Vertex, d: usize) -> bool {
        d >= self.rules.min_degree[v] && (d != 2 || self.rules.allow_two[v])
    }

    /// Smallest admissible final degree of `v`, if any.
    fn need(&self, v: Vertex) -> Option<usize> {
        (self.din[v]..=self.dpot[v]).find(|&d| self.admissible(v, d))
    }

    /// Largest admissible final degree of `v`, if any.
    fn room(&self, v: Vertex) -> Option<usize> {
        (self.din[v]..=self.dpot[v]).rev().find(|&d| self.admissible(v, d))
    }

    fn set_in(&mut self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        if !self.dsu.union(u, v) {
            return false;
        }
        self.state[e] = IN;
        self.din[u] += 1;
        self.din[v] += 1;
        self.in_count += 1;
        self.trail.push(e);
        true
    }

    fn set_out(&mut self, e: usize) {
        let (u, v) = self.edges[e];
        self.state[e] = OUT;
        self.dpot[u] -= 1;
        self.dpot[v] -= 1;
        self.trail.push(e);
    }

    fn undo_to(&mut self, trail: usize, checkpoint: usize) {
        while self.trail.len() > trail {
            let e = self.trail.pop().expect("nonempty trail");
            let (u, v) = self.edges[e];
            if self.state[e] == IN {
                self.din[u] -= 1;
                self.din[v] -= 1;
                self.in_count -= 1;
            } else {
                self.dpot[u] += 1;
                self.dpot[v] += 1;
            }
            self.state[e] = UNDECIDED;
        }
        self.dsu.rollback(checkpoint);
    }

    /// Applies forced moves until none remain; false on contradiction.
    fn propagate(&mut self) -> bool {
        loop {
            let mut changed = false;
            for e in 0..self.edges.len() {
                if self.state[e] == UNDECIDED {
                    let (u, v) = self.edges[e];
                    if self.dsu.find(u) == self.dsu.find(v) {
                        self.set_out(e);
                        changed = true;
                    }
                }
            }
            for v in 0..self.n {
                let (Some(need), Some(room)) = (self.need(v), self.room(v)) else {
                    return false;
                };
                if self.din[v] == self.dpot[v] {
                    continue;
                }
                if need == self.dpot[v] {
                    for i in 0..self.incident[v].len() {
                        let e = self.incident[v][i];
                        if self.state[e] == UNDECIDED {
                            if !self.set_in(e) {
                                return false;
                            }
                            changed = true;
                        }
                    }
                } else if room == self.din[v] {
                    for i in 0..self.incident[v].len() {
                        let e = self.incident[v][i];
                        if self.state[e] == UNDECIDED {
                            self.set_out(e);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn bounds_hold(&mut self) -> bool {
        let mut total = 0;
        for v in 0..self.n {
            match self.need(v) {
                Some(d) => total += d,
                None => return false,
            }
        }
        if total > 2 * (self.n - 1) {
            return false;
        }
        // Connectivity of included plus undecided edges.
        let parent = &mut self.scratch;
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        fn root(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        let mut pieces = self.n;
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if self.state[e] != OUT {
                let (a, b) = (root(parent, u), root(parent, v));
                if a != b {
                    parent[a] = b;
                    pieces -= 1;
                }
            }
        }
        pieces == 1
    }

    fn finished(&self) -> Option<SpanningTree> {
        if self.in_count + 1 != self.n {
            return None;
        }
        let ok = (0..self.n).all(|v| self.admissible(v, self.din[v]));
        ok.then(|| {
            let edges = (0..self.edges.len())
                .filter(|&e| self.state[e] == IN)
                .map(|e| self.edges[e]);
            SpanningTree::new(self.n, edges)
        })
    }

    fn run(mut self) -> SearchReport {
        let mut frames: Vec<Frame> = Vec::new();
        loop {
            self.nodes += 1;
            if self.nodes > self.budget {
                return self.report(SearchOutcome::BudgetExceeded);
            }
            let alive = self.propagate() && self.bounds_hold();
            if alive {
                if let Some(t) = self.finished() {
                    return self.report(SearchOutcome::Found(t));
                }
            }
            let next = if alive && self.in_count + 1 < self.n {
                self.state.iter().position(|&s| s == UNDECIDED)
            } else {
                None
            };
            if let Some(edge) = next {
                frames.push(Frame {
                    edge,
                    trail: self.trail.len(),
                    checkpoint: self.dsu.checkpoint(),
                    tried_out: false,
                });
                let joined = self.set_in(edge);
                debug_assert!(joined, "cycle edges are excluded during propagation");
                continue;
            }
            loop {
                let Some(mut f) = frames.pop() else {
                    return self.report(SearchOutcome::NoHist);
                };
                self.undo_to(f.trail, f.checkpoint);
                if !f.tried_out {
                    f.tried_out = true;
                    let edge = f.edge;
                    frames.push(f);
                    self.set_out(edge);
                    break;
                }
            }
        }
    }

    fn report(&self, outcome: SearchOutcome) -> SearchReport {
        SearchReport {
            outcome,
            nodes: self.nodes,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hist::tree::verify_hist;
    use crate::obstructions::{generate_h, Family};

    fn found(g: &Graph) -> bool {
        match exact_search(g, DEFAULT_BUDGET).unwrap().outcome {
            SearchOutcome::Found(t) => {
                assert!(verify_hist(g, &t));
                true
            }
            SearchOutcome::NoHist => false,
            SearchOutcome::BudgetExceeded => panic!("budget exceeded"),
        }
    }

    #[test]
    fn small_cases() {
        assert!(found(&Graph::complete(1)));
        assert!(found(&Graph::complete(2)));
        assert!(!found(&Graph::complete(3)));
        assert!(found(&Graph::complete(4)));
        assert!(!found(&Graph::cycle(5)));
        assert!(!found(&Graph::path(4)));
        assert!(found(&Graph::star(3)));
        assert!(found(&Graph::petersen()));
    }

    #[test]
    fn families_have_none() {
        for n in [9, 11, 13] {
            for (f, c) in [(Family::H1, false), (Family::H2, false), (Family::H3, false), (Family::H3, true)] {
                assert!(!found(&generate_h(f, n, c).unwrap()), "{f:?} {n} {c}");
            }
        }
    }

    #[test]
    fn disconnected_is_rejected() {
        assert!(exact_search(&Graph::empty(3), 10).is_err());
        assert!(exact_search(&Graph::empty(0), 10).is_err());
    }

    #[test]
    fn budget_is_honored() {
        let r = exact_search(&generate_h(Family::H1, 13, false).unwrap(), 3).unwrap();
        assert_eq!(r.outcome, SearchOutcome::BudgetExceeded);
        assert!(r.nodes <= 4);
    }

    #[test]
    fn constrained_allows_a_degree_two_vertex() {
        // P3 has no HIST, but admits a tree once its middle vertex may have degree 2.
        let g = Graph::path(3);
        let mut rules = DegreeRules::hist(3);
        rules.allow_two[1] = true;
        let r = constrained_search(&g, &rules, 100).unwrap();
        assert!(matches!(r.outcome, SearchOutcome::Found(_)));
    }

    #[test]
    fn constrained_min_degree() {
        let g = Graph::complete(5);
        let mut rules = DegreeRules::hist(5);
        rules.min_degree[3] = 4;
        let SearchOutcome::Found(t) = constrained_search(&g, &rules, 1000).unwrap().outcome else {
            panic!("expected a tree");
        };
        assert_eq!(t.degrees()[3], 4);
    }
}
