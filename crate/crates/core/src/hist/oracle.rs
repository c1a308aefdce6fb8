//! Exhaustive spanning-tree enumeration by deletion and contraction.
//!
//! Edges are visited in lexicographic order. Each edge is either contracted
//! (kept in the tree) or deleted; deletion is only taken when the rest of
//! the graph stays connected, so every leaf of the recursion is a spanning
//! tree. Each tree is checked for degree-2 vertices.

use serde::Serialize;

use crate::dsu::RollbackDsu;
use crate::error::{domain, DomainError};
use crate::graph::{Edge, Graph};
use crate::structure::is_connected;

pub const DEFAULT_CAP: u64 = 1_000_000;

/// Largest order the enumerator accepts.
pub const ORACLE_MAX_ORDER: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum OracleOutcome {
    Counts { tree_count: u64, hist_count: u64 },
    CapExceeded { cap: u64 },
}

impl OracleOutcome {
    pub fn has_hist(&self) -> Option<bool> {
        match self {
            OracleOutcome::Counts { hist_count, .. } => Some(*hist_count > 0),
            OracleOutcome::CapExceeded { .. } => None,
        }
    }
}

/// Counts spanning trees and HISTs of `g`, giving up after `cap` trees.
pub fn oracle_enumerate(g: &Graph, cap: u64) -> Result<OracleOutcome, DomainError> {
    let n = g.n();
    if n == 0 {
        return domain("oracle_enumerate: graph has no vertices");
    }
    if n > ORACLE_MAX_ORDER {
        return domain(format!(
            "oracle_enumerate: order {n} exceeds the supported maximum {ORACLE_MAX_ORDER}"
        ));
    }
    if !is_connected(g) {
        return Ok(OracleOutcome::Counts {
            tree_count: 0,
            hist_count: 0,
        });
    }
    let mut e = Enumerator {
        n,
        edges: g.edges().collect(),
        rest: (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u128, |m, &w| m | 1 << w))
            .collect(),
        members: (0..n).map(|v| 1u128 << v).collect(),
        dsu: RollbackDsu::new(n),
        degree: vec![0; n],
        in_count: 0,
        trees: 0,
        hists: 0,
        cap,
        all: if n == 128 { u128::MAX } else { (1u128 << n) - 1 },
    };
    if e.walk(0) {
        Ok(OracleOutcome::Counts {
            tree_count: e.trees,
            hist_count: e.hists,
        })
    } else {
        Ok(OracleOutcome::CapExceeded { cap })
    }
}

struct Enumerator {
    n: usize,
    edges: Vec<Edge>,
    /// Neighbors through edges not yet visited.
    rest: Vec<u128>,
    /// Vertex mask of each contracted class, valid at class roots.
    members: Vec<u128>,
    dsu: RollbackDsu,
    degree: Vec<u32>,
    in_count: usize,
    trees: u64,
    hists: u64,
    cap: u64,
    all: u128,
}

impl Enumerator {
    fn class(&self, v: usize) -> u128 {
        self.members[self.dsu.find(v)]
    }

    /// Whether contracted classes plus unvisited edges connect everything.
    fn connected(&self) -> bool {
        let mut reach = self.class(0);
        let mut frontier = reach;
        while frontier != 0 {
            let mut next = 0u128;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rest[v];
            }
            next &= !reach;
            let mut grown = next;
            let mut f = next;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                grown |= self.class(v);
            }
            grown &= !reach;
            reach |= grown;
            frontier = grown;
        }
        reach == self.all
    }

    /// Returns false once the cap is exceeded.
    fn walk(&mut self, i: usize) -> bool {
        if self.in_count + 1 == self.n {
            self.trees += 1;
            if self.degree.iter().all(|&d| d != 2) {
                self.hists += 1;
            }
            return self.trees <= self.cap;
        }
        if i == self.edges.len() {
            return true;
        }
        let (u, v) = self.edges[i];
        self.rest[u] &= !(1 << v);
        self.rest[v] &= !(1 << u);
        let (ru, rv) = (self.dsu.find(u), self.dsu.find(v));
        let ok = if ru == rv {
            self.walk(i + 1)
        } else {
            // Deletion is feasible only if the graph stays connected without this edge.
            let deletable = self.connected();
            let cp = self.dsu.checkpoint();
            let merged = self.members[ru] | self.members[rv];
            self.dsu.union(u, v);
            let root = self.dsu.find(u);
            let saved = self.members[root];
            self.members[root] = merged;
            self.degree[u] += 1;
            self.degree[v] += 1;
            self.in_count += 1;
            let mut ok = self.walk(i + 1);
            self.in_count -= 1;
            self.degree[u] -= 1;
            self.degree[v] -= 1;
            self.members[root] = saved;
            self.dsu.rollback(cp);
            if ok && deletable {
                ok = self.walk(i + 1);
            }
            ok
        };
        self.rest[u] |= 1 << v;
        self.rest[v] |= 1 << u;
        ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(g: &Graph) -> (u64, u64) {
        match oracle_enumerate(g, DEFAULT_CAP).unwrap() {
            OracleOutcome::Counts { tree_count, hist_count } => (tree_count, hist_count),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn known_counts() {
        assert_eq!(counts(&Graph::complete(4)), (16, 4));
        assert_eq!(counts(&Graph::cycle(4)), (4, 0));
        assert_eq!(counts(&Graph::star(3)), (1, 1));
        assert_eq!(counts(&Graph::complete(1)), (1, 1));
        assert_eq!(counts(&Graph::complete(3)), (3, 0));
        assert_eq!(counts(&Graph::petersen()).0, 2000);
    }

    #[test]
    fn cayley_formula() {
        for n in 2..=7u32 {
            assert_eq!(counts(&Graph::complete(n as usize)).0, (n as u64).pow(n - 2));
        }
    }

    #[test]
    fn cap_and_disconnected() {
        assert_eq!(
            oracle_enumerate(&Graph::complete(6), 10).unwrap(),
            OracleOutcome::CapExceeded { cap: 10 }
        );
        assert_eq!(counts(&Graph::empty(3)), (0, 0));
        assert!(oracle_enumerate(&Graph::empty(0), 10).is_err());
    }
}
