//! One-call HIST decision: obstruction check, construction, greedy builder
//! and exact search, in that order.

use serde::Serialize;
use thiserror::Error;

use crate::conditions::{condition_report, ConditionReport};
use crate::constructive::{construct_theorem15, Construction, ConstructionError, ConstructionTrace};
use crate::error::DomainError;
use crate::graph::Graph;
use crate::hist::{
    check_hist, dense_hist_seeded, exact_search, SearchOutcome, SpanningTree, DEFAULT_BUDGET,
};
use crate::obstructions::{match_family, ObstructionReport};

/// Which strategy [`solve`] may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Auto,
    Constructive,
    Exact,
    Greedy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Hist,
    NoHist,
    Unknown,
}

/// The strategy that decided the instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decider {
    Constructive,
    Exact,
    Greedy,
    Oracle,
    Obstruction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes_explored: u64,
    /// Wall-clock time; left empty unless the caller measures it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub status: Status,
    pub method: Decider,
    pub tree: Option<SpanningTree>,
    pub trace: Option<ConstructionTrace>,
    pub report: ConditionReport,
    pub obstruction: ObstructionReport,
    pub stats: SolveStats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub method: Method,
    /// Node budget for the exact search.
    pub budget: u64,
    /// Seed for the randomized restarts of the greedy builder.
    pub seed: u64,
    pub greedy_restarts: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            method: Method::Auto,
            budget: DEFAULT_BUDGET,
            seed: 0,
            greedy_restarts: 16,
        }
    }
}

#[derive(Debug, Clone, Error)]
pub enum SolveError {
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("produced tree failed verification: {0}")]
    Unverified(String),
}

struct Ctx {
    report: ConditionReport,
    obstruction: ObstructionReport,
    nodes: u64,
}

impl Ctx {
    fn finish(
        self,
        g: &Graph,
        status: Status,
        method: Decider,
        tree: Option<SpanningTree>,
        trace: Option<ConstructionTrace>,
    ) -> Result<SolveResult, SolveError> {
        if let Some(t) = &tree {
            check_hist(g, t).map_err(|d| SolveError::Unverified(d.to_string()))?;
        }
        Ok(SolveResult {
            status,
            method,
            tree,
            trace,
            report: self.report,
            obstruction: self.obstruction,
            stats: SolveStats {
                nodes_explored: self.nodes,
                elapsed_ms: None,
            },
        })
    }
}

/// Decides whether `g` has a HIST. Every returned tree has been verified.
pub fn solve(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    let report = condition_report(g)?;
    let obstruction = match_family(g);
    let mut ctx = Ctx {
        report,
        obstruction,
        nodes: 0,
    };
    let use_obstruction = matches!(opts.method, Method::Auto | Method::Constructive);
    if use_obstruction && ctx.obstruction.is_obstruction() {
        return ctx.finish(g, Status::NoHist, Decider::Obstruction, None, None);
    }

    if matches!(opts.method, Method::Auto | Method::Constructive) {
        if let Construction::Hist { tree, trace } = construct_theorem15(g)? {
            return ctx.finish(g, Status::Hist, Decider::Constructive, Some(tree), Some(trace));
        }
        if opts.method == Method::Constructive {
            return ctx.finish(g, Status::Unknown, Decider::Constructive, None, None);
        }
    }

    if matches!(opts.method, Method::Auto | Method::Greedy) {
        if let Some(t) = dense_hist_seeded(g, opts.seed, opts.greedy_restarts) {
            return ctx.finish(g, Status::Hist, Decider::Greedy, Some(t), None);
        }
        if opts.method == Method::Greedy {
            return ctx.finish(g, Status::Unknown, Decider::Greedy, None, None);
        }
    }

    let search = exact_search(g, opts.budget)?;
    ctx.nodes = search.nodes;
    match search.outcome {
        SearchOutcome::Found(t) => ctx.finish(g, Status::Hist, Decider::Exact, Some(t), None),
        SearchOutcome::NoHist => ctx.finish(g, Status::NoHist, Decider::Exact, None, None),
        SearchOutcome::BudgetExceeded => ctx.finish(g, Status::Unknown, Decider::Exact, None, None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hist::verify_hist;
    use crate::obstructions::{generate_h, Family, ObstructionKind};

    fn auto(g: &Graph) -> SolveResult {
        solve(g, &SolveOptions::default()).unwrap()
    }

    #[test]
    fn petersen_has_a_hist() {
        let g = Graph::petersen();
        let r = auto(&g);
        assert_eq!(r.status, Status::Hist);
        assert!(verify_hist(&g, r.tree.as_ref().unwrap()));
    }

    #[test]
    fn families_stop_at_the_obstruction() {
        let r = auto(&generate_h(Family::H2, 9, false).unwrap());
        assert_eq!((r.status, r.method), (Status::NoHist, Decider::Obstruction));
        assert_eq!(r.obstruction.kind, ObstructionKind::H2);
    }

    #[test]
    fn odd_cycle_is_refuted_by_search() {
        let r = auto(&Graph::cycle(5));
        assert_eq!((r.status, r.method), (Status::NoHist, Decider::Exact));
        let k3 = auto(&Graph::complete(3));
        assert_eq!((k3.status, k3.method), (Status::NoHist, Decider::Exact));
    }

    #[test]
    fn zero_budget_is_unknown() {
        let opts = SolveOptions {
            method: Method::Exact,
            budget: 0,
            ..SolveOptions::default()
        };
        let r = solve(&Graph::petersen(), &opts).unwrap();
        assert_eq!(r.status, Status::Unknown);
    }

    #[test]
    fn forced_methods() {
        let g = Graph::complete(6);
        for (m, d) in [
            (Method::Constructive, Decider::Constructive),
            (Method::Greedy, Decider::Greedy),
            (Method::Exact, Decider::Exact),
        ] {
            let r = solve(&g, &SolveOptions { method: m, ..Default::default() }).unwrap();
            assert_eq!((r.status, r.method), (Status::Hist, d));
        }
        let r = solve(
            &Graph::cycle(6),
            &SolveOptions {
                method: Method::Greedy,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(r.status, Status::Unknown);
    }

    #[test]
    fn disconnected_is_rejected() {
        assert!(solve(&Graph::empty(2), &SolveOptions::default()).is_err());
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(auto(&Graph::complete(4))).unwrap();
        assert_eq!(v["status"], "Hist");
        assert_eq!(v["method"], "constructive");
        assert!(v["stats"].get("elapsed_ms").is_none());
        assert_eq!(v["trace"][0]["case_id"], "complete-star");
    }
}
