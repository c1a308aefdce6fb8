//! Constructive proof of the neighborhood-union theorem as a case machine.
//!
//! [`construct_theorem15`] dispatches a connected graph through complete
//! graphs, the exceptional families, the dense regime and finally the
//! decomposition around a minimum-degree vertex `u`. Every fired case is
//! appended to a [`ConstructionTrace`] whose steps replay to the returned
//! tree.

mod context;
mod lemmas;
mod machine;
mod trace;

use serde::Serialize;
use thiserror::Error;

use crate::conditions::{dense_degree_condition, report_unchecked};
use crate::error::DomainError;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::hist::{check_hist, dense_hist, SpanningTree, Subtree};
use crate::obstructions::{match_family, ObstructionReport};
use crate::structure::is_connected;

pub use context::{build_context, lemma28_clique_check, DecompositionContext};
pub use lemmas::{
    check_component_tree, component_hist, lemma214_component_tree, ComponentTree, Lemma214Branch,
    SUB_BUDGET,
};
pub use trace::{Check, CheckKind, ConstructionTrace, TraceStep};

use machine::{Halt, Machine};

/// Smallest order at which the case machine is guaranteed to succeed.
pub const THEOREM_MIN_ORDER: usize = 270;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Construction {
    Hist {
        tree: SpanningTree,
        trace: ConstructionTrace,
    },
    NoHist {
        obstruction: ObstructionReport,
        reason: String,
    },
    /// The hypotheses do not hold, or hold below the scale where the case
    /// analysis is complete. The caller should search instead.
    Fallback { reason: String },
}

#[derive(Debug, Clone, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Domain(#[from] DomainError),
    /// A structural claim of the proof failed on an input satisfying the
    /// theorem's hypotheses.
    #[error("hypothesis violation: {message}")]
    Violation {
        message: String,
        trace: ConstructionTrace,
    },
}

/// A construction together with every threshold and claim it evaluated.
#[derive(Debug, Clone)]
pub struct Audit {
    pub result: Result<Construction, ConstructionError>,
    pub checks: Vec<Check>,
}

impl Audit {
    pub fn failed_claims(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.kind == CheckKind::Claim && !c.holds)
    }
}

pub fn construct_theorem15(g: &Graph) -> Result<Construction, ConstructionError> {
    construct_audited(g).result
}

pub fn construct_audited(g: &Graph) -> Audit {
    let mut checks = Vec::new();
    let result = dispatch(g, &mut checks);
    Audit { result, checks }
}

fn hist_from(g: &Graph, trace: ConstructionTrace) -> Result<Construction, ConstructionError> {
    let tree = trace.replay(g)?;
    match check_hist(g, &tree) {
        Ok(()) => Ok(Construction::Hist { tree, trace }),
        Err(defect) => Err(ConstructionError::Violation {
            message: format!("assembled tree is not a HIST: {defect}"),
            trace,
        }),
    }
}

fn dispatch(g: &Graph, checks: &mut Vec<Check>) -> Result<Construction, ConstructionError> {
    let n = g.n();
    if n == 0 {
        return Err(DomainError::new("construct: graph has no vertices").into());
    }
    if !is_connected(g) {
        return Err(DomainError::new("construct: graph is disconnected").into());
    }
    if g.is_complete() {
        if n == 3 {
            return Ok(Construction::NoHist {
                obstruction: ObstructionReport::none(),
                reason: "every spanning tree of K3 is a path with a degree-2 middle".into(),
            });
        }
        let mut trace = ConstructionTrace::default();
        trace.push("complete-star", "star at vertex 0", SpanningTree::star(g, 0).edges);
        return hist_from(g, trace);
    }
    let obstruction = match_family(g);
    if obstruction.is_obstruction() {
        return Ok(Construction::NoHist {
            reason: format!("{:?} certificate", obstruction.kind),
            obstruction,
        });
    }
    let report = report_unchecked(g);
    if !report.nc_condition() {
        return Ok(Construction::Fallback {
            reason: "2·NC < n − 1".into(),
        });
    }
    if dense_degree_condition(report.delta, n) {
        return match dense_hist(g) {
            Some(t) => {
                let mut trace = ConstructionTrace::default();
                trace.push("T1.2-dense", format!("δ = {}, δ² ≥ 16n", report.delta), t.edges);
                hist_from(g, trace)
            }
            None => Ok(Construction::Fallback {
                reason: "dense regime: greedy builder found no HIST".into(),
            }),
        };
    }
    let ctx = build_context(g)?;
    let mut m = Machine::new(g, ctx);
    let run = m.run();
    checks.append(&mut m.checks);
    match run {
        Ok(()) if n >= THEOREM_MIN_ORDER => hist_from(g, m.trace),
        Ok(()) => match hist_from(g, m.trace) {
            Err(ConstructionError::Violation { message, .. }) => Ok(Construction::Fallback {
                reason: format!("below theorem scale: {message}"),
            }),
            other => other,
        },
        Err(Halt::Threshold(r)) => Ok(Construction::Fallback {
            reason: format!("threshold not met: {r}"),
        }),
        Err(Halt::Search(r)) => Ok(Construction::Fallback { reason: r }),
        Err(Halt::Claim(r)) if n >= THEOREM_MIN_ORDER => Err(ConstructionError::Violation {
            message: r,
            trace: m.trace,
        }),
        Err(Halt::Claim(r)) => Ok(Construction::Fallback {
            reason: format!("claim failed below theorem scale: {r}"),
        }),
    }
}

/// Extends a 1-quasi-HIT on `N[u] ∪ S` centered at `v ∈ S` to a HIST when
/// `G[W]` is connected.
pub fn lemma213_extend(
    g: &Graph,
    ctx: &DecompositionContext,
    quasi: &Subtree,
    v: Vertex,
    s: &VertexSet,
) -> Result<(SpanningTree, ConstructionTrace), ConstructionError> {
    if !ctx.w_connected() {
        return Err(DomainError::new("lemma213_extend: G[W] is disconnected").into());
    }
    if !s.contains(v) {
        return Err(DomainError::new("lemma213_extend: v must lie in S").into());
    }
    let mut m = Machine::new(g, ctx.clone());
    m.trace.push("L2.13-input", "1-quasi-HIT", quasi.edges.iter().copied());
    let run = m.lemma213(quasi.edges.clone(), s.clone(), v);
    match run {
        Ok(()) => match hist_from(g, m.trace)? {
            Construction::Hist { tree, trace } => Ok((tree, trace)),
            _ => unreachable!(),
        },
        Err(Halt::Threshold(r)) | Err(Halt::Search(r)) => {
            Err(DomainError::new(format!("lemma213_extend: {r}")).into())
        }
        Err(Halt::Claim(r)) => Err(ConstructionError::Violation {
            message: r,
            trace: m.trace,
        }),
    }
}

#[cfg(test)]
mod tests;
