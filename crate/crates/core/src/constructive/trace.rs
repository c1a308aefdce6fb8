use serde::Serialize;

use crate::error::{domain, DomainError};
use crate::graph::{ordered, Edge, Graph};
use crate::hist::SpanningTree;

/// One step of a construction: which case fired and the edges it added.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub case_id: String,
    pub detail: String,
    pub edges_added: Vec<Edge>,
}

/// The ordered case path of a construction. Serializes as a JSON array.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ConstructionTrace {
    pub steps: Vec<TraceStep>,
}

impl ConstructionTrace {
    pub(crate) fn push(
        &mut self,
        case_id: impl Into<String>,
        detail: impl Into<String>,
        edges: impl IntoIterator<Item = Edge>,
    ) {
        let mut edges_added: Vec<Edge> = edges.into_iter().map(|(a, b)| ordered(a, b)).collect();
        edges_added.sort_unstable();
        self.steps.push(TraceStep {
            case_id: case_id.into(),
            detail: detail.into(),
            edges_added,
        });
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn case_ids(&self) -> impl Iterator<Item = &str> {
        self.steps.iter().map(|s| s.case_id.as_str())
    }

    /// Rebuilds the edge set from the steps, checking that every edge is in
    /// `g` and that no step repeats an edge.
    pub fn replay(&self, g: &Graph) -> Result<SpanningTree, DomainError> {
        let mut all: Vec<Edge> = Vec::new();
        for step in &self.steps {
            for &(a, b) in &step.edges_added {
                if a >= g.n() || b >= g.n() || !g.has_edge(a, b) {
                    return domain(format!("step {}: edge {a} {b} is not in the graph", step.case_id));
                }
                all.push((a, b));
            }
        }
        let t = SpanningTree::new(g.n(), all);
        if t.edges.windows(2).any(|w| w[0] == w[1]) {
            return domain("trace adds some edge twice");
        }
        Ok(t)
    }
}

/// A structural claim or numeric threshold evaluated during a construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: &'static str,
    pub kind: CheckKind,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// A numeric precondition of a lemma; failure means the lemma does not apply.
    Threshold,
    /// A structural consequence of the hypotheses; failure is a contradiction.
    Claim,
}
