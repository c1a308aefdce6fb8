//! Tree-level HIST machinery: verification, quasi-HIT extension, exact
//! search, exhaustive counting and a greedy builder for dense graphs.

mod dense;
mod oracle;
mod search;
mod tree;

pub use dense::{dense_hist, dense_hist_seeded};
pub use oracle::{oracle_enumerate, OracleOutcome, DEFAULT_CAP, ORACLE_MAX_ORDER};
pub use search::{
    constrained_search, exact_search, DegreeRules, SearchOutcome, SearchReport, DEFAULT_BUDGET,
};
pub use tree::{
    check_hist, check_induced_hist, check_spanning_tree, classify_quasi, classify_subtree,
    extend_quasi1, extend_quasi2, verify_hist, QuasiClass, QuasiKind, SpanningTree, Subtree,
    TreeDefect,
};
