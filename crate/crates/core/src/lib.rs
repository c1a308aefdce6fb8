//! Homeomorphically irreducible spanning trees (HISTs): spanning trees with
//! no vertex of degree 2.
//!
//! The crate decides, constructs and verifies HISTs. Graphs that satisfy the
//! neighborhood-union condition `2·NC(G) ≥ n − 1` get a HIST from an explicit
//! case-by-case construction; everything else falls back to an exact search.

pub mod atlas;
pub mod conditions;
pub mod constructive;
mod dsu;
pub mod error;
pub mod graph;
pub mod hist;
pub mod io;
pub mod obstructions;
pub mod sampling;
pub mod solve;
pub mod structure;
pub mod sweep;

pub use conditions::{condition_report, Bound, ConditionReport};
pub use constructive::{construct_theorem15, Construction, ConstructionError, ConstructionTrace};
pub use error::{DomainError, GraphError};
pub use graph::{Edge, EdgeCut, Graph, Vertex, VertexSet};
pub use hist::{verify_hist, SpanningTree, Subtree};
pub use obstructions::{generate_h, match_family, Family, ObstructionKind, ObstructionReport};
