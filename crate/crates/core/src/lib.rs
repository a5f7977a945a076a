//! Workbench for path-pairable graphs: constructions, the triangle-hub
//! router, an exact edge-disjoint paths solver, exhaustive pairability
//! verification, necessary conditions, and executable versions of the
//! structural lemmas behind the linear max-degree bound for planar graphs.

pub mod caps;
pub mod conditions;
pub mod constructions;
pub mod graph;
pub mod io;
pub mod lemma;
pub mod minor;
pub mod multigraph;
pub mod pairings;
pub mod paths;
pub mod planarity;
pub mod router;
pub mod solver;
pub mod verifier;

pub use graph::{SimpleGraph, Vertex, VertexSet};
pub use multigraph::{MultiedgeId, Multigraph};
pub use paths::{Pairing, PathSystem};
