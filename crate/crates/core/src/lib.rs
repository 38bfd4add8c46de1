//! Rigidity, reduction and radical-solvability analysis of planar geometric
//! constraint graphs.

pub mod algebra;
pub mod classify;
pub mod connectivity;
pub mod corpus;
pub mod elimination;
pub mod error;
pub mod graph;
pub mod planarity;
pub mod reduction;
pub mod rigidity;

pub use error::*;
pub use graph::{Edge, FreedomNumber, Graph, SubgraphHandle, VertexId};
