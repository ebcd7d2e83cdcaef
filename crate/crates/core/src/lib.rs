//! Combinatorial rigidity toolkit: graphs, sparsity counts, generic rigidity
//! rank, Henneberg-type moves and the reduction engine for 5-regular graphs
//! in dimension 3.

pub mod enumerate;
pub mod fixtures;
pub mod graph;
pub mod moves;
pub mod reduction;
pub mod rigidity;
pub mod sparsity;

pub use graph::{Edge, Graph, GraphError, Vertex, VertexSet};
