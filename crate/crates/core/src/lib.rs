//! Exact analysis of subcubic class-two graphs: resistance, minimal
//! conflicting subgraphs, representative conflicting subsets, the critical
//! subgraph, clusters and oddness.

pub mod analysis;
pub mod colour;
pub mod criticality;
pub mod dot;
pub mod edgeset;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod hitting;
pub mod resistance;
pub mod structure;
pub mod transversal;

pub use edgeset::EdgeSet;
pub use graph::{Graph, GraphError, Subgraph};
