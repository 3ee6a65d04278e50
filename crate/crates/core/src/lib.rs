//! Exact metric tools for lamplighter graphs over finite graphs: walk-TSP
//! solvers, closed-form lamplighter distances, explicit bi-Lipschitz
//! embeddings and a certifier that measures their distortion.

pub mod acceptance;
pub mod distortion;
pub mod embed;
pub mod error;
pub mod graph;
pub mod lamplighter;
pub mod sets;
pub mod tsp;

pub use error::{Error, Result};
pub use graph::{Graph, PointedGraph, Walk};
pub use lamplighter::{lamp_distance, lamp_distance_tree, LampState, LamplighterGraph};
pub use sets::{EdgeSet, VertexSet};
