//! Exact solvers for the walk travelling-salesman value `tsp_G(x, C, y)`:
//! the length of a shortest walk from `x` to `y` whose vertex set contains `C`.
//!
//! [`tsp_generic`] runs Held-Karp over BFS distances on any connected graph.
//! [`tsp_tree`] and [`tsp_tree_walk`] use the closed form
//! `2|[x,A] \ [x,y]| + |[x,y]|` on trees. [`tsp_coalescence`] splits an
//! instance on `G1 * G2` into instances on the two sides.

mod coalescence;
mod generic;
mod tree;

use serde::{Deserialize, Serialize};

pub use coalescence::{tsp_coalescence, COALESCENCE_SIDE_CAP};
pub use generic::{tsp_generic, tsp_generic_walk, HELD_KARP_CAP};
pub use tree::{tsp_tree, tsp_tree_walk};

use crate::error::{Error, Result};
use crate::graph::{Graph, Walk};
use crate::sets::VertexSet;

/// A validated instance `(x, C, y)` over some graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TspInstance {
    pub start: usize,
    pub targets: VertexSet,
    pub end: usize,
}

impl TspInstance {
    pub fn new(graph: &Graph, start: usize, targets: VertexSet, end: usize) -> Result<Self> {
        graph.check_vertex(start)?;
        graph.check_vertex(end)?;
        if targets.universe() != graph.order() {
            return Err(Error::invalid("target set is over a different vertex universe"));
        }
        Ok(TspInstance { start, targets, end })
    }

    /// Solves with the tree formula when `graph` is a tree, Held-Karp otherwise.
    pub fn solve(&self, graph: &Graph) -> Result<u32> {
        if graph.is_tree() {
            tsp_tree(graph, self.start, &self.targets, self.end)
        } else {
            tsp_generic(graph, self.start, &self.targets, self.end)
        }
    }

    /// Length and an optimal walk.
    pub fn solve_with_walk(&self, graph: &Graph) -> Result<(u32, Walk)> {
        if graph.is_tree() {
            let walk = tsp_tree_walk(graph, self.start, &self.targets, self.end)?;
            Ok((walk.len() as u32, walk))
        } else {
            tsp_generic_walk(graph, self.start, &self.targets, self.end)
        }
    }
}

/// CLI-facing instance: `{"graph":…, "start":…, "targets":[…], "end":…}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TspInstanceJson {
    pub graph: crate::graph::io::GraphJson,
    pub start: String,
    #[serde(default)]
    pub targets: Vec<String>,
    pub end: String,
}

impl TspInstanceJson {
    pub fn resolve(&self) -> Result<(Graph, TspInstance)> {
        let (graph, _) = self.graph.to_graph()?;
        let targets = self
            .targets
            .iter()
            .map(|l| graph.vertex(l))
            .collect::<Result<Vec<_>>>()?;
        let targets = VertexSet::from_indices(graph.order(), targets);
        let instance = TspInstance::new(&graph, graph.vertex(&self.start)?, targets, graph.vertex(&self.end)?)?;
        Ok((graph, instance))
    }
}

/// `{"length":n, "walk":[…]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TspAnswerJson {
    pub length: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub walk: Option<Vec<String>>,
}

/// `C` with the endpoints removed: a walk always visits both of them.
pub(crate) fn interior_targets(targets: &VertexSet, start: usize, end: usize) -> Vec<usize> {
    targets.iter().filter(|&c| c != start && c != end).collect()
}
