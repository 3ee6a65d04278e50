//! Lamplighter states `(A, x)` over a base graph, the closed-form metric
//! `d((A,x),(B,y)) = tsp_G(x, A△B, y) + |A△B|`, and the explicit graph
//! `La(G)` used as a BFS oracle.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sets::VertexSet;
use crate::tsp::{tsp_generic, tsp_tree};

/// Largest base graph for which [`LamplighterGraph::build`] materialises `La(G)`.
pub const MAX_EXPLICIT_BASE: usize = 14;

/// A lamplighter configuration: lit lamps `A` and the lamplighter's position `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LampState {
    pub lamps: VertexSet,
    pub pos: usize,
}

impl LampState {
    pub fn new(graph: &Graph, lamps: VertexSet, pos: usize) -> Result<Self> {
        graph.check_vertex(pos)?;
        if lamps.universe() != graph.order() {
            return Err(Error::invalid("lamp set is over a different vertex universe"));
        }
        Ok(LampState { lamps, pos })
    }

    /// All lamps off, lamplighter at `pos`.
    pub fn dark(graph: &Graph, pos: usize) -> Result<Self> {
        Self::new(graph, graph.empty_vertex_set(), pos)
    }

    pub fn from_labels<S: AsRef<str>>(graph: &Graph, lamps: &[S], pos: &str) -> Result<Self> {
        let mut set = graph.empty_vertex_set();
        for l in lamps {
            set.insert(graph.vertex(l.as_ref())?);
        }
        Self::new(graph, set, graph.vertex(pos)?)
    }

    /// `"{a,b}@x"`.
    pub fn label(&self, graph: &Graph) -> String {
        let lamps: Vec<&str> = self.lamps.iter().map(|v| graph.label(v)).collect();
        format!("{{{}}}@{}", lamps.join(","), graph.label(self.pos))
    }

    pub fn to_json(&self, graph: &Graph) -> LampStateJson {
        LampStateJson {
            lamps: self.lamps.iter().map(|v| graph.label(v).to_string()).collect(),
            pos: graph.label(self.pos).to_string(),
        }
    }
}

/// `{"lamps":["v1","v3"],"pos":"v0"}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LampStateJson {
    #[serde(default)]
    pub lamps: Vec<String>,
    pub pos: String,
}

impl LampStateJson {
    pub fn resolve(&self, graph: &Graph) -> Result<LampState> {
        LampState::from_labels(graph, &self.lamps, &self.pos)
    }
}

fn check_pair(graph: &Graph, u: &LampState, v: &LampState) -> Result<()> {
    for s in [u, v] {
        graph.check_vertex(s.pos)?;
        if s.lamps.universe() != graph.order() {
            return Err(Error::invalid("lamp set is over a different vertex universe"));
        }
    }
    Ok(())
}

/// Word distance in `La(G)` via Held-Karp on the flipped lamps.
pub fn lamp_distance(graph: &Graph, u: &LampState, v: &LampState) -> Result<u32> {
    check_pair(graph, u, v)?;
    let flipped = u.lamps.symmetric_difference(&v.lamps);
    Ok(tsp_generic(graph, u.pos, &flipped, v.pos)? + flipped.len() as u32)
}

/// `2|[x,A△B] \ [x,y]| + |[x,y]| + |A△B|` on a tree.
pub fn lamp_distance_tree(tree: &Graph, u: &LampState, v: &LampState) -> Result<u32> {
    check_pair(tree, u, v)?;
    let flipped = u.lamps.symmetric_difference(&v.lamps);
    Ok(tsp_tree(tree, u.pos, &flipped, v.pos)? + flipped.len() as u32)
}

/// The explicit lamplighter graph `La(G)` over a small base graph.
///
/// State `(A, x)` has index `mask(A) * |V| + x`, so states are ordered by
/// lamp mask first and position second.
#[derive(Debug, Clone)]
pub struct LamplighterGraph {
    pub base: Graph,
    pub graph: Graph,
    /// Whether the base graph (and hence `La(G)`) is connected.
    pub connected: bool,
}

impl LamplighterGraph {
    pub fn build(base: &Graph) -> Result<Self> {
        let n = base.order();
        if n > MAX_EXPLICIT_BASE {
            return Err(Error::too_large("base graph order", n, MAX_EXPLICIT_BASE));
        }
        if n == 0 {
            return Err(Error::invalid("base graph has no vertices"));
        }
        let total = n << n;
        let mut labels = Vec::with_capacity(total);
        let mut edges = Vec::with_capacity(total * (base.size() * 2 / n + 1));
        for mask in 0u64..1 << n {
            let lamps = VertexSet::from_mask(n, mask);
            for x in 0..n {
                let idx = mask as usize * n + x;
                labels.push(LampState { lamps: lamps.clone(), pos: x }.label(base));
                for w in base.neighbors(x).filter(|&w| w > x) {
                    edges.push((idx, mask as usize * n + w));
                }
                if mask >> x & 1 == 0 {
                    edges.push((idx, (mask | 1 << x) as usize * n + x));
                }
            }
        }
        Ok(LamplighterGraph {
            base: base.clone(),
            graph: Graph::from_indices(labels, edges)?,
            connected: base.is_connected(),
        })
    }

    pub fn state_index(&self, state: &LampState) -> usize {
        state.lamps.to_mask() as usize * self.base.order() + state.pos
    }

    pub fn state(&self, index: usize) -> LampState {
        let n = self.base.order();
        LampState {
            lamps: VertexSet::from_mask(n, (index / n) as u64),
            pos: index % n,
        }
    }

    /// BFS distance between two states.
    pub fn distance(&self, u: &LampState, v: &LampState) -> Result<u32> {
        self.graph.dist(self.state_index(u), self.state_index(v))
    }
}
