//! Finite simple graphs with stable vertex labels and cached BFS metrics.
//!
//! Vertices are dense indices `0..order`; labels exist for display and
//! interchange only. Every constructor in this module returns an immutable
//! [`Graph`] whose distance table is either filled eagerly (small graphs) or
//! one BFS row at a time on first use.

mod binary;
mod compose;
mod families;
pub mod io;
pub mod random;
mod tree;

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

pub use binary::BinaryTreeVertex;
pub use compose::{attach_copies, cartesian_product, coalesce, build_clover, AttachedCopies, Clover, Coalescence, Side};
pub use families::{
    build_binary_tree, build_complete, build_cycle, build_hamming_graph, build_path, build_rose,
    build_star, build_variable_leg_tree,
};
pub use tree::{path_edge_set, reach_edge_set, span_edge_set, subtree_split, tree_path, RootedTree};

use crate::error::{Error, Result};
use crate::sets::{EdgeSet, VertexSet};

/// Distance value used for unreachable pairs in BFS rows.
pub const UNREACHABLE: u32 = u32::MAX;

/// Graphs up to this order get their full distance table at construction.
pub const EAGER_DISTANCE_LIMIT: usize = 1024;

#[derive(Debug, Clone)]
enum DistanceCache {
    Eager(Vec<u32>),
    Lazy(Vec<OnceLock<Box<[u32]>>>),
}

/// An undirected simple graph.
#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// Canonical edge list: `(u, v)` with `u < v`, sorted.
    edges: Vec<(usize, usize)>,
    /// `(neighbour, edge id)` sorted by neighbour.
    adjacency: Vec<Vec<(usize, usize)>>,
    distances: DistanceCache,
}

impl Graph {
    /// Builds a graph from labels and index pairs.
    ///
    /// Rejects duplicate labels, loops, repeated edges and out-of-range endpoints.
    pub fn from_indices(labels: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::Malformed(format!("duplicate vertex label `{l}`")));
            }
        }
        let mut canonical = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Malformed(format!("edge ({u},{v}) has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(Error::Malformed(format!("loop at `{}`", labels[u])));
            }
            canonical.push((u.min(v), u.max(v)));
        }
        canonical.sort_unstable();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            let (u, v) = w[0];
            return Err(Error::Malformed(format!("repeated edge `{}`-`{}`", labels[u], labels[v])));
        }
        let mut adjacency = vec![Vec::new(); n];
        for (id, &(u, v)) in canonical.iter().enumerate() {
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        for row in &mut adjacency {
            row.sort_unstable();
        }
        let mut graph = Graph {
            labels,
            index,
            edges: canonical,
            adjacency,
            distances: DistanceCache::Lazy(Vec::new()),
        };
        graph.distances = if n <= EAGER_DISTANCE_LIMIT {
            let mut table = Vec::with_capacity(n * n);
            for s in 0..n {
                table.extend(graph.bfs(s));
            }
            DistanceCache::Eager(table)
        } else {
            DistanceCache::Lazy((0..n).map(|_| OnceLock::new()).collect())
        };
        Ok(graph)
    }

    /// Builds a graph from labels and label pairs.
    pub fn from_labels<S: AsRef<str>>(labels: &[S], edges: &[(S, S)]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_string()).collect();
        let lookup: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let find = |l: &str| lookup.get(l).copied().ok_or_else(|| Error::UnknownVertex(l.to_string()));
        let pairs = edges
            .iter()
            .map(|(a, b)| Ok((find(a.as_ref())?, find(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Graph::from_indices(labels, pairs)
    }

    /// Labels `v0..v{n-1}`.
    pub(crate) fn numbered_labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("v{i}")).collect()
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Index of the vertex with the given label.
    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.index.get(label).copied().ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!("#{v}")))
        }
    }

    /// Canonical edge list, indexed by edge id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(|&(w, _)| w)
    }

    /// `(neighbour, edge id)` pairs in ascending neighbour order.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let row = self.adjacency.get(u)?;
        row.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| row[i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn empty_vertex_set(&self) -> VertexSet {
        VertexSet::empty(self.order())
    }

    pub fn empty_edge_set(&self) -> EdgeSet {
        EdgeSet::empty(self.size())
    }

    /// Single-source BFS, bypassing the cache.
    pub fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &(w, _) in &self.adjacency[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Cached distance row of `source` (entries may be [`UNREACHABLE`]).
    pub fn distance_row(&self, source: usize) -> &[u32] {
        match &self.distances {
            DistanceCache::Eager(table) => {
                let n = self.order();
                &table[source * n..(source + 1) * n]
            }
            DistanceCache::Lazy(rows) => rows[source].get_or_init(|| self.bfs(source).into_boxed_slice()),
        }
    }

    /// Graph distance between two vertex indices.
    pub fn dist(&self, x: usize, y: usize) -> Result<u32> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        match self.distance_row(x)[y] {
            UNREACHABLE => Err(Error::NotConnected),
            d => Ok(d),
        }
    }

    /// Distance without bounds or connectivity checks; callers guarantee both.
    pub(crate) fn d(&self, x: usize, y: usize) -> u32 {
        self.distance_row(x)[y]
    }

    /// Distance between two labelled vertices.
    pub fn dist_by_label(&self, x: &str, y: &str) -> Result<u32> {
        self.dist(self.vertex(x)?, self.vertex(y)?)
    }

    /// Full distance table; fails on disconnected graphs.
    pub fn all_pairs(&self) -> Result<Vec<Vec<u32>>> {
        self.require_connected()?;
        Ok((0..self.order()).map(|s| self.distance_row(s).to_vec()).collect())
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.distance_row(0).iter().all(|&d| d != UNREACHABLE)
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::NotConnected)
        }
    }

    /// A tree is a connected graph with `|E| = |V| - 1`.
    pub fn is_tree(&self) -> bool {
        self.order() > 0 && self.size() + 1 == self.order() && self.is_connected()
    }

    pub fn require_tree(&self) -> Result<()> {
        if self.is_tree() {
            Ok(())
        } else {
            Err(Error::NotATree)
        }
    }

    /// The lexicographically least geodesic from `x` to `y`: every step moves
    /// to the smallest-index neighbour that is one step closer to `y`.
    pub fn geodesic(&self, x: usize, y: usize) -> Result<Vec<usize>> {
        let remaining = self.dist(x, y)?;
        let row = self.distance_row(y);
        let mut path = Vec::with_capacity(remaining as usize + 1);
        let mut cur = x;
        path.push(cur);
        while cur != y {
            cur = self
                .neighbors(cur)
                .find(|&w| row[w] + 1 == row[cur])
                .expect("a closer neighbour exists on a connected graph");
            path.push(cur);
        }
        Ok(path)
    }

    pub fn diameter(&self) -> Result<u32> {
        self.require_connected()?;
        Ok((0..self.order())
            .map(|s| self.distance_row(s).iter().copied().max().unwrap_or(0))
            .max()
            .unwrap_or(0))
    }
}

/// A graph with a distinguished basepoint.
#[derive(Debug, Clone)]
pub struct PointedGraph {
    pub graph: Graph,
    pub basepoint: usize,
}

impl PointedGraph {
    pub fn new(graph: Graph, basepoint: usize) -> Result<Self> {
        graph.check_vertex(basepoint)?;
        Ok(PointedGraph { graph, basepoint })
    }

    /// Pointed at the vertex with the given label.
    pub fn at(graph: Graph, label: &str) -> Result<Self> {
        let basepoint = graph.vertex(label)?;
        Ok(PointedGraph { graph, basepoint })
    }
}

/// A walk: a nonempty vertex sequence with consecutive entries adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk(Vec<usize>);

impl Walk {
    /// Validates adjacency against `graph`.
    pub fn new(graph: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::invalid("a walk needs at least one vertex"));
        }
        for &v in &vertices {
            graph.check_vertex(v)?;
        }
        if let Some(w) = vertices.windows(2).find(|w| !graph.has_edge(w[0], w[1])) {
            return Err(Error::invalid(format!(
                "`{}` and `{}` are not adjacent",
                graph.label(w[0]),
                graph.label(w[1])
            )));
        }
        Ok(Walk(vertices))
    }

    pub(crate) fn trusted(vertices: Vec<usize>) -> Self {
        debug_assert!(!vertices.is_empty());
        Walk(vertices)
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn start(&self) -> usize {
        self.0[0]
    }

    pub fn end(&self) -> usize {
        *self.0.last().unwrap()
    }

    pub fn visits(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn labels<'g>(&self, graph: &'g Graph) -> Vec<&'g str> {
        self.0.iter().map(|&v| graph.label(v)).collect()
    }

    /// Edge ids traversed, in order (with repetition).
    pub fn edge_ids(&self, graph: &Graph) -> Vec<usize> {
        self.0
            .windows(2)
            .map(|w| graph.edge_id(w[0], w[1]).expect("walk steps are edges"))
            .collect()
    }
}
