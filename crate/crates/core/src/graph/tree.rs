//! Unique-path machinery on trees: `p(x,y)`, `[x,y]`, `[x,A]`, `[C]` and
//! the neighbour decomposition `T = {x} ∪ ⋃ T_{x,y}`.

use super::{Graph, Walk};
use crate::error::Result;
use crate::sets::{EdgeSet, VertexSet};

/// A tree hung from a root: parent pointers and a BFS order.
#[derive(Debug, Clone)]
pub struct RootedTree {
    pub root: usize,
    parent: Vec<Option<(usize, usize)>>,
    /// Vertices in BFS order from the root; parents precede children.
    order: Vec<usize>,
}

impl RootedTree {
    pub fn new(tree: &Graph, root: usize) -> Result<Self> {
        tree.require_tree()?;
        tree.check_vertex(root)?;
        Ok(Self::unchecked(tree, root))
    }

    /// Skips the tree check; `tree` must already be known to be a tree.
    pub(crate) fn unchecked(tree: &Graph, root: usize) -> Self {
        let n = tree.order();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        seen[root] = true;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &(w, e) in tree.incident(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((u, e));
                    order.push(w);
                }
            }
        }
        RootedTree { root, parent, order }
    }

    /// Parent vertex and the id of the edge to it.
    pub fn parent(&self, v: usize) -> Option<(usize, usize)> {
        self.parent[v]
    }

    pub fn bfs_order(&self) -> &[usize] {
        &self.order
    }

    /// `counts[v] = |A ∩ subtree(v)|`.
    pub fn subtree_counts(&self, set: &VertexSet) -> Vec<usize> {
        let mut counts: Vec<usize> = (0..self.parent.len()).map(|v| set.contains(v) as usize).collect();
        for &v in self.order.iter().rev() {
            if let Some((p, _)) = self.parent[v] {
                counts[p] += counts[v];
            }
        }
        counts
    }

    /// Vertices from `v` up to the root, inclusive.
    pub fn path_to_root(&self, mut v: usize) -> Vec<usize> {
        let mut path = vec![v];
        while let Some((p, _)) = self.parent[v] {
            path.push(p);
            v = p;
        }
        path
    }

    /// Edges between `v` and the root.
    pub fn edges_to_root(&self, mut v: usize, universe: usize) -> EdgeSet {
        let mut set = EdgeSet::empty(universe);
        while let Some((p, e)) = self.parent[v] {
            set.insert(e);
            v = p;
        }
        set
    }

    /// `[root, A]`: edge above `v` belongs iff `subtree(v)` meets `A`.
    pub fn reach(&self, set: &VertexSet, universe: usize) -> EdgeSet {
        let counts = self.subtree_counts(set);
        let mut edges = EdgeSet::empty(universe);
        for (v, p) in self.parent.iter().enumerate() {
            if let Some((_, e)) = p {
                if counts[v] > 0 {
                    edges.insert(*e);
                }
            }
        }
        edges
    }
}

/// The unique path `p(x,y)` in a tree.
pub fn tree_path(tree: &Graph, x: usize, y: usize) -> Result<Walk> {
    tree.check_vertex(x)?;
    let rooted = RootedTree::new(tree, y)?;
    Ok(Walk::trusted(rooted.path_to_root(x)))
}

/// `[x,y]`, the edges of `p(x,y)`.
pub fn path_edge_set(tree: &Graph, x: usize, y: usize) -> Result<EdgeSet> {
    tree.check_vertex(x)?;
    Ok(RootedTree::new(tree, y)?.edges_to_root(x, tree.size()))
}

/// `[x,A] = ⋃_{a∈A} [x,a]`.
pub fn reach_edge_set(tree: &Graph, x: usize, set: &VertexSet) -> Result<EdgeSet> {
    Ok(RootedTree::new(tree, x)?.reach(set, tree.size()))
}

/// `[C] = ⋃_{x,y∈C} [x,y]`, which equals `[c, C]` for any `c ∈ C`.
pub fn span_edge_set(tree: &Graph, set: &VertexSet) -> Result<EdgeSet> {
    tree.require_tree()?;
    match set.iter().next() {
        None => Ok(tree.empty_edge_set()),
        Some(c) => reach_edge_set(tree, c, set),
    }
}

/// For each neighbour `y` of `x` (ascending), the vertex set `T_{x,y}` of the
/// component of `T - x` containing `y`. The sets partition `T \ {x}`.
pub fn subtree_split(tree: &Graph, x: usize) -> Result<Vec<(usize, VertexSet)>> {
    tree.check_vertex(x)?;
    let rooted = RootedTree::new(tree, x)?;
    let mut owner = vec![usize::MAX; tree.order()];
    for &v in &rooted.order[1..] {
        let (p, _) = rooted.parent[v].expect("non-root has a parent");
        owner[v] = if p == x { v } else { owner[p] };
    }
    Ok(tree
        .neighbors(x)
        .map(|y| (y, VertexSet::from_indices(tree.order(), (0..tree.order()).filter(|&v| owner[v] == y))))
        .collect())
}
