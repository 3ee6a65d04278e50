use crate::error::{Error, Result};
use crate::graph::{Graph, RootedTree, Walk};
use crate::sets::VertexSet;

fn check(tree: &Graph, x: usize, targets: &VertexSet, y: usize) -> Result<()> {
    tree.require_tree()?;
    tree.check_vertex(x)?;
    tree.check_vertex(y)?;
    if targets.universe() != tree.order() {
        return Err(Error::invalid("target set is over a different vertex universe"));
    }
    Ok(())
}

/// `tsp_T(x, A, y) = 2|[x,A] \ [x,y]| + |[x,y]|` on a tree.
pub fn tsp_tree(tree: &Graph, x: usize, targets: &VertexSet, y: usize) -> Result<u32> {
    check(tree, x, targets, y)?;
    let rooted = RootedTree::unchecked(tree, x);
    let reach = rooted.reach(targets, tree.size());
    let path = rooted.edges_to_root(y, tree.size());
    Ok((2 * reach.difference(&path).len() + path.len()) as u32)
}

/// An optimal walk for `tsp_T(x, A, y)`.
///
/// The walk follows `p(x,y)`; at each vertex of the path it first makes a
/// depth-first round trip into every side branch holding a target. Branches
/// are entered in ascending vertex order.
pub fn tsp_tree_walk(tree: &Graph, x: usize, targets: &VertexSet, y: usize) -> Result<Walk> {
    check(tree, x, targets, y)?;
    // Hanging the tree from y makes p(x,y) the chain of parents above x.
    let rooted = RootedTree::unchecked(tree, y);
    let counts = rooted.subtree_counts(targets);
    let mut walk = Vec::new();
    let mut came_from = None;
    for v in rooted.path_to_root(x) {
        walk.push(v);
        for c in loaded_children(tree, &rooted, &counts, v) {
            if Some(c) != came_from {
                round_trip(tree, &rooted, &counts, v, c, &mut walk);
            }
        }
        came_from = Some(v);
    }
    Ok(Walk::trusted(walk))
}

fn loaded_children<'a>(
    tree: &'a Graph,
    rooted: &'a RootedTree,
    counts: &'a [usize],
    v: usize,
) -> impl Iterator<Item = usize> + 'a {
    tree.neighbors(v)
        .filter(move |&c| counts[c] > 0 && rooted.parent(c).map(|(p, _)| p) == Some(v))
}

/// Appends `c, ..., c, v`: a depth-first tour of the loaded part of `subtree(c)`.
fn round_trip(tree: &Graph, rooted: &RootedTree, counts: &[usize], v: usize, c: usize, walk: &mut Vec<usize>) {
    walk.push(c);
    for g in loaded_children(tree, rooted, counts, c) {
        round_trip(tree, rooted, counts, c, g, walk);
    }
    walk.push(v);
}
