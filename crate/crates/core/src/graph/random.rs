//! Seeded random graph generators and exhaustive small-tree enumeration.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Graph, PointedGraph, RootedTree};
use crate::error::{Error, Result};

/// A uniformly random labelled tree on `n` vertices (Prüfer decoding).
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid("a tree needs at least one vertex"));
    }
    if n <= 2 {
        return Graph::from_indices(Graph::numbered_labels(n), (1..n).map(|i| (0, i)));
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Graph::from_indices(Graph::numbered_labels(n), prufer_edges(n, &code))
}

fn prufer_edges(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = *leaves.iter().next().expect("Prüfer decoding always has a leaf");
        leaves.remove(&leaf);
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// A random connected graph: a random spanning tree plus each remaining pair
/// independently with probability `extra`.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, extra: f64, rng: &mut R) -> Result<Graph> {
    let tree = random_tree(n, rng)?;
    let mut edges = tree.edges().to_vec();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    // Shuffle labels so that tree edges are not always the low indices.
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_indices(Graph::numbered_labels(n), edges.into_iter().map(|(u, v)| (perm[u], perm[v])))
}

/// A random connected graph with a uniformly chosen basepoint.
pub fn random_pointed_graph<R: Rng + ?Sized>(n: usize, extra: f64, rng: &mut R) -> Result<PointedGraph> {
    let graph = random_connected_graph(n, extra, rng)?;
    let base = rng.gen_range(0..n);
    PointedGraph::new(graph, base)
}

/// One representative of every isomorphism class of trees on `n` vertices,
/// in a deterministic order. Intended for `n <= 10`.
pub fn nonisomorphic_trees(n: usize) -> Result<Vec<Graph>> {
    if n < 1 {
        return Err(Error::invalid("a tree needs at least one vertex"));
    }
    if n > 10 {
        return Err(Error::too_large("tree order for enumeration", n, 10));
    }
    if n <= 2 {
        return Ok(vec![Graph::from_indices(Graph::numbered_labels(n), (1..n).map(|i| (0, i)))?]);
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut code = vec![0usize; n - 2];
    loop {
        let g = Graph::from_indices(Graph::numbered_labels(n), prufer_edges(n, &code))?;
        if seen.insert(tree_canonical_form(&g)) {
            out.push(g);
        }
        // Odometer over all n^(n-2) Prüfer codes.
        let mut i = 0;
        while i < code.len() {
            code[i] += 1;
            if code[i] < n {
                break;
            }
            code[i] = 0;
            i += 1;
        }
        if i == code.len() {
            break;
        }
    }
    Ok(out)
}

/// AHU canonical string of an unrooted tree, minimised over its centres.
pub fn tree_canonical_form(tree: &Graph) -> String {
    centres(tree)
        .into_iter()
        .map(|c| rooted_form(&RootedTree::unchecked(tree, c), tree, c))
        .min()
        .unwrap_or_default()
}

fn centres(tree: &Graph) -> Vec<usize> {
    let n = tree.order();
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for w in tree.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
}

fn rooted_form(rooted: &RootedTree, tree: &Graph, v: usize) -> String {
    let mut children: Vec<String> = tree
        .neighbors(v)
        .filter(|&w| rooted.parent(w).map(|(p, _)| p) == Some(v))
        .map(|w| rooted_form(rooted, tree, w))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn tree_counts_match_known_sequence() {
        // OEIS A000055.
        let expected = [1, 1, 1, 2, 3, 6, 11, 23];
        for (n, &count) in (1..=8).zip(&expected) {
            let trees = nonisomorphic_trees(n).unwrap();
            assert_eq!(trees.len(), count, "n = {n}");
            assert!(trees.iter().all(Graph::is_tree));
        }
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = random_connected_graph(7, 0.3, &mut ChaCha8Rng::seed_from_u64(11)).unwrap();
        let b = random_connected_graph(7, 0.3, &mut ChaCha8Rng::seed_from_u64(11)).unwrap();
        assert_eq!(a.edges(), b.edges());
        assert!(a.is_connected());
        for n in 1..12 {
            let t = random_tree(n, &mut ChaCha8Rng::seed_from_u64(n as u64)).unwrap();
            assert!(t.is_tree());
        }
    }
}
