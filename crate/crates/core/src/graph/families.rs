//! Constructors for the graph families used throughout the crate.

use super::{build_clover, BinaryTreeVertex, Graph, PointedGraph};
use crate::error::{Error, Result};

/// Largest Hamming cube dimension we are willing to materialize.
pub const MAX_HAMMING_DIMENSION: usize = 20;

/// The path `P_k` with vertices `v0..vk`.
pub fn build_path(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::invalid("path length must be at least 1"));
    }
    Graph::from_indices(Graph::numbered_labels(k + 1), (1..=k).map(|i| (i - 1, i)))
}

/// The cycle `C_k` with vertices `v0..v{k-1}`.
pub fn build_cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::invalid("a cycle needs at least 3 vertices"));
    }
    Graph::from_indices(Graph::numbered_labels(k), (0..k).map(|i| (i, (i + 1) % k)))
}

/// The complete graph `K_k` with vertices `v0..v{k-1}`.
pub fn build_complete(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::invalid("complete graph needs at least 1 vertex"));
    }
    let edges = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j)));
    Graph::from_indices(Graph::numbered_labels(k), edges)
}

/// The binary tree `B_k` of height `k`, vertices labelled by their words
/// (root `"e"`) in level order.
pub fn build_binary_tree(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::invalid("binary tree height must be at least 1"));
    }
    if k > 24 {
        return Err(Error::too_large("binary tree height", k, 24));
    }
    let n = (1usize << (k + 1)) - 1;
    let labels = (0..n).map(|i| BinaryTreeVertex::from_index(i).label()).collect();
    Graph::from_indices(labels, (1..n).map(|i| ((i - 1) / 2, i)))
}

/// The star `St_{n,k}`: `n` copies of `P_k` glued at `v0`.
pub fn build_star(n: usize, k: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid("star needs at least one branch"));
    }
    Ok(build_clover(&PointedGraph::new(build_path(k)?, 0)?, n)?.graph.graph)
}

/// The rose `Ro_{n,k}`: `n` copies of `C_k` glued at `v0`.
pub fn build_rose(n: usize, k: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid("rose needs at least one petal"));
    }
    Ok(build_clover(&PointedGraph::new(build_cycle(k)?, 0)?, n)?.graph.graph)
}

/// The Hamming cube graph `H_k`; vertex index is the coordinate bitmask and
/// the label lists coordinates `1..k` left to right.
pub fn build_hamming_graph(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::invalid("Hamming dimension must be at least 1"));
    }
    if k > MAX_HAMMING_DIMENSION {
        return Err(Error::too_large("Hamming dimension", k, MAX_HAMMING_DIMENSION));
    }
    let n = 1usize << k;
    let labels = (0..n)
        .map(|mask| (0..k).map(|i| if mask >> i & 1 == 1 { '1' } else { '0' }).collect())
        .collect();
    let edges = (0..n).flat_map(|mask| (0..k).filter(move |i| mask >> i & 1 == 0).map(move |i| (mask, mask | 1 << i)));
    Graph::from_indices(labels, edges)
}

/// The binary tree with variable-size legs: every level-`j` edge of `B_k`
/// (`k = legs.len()`) is replaced by a path of length `legs[j-1]`.
///
/// Branch vertices keep their binary-word labels; the interior vertex at
/// step `i` on the leg above word `w` is labelled `"w~i"`.
pub fn build_variable_leg_tree(legs: &[usize]) -> Result<Graph> {
    if legs.is_empty() {
        return Err(Error::invalid("leg sequence must be nonempty"));
    }
    if legs.contains(&0) {
        return Err(Error::invalid("leg lengths must be positive"));
    }
    let k = legs.len();
    if k > 20 {
        return Err(Error::too_large("binary tree height", k, 20));
    }
    let branch_count = (1usize << (k + 1)) - 1;
    let mut labels: Vec<String> = (0..branch_count).map(|i| BinaryTreeVertex::from_index(i).label()).collect();
    let mut edges = Vec::new();
    for child in 1..branch_count {
        let word = BinaryTreeVertex::from_index(child);
        let leg = legs[word.len() - 1];
        let mut previous = (child - 1) / 2;
        for step in 1..leg {
            labels.push(format!("{word}~{step}"));
            let interior = labels.len() - 1;
            edges.push((previous, interior));
            previous = interior;
        }
        edges.push((previous, child));
    }
    Graph::from_indices(labels, edges)
}
