//! Gluing constructions: vertex-coalescence, clovers, gadget attachment and
//! Cartesian products.

use super::{Graph, PointedGraph};
use crate::error::{Error, Result};

/// Which input graph a vertex of a coalescence came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// The glued basepoint, shared by both sides.
    Base,
    First,
    Second,
}

/// The vertex-coalescence `G1 * G2` together with its provenance maps.
///
/// Vertices of `G1` keep their indices; non-base vertices of `G2` follow in
/// their original order. The glued vertex keeps `G1`'s basepoint label,
/// other vertices are labelled `"1:<label>"` and `"2:<label>"`.
#[derive(Debug, Clone)]
pub struct Coalescence {
    pub graph: PointedGraph,
    pub first: PointedGraph,
    pub second: PointedGraph,
    second_to_merged: Vec<usize>,
    origin: Vec<(Side, usize)>,
}

/// Glues two connected pointed graphs at their basepoints.
pub fn coalesce(first: &PointedGraph, second: &PointedGraph) -> Result<Coalescence> {
    first.graph.require_connected()?;
    second.graph.require_connected()?;
    let (g1, b1) = (&first.graph, first.basepoint);
    let (g2, b2) = (&second.graph, second.basepoint);
    let n1 = g1.order();

    let mut labels: Vec<String> = (0..n1)
        .map(|v| if v == b1 { g1.label(v).to_string() } else { format!("1:{}", g1.label(v)) })
        .collect();
    let mut origin: Vec<(Side, usize)> =
        (0..n1).map(|v| if v == b1 { (Side::Base, v) } else { (Side::First, v) }).collect();
    let mut second_to_merged = vec![0; g2.order()];
    for v in 0..g2.order() {
        if v == b2 {
            second_to_merged[v] = b1;
        } else {
            second_to_merged[v] = labels.len();
            labels.push(format!("2:{}", g2.label(v)));
            origin.push((Side::Second, v));
        }
    }
    let edges = g1
        .edges()
        .iter()
        .copied()
        .chain(g2.edges().iter().map(|&(u, v)| (second_to_merged[u], second_to_merged[v])));
    let graph = Graph::from_indices(labels, edges.collect::<Vec<_>>())?;
    Ok(Coalescence {
        graph: PointedGraph { graph, basepoint: b1 },
        first: first.clone(),
        second: second.clone(),
        second_to_merged,
        origin,
    })
}

impl Coalescence {
    pub fn side(&self, v: usize) -> Side {
        self.origin[v].0
    }

    /// Merged index of a vertex of `G1`.
    pub fn from_first(&self, v: usize) -> usize {
        v
    }

    /// Merged index of a vertex of `G2`.
    pub fn from_second(&self, v: usize) -> usize {
        self.second_to_merged[v]
    }

    /// The `G1` vertex behind `v`, if `v` lies in `G1` (the base does).
    pub fn to_first(&self, v: usize) -> Option<usize> {
        match self.origin[v] {
            (Side::Base, _) => Some(self.first.basepoint),
            (Side::First, u) => Some(u),
            (Side::Second, _) => None,
        }
    }

    /// The `G2` vertex behind `v`, if `v` lies in `G2` (the base does).
    pub fn to_second(&self, v: usize) -> Option<usize> {
        match self.origin[v] {
            (Side::Base, _) => Some(self.second.basepoint),
            (Side::Second, u) => Some(u),
            (Side::First, _) => None,
        }
    }

    pub fn in_first(&self, v: usize) -> bool {
        self.side(v) != Side::Second
    }

    pub fn in_second(&self, v: usize) -> bool {
        self.side(v) != Side::First
    }
}

/// The clover `Clo(G, n)`: `n` copies of a pointed graph glued at the basepoint.
///
/// Copy 0 occupies indices `0..|G|` exactly as `G` does; each further copy
/// appends its non-base vertices in order. Non-base vertices of copy `c` are
/// labelled `"c:<label>"`.
#[derive(Debug, Clone)]
pub struct Clover {
    pub graph: PointedGraph,
    pub petal: PointedGraph,
    pub copies: usize,
}

/// Builds `Clo(G, n)`.
pub fn build_clover(petal: &PointedGraph, copies: usize) -> Result<Clover> {
    if copies < 1 {
        return Err(Error::invalid("a clover needs at least one copy"));
    }
    petal.graph.require_connected()?;
    let (g, b) = (&petal.graph, petal.basepoint);
    let n = g.order();
    let index = |c: usize, v: usize| clover_index(n, b, c, v);
    let total = copies * (n - 1) + 1;
    let mut labels = vec![String::new(); total];
    for c in 0..copies {
        for v in 0..n {
            labels[index(c, v)] = if v == b { g.label(v).to_string() } else { format!("{c}:{}", g.label(v)) };
        }
    }
    let edges: Vec<_> = (0..copies)
        .flat_map(|c| g.edges().iter().map(move |&(u, v)| (index(c, u), index(c, v))))
        .collect();
    let graph = Graph::from_indices(labels, edges)?;
    Ok(Clover { graph: PointedGraph { graph, basepoint: b }, petal: petal.clone(), copies })
}

fn clover_index(n: usize, base: usize, copy: usize, v: usize) -> usize {
    if copy == 0 || v == base {
        v
    } else {
        let rank = if v < base { v } else { v - 1 };
        n + (copy - 1) * (n - 1) + rank
    }
}

impl Clover {
    /// Index of petal vertex `v` in copy `copy`.
    pub fn vertex(&self, copy: usize, v: usize) -> usize {
        assert!(copy < self.copies, "copy {copy} out of range");
        clover_index(self.petal.graph.order(), self.petal.basepoint, copy, v)
    }

    /// `(copy, petal vertex)` for a clover vertex; the basepoint reports copy `None`.
    pub fn locate(&self, idx: usize) -> (Option<usize>, usize) {
        let n = self.petal.graph.order();
        let b = self.petal.basepoint;
        if idx == b {
            (None, b)
        } else if idx < n {
            (Some(0), idx)
        } else {
            let offset = idx - n;
            let rank = offset % (n - 1);
            (Some(offset / (n - 1) + 1), if rank < b { rank } else { rank + 1 })
        }
    }
}

/// A host graph with one copy of a pointed gadget glued at each anchor.
#[derive(Debug, Clone)]
pub struct AttachedCopies {
    pub graph: Graph,
    /// `copies[i][q]`: index of gadget vertex `q` in the copy hung at `anchors[i]`.
    pub copies: Vec<Vec<usize>>,
}

/// Glues a copy of `gadget` (at its basepoint) to every anchor vertex of `host`.
///
/// Host vertices keep their indices and labels; gadget vertices are labelled
/// `"<anchor>+<label>"`.
pub fn attach_copies(host: &Graph, anchors: &[usize], gadget: &PointedGraph) -> Result<AttachedCopies> {
    gadget.graph.require_connected()?;
    for &a in anchors {
        host.check_vertex(a)?;
    }
    let mut sorted = anchors.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::invalid("anchors must be distinct"));
    }
    let q = &gadget.graph;
    let mut labels = host.labels().to_vec();
    let mut edges = host.edges().to_vec();
    let mut copies = Vec::with_capacity(anchors.len());
    for &a in anchors {
        let mut map = vec![a; q.order()];
        for v in 0..q.order() {
            if v != gadget.basepoint {
                map[v] = labels.len();
                labels.push(format!("{}+{}", host.label(a), q.label(v)));
            }
        }
        edges.extend(q.edges().iter().map(|&(u, v)| (map[u], map[v])));
        copies.push(map);
    }
    Ok(AttachedCopies { graph: Graph::from_indices(labels, edges)?, copies })
}

/// The Cartesian product `G □ H`; vertex `(x, y)` has index `x·|H| + y`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::invalid("Cartesian product of an empty graph"));
    }
    let m = h.order();
    let labels = (0..g.order())
        .flat_map(|x| (0..m).map(move |y| (x, y)))
        .map(|(x, y)| format!("({},{})", g.label(x), h.label(y)))
        .collect();
    let mut edges = Vec::new();
    for x in 0..g.order() {
        for &(u, v) in h.edges() {
            edges.push((x * m + u, x * m + v));
        }
    }
    for &(u, v) in g.edges() {
        for y in 0..m {
            edges.push((u * m + y, v * m + y));
        }
    }
    Graph::from_indices(labels, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cycle, build_path};

    fn pointed_path(k: usize) -> PointedGraph {
        PointedGraph::new(build_path(k).unwrap(), 0).unwrap()
    }

    #[test]
    fn coalesced_paths_form_a_longer_path() {
        let c = coalesce(&pointed_path(3), &pointed_path(3)).unwrap();
        assert_eq!(c.graph.graph.order(), 7);
        assert_eq!(c.graph.graph.diameter(), Ok(6));
        assert_eq!(c.side(0), Side::Base);
        assert_eq!(c.to_first(0), Some(0));
        assert_eq!(c.to_second(0), Some(0));
        let far = c.from_second(3);
        assert_eq!(c.to_second(far), Some(3));
        assert_eq!(c.to_first(far), None);
        assert_eq!(c.graph.graph.dist(3, far), Ok(6));
    }

    #[test]
    fn clover_layout_round_trips() {
        let petal = PointedGraph::new(build_cycle(4).unwrap(), 2).unwrap();
        let clo = build_clover(&petal, 3).unwrap();
        assert_eq!(clo.graph.graph.order(), 3 * 3 + 1);
        for c in 0..3 {
            for v in 0..4 {
                let idx = clo.vertex(c, v);
                let (copy, orig) = clo.locate(idx);
                assert_eq!(orig, v);
                if v == 2 {
                    assert_eq!(copy, None);
                } else {
                    assert_eq!(copy, Some(c));
                }
            }
        }
        let small = build_clover(&pointed_path(2), 8).unwrap();
        assert_eq!(small.graph.graph.order(), 17);
    }

    #[test]
    fn disconnected_inputs_are_rejected() {
        let g = Graph::from_labels(&["a", "b"], &[]).unwrap();
        let p = PointedGraph::new(g, 0).unwrap();
        assert_eq!(coalesce(&p, &pointed_path(1)).unwrap_err(), Error::NotConnected);
        assert_eq!(build_clover(&p, 2).unwrap_err(), Error::NotConnected);
    }

    #[test]
    fn unit_square() {
        let p1 = build_path(1).unwrap();
        let sq = cartesian_product(&p1, &p1).unwrap();
        assert_eq!((sq.order(), sq.size()), (4, 4));
        assert!((0..4).all(|v| sq.degree(v) == 2));
    }

    #[test]
    fn attached_copies_hang_off_anchors() {
        let host = build_path(2).unwrap();
        let att = attach_copies(&host, &[0, 2], &pointed_path(1)).unwrap();
        assert_eq!(att.graph.order(), 5);
        assert_eq!(att.graph.dist(att.copies[0][1], att.copies[1][1]), Ok(4));
        assert_eq!(att.graph.label(att.copies[1][1]), "v2+v1");
    }
}
