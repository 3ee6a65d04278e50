use super::HammingPoint;
use crate::distortion::{BoundedMap, Constant, Measure};
use crate::error::{Error, Result};
use crate::graph::{Graph, RootedTree};
use crate::lamplighter::{lamp_distance_tree, LampState};
use crate::sets::VertexSet;

fn check_state(tree: &Graph, state: &LampState) -> Result<()> {
    tree.require_tree()?;
    tree.check_vertex(state.pos)?;
    if state.lamps.universe() != tree.order() {
        return Err(Error::invalid("lamp set is over a different vertex universe"));
    }
    Ok(())
}

fn edge_key(tree: &Graph, e: usize) -> String {
    let (u, v) = tree.edges()[e];
    format!("{u}-{v}")
}

/// The coordinates `(e, A_{x,e})` for `e ∈ [x,A]`, where `A_{x,e}` is the set
/// of lamps behind `e` as seen from `x`.
///
/// Keys read `"F:u-v|a1,a2,..."` with vertex indices, edge endpoints ascending
/// and lamps ascending.
pub fn hamming_coordinates(tree: &Graph, state: &LampState) -> Result<HammingPoint> {
    check_state(tree, state)?;
    let rooted = RootedTree::unchecked(tree, state.pos);
    let n = tree.order();
    let mut behind: Vec<VertexSet> = (0..n)
        .map(|v| {
            let mut s = VertexSet::empty(n);
            if state.lamps.contains(v) {
                s.insert(v);
            }
            s
        })
        .collect();
    for &v in rooted.bfs_order().iter().rev() {
        if let Some((p, _)) = rooted.parent(v) {
            let below = behind[v].clone();
            behind[p] = behind[p].union(&below);
        }
    }
    let mut coords = HammingPoint::default();
    for v in 0..n {
        if let Some((_, e)) = rooted.parent(v) {
            if !behind[v].is_empty() {
                let lamps: Vec<String> = behind[v].iter().map(|a| a.to_string()).collect();
                coords.0.insert(format!("F:{}|{}", edge_key(tree, e), lamps.join(",")));
            }
        }
    }
    Ok(coords)
}

/// `F(A,x) = (f(A,x), [x0,x], A)` as one point of a Hamming cube; the three
/// factors use the key prefixes `"F:"`, `"E:"` and `"V:"`.
pub fn embed_lamp_tree_to_hamming(tree: &Graph, x0: usize, state: &LampState) -> Result<HammingPoint> {
    tree.check_vertex(x0)?;
    let mut point = hamming_coordinates(tree, state)?;
    let rooted = RootedTree::unchecked(tree, x0);
    for e in rooted.edges_to_root(state.pos, tree.size()).iter() {
        point.0.insert(format!("E:{}", edge_key(tree, e)));
    }
    for a in state.lamps.iter() {
        point.0.insert(format!("V:{a}"));
    }
    Ok(point)
}

/// `La(T) → H`, claimed bounds `(1/2, 3)`.
#[derive(Debug, Clone)]
pub struct TreeToHamming {
    pub tree: Graph,
    pub x0: usize,
}

impl TreeToHamming {
    pub fn new(tree: Graph, x0: usize) -> Result<Self> {
        tree.require_tree()?;
        tree.check_vertex(x0)?;
        Ok(TreeToHamming { tree, x0 })
    }
}

impl BoundedMap for TreeToHamming {
    type Point = LampState;
    type Image = HammingPoint;

    fn name(&self) -> String {
        format!("tree-to-hamming(|T|={}, x0={})", self.tree.order(), self.tree.label(self.x0))
    }

    fn bounds(&self) -> (Constant, Constant) {
        (Constant::ratio(1, 2), Constant::int(3))
    }

    fn apply(&self, state: &LampState) -> Result<HammingPoint> {
        embed_lamp_tree_to_hamming(&self.tree, self.x0, state)
    }

    fn source_distance(&self, p: &LampState, q: &LampState) -> Result<Measure> {
        Ok(Measure::Int(lamp_distance_tree(&self.tree, p, q)? as u64))
    }

    fn target_distance(&self, u: &HammingPoint, v: &HammingPoint) -> Result<Measure> {
        Ok(Measure::Int(u.distance(v)))
    }

    fn label(&self, state: &LampState) -> String {
        state.label(&self.tree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_path, path_edge_set, reach_edge_set};

    #[test]
    fn empty_lamps_give_empty_point() {
        let p = build_path(3).unwrap();
        let s = LampState::dark(&p, 2).unwrap();
        assert!(hamming_coordinates(&p, &s).unwrap().is_empty());
        let s0 = LampState::dark(&p, 0).unwrap();
        assert!(embed_lamp_tree_to_hamming(&p, 0, &s0).unwrap().is_empty());
    }

    #[test]
    fn lamp_under_the_lamplighter() {
        let p = build_path(1).unwrap();
        let s = LampState::from_labels(&p, &["v1"], "v1").unwrap();
        assert!(hamming_coordinates(&p, &s).unwrap().is_empty());
        let origin = LampState::dark(&p, 0).unwrap();
        let f = |s: &LampState| embed_lamp_tree_to_hamming(&p, 0, s).unwrap();
        assert_eq!(f(&origin).distance(&f(&s)), 2);
        assert_eq!(lamp_distance_tree(&p, &origin, &s), Ok(2));
    }

    #[test]
    fn keys_on_a_path() {
        let p = build_path(3).unwrap();
        let s = LampState::from_labels(&p, &["v0", "v3"], "v1").unwrap();
        let keys: Vec<_> = hamming_coordinates(&p, &s).unwrap().0.into_iter().collect();
        assert_eq!(keys, vec!["F:0-1|0", "F:1-2|3", "F:2-3|3"]);
    }

    #[test]
    fn support_is_the_reach_set() {
        let p = build_path(6).unwrap();
        for mask in [0b1010011u64, 0b1, 0b1000000, 0b111111] {
            for x in 0..7 {
                let s = LampState { lamps: VertexSet::from_mask(7, mask), pos: x };
                let reach = reach_edge_set(&p, x, &s.lamps).unwrap();
                assert_eq!(hamming_coordinates(&p, &s).unwrap().len(), reach.len());
                let f = embed_lamp_tree_to_hamming(&p, 3, &s).unwrap();
                let path = path_edge_set(&p, 3, x).unwrap();
                assert_eq!(f.len(), reach.len() + path.len() + s.lamps.len());
            }
        }
    }
}
