use crate::distortion::{BoundedMap, Constant, Measure};
use crate::error::{Error, Result};
use crate::graph::{build_path, BinaryTreeVertex, Graph};
use crate::lamplighter::{lamp_distance_tree, LampState};

/// `f(A, v_m) = ((ε_i)_{i=1..m}, (ε_{k+1-i})_{i=0..k-m})` in `B_{k+1} □ B_{k+1}`,
/// where `ε_i = 1` iff `v_{i-1} ∈ A`.
pub fn embed_lamp_path_to_trees(k: usize, state: &LampState) -> Result<(BinaryTreeVertex, BinaryTreeVertex)> {
    if state.lamps.universe() != k + 1 || state.pos > k {
        return Err(Error::invalid(format!("state is not a vertex of La(P_{k})")));
    }
    let eps = |i: usize| state.lamps.contains(i - 1);
    let m = state.pos;
    let left = (1..=m).map(eps).collect();
    let right = (0..=k - m).map(|i| eps(k + 1 - i)).collect();
    Ok((BinaryTreeVertex::new(left), BinaryTreeVertex::new(right)))
}

/// `La(P_k) → B_{k+1} □ B_{k+1}`, claimed bounds `(2/3, 2)`.
#[derive(Debug, Clone)]
pub struct PathToTrees {
    pub k: usize,
    pub path: Graph,
}

impl PathToTrees {
    pub fn new(k: usize) -> Result<Self> {
        Ok(PathToTrees { k, path: build_path(k)? })
    }
}

impl BoundedMap for PathToTrees {
    type Point = LampState;
    type Image = (BinaryTreeVertex, BinaryTreeVertex);

    fn name(&self) -> String {
        format!("path-to-trees(k={})", self.k)
    }

    fn bounds(&self) -> (Constant, Constant) {
        (Constant::ratio(2, 3), Constant::int(2))
    }

    fn apply(&self, state: &LampState) -> Result<Self::Image> {
        embed_lamp_path_to_trees(self.k, state)
    }

    fn source_distance(&self, p: &LampState, q: &LampState) -> Result<Measure> {
        Ok(Measure::Int(lamp_distance_tree(&self.path, p, q)? as u64))
    }

    fn target_distance(&self, u: &Self::Image, v: &Self::Image) -> Result<Measure> {
        Ok(Measure::Int((u.0.distance(&v.0) + u.1.distance(&v.1)) as u64))
    }

    fn label(&self, state: &LampState) -> String {
        state.label(&self.path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dark_origin() {
        let p = build_path(3).unwrap();
        let (l, r) = embed_lamp_path_to_trees(3, &LampState::dark(&p, 0).unwrap()).unwrap();
        assert!(l.is_root());
        assert_eq!(r.label(), "0000");
    }

    #[test]
    fn hand_evaluated_point() {
        let p = build_path(2).unwrap();
        let s = LampState::from_labels(&p, &["v0"], "v1").unwrap();
        let (l, r) = embed_lamp_path_to_trees(2, &s).unwrap();
        assert_eq!((l.label(), r.label()), ("1".to_string(), "00".to_string()));
    }

    #[test]
    fn rejects_foreign_states() {
        let p = build_path(4).unwrap();
        assert!(embed_lamp_path_to_trees(3, &LampState::dark(&p, 0).unwrap()).is_err());
    }
}
