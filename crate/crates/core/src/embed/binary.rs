use num_bigint::BigUint;
use num_rational::Ratio;

use super::induced::{grow_witness_set, InducedMap, VertexMap, WitnessSet};
use crate::distortion::{BoundedMap, Constant, Measure};
use crate::error::{Error, Result};
use crate::graph::{build_binary_tree, build_complete, build_path, BinaryTreeVertex, Graph, PointedGraph};
use crate::lamplighter::{lamp_distance, lamp_distance_tree, LampState};
use crate::sets::VertexSet;

/// Largest `n` accepted by [`binary_parameters`].
const MAX_BINARY_HEIGHT: usize = 20;

/// `f(ε) = ({v_{s-1} : ε_s = 1}, v_{|ε|})` in `La(P_k)`.
pub fn embed_binary_tree_to_lamp_path(k: usize, word: &BinaryTreeVertex) -> Result<LampState> {
    if word.len() > k {
        return Err(Error::invalid(format!("word of length {} does not fit in B_{k}", word.len())));
    }
    let lamps = VertexSet::from_indices(
        k + 1,
        word.bits().iter().enumerate().filter(|(_, &b)| b).map(|(s, _)| s),
    );
    Ok(LampState { lamps, pos: word.len() })
}

/// `B_k → La(P_k)` with bounds `(1, 2)`.
#[derive(Debug, Clone)]
pub struct BinaryToLampPath {
    pub k: usize,
    pub path: Graph,
}

impl BinaryToLampPath {
    pub fn new(k: usize) -> Result<Self> {
        Ok(BinaryToLampPath { k, path: build_path(k)? })
    }

    /// Every word of length at most `k`, in level order.
    pub fn domain(&self) -> Vec<BinaryTreeVertex> {
        (0..(1usize << (self.k + 1)) - 1).map(BinaryTreeVertex::from_index).collect()
    }
}

impl BoundedMap for BinaryToLampPath {
    type Point = BinaryTreeVertex;
    type Image = LampState;

    fn name(&self) -> String {
        format!("binary-tree-to-lamp-path(k={})", self.k)
    }

    fn bounds(&self) -> (Constant, Constant) {
        (Constant::int(1), Constant::int(2))
    }

    fn apply(&self, word: &BinaryTreeVertex) -> Result<LampState> {
        embed_binary_tree_to_lamp_path(self.k, word)
    }

    fn source_distance(&self, p: &BinaryTreeVertex, q: &BinaryTreeVertex) -> Result<Measure> {
        Ok(Measure::Int(p.distance(q) as u64))
    }

    fn target_distance(&self, u: &LampState, v: &LampState) -> Result<Measure> {
        Ok(Measure::Int(lamp_distance_tree(&self.path, u, v)? as u64))
    }

    fn label(&self, word: &BinaryTreeVertex) -> String {
        word.label()
    }
}

/// `f(I) = (V_I, v0)` in `La(K_{km})`, where `V_i = {v_{(i-1)m}, ..., v_{im-1}}`
/// and `I ⊆ {1..k}`.
pub fn embed_hamming_to_lamp_complete(k: usize, m: usize, coords: &[usize]) -> Result<LampState> {
    if k == 0 || m == 0 {
        return Err(Error::invalid("k and m must be positive"));
    }
    let mut lamps = VertexSet::empty(k * m);
    for &i in coords {
        if !(1..=k).contains(&i) {
            return Err(Error::invalid(format!("coordinate {i} is outside 1..={k}")));
        }
        for v in (i - 1) * m..i * m {
            lamps.insert(v);
        }
    }
    Ok(LampState { lamps, pos: 0 })
}

/// `H_k → La(K_{km})`; points are coordinate masks, bit `i-1` standing for `i`.
///
/// Distances satisfy `2m·d ≤ d_La ≤ 2m·d + 1`, so the multiplicative bounds
/// are `(2m, 2m+1)`.
#[derive(Debug, Clone)]
pub struct HammingToLampComplete {
    pub k: usize,
    pub m: usize,
    pub complete: Graph,
}

impl HammingToLampComplete {
    pub fn new(k: usize, m: usize) -> Result<Self> {
        if k == 0 || m == 0 {
            return Err(Error::invalid("k and m must be positive"));
        }
        if k > 16 {
            return Err(Error::too_large("Hamming dimension", k, 16));
        }
        Ok(HammingToLampComplete { k, m, complete: build_complete(k * m)? })
    }

    pub fn domain(&self) -> Vec<u64> {
        (0..1u64 << self.k).collect()
    }

    fn coords(&self, mask: u64) -> Vec<usize> {
        (1..=self.k).filter(|i| mask >> (i - 1) & 1 == 1).collect()
    }
}

impl BoundedMap for HammingToLampComplete {
    type Point = u64;
    type Image = LampState;

    fn name(&self) -> String {
        format!("hamming-to-lamp-complete(k={},m={})", self.k, self.m)
    }

    fn bounds(&self) -> (Constant, Constant) {
        (Constant::int(2 * self.m as u64), Constant::int(2 * self.m as u64 + 1))
    }

    fn apply(&self, mask: &u64) -> Result<LampState> {
        embed_hamming_to_lamp_complete(self.k, self.m, &self.coords(*mask))
    }

    fn source_distance(&self, p: &u64, q: &u64) -> Result<Measure> {
        Ok(Measure::Int((p ^ q).count_ones() as u64))
    }

    fn target_distance(&self, u: &LampState, v: &LampState) -> Result<Measure> {
        Ok(Measure::Int(lamp_distance(&self.complete, u, v)? as u64))
    }

    fn label(&self, mask: &u64) -> String {
        let coords: Vec<String> = self.coords(*mask).iter().map(usize::to_string).collect();
        format!("{{{}}}", coords.join(","))
    }
}

/// Heights for embedding `K_k` into a binary tree with slack `ε`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinaryParameters {
    /// Minimal `s` with `2^s ≥ k`.
    pub s: usize,
    /// `n - s`.
    pub t: usize,
    /// Minimal `n ≥ s` with `n ≥ log2(k)·(1+ε)/ε`.
    pub n: usize,
}

impl BinaryParameters {
    /// `(s+t)/(t+1)`, the distortion of the leaf embedding.
    pub fn distortion(&self) -> Ratio<u64> {
        Ratio::new((self.s + self.t) as u64, self.t as u64 + 1)
    }
}

/// Chooses `s`, `t` and `n = s + t` for slack `ε = p/q > 0`.
///
/// `n ≥ log2(k)·(1+ε)/ε` is decided exactly as `2^{np} ≥ k^{p+q}`.
pub fn binary_parameters(k: usize, epsilon: Ratio<u64>) -> Result<BinaryParameters> {
    if k == 0 {
        return Err(Error::invalid("k must be positive"));
    }
    if *epsilon.numer() == 0 {
        return Err(Error::invalid("slack must be positive"));
    }
    let (p, q) = (*epsilon.numer(), *epsilon.denom());
    if p + q > 1 << 16 {
        return Err(Error::invalid("slack numerator and denominator are too large"));
    }
    let s = (usize::BITS - (k - 1).leading_zeros()) as usize;
    let s = if k == 1 { 0 } else { s };
    let rhs = BigUint::from(k).pow((p + q) as u32);
    let mut n = s;
    while BigUint::from(2u32).pow((n as u64 * p) as u32) < rhs {
        n += 1;
        if n > MAX_BINARY_HEIGHT {
            return Err(Error::too_large("binary tree height", n, MAX_BINARY_HEIGHT));
        }
    }
    Ok(BinaryParameters { s, t: n - s, n })
}

/// `K_k → B_n`: vertex `c` goes to the leaf `bin_s(c) ++ 0^t`.
/// Image distances lie in `[2t+2, 2(s+t)]`.
#[derive(Debug, Clone)]
pub struct CompleteToBinary {
    pub k: usize,
    pub params: BinaryParameters,
}

impl CompleteToBinary {
    pub fn new(k: usize, epsilon: Ratio<u64>) -> Result<Self> {
        Ok(CompleteToBinary { k, params: binary_parameters(k, epsilon)? })
    }

    pub fn leaf(&self, c: usize) -> BinaryTreeVertex {
        let BinaryParameters { s, t, .. } = self.params;
        let bits = (0..s).rev().map(|i| c >> i & 1 == 1).chain(std::iter::repeat(false).take(t));
        BinaryTreeVertex::new(bits.collect())
    }

    /// Height of the target tree, at least 1.
    pub fn height(&self) -> usize {
        self.params.n.max(1)
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.k).collect()
    }

    pub fn lower(&self) -> u64 {
        2 * self.params.t as u64 + 2
    }

    pub fn upper(&self) -> u64 {
        2 * (self.params.s + self.params.t) as u64
    }

    /// The map as a [`VertexMap`] between explicit graphs.
    pub fn vertex_map(&self) -> Result<VertexMap> {
        VertexMap::new(
            build_complete(self.k)?,
            build_binary_tree(self.height())?,
            (0..self.k).map(|c| self.leaf(c).index()).collect(),
            Ratio::from_integer(self.lower()),
            Ratio::from_integer(self.upper()),
        )
    }
}

impl BoundedMap for CompleteToBinary {
    type Point = usize;
    type Image = BinaryTreeVertex;

    fn name(&self) -> String {
        format!("complete-to-binary(k={},s={},t={})", self.k, self.params.s, self.params.t)
    }

    fn bounds(&self) -> (Constant, Constant) {
        (Constant::int(self.lower()), Constant::int(self.upper()))
    }

    fn apply(&self, c: &usize) -> Result<BinaryTreeVertex> {
        if *c >= self.k {
            return Err(Error::invalid(format!("vertex {c} is not in K_{}", self.k)));
        }
        Ok(self.leaf(*c))
    }

    fn source_distance(&self, p: &usize, q: &usize) -> Result<Measure> {
        Ok(Measure::Int((p != q) as u64))
    }

    fn target_distance(&self, u: &BinaryTreeVertex, v: &BinaryTreeVertex) -> Result<Measure> {
        Ok(Measure::Int(u.distance(v) as u64))
    }

    fn label(&self, c: &usize) -> String {
        format!("v{c}")
    }
}

/// [`CompleteToBinary`] with slack `ε`.
pub fn embed_complete_to_binary(k: usize, epsilon: Ratio<u64>) -> Result<CompleteToBinary> {
    CompleteToBinary::new(k, epsilon)
}

/// [`LampCompleteToLampBinary`] with slack `ε`.
pub fn embed_lamp_complete_to_lamp_binary(k: usize, epsilon: Ratio<u64>) -> Result<LampCompleteToLampBinary> {
    LampCompleteToLampBinary::new(k, epsilon)
}

/// `La(K_k) → La(B_N)`.
///
/// For `k ≤ 2` this is the isometry induced by `K_k ⊂ B_k`. Otherwise a copy
/// of `B_r` (`2^r > 2(s+t)`) hangs below each leaf `ℓ_c` of [`CompleteToBinary`],
/// a witness set `W ⊆ B_r` with cost in `[2t+2, 2(s+t)]` is grown, and
/// `(A, x) ↦ ({ℓ_c ++ w : c ∈ A, w ∈ W}, ℓ_x)` in `B_{n+r}`.
#[derive(Debug, Clone)]
pub struct LampCompleteToLampBinary {
    pub k: usize,
    pub complete: Graph,
    /// `B_N`.
    pub target: Graph,
    /// `None` for the isometric case.
    pub inner: Option<CompleteToBinary>,
    pub r: usize,
    pub witness: Option<WitnessSet>,
    images: Vec<usize>,
    lamp_images: Vec<Vec<usize>>,
}

impl LampCompleteToLampBinary {
    pub fn new(k: usize, epsilon: Ratio<u64>) -> Result<Self> {
        if k == 0 {
            return Err(Error::invalid("k must be positive"));
        }
        if *epsilon.numer() == 0 {
            return Err(Error::invalid("slack must be positive"));
        }
        let complete = build_complete(k)?;
        if k <= 2 {
            let images: Vec<usize> = (0..k).map(|c| c).collect();
            return Ok(LampCompleteToLampBinary {
                k,
                complete,
                target: build_binary_tree(k)?,
                inner: None,
                r: 0,
                witness: None,
                lamp_images: images.iter().map(|&y| vec![y]).collect(),
                images,
            });
        }
        let inner = CompleteToBinary::new(k, epsilon)?;
        let (a, b) = (inner.lower(), inner.upper());
        let mut r = 1;
        while 1u64 << r <= b {
            r += 1;
        }
        let n = inner.params.n;
        let gadget = PointedGraph::new(build_binary_tree(r)?, 0)?;
        let witness = grow_witness_set(&gadget, a as u32, b as u32)?;
        let words: Vec<BinaryTreeVertex> = witness.set.iter().map(BinaryTreeVertex::from_index).collect();
        let leaves: Vec<BinaryTreeVertex> = (0..k).map(|c| inner.leaf(c)).collect();
        let lamp_images = leaves
            .iter()
            .map(|leaf| words.iter().map(|w| leaf.concat(w).index()).collect())
            .collect();
        Ok(LampCompleteToLampBinary {
            k,
            complete,
            target: build_binary_tree(n + r)?,
            images: leaves.iter().map(BinaryTreeVertex::index).collect(),
            inner: Some(inner),
            r,
            witness: Some(witness),
            lamp_images,
        })
    }

    /// `N`, the height of the target tree.
    pub fn height(&self) -> usize {
        self.inner.as_ref().map_or(self.k, |i| i.params.n + self.r)
    }

    /// The same map assembled as the gadget lift of [`CompleteToBinary`] over
    /// `B_n` with copies of `B_r` attached at the leaves.
    pub fn gadget_route(&self) -> Result<InducedMap> {
        match (&self.inner, &self.witness) {
            (Some(inner), Some(w)) => {
                let gadget = PointedGraph::new(build_binary_tree(self.r)?, 0)?;
                InducedMap::with_gadget(&inner.vertex_map()?, &gadget, &w.set)
            }
            _ => {
                let one = Ratio::from_integer(1);
                let f = VertexMap::new(self.complete.clone(), self.target.clone(), self.images.clone(), one, one)?;
                Ok(InducedMap::natural(&f))
            }
        }
    }

    pub fn point(&self, state: &LampState) -> Result<LampState> {
        self.complete.check_vertex(state.pos)?;
        if state.lamps.universe() != self.k {
            return Err(Error::invalid("lamp set is over a different vertex universe"));
        }
        let mut lamps = self.target.empty_vertex_set();
        for c in state.lamps.iter() {
            for &u in &self.lamp_images[c] {
                lamps.insert(u);
            }
        }
        Ok(LampState { lamps, pos: self.images[state.pos] })
    }
}

impl BoundedMap for LampCompleteToLampBinary {
    type Point = LampState;
    type Image = LampState;

    fn name(&self) -> String {
        format!("lamp-complete-to-lamp-binary(k={},N={})", self.k, self.height())
    }

    fn bounds(&self) -> (Constant, Constant) {
        match &self.inner {
            Some(inner) => (Constant::int(inner.lower()), Constant::int(inner.upper())),
            None => (Constant::int(1), Constant::int(1)),
        }
    }

    fn apply(&self, state: &LampState) -> Result<LampState> {
        self.point(state)
    }

    fn source_distance(&self, p: &LampState, q: &LampState) -> Result<Measure> {
        Ok(Measure::Int(lamp_distance(&self.complete, p, q)? as u64))
    }

    fn target_distance(&self, u: &LampState, v: &LampState) -> Result<Measure> {
        Ok(Measure::Int(lamp_distance_tree(&self.target, u, v)? as u64))
    }

    fn label(&self, state: &LampState) -> String {
        state.label(&self.complete)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distortion::{certify, enumerate_lamp_states, Mode};

    fn word(w: &str) -> BinaryTreeVertex {
        BinaryTreeVertex::parse(w).unwrap()
    }

    #[test]
    fn short_words_into_lamp_path() {
        let map = BinaryToLampPath::new(3).unwrap();
        let root = map.apply(&BinaryTreeVertex::root()).unwrap();
        assert_eq!(root, LampState::dark(&map.path, 0).unwrap());
        let one = map.apply(&word("1")).unwrap();
        assert_eq!(one.label(&map.path), "{v0}@v1");
        assert_eq!(map.target_distance(&root, &one).unwrap(), Measure::Int(2));
        let zero = map.apply(&word("0")).unwrap();
        assert_eq!(zero.label(&map.path), "{}@v1");
        assert_eq!(map.target_distance(&root, &zero).unwrap(), Measure::Int(1));
        assert!(embed_binary_tree_to_lamp_path(2, &word("010")).is_err());
    }

    #[test]
    fn hamming_into_lamp_complete_examples() {
        let map = HammingToLampComplete::new(2, 2).unwrap();
        let empty = map.apply(&0).unwrap();
        let first = map.apply(&0b01).unwrap();
        let second = map.apply(&0b10).unwrap();
        assert_eq!(map.target_distance(&empty, &first).unwrap(), Measure::Int(4));
        assert_eq!(map.target_distance(&empty, &second).unwrap(), Measure::Int(5));
        assert_eq!(map.label(&0b11), "{1,2}");
    }

    #[test]
    fn parameters() {
        let one = Ratio::from_integer(1);
        assert_eq!(binary_parameters(3, one).unwrap(), BinaryParameters { s: 2, t: 2, n: 4 });
        assert_eq!(binary_parameters(4, Ratio::new(1, 2)).unwrap(), BinaryParameters { s: 2, t: 4, n: 6 });
        assert_eq!(binary_parameters(1, one).unwrap(), BinaryParameters { s: 0, t: 0, n: 0 });
        assert_eq!(binary_parameters(5, one).unwrap().s, 3);
        assert!(binary_parameters(3, Ratio::new(1, 1000)).is_err());
        assert!(binary_parameters(3, Ratio::from_integer(0)).is_err());
    }

    #[test]
    fn leaves_of_k3() {
        let map = CompleteToBinary::new(3, Ratio::from_integer(1)).unwrap();
        let labels: Vec<String> = (0..3).map(|c| map.leaf(c).label()).collect();
        assert_eq!(labels, ["0000", "0100", "1000"]);
        assert_eq!((map.lower(), map.upper()), (6, 8));
        assert!(map.vertex_map().is_ok());
    }

    #[test]
    fn lamp_complete_small_cases() {
        let map = LampCompleteToLampBinary::new(3, Ratio::from_integer(1)).unwrap();
        assert_eq!((map.r, map.height()), (4, 8));
        let w = map.witness.as_ref().unwrap();
        let words: Vec<String> = w.set.iter().map(|i| BinaryTreeVertex::from_index(i).label()).collect();
        assert_eq!(words, ["e", "0", "1"]);
        assert_eq!(w.cost, 7);

        let iso = LampCompleteToLampBinary::new(2, Ratio::from_integer(1)).unwrap();
        let domain = enumerate_lamp_states(&iso.complete).unwrap();
        let report = certify(&iso, &domain, Mode::Exhaustive, None).unwrap();
        assert!(report.passed);
        assert_eq!(report.distortion, Some(Constant::int(1)));
    }
}
