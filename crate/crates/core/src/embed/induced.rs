use num_rational::Ratio;

use crate::distortion::{BoundedMap, Constant, Measure};
use crate::error::{Error, Result};
use crate::graph::{attach_copies, Graph, PointedGraph};
use crate::lamplighter::{lamp_distance, lamp_distance_tree, LampState};
use crate::sets::VertexSet;
use crate::tsp::TspInstance;

/// A vertex map `f: G → H` with bounds `a·d_G ≤ d_H(f(·), f(·)) ≤ b·d_G`.
#[derive(Debug, Clone)]
pub struct VertexMap {
    pub source: Graph,
    pub target: Graph,
    pub images: Vec<usize>,
    pub a: Ratio<u64>,
    pub b: Ratio<u64>,
}

impl VertexMap {
    /// Checks the claimed bounds on every pair of source vertices.
    pub fn new(source: Graph, target: Graph, images: Vec<usize>, a: Ratio<u64>, b: Ratio<u64>) -> Result<Self> {
        let map = Self::unchecked(source, target, images, a, b)?;
        let (lo, hi) = map.measured_bounds();
        if lo < a || hi > b {
            return Err(Error::PreconditionViolation(format!(
                "vertex map has ratios in [{lo}, {hi}], outside the claimed [{a}, {b}]"
            )));
        }
        Ok(map)
    }

    /// Uses the best constants the map actually attains.
    pub fn with_measured_bounds(source: Graph, target: Graph, images: Vec<usize>) -> Result<Self> {
        let mut map = Self::unchecked(source, target, images, Ratio::from_integer(0), Ratio::from_integer(0))?;
        (map.a, map.b) = map.measured_bounds();
        Ok(map)
    }

    fn unchecked(source: Graph, target: Graph, images: Vec<usize>, a: Ratio<u64>, b: Ratio<u64>) -> Result<Self> {
        source.require_connected()?;
        target.require_connected()?;
        if images.len() != source.order() {
            return Err(Error::invalid("one image per source vertex is required"));
        }
        for &y in &images {
            target.check_vertex(y)?;
        }
        if a > b {
            return Err(Error::invalid("lower bound exceeds upper bound"));
        }
        Ok(VertexMap { source, target, images, a, b })
    }

    /// `(min, max)` of `d_H / d_G` over distinct pairs; `(1, 1)` on one vertex.
    fn measured_bounds(&self) -> (Ratio<u64>, Ratio<u64>) {
        let n = self.source.order();
        let ratios = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| {
            Ratio::new(
                self.target.d(self.images[i], self.images[j]) as u64,
                self.source.d(i, j) as u64,
            )
        });
        ratios.fold(None, |acc: Option<(Ratio<u64>, Ratio<u64>)>, r| match acc {
            None => Some((r, r)),
            Some((lo, hi)) => Some((lo.min(r), hi.max(r))),
        })
        .unwrap_or((Ratio::from_integer(1), Ratio::from_integer(1)))
    }

    /// Distinct image vertices, ascending.
    pub fn image_set(&self) -> Vec<usize> {
        let mut out = self.images.clone();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// A lift `La(G) → La(H')` of a vertex map: `(A, x) ↦ (⋃_{y∈A} W_{f(y)}, f(x))`.
///
/// `H'` is `H` itself or `H` with gadget copies attached; `W_{f(y)}` is
/// `{f(y)}`, a path of `m+1` vertices from `f(y)`, or the marked set of
/// the gadget copy at `f(y)`.
#[derive(Debug, Clone)]
pub struct InducedMap {
    pub name: String,
    pub source: Graph,
    pub target: Graph,
    pub images: Vec<usize>,
    /// `witness[x]` is `W_{f(x)}` for each source vertex `x`.
    pub witness: Vec<Vec<usize>>,
    pub lower: Ratio<u64>,
    pub upper: Ratio<u64>,
    /// `tsp_Q(v0, W, v0) + |W|` for gadget lifts.
    pub gadget_cost: Option<u32>,
    target_is_tree: bool,
}

fn one() -> Ratio<u64> {
    Ratio::from_integer(1)
}

impl InducedMap {
    fn assemble(
        name: String,
        f: &VertexMap,
        target: Graph,
        witness: Vec<Vec<usize>>,
        lower: Ratio<u64>,
        upper: Ratio<u64>,
        gadget_cost: Option<u32>,
    ) -> Self {
        InducedMap {
            name,
            source: f.source.clone(),
            target_is_tree: target.is_tree(),
            target,
            images: f.images.clone(),
            witness,
            lower,
            upper,
            gadget_cost,
        }
    }

    /// `f̄(A, x) = (f(A), f(x))` with bounds `(min{1,a}, max{1,b})`.
    pub fn natural(f: &VertexMap) -> Self {
        let witness = f.images.iter().map(|&y| vec![y]).collect();
        Self::assemble(
            "induced-natural".into(),
            f,
            f.target.clone(),
            witness,
            f.a.min(one()),
            f.b.max(one()),
            None,
        )
    }

    /// `f̄_m`: each image lamp becomes the first `m+1` vertices of the
    /// lexicographically least geodesic from `f(y)` to the smallest other
    /// image vertex. Bounds `(min{a, m+1}, max{b, 3m+1})`.
    pub fn with_paths(f: &VertexMap, m: usize) -> Result<Self> {
        if m == 0 {
            let mut map = Self::natural(f);
            map.name = "induced-paths(m=0)".into();
            return Ok(map);
        }
        let limit = (f.a / 2).ceil().to_integer().saturating_sub(1);
        if m as u64 > limit {
            return Err(Error::invalid(format!("m = {m} exceeds ceil(a/2) - 1 = {limit}")));
        }
        let distinct = f.image_set();
        if distinct.len() < 2 {
            return Err(Error::invalid("path witnesses need at least two image vertices"));
        }
        let mut owner = vec![usize::MAX; f.target.order()];
        let mut by_image = std::collections::HashMap::new();
        for &y in &distinct {
            let z = *distinct.iter().find(|&&z| z != y).expect("two distinct images");
            let path = f.target.geodesic(y, z)?;
            if path.len() <= m {
                return Err(Error::PreconditionViolation(format!("image vertices {y} and {z} are closer than m")));
            }
            let w = path[..=m].to_vec();
            for &u in &w {
                if owner[u] != usize::MAX {
                    return Err(Error::PreconditionViolation(format!(
                        "witness paths of {} and {y} share vertex {u}",
                        owner[u]
                    )));
                }
                owner[u] = y;
            }
            by_image.insert(y, w);
        }
        let witness = f.images.iter().map(|y| by_image[y].clone()).collect();
        let m64 = m as u64;
        Ok(Self::assemble(
            format!("induced-paths(m={m})"),
            f,
            f.target.clone(),
            witness,
            f.a.min(Ratio::from_integer(m64 + 1)),
            f.b.max(Ratio::from_integer(3 * m64 + 1)),
            None,
        ))
    }

    /// `f̃`: a copy of `Q` is glued to `H` at every image vertex and each image
    /// lamp becomes the copy of `W`. Bounds `(min{a,c}, max{b,c})` with
    /// `c = tsp_Q(v0, W, v0) + |W|`.
    pub fn with_gadget(f: &VertexMap, gadget: &PointedGraph, w: &VertexSet) -> Result<Self> {
        let q = &gadget.graph;
        if w.universe() != q.order() {
            return Err(Error::invalid("witness set is over a different vertex universe"));
        }
        if !w.contains(gadget.basepoint) {
            return Err(Error::invalid("witness set must contain the gadget basepoint"));
        }
        let c = witness_cost(gadget, w)?;
        let anchors = f.image_set();
        let attached = attach_copies(&f.target, &anchors, gadget)?;
        let witness = f
            .images
            .iter()
            .map(|y| {
                let copy = &attached.copies[anchors.binary_search(y).expect("anchor present")];
                w.iter().map(|v| copy[v]).collect()
            })
            .collect();
        let cr = Ratio::from_integer(c as u64);
        Ok(Self::assemble(
            format!("induced-gadget(c={c})"),
            f,
            attached.graph,
            witness,
            f.a.min(cr),
            f.b.max(cr),
            Some(c),
        ))
    }

    pub fn point(&self, state: &LampState) -> Result<LampState> {
        self.source.check_vertex(state.pos)?;
        if state.lamps.universe() != self.source.order() {
            return Err(Error::invalid("lamp set is over a different vertex universe"));
        }
        let mut lamps = self.target.empty_vertex_set();
        for y in state.lamps.iter() {
            for &u in &self.witness[y] {
                lamps.insert(u);
            }
        }
        Ok(LampState { lamps, pos: self.images[state.pos] })
    }

    pub fn target_lamp_distance(&self, u: &LampState, v: &LampState) -> Result<u32> {
        if self.target_is_tree {
            lamp_distance_tree(&self.target, u, v)
        } else {
            lamp_distance(&self.target, u, v)
        }
    }
}

impl BoundedMap for InducedMap {
    type Point = LampState;
    type Image = LampState;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn bounds(&self) -> (Constant, Constant) {
        (Constant::Exact(self.lower), Constant::Exact(self.upper))
    }

    fn apply(&self, state: &LampState) -> Result<LampState> {
        self.point(state)
    }

    fn source_distance(&self, p: &LampState, q: &LampState) -> Result<Measure> {
        Ok(Measure::Int(lamp_distance(&self.source, p, q)? as u64))
    }

    fn target_distance(&self, u: &LampState, v: &LampState) -> Result<Measure> {
        Ok(Measure::Int(self.target_lamp_distance(u, v)? as u64))
    }

    fn label(&self, state: &LampState) -> String {
        state.label(&self.source)
    }
}

/// `tsp_Q(v0, W, v0) + |W|`.
fn witness_cost(gadget: &PointedGraph, w: &VertexSet) -> Result<u32> {
    let v0 = gadget.basepoint;
    Ok(TspInstance::new(&gadget.graph, v0, w.clone(), v0)?.solve(&gadget.graph)? + w.len() as u32)
}

/// A witness set `W ∋ v0` of a gadget together with its cost history.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSet {
    pub set: VertexSet,
    /// Final `c = tsp_Q(v0, W, v0) + |W|`.
    pub cost: u32,
    /// `c` after each step, starting from `W = {v0}`.
    pub trace: Vec<u32>,
}

/// Grows `W` from `{v0}` by repeatedly adding the smallest-index vertex
/// adjacent to `W` until `c ≥ a`; requires `b - a ≥ 2` and `|V(Q)| ≥ b`.
pub fn grow_witness_set(gadget: &PointedGraph, a: u32, b: u32) -> Result<WitnessSet> {
    let q = &gadget.graph;
    if b < a + 2 {
        return Err(Error::invalid(format!("need b - a >= 2, got a = {a}, b = {b}")));
    }
    if (q.order() as u64) < b as u64 {
        return Err(Error::invalid(format!("gadget has {} vertices, fewer than b = {b}", q.order())));
    }
    q.require_connected()?;
    let mut set = VertexSet::from_indices(q.order(), [gadget.basepoint]);
    let mut cost = witness_cost(gadget, &set)?;
    let mut trace = vec![cost];
    while cost < a {
        let next = (0..q.order())
            .find(|&v| !set.contains(v) && q.neighbors(v).any(|u| set.contains(u)))
            .ok_or_else(|| Error::invalid("gadget exhausted before reaching a"))?;
        set.insert(next);
        cost = witness_cost(gadget, &set)?;
        trace.push(cost);
    }
    if cost > b {
        return Err(Error::PreconditionViolation(format!("witness cost jumped past b: {cost} > {b}")));
    }
    Ok(WitnessSet { set, cost, trace })
}
