use crate::distortion::{BoundedMap, Constant, Measure};
use crate::error::{Error, Result};
use crate::graph::{build_clover, coalesce, Clover, Coalescence, PointedGraph};
use crate::lamplighter::{lamp_distance, LampState};
use crate::sets::VertexSet;

/// Largest `|G_i|` for which `Clo(G_j, 2^{|G_i|})` is built.
pub const MAX_CLOVER_EXPONENT: usize = 10;

/// Image of `(A, x)` in `La(G1) □ La(G2) □ Clo(G1, 2^|G2|) □ Clo(G2, 2^|G1|)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalescenceImage {
    pub first: LampState,
    pub second: LampState,
    /// Vertex of `Clo(G1, 2^|G2|)`.
    pub clover_first: usize,
    /// Vertex of `Clo(G2, 2^|G1|)`.
    pub clover_second: usize,
}

/// `La(G1 * G2)` into the four-factor product; claimed bounds `(1, 2)`.
///
/// Copy `S` of `Clo(G1, 2^|G2|)` is the copy numbered by the bitmask of
/// `S ⊆ V(G2)` over `G2`'s own vertex indices, and symmetrically.
#[derive(Debug, Clone)]
pub struct CoalescenceEmbedding {
    pub coalescence: Coalescence,
    pub clover_first: Clover,
    pub clover_second: Clover,
}

impl CoalescenceEmbedding {
    pub fn new(first: &PointedGraph, second: &PointedGraph) -> Result<Self> {
        for g in [first, second] {
            if g.graph.order() > MAX_CLOVER_EXPONENT {
                return Err(Error::too_large("coalesced component order", g.graph.order(), MAX_CLOVER_EXPONENT));
            }
        }
        let coalescence = coalesce(first, second)?;
        Ok(CoalescenceEmbedding {
            clover_first: build_clover(first, 1 << second.graph.order())?,
            clover_second: build_clover(second, 1 << first.graph.order())?,
            coalescence,
        })
    }

    pub fn point(&self, state: &LampState) -> Result<CoalescenceImage> {
        let co = &self.coalescence;
        let merged = &co.graph.graph;
        merged.check_vertex(state.pos)?;
        if state.lamps.universe() != merged.order() {
            return Err(Error::invalid("lamp set is over a different vertex universe"));
        }
        let (g1, g2) = (&co.first, &co.second);
        let a1 = VertexSet::from_indices(g1.graph.order(), state.lamps.iter().filter_map(|v| co.to_first(v)));
        let a2 = VertexSet::from_indices(g2.graph.order(), state.lamps.iter().filter_map(|v| co.to_second(v)));
        let x = state.pos;
        Ok(match co.to_first(x) {
            Some(x1) => CoalescenceImage {
                clover_first: self.clover_first.vertex(a2.to_mask() as usize, x1),
                clover_second: g2.basepoint,
                first: LampState { lamps: a1, pos: x1 },
                second: LampState { lamps: a2, pos: g2.basepoint },
            },
            None => {
                let x2 = co.to_second(x).expect("vertex lies on one side");
                CoalescenceImage {
                    clover_first: g1.basepoint,
                    clover_second: self.clover_second.vertex(a1.to_mask() as usize, x2),
                    first: LampState { lamps: a1, pos: g1.basepoint },
                    second: LampState { lamps: a2, pos: x2 },
                }
            }
        })
    }

    /// Distance in the Cartesian product of the four factors.
    pub fn product_distance(&self, u: &CoalescenceImage, v: &CoalescenceImage) -> Result<u64> {
        let co = &self.coalescence;
        Ok(lamp_distance(&co.first.graph, &u.first, &v.first)? as u64
            + lamp_distance(&co.second.graph, &u.second, &v.second)? as u64
            + self.clover_first.graph.graph.dist(u.clover_first, v.clover_first)? as u64
            + self.clover_second.graph.graph.dist(u.clover_second, v.clover_second)? as u64)
    }
}

/// The four-factor image of one state of `La(G1 * G2)`.
pub fn coalescence_embedding(first: &PointedGraph, second: &PointedGraph, state: &LampState) -> Result<CoalescenceImage> {
    CoalescenceEmbedding::new(first, second)?.point(state)
}

impl BoundedMap for CoalescenceEmbedding {
    type Point = LampState;
    type Image = CoalescenceImage;

    fn name(&self) -> String {
        format!(
            "coalescence(|G1|={}, |G2|={})",
            self.coalescence.first.graph.order(),
            self.coalescence.second.graph.order()
        )
    }

    fn bounds(&self) -> (Constant, Constant) {
        (Constant::int(1), Constant::int(2))
    }

    fn apply(&self, state: &LampState) -> Result<CoalescenceImage> {
        self.point(state)
    }

    fn source_distance(&self, p: &LampState, q: &LampState) -> Result<Measure> {
        Ok(Measure::Int(lamp_distance(&self.coalescence.graph.graph, p, q)? as u64))
    }

    fn target_distance(&self, u: &CoalescenceImage, v: &CoalescenceImage) -> Result<Measure> {
        Ok(Measure::Int(self.product_distance(u, v)?))
    }

    fn label(&self, state: &LampState) -> String {
        state.label(&self.coalescence.graph.graph)
    }
}
