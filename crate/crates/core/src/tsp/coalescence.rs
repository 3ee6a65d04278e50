use super::generic::all_subsets;
use super::TspInstance;
use crate::error::{Error, Result};
use crate::graph::{Coalescence, PointedGraph};
use crate::sets::VertexSet;

/// Largest `|C ∩ V_i|` accepted on either side.
pub const COALESCENCE_SIDE_CAP: usize = 12;

fn side_tsp(side: &PointedGraph, x: usize, targets: &[usize], y: usize) -> Result<u32> {
    let g = &side.graph;
    let set = VertexSet::from_indices(g.order(), targets.iter().copied());
    TspInstance::new(g, x, set, y)?.solve(g)
}

/// `tsp(x, C, y)` on `G1 * G2` from instances on `G1` and `G2`.
///
/// Same-side instances are solved on that side; crossing instances split at
/// the glued vertex; a same-side instance with targets on the far side pays a
/// round trip there and distributes the near targets between the legs before
/// and after it.
pub fn tsp_coalescence(co: &Coalescence, x: usize, targets: &VertexSet, y: usize) -> Result<u32> {
    let merged = &co.graph.graph;
    merged.check_vertex(x)?;
    merged.check_vertex(y)?;
    if targets.universe() != merged.order() {
        return Err(Error::invalid("target set is over a different vertex universe"));
    }
    let c1: Vec<usize> = targets.iter().filter_map(|v| co.to_first(v)).collect();
    let c2: Vec<usize> = targets.iter().filter_map(|v| co.to_second(v)).collect();
    for part in [&c1, &c2] {
        if part.len() > COALESCENCE_SIDE_CAP {
            return Err(Error::too_large("targets on one side", part.len(), COALESCENCE_SIDE_CAP));
        }
    }
    let far1 = targets.iter().any(|v| !co.in_second(v));
    let far2 = targets.iter().any(|v| !co.in_first(v));
    let (b1, b2) = (co.first.basepoint, co.second.basepoint);

    match (co.to_first(x), co.to_first(y), co.to_second(x), co.to_second(y)) {
        (Some(x1), Some(y1), _, _) if !far2 => side_tsp(&co.first, x1, &c1, y1),
        (_, _, Some(x2), Some(y2)) if !far1 => side_tsp(&co.second, x2, &c2, y2),
        (Some(x1), _, _, Some(y2)) => Ok(side_tsp(&co.first, x1, &c1, b1)? + side_tsp(&co.second, b2, &c2, y2)?),
        (_, Some(y1), Some(x2), _) => Ok(side_tsp(&co.second, x2, &c2, b2)? + side_tsp(&co.first, b1, &c1, y1)?),
        (Some(x1), Some(y1), _, _) => detour(&co.first, x1, &c1, y1, side_tsp(&co.second, b2, &c2, b2)?),
        (_, _, Some(x2), Some(y2)) => detour(&co.second, x2, &c2, y2, side_tsp(&co.first, b1, &c1, b1)?),
        _ => unreachable!("every vertex lies on at least one side"),
    }
}

/// `min over C' ⊔ C'' = near of tsp(x, C', v0) + excursion + tsp(v0, C'', y)`.
fn detour(near: &PointedGraph, x: usize, targets: &[usize], y: usize, excursion: u32) -> Result<u32> {
    let g = &near.graph;
    let v0 = near.basepoint;
    let before = all_subsets(g, x, targets, v0);
    // tsp(v0, S, y) = tsp(y, S, v0) by reversing walks.
    let after = all_subsets(g, y, targets, v0);
    let full = before.len() - 1;
    Ok((0..before.len())
        .map(|mask| before[mask] + after[full ^ mask])
        .min()
        .expect("at least the empty split")
        + excursion)
}
