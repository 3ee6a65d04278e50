// Held-Karp over pairwise shortest-path distances.
//
// An optimal visiting walk splits at its first visits of the required
// vertices into geodesic segments, so it is enough to order the stops:
// dp[S][i] is the shortest x -> ... -> c_i route visiting exactly the stops
// in S and ending at c_i.

use super::interior_targets;
use crate::error::{Error, Result};
use crate::graph::{Graph, Walk, UNREACHABLE};
use crate::sets::VertexSet;

/// Largest number of interior stops the subset DP accepts.
pub const HELD_KARP_CAP: usize = 15;

const INF: u32 = u32::MAX;

struct Table {
    stops: Vec<usize>,
    dp: Vec<u32>,
}

fn prepare(graph: &Graph, x: usize, targets: &VertexSet, y: usize) -> Result<Vec<usize>> {
    graph.check_vertex(x)?;
    graph.check_vertex(y)?;
    if targets.universe() != graph.order() {
        return Err(Error::invalid("target set is over a different vertex universe"));
    }
    let stops = interior_targets(targets, x, y);
    if stops.len() > HELD_KARP_CAP {
        return Err(Error::too_large("targets", stops.len(), HELD_KARP_CAP));
    }
    let row = graph.distance_row(x);
    if row[y] == UNREACHABLE || stops.iter().any(|&c| row[c] == UNREACHABLE) {
        return Err(Error::NotConnected);
    }
    Ok(stops)
}

fn fill(graph: &Graph, x: usize, stops: Vec<usize>) -> Table {
    let m = stops.len();
    let mut dp = vec![INF; (1 << m) * m];
    let from_x = graph.distance_row(x);
    for (i, &c) in stops.iter().enumerate() {
        dp[(1 << i) * m + i] = from_x[c];
    }
    for mask in 1usize..1 << m {
        for last in 0..m {
            let cur = dp[mask * m + last];
            if cur == INF {
                continue;
            }
            let row = graph.distance_row(stops[last]);
            for next in 0..m {
                if mask >> next & 1 == 1 {
                    continue;
                }
                let slot = &mut dp[(mask | 1 << next) * m + next];
                let cand = cur + row[stops[next]];
                if cand < *slot {
                    *slot = cand;
                }
            }
        }
    }
    Table { stops, dp }
}

fn best_end(graph: &Graph, table: &Table, y: usize) -> (u32, usize) {
    let m = table.stops.len();
    let full = (1 << m) - 1;
    (0..m)
        .map(|last| (table.dp[full * m + last] + graph.d(table.stops[last], y), last))
        .min()
        .expect("at least one stop")
}

/// `tsp_G(x, S, y)` for every subset `S` of `stops`, indexed by bitmask.
pub(crate) fn all_subsets(graph: &Graph, x: usize, stops: &[usize], y: usize) -> Vec<u32> {
    let m = stops.len();
    let table = fill(graph, x, stops.to_vec());
    let mut out = vec![graph.d(x, y); 1 << m];
    for (mask, slot) in out.iter_mut().enumerate().skip(1) {
        *slot = (0..m)
            .filter(|&last| mask >> last & 1 == 1)
            .map(|last| table.dp[mask * m + last] + graph.d(stops[last], y))
            .min()
            .expect("non-empty mask");
    }
    out
}

/// `tsp_G(x, C, y)` on any connected graph, exact, for up to
/// [`HELD_KARP_CAP`] targets other than `x` and `y`.
pub fn tsp_generic(graph: &Graph, x: usize, targets: &VertexSet, y: usize) -> Result<u32> {
    let stops = prepare(graph, x, targets, y)?;
    if stops.is_empty() {
        return Ok(graph.d(x, y));
    }
    let table = fill(graph, x, stops);
    Ok(best_end(graph, &table, y).0)
}

/// Like [`tsp_generic`] and also returns an optimal walk, built from
/// lexicographically least geodesics between consecutive stops.
pub fn tsp_generic_walk(graph: &Graph, x: usize, targets: &VertexSet, y: usize) -> Result<(u32, Walk)> {
    let stops = prepare(graph, x, targets, y)?;
    let mut order = Vec::with_capacity(stops.len());
    let length = if stops.is_empty() {
        graph.d(x, y)
    } else {
        let table = fill(graph, x, stops);
        let m = table.stops.len();
        let (length, mut last) = best_end(graph, &table, y);
        let mut mask = (1usize << m) - 1;
        loop {
            order.push(table.stops[last]);
            let here = table.dp[mask * m + last];
            let prev_mask = mask & !(1 << last);
            if prev_mask == 0 {
                break;
            }
            last = (0..m)
                .find(|&p| {
                    prev_mask >> p & 1 == 1
                        && table.dp[prev_mask * m + p] != INF
                        && table.dp[prev_mask * m + p] + graph.d(table.stops[p], table.stops[last]) == here
                })
                .expect("Held-Karp predecessor exists");
            mask = prev_mask;
        }
        order.reverse();
        length
    };
    let mut vertices = vec![x];
    let mut cur = x;
    for next in order.into_iter().chain(std::iter::once(y)) {
        vertices.extend(graph.geodesic(cur, next)?.into_iter().skip(1));
        cur = next;
    }
    debug_assert_eq!(vertices.len() - 1, length as usize);
    Ok((length, Walk::trusted(vertices)))
}
