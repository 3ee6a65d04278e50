//! The acceptance criteria A1-A10, runnable at two scales.
//!
//! `Full` runs every criterion at its stated size. `Quick` shrinks the
//! sweeps so the whole set finishes in a few seconds.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::distortion::{certify, enumerate_lamp_states, BoundedMap, Constant, DistortionReport, Mode};
use crate::embed::{
    grow_witness_set, BinaryToLampPath, CoalescenceEmbedding, CompleteToBinary, HammingToLampComplete, InducedMap,
    LampCompleteToLampBinary, Norm, PathToTrees, RoseToEuclidean, StarToNormed, TreeToHamming, VertexMap,
};
use crate::error::{Error, Result};
use crate::graph::random::{nonisomorphic_trees, random_connected_graph, random_pointed_graph, random_tree};
use crate::graph::{build_binary_tree, build_complete, build_cycle, build_path, PointedGraph};
use crate::lamplighter::{lamp_distance, LampState, LamplighterGraph};
use crate::sets::VertexSet;
use crate::tsp::{tsp_generic, tsp_tree, tsp_tree_walk};

/// Base seed for every randomized criterion.
pub const SUITE_SEED: u64 = 20_240_611;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            other => Err(Error::invalid(format!("unknown suite level `{other}`"))),
        }
    }
}

/// Result of one criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    /// Measured against claimed values, or the first failure.
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{:<4} {verdict}  {}: {}", self.id, self.title, self.detail)
    }
}

/// A criterion: identifier, title and runner.
pub struct Criterion {
    pub id: &'static str,
    pub title: &'static str,
    run: fn(Level) -> Result<String>,
}

impl Criterion {
    pub fn run(&self, level: Level) -> Outcome {
        let (passed, detail) = match (self.run)(level) {
            Ok(detail) => (true, detail),
            Err(e) => (false, e.to_string()),
        };
        Outcome { id: self.id, title: self.title, passed, detail }
    }
}

/// Every criterion in order.
pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: "A1", title: "tree TSP exactness", run: a1_tree_tsp },
        Criterion { id: "A2", title: "lamplighter metric against BFS", run: a2_lamp_metric },
        Criterion { id: "A3", title: "trees into Hamming cubes", run: a3_tree_hamming },
        Criterion { id: "A4", title: "lamplighter over paths into trees", run: a4_path_trees },
        Criterion { id: "A5", title: "coalescence sandwich", run: a5_coalescence },
        Criterion { id: "A6a", title: "binary tree into lamplighter over a path", run: a6a_binary_path },
        Criterion { id: "A6b", title: "Hamming cube into lamplighter over complete", run: a6b_hamming_complete },
        Criterion { id: "A6c", title: "complete graph into binary tree", run: a6c_complete_binary },
        Criterion { id: "A7", title: "induced maps and witness growth", run: a7_induced },
        Criterion { id: "A8", title: "lamplighter over complete into binary", run: a8_lamp_binary },
        Criterion { id: "A9a", title: "single-cycle polygon distortion", run: a9a_cycle },
        Criterion { id: "A9b", title: "rose into Euclidean space", run: a9b_rose },
        Criterion { id: "A9c", title: "star into l_inf", run: a9c_star },
        Criterion { id: "A10", title: "infinite-dimensional statements", run: a10_not_claimed },
    ]
}

pub fn run_all(level: Level) -> Vec<Outcome> {
    criteria().iter().map(|c| c.run(level)).collect()
}

pub fn find(id: &str) -> Option<Criterion> {
    criteria().into_iter().find(|c| c.id.eq_ignore_ascii_case(id))
}

fn fail(msg: impl Into<String>) -> Error {
    Error::PreconditionViolation(msg.into())
}

fn require(report: &DistortionReport) -> Result<()> {
    if report.passed {
        Ok(())
    } else {
        Err(fail(format!(
            "{}: measured [{}, {}] against claimed [{}, {}], {} violations",
            report.map, report.colipschitz, report.lipschitz, report.claimed.0, report.claimed.1, report.violations
        )))
    }
}

/// Running `(min colipschitz, max lipschitz, pairs)` over several reports.
#[derive(Default)]
struct Tally {
    lo: Option<Constant>,
    hi: Option<Constant>,
    pairs: usize,
}

impl Tally {
    fn add(&mut self, report: &DistortionReport) -> Result<()> {
        require(report)?;
        self.pairs += report.pairs;
        if self.lo.map_or(true, |lo| report.colipschitz < lo) {
            self.lo = Some(report.colipschitz);
        }
        if self.hi.map_or(true, |hi| report.lipschitz > hi) {
            self.hi = Some(report.lipschitz);
        }
        Ok(())
    }

    fn summary(&self, claimed: &str) -> String {
        match (self.lo, self.hi) {
            (Some(lo), Some(hi)) => format!("ratios in [{lo}, {hi}] over {} pairs, claimed {claimed}", self.pairs),
            _ => format!("no pairs, claimed {claimed}"),
        }
    }
}

fn scaled(level: Level, quick: usize, full: usize) -> usize {
    match level {
        Level::Quick => quick,
        Level::Full => full,
    }
}

fn a1_tree_tsp(level: Level) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED);
    let trees = scaled(level, 40, 200);
    let mut instances = 0usize;
    for _ in 0..trees {
        let n = rng.gen_range(1..=10);
        let tree = random_tree(n, &mut rng)?;
        let size = rng.gen_range(0..=6.min(n));
        let mut targets = VertexSet::empty(n);
        while targets.len() < size {
            targets.insert(rng.gen_range(0..n));
        }
        for x in 0..n {
            for y in 0..n {
                let closed = tsp_tree(&tree, x, &targets, y)?;
                let generic = tsp_generic(&tree, x, &targets, y)?;
                if closed != generic {
                    return Err(fail(format!("tree formula {closed} != Held-Karp {generic} at ({x},{y}) on {n} vertices")));
                }
                let walk = tsp_tree_walk(&tree, x, &targets, y)?;
                if walk.len() as u32 != closed || !targets.iter().all(|t| walk.visits(t)) {
                    return Err(fail(format!("walk of length {} misses targets or the optimum {closed}", walk.len())));
                }
                if (walk.start(), walk.end()) != (x, y) {
                    return Err(fail("walk has the wrong endpoints"));
                }
                instances += 1;
            }
        }
    }
    Ok(format!("{instances} instances on {trees} trees agree exactly"))
}

fn a2_lamp_metric(level: Level) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED + 2);
    let graphs = scaled(level, 8, 50);
    let mut pairs = 0usize;
    for _ in 0..graphs {
        let n = rng.gen_range(1..=6);
        let g = random_connected_graph(n, 0.4, &mut rng)?;
        let la = LamplighterGraph::build(&g)?;
        let states = enumerate_lamp_states(&g)?;
        for (i, u) in states.iter().enumerate() {
            let row = la.graph.bfs(la.state_index(u));
            for v in &states[i..] {
                let formula = lamp_distance(&g, u, v)?;
                let bfs = row[la.state_index(v)];
                if formula != bfs {
                    return Err(fail(format!(
                        "{} to {}: formula {formula}, BFS {bfs}",
                        u.label(&g),
                        v.label(&g)
                    )));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} state pairs on {graphs} graphs agree exactly"))
}

fn a3_tree_hamming(level: Level) -> Result<String> {
    let mut tally = Tally::default();
    let mut count = 0;
    for n in 1..=6 {
        for tree in nonisomorphic_trees(n)? {
            let domain = enumerate_lamp_states(&tree)?;
            if domain.len() < 2 {
                continue;
            }
            let basepoints = scaled(level, 1, n);
            for x0 in 0..basepoints {
                let map = TreeToHamming::new(tree.clone(), x0)?;
                tally.add(&certify(&map, &domain, Mode::Exhaustive, None)?)?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} trees; {}", tally.summary("[1/2, 3]")))
}

fn a4_path_trees(level: Level) -> Result<String> {
    let mut tally = Tally::default();
    for k in 1..=5 {
        let map = PathToTrees::new(k)?;
        let domain = enumerate_lamp_states(&map.path)?;
        tally.add(&certify(&map, &domain, Mode::Exhaustive, None)?)?;
    }
    let (top, pairs) = match level {
        Level::Quick => (7, 2_000),
        Level::Full => (10, 10_000),
    };
    for k in 6..=top {
        let map = PathToTrees::new(k)?;
        let domain = enumerate_lamp_states(&map.path)?;
        let mode = Mode::Sample { pairs, seed: SUITE_SEED + k as u64 };
        tally.add(&certify(&map, &domain, mode, None)?)?;
    }
    Ok(tally.summary("[2/3, 2]"))
}

fn a5_coalescence(level: Level) -> Result<String> {
    let mut tally = Tally::default();
    let p2 = PointedGraph::new(build_path(2)?, 0)?;
    let mut cases = vec![(p2.clone(), p2)];
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED + 5);
    for _ in 0..scaled(level, 3, 10) {
        let a = rng.gen_range(1..=4);
        let b = rng.gen_range(1..=4);
        cases.push((random_pointed_graph(a, 0.5, &mut rng)?, random_pointed_graph(b, 0.5, &mut rng)?));
    }
    for (first, second) in &cases {
        let map = CoalescenceEmbedding::new(first, second)?;
        let domain = enumerate_lamp_states(&map.coalescence.graph.graph)?;
        tally.add(&certify(&map, &domain, Mode::Exhaustive, None)?)?;
    }
    Ok(format!("{} coalescences; {}", cases.len(), tally.summary("[1, 2]")))
}

fn a6a_binary_path(level: Level) -> Result<String> {
    let mut tally = Tally::default();
    for k in 1..=scaled(level, 6, 8) {
        let map = BinaryToLampPath::new(k)?;
        tally.add(&certify(&map, &map.domain(), Mode::Exhaustive, None)?)?;
    }
    Ok(tally.summary("[1, 2]"))
}

fn a6b_hamming_complete(level: Level) -> Result<String> {
    let mut pairs = 0usize;
    let mut bad: Vec<String> = Vec::new();
    for k in 1..=scaled(level, 3, 4) {
        for m in 1..=3 {
            let map = HammingToLampComplete::new(k, m)?;
            let domain = map.domain();
            let images = domain.iter().map(|p| map.apply(p)).collect::<Result<Vec<_>>>()?;
            let mut violations = 0usize;
            let mut first = None;
            for i in 0..domain.len() {
                for j in i + 1..domain.len() {
                    let d = (domain[i] ^ domain[j]).count_ones() * 2 * m as u32;
                    let la = lamp_distance(&map.complete, &images[i], &images[j])?;
                    if la < d || la > d + 1 {
                        violations += 1;
                        first.get_or_insert_with(|| {
                            format!("{} vs {}: d_La = {la}, allowed [{d}, {}]", map.label(&domain[i]), map.label(&domain[j]), d + 1)
                        });
                    }
                    pairs += 1;
                }
            }
            if let Some(first) = first {
                bad.push(format!("k={k}, m={m}: {violations} violations, first {first}"));
            }
        }
    }
    if bad.is_empty() {
        Ok(format!("{pairs} pairs within [2m d, 2m d + 1]"))
    } else {
        Err(fail(format!("{pairs} pairs checked; {}", bad.join("; "))))
    }
}

fn a6c_complete_binary(_: Level) -> Result<String> {
    let mut leaves = 0usize;
    for k in 1..=8 {
        for eps in [Ratio::from_integer(1), Ratio::new(1, 2)] {
            let map = CompleteToBinary::new(k, eps)?;
            let (lo, hi) = (map.lower() as u32, map.upper() as u32);
            for i in 0..k {
                for j in i + 1..k {
                    let d = map.leaf(i).distance(&map.leaf(j));
                    if d < lo || d > hi {
                        return Err(fail(format!("K_{k} leaves {i}, {j} at distance {d}, outside [{lo}, {hi}]")));
                    }
                    leaves += 1;
                }
            }
            let r = map.params.distortion();
            if k >= 2 && (Ratio::new(hi as u64, lo as u64) != r || r >= eps + 1) {
                return Err(fail(format!("K_{k}: distortion {r} is not below 1 + {eps}")));
            }
        }
    }
    Ok(format!("{leaves} leaf pairs within [2t+2, 2(s+t)], distortion (s+t)/(t+1) < 1 + eps"))
}

/// Certifies a lift and also checks every image distance against BFS in the
/// explicit lamplighter graph of its target.
fn certify_with_bfs(map: &InducedMap) -> Result<DistortionReport> {
    let domain = enumerate_lamp_states(&map.source)?;
    let report = certify(map, &domain, Mode::Exhaustive, None)?;
    let la = LamplighterGraph::build(&map.target)?;
    let images = domain.iter().map(|s| map.point(s)).collect::<Result<Vec<_>>>()?;
    for (i, u) in images.iter().enumerate() {
        let row = la.graph.bfs(la.state_index(u));
        for v in &images[i + 1..] {
            let formula = map.target_lamp_distance(u, v)?;
            if formula != row[la.state_index(v)] {
                return Err(fail(format!(
                    "{}: BFS and formula disagree between {} and {}",
                    map.name,
                    u.label(&map.target),
                    v.label(&map.target)
                )));
            }
        }
    }
    Ok(report)
}

fn a7_induced(level: Level) -> Result<String> {
    let three = Ratio::from_integer(3);
    let f = VertexMap::new(build_complete(3)?, build_cycle(9)?, vec![0, 3, 6], three, three)?;
    let mut parts = Vec::new();
    for m in 0..=1 {
        let lift = InducedMap::with_paths(&f, m)?;
        let report = certify_with_bfs(&lift)?;
        require(&report)?;
        parts.push(format!(
            "m={m}: [{}, {}] within [{}, {}]",
            report.colipschitz, report.lipschitz, report.claimed.0, report.claimed.1
        ));
    }

    let gadgets = [
        ("B_3", PointedGraph::new(build_binary_tree(3)?, 0)?),
        ("B_4", PointedGraph::new(build_binary_tree(4)?, 0)?),
        ("P_8", PointedGraph::new(build_path(8)?, 0)?),
    ];
    let mut runs = 0;
    let mut largest_step = 0;
    for (name, q) in &gadgets {
        let order = q.graph.order() as u32;
        for a in 1..=order - 2 {
            for b in a + 2..=order {
                let w = grow_witness_set(q, a, b)?;
                if !(a..=b).contains(&w.cost) || !w.set.contains(q.basepoint) {
                    return Err(fail(format!("{name}: witness cost {} outside [{a}, {b}]", w.cost)));
                }
                for step in w.trace.windows(2) {
                    let jump = step[1] - step[0];
                    largest_step = largest_step.max(jump);
                    if jump > 3 {
                        return Err(fail(format!("{name}: growth step raised c by {jump}")));
                    }
                }
                runs += 1;
                if level == Level::Quick {
                    break;
                }
            }
        }
    }
    parts.push(format!("{runs} witness growths, largest step {largest_step} (claimed at most 3)"));
    Ok(parts.join("; "))
}

fn a8_lamp_binary(_: Level) -> Result<String> {
    let mut parts = Vec::new();
    for k in [3, 4] {
        let map = LampCompleteToLampBinary::new(k, Ratio::from_integer(1))?;
        let domain = enumerate_lamp_states(&map.complete)?;
        let report = certify(&map, &domain, Mode::Exhaustive, None)?;
        require(&report)?;
        let inner = map.inner.as_ref().expect("k >= 3");
        let claimed = Constant::Exact(inner.params.distortion());
        let measured = report.distortion.ok_or_else(|| fail("images collapse"))?;
        if measured > claimed {
            return Err(fail(format!("k={k}: distortion {measured} exceeds {claimed}")));
        }
        let gadget = map.gadget_route()?;
        let (direct, lifted): (Vec<LampState>, Vec<LampState>) = domain
            .iter()
            .map(|s| Ok((map.point(s)?, gadget.point(s)?)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .unzip();
        for i in 0..domain.len() {
            for j in i + 1..domain.len() {
                let a = map.target_distance(&direct[i], &direct[j])?;
                let b = gadget.target_distance(&lifted[i], &lifted[j])?;
                if a != b {
                    return Err(fail(format!("k={k}: direct and gadget routes differ on a pair")));
                }
            }
        }
        let p = inner.params;
        parts.push(format!(
            "k={k} (s={}, t={}, r={}, N={}): distortion {measured} <= {claimed} over {} pairs",
            p.s,
            p.t,
            map.r,
            map.height(),
            report.pairs
        ));
    }
    Ok(parts.join("; "))
}

/// `(k/2) sin(π/k)`.
pub fn polygon_distortion(k: usize) -> f64 {
    k as f64 / 2.0 * (std::f64::consts::PI / k as f64).sin()
}

fn a9a_cycle(_: Level) -> Result<String> {
    let mut worst: Vec<String> = Vec::new();
    let mut checked = Vec::new();
    for k in 4..=12 {
        let map = RoseToEuclidean::new(1, k)?;
        let domain: Vec<usize> = (0..k).collect();
        let report = certify(&map, &domain, Mode::Exhaustive, None)?;
        let measured = report.distortion.ok_or_else(|| fail("images collapse"))?.to_f64();
        let expected = polygon_distortion(k);
        if (measured - expected).abs() > 1e-9 {
            worst.push(format!("k={k}: measured {measured:.12}, expected {expected:.12}"));
        }
        checked.push(k);
    }
    if worst.is_empty() {
        Ok(format!("k in {:?} match (k/2)sin(pi/k) within 1e-9", checked))
    } else {
        Err(fail(worst.join("; ")))
    }
}

fn a9b_rose(level: Level) -> Result<String> {
    let mut tally = Tally::default();
    for n in 1..=scaled(level, 2, 4) {
        for k in 3..=12 {
            let map = RoseToEuclidean::new(n, k)?;
            let domain: Vec<usize> = (0..map.rose.graph.graph.order()).collect();
            tally.add(&certify(&map, &domain, Mode::Exhaustive, None)?)?;
        }
    }
    Ok(tally.summary("[1/sqrt 2, pi/2]"))
}

fn a9c_star(_: Level) -> Result<String> {
    let mut tally = Tally::default();
    for n in 1..=4 {
        for k in 1..=5 {
            let map = StarToNormed::new(n, k, Norm::LInf)?;
            let domain: Vec<usize> = (0..map.star.graph.graph.order()).collect();
            tally.add(&certify(&map, &domain, Mode::Exhaustive, None)?)?;
        }
    }
    Ok(tally.summary("[1/2, 1]"))
}

fn a10_not_claimed(_: Level) -> Result<String> {
    Ok("not claimed: superreflexivity equivalences, the BMW-type corollary and infinite-group statements \
        have no finite check; their finite ingredients are A5-A9"
        .into())
}
