//! Named maps for `embed` and `certify`.

use std::collections::BTreeMap;
use std::path::Path;

use lamplight::distortion::{certify as run_certify, enumerate_lamp_states, sample_lamp_states, BoundedMap, DistortionReport, Mode};
use lamplight::embed::{
    BinaryToLampPath, CoalescenceEmbedding, CompleteToBinary, HammingToLampComplete, InducedMap,
    LampCompleteToLampBinary, Norm, PathToTrees, RoseToEuclidean, StarToNormed, TreeToHamming, VertexMap,
};
use lamplight::graph::random::random_tree;
use lamplight::graph::{BinaryTreeVertex, PointedGraph};
use lamplight::{Graph, LampState};
use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{json_arg, load_graph, parse_state, usage, CliResult, Failure, MapArgs};

pub const NAMES: &[&str] = &[
    "tree-to-hamming",
    "path-to-trees",
    "binary-to-lamp-path",
    "hamming-to-lamp-complete",
    "complete-to-binary",
    "lamp-complete-to-lamp-binary",
    "star-to-normed",
    "rose-to-euclidean",
    "coalescence",
    "induced",
];

/// Number of states drawn when a lamplighter domain is too large to list.
const SAMPLED_DOMAIN: usize = 4096;

struct Params(BTreeMap<String, String>);

impl Params {
    fn parse(raw: &str) -> CliResult<Self> {
        let mut out = BTreeMap::new();
        for item in raw.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item.split_once('=').ok_or_else(|| usage(format!("parameter `{item}` is not key=value")))?;
            out.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(Params(out))
    }

    fn raw(&self, key: &str) -> CliResult<&str> {
        self.0.get(key).map(String::as_str).ok_or_else(|| usage(format!("missing parameter `{key}`")))
    }

    fn usize(&self, key: &str) -> CliResult<usize> {
        let raw = self.raw(key)?;
        raw.parse().map_err(|_| usage(format!("parameter `{key}={raw}` is not a count")))
    }

    fn ratio(&self, key: &str, default: Ratio<u64>) -> CliResult<Ratio<u64>> {
        match self.0.get(key) {
            None => Ok(default),
            Some(raw) => raw.parse().map_err(|_| usage(format!("parameter `{key}={raw}` is not a fraction"))),
        }
    }
}

fn graph_flag(path: &Option<std::path::PathBuf>, flag: &str) -> CliResult<(Graph, Option<usize>)> {
    let path = path.as_ref().ok_or_else(|| usage(format!("--{flag} is required for this map")))?;
    load_graph(path)
}

fn pointed_flag(path: &Option<std::path::PathBuf>, flag: &str) -> CliResult<PointedGraph> {
    let (graph, base) = graph_flag(path, flag)?;
    Ok(PointedGraph::new(graph, base.unwrap_or(0))?)
}

fn source_tree(args: &MapArgs) -> CliResult<(Graph, Option<usize>)> {
    match args.tree.as_deref() {
        Some("random") => {
            let n = args.size.ok_or_else(|| usage("--size is required with --tree random"))?;
            Ok((random_tree(n, &mut ChaCha8Rng::seed_from_u64(args.seed))?, None))
        }
        Some(path) => load_graph(Path::new(path)),
        None => graph_flag(&args.graph, "graph"),
    }
}

fn vertex_label(graph: &Graph, value: &Value) -> CliResult<usize> {
    let label = match value {
        Value::String(s) => s.as_str(),
        Value::Object(o) => o.get("vertex").and_then(Value::as_str).ok_or_else(|| usage("point needs a `vertex` field"))?,
        _ => return Err(usage("point must be a vertex label")),
    };
    Ok(graph.vertex(label)?)
}

fn point_arg(args: &MapArgs) -> CliResult<&str> {
    args.point.as_deref().ok_or_else(|| usage("--point is required"))
}

fn state_json(graph: &Graph, state: &LampState) -> Value {
    serde_json::to_value(state.to_json(graph)).expect("state serializes")
}

fn lamp_domain(graph: &Graph, mode: Mode) -> CliResult<Vec<LampState>> {
    match mode {
        Mode::Sample { seed, .. } if graph.order() > lamplight::distortion::MAX_ENUMERATED_BASE => {
            Ok(sample_lamp_states(graph, SAMPLED_DOMAIN, seed)?)
        }
        _ => Ok(enumerate_lamp_states(graph)?),
    }
}

fn report<M: BoundedMap>(map: &M, domain: &[M::Point], mode: Mode, tol: Option<f64>) -> CliResult<DistortionReport> {
    Ok(run_certify(map, domain, mode, tol)?)
}

fn tree_to_hamming(args: &MapArgs, params: &Params) -> CliResult<TreeToHamming> {
    let (tree, base) = source_tree(args)?;
    let x0 = match params.0.get("x0") {
        Some(label) => tree.vertex(label)?,
        None => base.unwrap_or(0),
    };
    Ok(TreeToHamming::new(tree, x0)?)
}

fn induced(args: &MapArgs, params: &Params) -> CliResult<InducedMap> {
    let (source, _) = graph_flag(&args.graph, "graph")?;
    let (target, _) = graph_flag(&args.graph2, "graph2")?;
    let images = params
        .raw("images")?
        .split(':')
        .map(|l| target.vertex(l))
        .collect::<lamplight::Result<Vec<_>>>()?;
    let f = VertexMap::with_measured_bounds(source, target, images)?;
    Ok(match params.0.get("m") {
        Some(_) => InducedMap::with_paths(&f, params.usize("m")?)?,
        None => InducedMap::natural(&f),
    })
}

fn norm(params: &Params) -> CliResult<Norm> {
    Ok(params.0.get("p").map(|p| p.parse()).transpose()?.unwrap_or(Norm::L2))
}

fn unknown(name: &str) -> Failure {
    usage(format!("unknown map `{name}`; known maps: {}", NAMES.join(", ")))
}

pub fn certify(args: &MapArgs, mode: Mode, tol: Option<f64>) -> CliResult<DistortionReport> {
    let p = Params::parse(&args.params)?;
    let one = Ratio::from_integer(1);
    match args.map.as_str() {
        "tree-to-hamming" => {
            let map = tree_to_hamming(args, &p)?;
            report(&map, &lamp_domain(&map.tree, mode)?, mode, tol)
        }
        "path-to-trees" => {
            let map = PathToTrees::new(p.usize("k")?)?;
            report(&map, &lamp_domain(&map.path, mode)?, mode, tol)
        }
        "binary-to-lamp-path" => {
            let map = BinaryToLampPath::new(p.usize("k")?)?;
            report(&map, &map.domain(), mode, tol)
        }
        "hamming-to-lamp-complete" => {
            let map = HammingToLampComplete::new(p.usize("k")?, p.usize("m")?)?;
            report(&map, &map.domain(), mode, tol)
        }
        "complete-to-binary" => {
            let map = CompleteToBinary::new(p.usize("k")?, p.ratio("eps", one)?)?;
            report(&map, &map.domain(), mode, tol)
        }
        "lamp-complete-to-lamp-binary" => {
            let map = LampCompleteToLampBinary::new(p.usize("k")?, p.ratio("eps", one)?)?;
            report(&map, &lamp_domain(&map.complete, mode)?, mode, tol)
        }
        "star-to-normed" => {
            let map = StarToNormed::new(p.usize("n")?, p.usize("k")?, norm(&p)?)?;
            let domain: Vec<usize> = (0..map.star.graph.graph.order()).collect();
            report(&map, &domain, mode, tol)
        }
        "rose-to-euclidean" => {
            let map = RoseToEuclidean::new(p.usize("n")?, p.usize("k")?)?;
            let domain: Vec<usize> = (0..map.rose.graph.graph.order()).collect();
            report(&map, &domain, mode, tol)
        }
        "coalescence" => {
            let map = CoalescenceEmbedding::new(&pointed_flag(&args.graph, "graph")?, &pointed_flag(&args.graph2, "graph2")?)?;
            report(&map, &lamp_domain(&map.coalescence.graph.graph, mode)?, mode, tol)
        }
        "induced" => {
            let map = induced(args, &p)?;
            report(&map, &lamp_domain(&map.source, mode)?, mode, tol)
        }
        other => Err(unknown(other)),
    }
}

pub fn embed(args: &MapArgs) -> CliResult<Value> {
    let p = Params::parse(&args.params)?;
    let one = Ratio::from_integer(1);
    let point = point_arg(args)?;
    match args.map.as_str() {
        "tree-to-hamming" => {
            let map = tree_to_hamming(args, &p)?;
            let image = map.apply(&parse_state(&map.tree, point)?)?;
            Ok(serde_json::to_value(image).expect("point serializes"))
        }
        "path-to-trees" => {
            let map = PathToTrees::new(p.usize("k")?)?;
            let (left, right) = map.apply(&parse_state(&map.path, point)?)?;
            Ok(json!({ "left": left.label(), "right": right.label() }))
        }
        "binary-to-lamp-path" => {
            let map = BinaryToLampPath::new(p.usize("k")?)?;
            let word = match json_arg(point)? {
                Value::String(s) => BinaryTreeVertex::parse(&s)?,
                _ => return Err(usage("point must be a binary word such as \"0110\" or \"e\"")),
            };
            Ok(state_json(&map.path, &map.apply(&word)?))
        }
        "hamming-to-lamp-complete" => {
            let map = HammingToLampComplete::new(p.usize("k")?, p.usize("m")?)?;
            let coords: Vec<usize> = serde_json::from_value(json_arg(point)?)
                .map_err(|_| usage("point must be a list of coordinates in 1..=k"))?;
            let mut mask = 0u64;
            for i in coords {
                if !(1..=map.k).contains(&i) {
                    return Err(Failure::Domain(format!("coordinate {i} is outside 1..={}", map.k)));
                }
                mask |= 1 << (i - 1);
            }
            Ok(state_json(&map.complete, &map.apply(&mask)?))
        }
        "complete-to-binary" => {
            let map = CompleteToBinary::new(p.usize("k")?, p.ratio("eps", one)?)?;
            let complete = lamplight::graph::build_complete(map.k)?;
            let leaf = map.apply(&vertex_label(&complete, &json_arg(point)?)?)?;
            Ok(json!({ "vertex": leaf.label() }))
        }
        "lamp-complete-to-lamp-binary" => {
            let map = LampCompleteToLampBinary::new(p.usize("k")?, p.ratio("eps", one)?)?;
            Ok(state_json(&map.target, &map.apply(&parse_state(&map.complete, point)?)?))
        }
        "star-to-normed" => {
            let map = StarToNormed::new(p.usize("n")?, p.usize("k")?, norm(&p)?)?;
            let x = vertex_label(&map.star.graph.graph, &json_arg(point)?)?;
            Ok(serde_json::to_value(map.apply(&x)?).expect("point serializes"))
        }
        "rose-to-euclidean" => {
            let map = RoseToEuclidean::new(p.usize("n")?, p.usize("k")?)?;
            let x = vertex_label(&map.rose.graph.graph, &json_arg(point)?)?;
            Ok(serde_json::to_value(map.apply(&x)?).expect("point serializes"))
        }
        "coalescence" => {
            let map = CoalescenceEmbedding::new(&pointed_flag(&args.graph, "graph")?, &pointed_flag(&args.graph2, "graph2")?)?;
            let co = &map.coalescence;
            let image = map.apply(&parse_state(&co.graph.graph, point)?)?;
            Ok(json!({
                "first": state_json(&co.first.graph, &image.first),
                "second": state_json(&co.second.graph, &image.second),
                "clover_first": map.clover_first.graph.graph.label(image.clover_first),
                "clover_second": map.clover_second.graph.graph.label(image.clover_second),
            }))
        }
        "induced" => {
            let map = induced(args, &p)?;
            Ok(state_json(&map.target, &map.apply(&parse_state(&map.source, point)?)?))
        }
        other => Err(unknown(other)),
    }
}
