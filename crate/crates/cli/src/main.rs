mod maps;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lamplight::acceptance::{self, Level};
use lamplight::graph::io::{graph_to_dot, GraphJson};
use lamplight::graph::random::{random_connected_graph, random_tree};
use lamplight::graph::{
    build_binary_tree, build_complete, build_cycle, build_hamming_graph, build_path, build_rose, build_star,
    build_variable_leg_tree,
};
use lamplight::lamplighter::LampStateJson;
use lamplight::tsp::{TspAnswerJson, TspInstance};
use lamplight::{lamp_distance, Graph, LamplighterGraph, VertexSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

/// Lamplighter metrics, walk-TSP and certified embeddings.
#[derive(Debug, Parser)]
#[command(name = "lamplight", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a graph from a named family.
    Gen(GenArgs),
    /// Shortest-path distance between two vertices.
    Dist(DistArgs),
    /// Shortest walk from one vertex to another through a target set.
    Tsp(TspArgs),
    /// Distance between two lamplighter states.
    LampDist(LampDistArgs),
    /// The explicit lamplighter graph of a small graph.
    LampGraph(LampGraphArgs),
    /// Apply an embedding to one point.
    Embed(MapArgs),
    /// Measure an embedding's distortion against its claimed bounds.
    Certify(CertifyArgs),
    /// Run the acceptance criteria.
    Suite(SuiteArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    Binary,
    Star,
    Rose,
    Hamming,
    Legs,
    RandomTree,
    Random,
}

#[derive(Debug, Args)]
struct Output {
    /// Write to this file instead of stdout.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
    /// Emit Graphviz DOT instead of JSON.
    #[arg(long)]
    dot: bool,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Number of branches or petals, or vertex count for random families.
    #[arg(long)]
    n: Option<usize>,
    /// Length, height, size or dimension parameter of the family.
    #[arg(long)]
    k: Option<usize>,
    /// Leg lengths for `legs`, comma separated.
    #[arg(long, value_delimiter = ',')]
    legs: Vec<usize>,
    /// Extra edge probability for `random`.
    #[arg(long, default_value_t = 0.3)]
    extra: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Basepoint label recorded in the output.
    #[arg(long)]
    basepoint: Option<String>,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
struct DistArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
}

#[derive(Debug, Args)]
struct TspArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
    /// Target vertex labels, comma separated.
    #[arg(long, value_delimiter = ',')]
    targets: Vec<String>,
    /// Also print an optimal walk.
    #[arg(long)]
    walk: bool,
}

#[derive(Debug, Args)]
struct LampDistArgs {
    #[arg(long)]
    graph: PathBuf,
    /// State as inline JSON or a path to a JSON file.
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
}

#[derive(Debug, Args)]
struct LampGraphArgs {
    #[arg(long)]
    graph: PathBuf,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    /// Map name: tree-to-hamming, path-to-trees, binary-to-lamp-path, hamming-to-lamp-complete, complete-to-binary, lamp-complete-to-lamp-binary, star-to-normed, rose-to-euclidean, coalescence or induced.
    #[arg(long)]
    map: String,
    /// Map parameters, e.g. `k=3,eps=1/2`.
    #[arg(long, alias = "scale", default_value = "")]
    params: String,
    /// Source graph for graph-parameterised maps.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Second graph for `coalescence` and `induced`.
    #[arg(long)]
    graph2: Option<PathBuf>,
    /// Source tree: `random` or a JSON file.
    #[arg(long)]
    tree: Option<String>,
    /// Vertex count of a random source tree.
    #[arg(long)]
    size: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Point to map, as inline JSON or a path to a JSON file.
    #[arg(long)]
    point: Option<String>,
}

#[derive(Debug, Args)]
struct CertifyArgs {
    #[command(flatten)]
    map: MapArgs,
    /// Check every pair of domain points.
    #[arg(long, conflicts_with = "sample")]
    exhaustive: bool,
    /// Check this many seeded random pairs.
    #[arg(long)]
    sample: Option<usize>,
    /// Tolerance for the verdict; defaults to 0 for exact ratios, 1e-9 otherwise.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Debug, Args)]
struct SuiteArgs {
    #[arg(value_parser = ["quick", "full"], default_value = "quick")]
    level: String,
    /// Run only these criteria, e.g. `A1,A9b`.
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    /// Print a JSON array instead of the table.
    #[arg(long)]
    json: bool,
}

/// Failure classes, mapped to exit codes 1 and 2.
#[derive(Debug)]
pub enum Failure {
    Domain(String),
    Usage(String),
}

impl From<lamplight::Error> for Failure {
    fn from(e: lamplight::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

pub type CliResult<T> = Result<T, Failure>;

pub fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Domain(format!("cannot read {}: {e}", path.display())))
}

pub fn load_graph(path: &Path) -> CliResult<(Graph, Option<usize>)> {
    let parsed: GraphJson = serde_json::from_str(&read_text(path)?)
        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    Ok(parsed.to_graph()?)
}

/// Parses inline JSON, or reads JSON from the file at `arg`.
pub fn json_arg(arg: &str) -> CliResult<Value> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with(['{', '[', '"']) || trimmed.parse::<f64>().is_ok() {
        arg.to_string()
    } else {
        read_text(Path::new(arg))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::Domain(format!("malformed JSON: {e}")))
}

fn emit(out: &Output, text: &str) -> CliResult<()> {
    match &out.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Domain(format!("cannot write {}: {e}", path.display()))),
        None => {
            say(text.trim_end());
            Ok(())
        }
    }
}

fn emit_graph(out: &Output, graph: &Graph, basepoint: Option<usize>, name: &str) -> CliResult<()> {
    let text = if out.dot {
        graph_to_dot(graph, name)
    } else {
        serde_json::to_string_pretty(&GraphJson::from_graph(graph, basepoint)).expect("graph JSON serializes")
    };
    emit(out, &text)
}

/// Writes a line to stdout; a closed pipe ends output quietly.
fn say(text: impl std::fmt::Display) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn print_json(value: &Value) {
    say(serde_json::to_string(value).expect("JSON serializes"));
}

fn gen(args: GenArgs) -> CliResult<()> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| usage(format!("--{flag} is required for this family")));
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let (graph, name) = match args.family {
        Family::Path => (build_path(need(args.k, "k")?)?, "path"),
        Family::Cycle => (build_cycle(need(args.k, "k")?)?, "cycle"),
        Family::Complete => (build_complete(need(args.k, "k")?)?, "complete"),
        Family::Binary => (build_binary_tree(need(args.k, "k")?)?, "binary"),
        Family::Star => (build_star(need(args.n, "n")?, need(args.k, "k")?)?, "star"),
        Family::Rose => (build_rose(need(args.n, "n")?, need(args.k, "k")?)?, "rose"),
        Family::Hamming => (build_hamming_graph(need(args.k, "k")?)?, "hamming"),
        Family::Legs => (build_variable_leg_tree(&args.legs)?, "legs"),
        Family::RandomTree => (random_tree(need(args.n, "n")?, &mut rng)?, "random-tree"),
        Family::Random => {
            if !(0.0..=1.0).contains(&args.extra) {
                return Err(usage("--extra must lie in [0, 1]"));
            }
            (random_connected_graph(need(args.n, "n")?, args.extra, &mut rng)?, "random")
        }
    };
    let basepoint = match &args.basepoint {
        Some(label) => Some(graph.vertex(label)?),
        None if graph.order() > 0 => Some(0),
        None => None,
    };
    emit_graph(&args.out, &graph, basepoint, name)
}

fn dist(args: DistArgs) -> CliResult<()> {
    let (graph, _) = load_graph(&args.graph)?;
    let d = graph.dist(graph.vertex(&args.from)?, graph.vertex(&args.to)?)?;
    print_json(&json!({ "distance": d }));
    Ok(())
}

fn tsp(args: TspArgs) -> CliResult<()> {
    let (graph, _) = load_graph(&args.graph)?;
    let targets = args.targets.iter().map(|l| graph.vertex(l)).collect::<lamplight::Result<Vec<_>>>()?;
    let targets = VertexSet::from_indices(graph.order(), targets);
    let instance = TspInstance::new(&graph, graph.vertex(&args.from)?, targets, graph.vertex(&args.to)?)?;
    let answer = if args.walk {
        let (length, walk) = instance.solve_with_walk(&graph)?;
        TspAnswerJson { length, walk: Some(walk.labels(&graph).into_iter().map(String::from).collect()) }
    } else {
        TspAnswerJson { length: instance.solve(&graph)?, walk: None }
    };
    print_json(&serde_json::to_value(answer).expect("answer serializes"));
    Ok(())
}

pub fn parse_state(graph: &Graph, arg: &str) -> CliResult<lamplight::LampState> {
    let parsed: LampStateJson =
        serde_json::from_value(json_arg(arg)?).map_err(|e| Failure::Domain(format!("malformed state: {e}")))?;
    Ok(parsed.resolve(graph)?)
}

fn lamp_dist(args: LampDistArgs) -> CliResult<()> {
    let (graph, _) = load_graph(&args.graph)?;
    let u = parse_state(&graph, &args.from)?;
    let v = parse_state(&graph, &args.to)?;
    print_json(&json!({ "distance": lamp_distance(&graph, &u, &v)? }));
    Ok(())
}

fn lamp_graph(args: LampGraphArgs) -> CliResult<()> {
    let (graph, _) = load_graph(&args.graph)?;
    let la = LamplighterGraph::build(&graph)?;
    emit_graph(&args.out, &la.graph, Some(0), "lamplighter")
}

fn certify(args: CertifyArgs) -> CliResult<bool> {
    let mode = match (args.exhaustive, args.sample) {
        (_, Some(0)) => return Err(usage("--sample must be positive")),
        (_, Some(pairs)) => lamplight::distortion::Mode::Sample { pairs, seed: args.map.seed },
        _ => lamplight::distortion::Mode::Exhaustive,
    };
    let report = maps::certify(&args.map, mode, args.tol)?;
    print_json(&report.to_json());
    Ok(report.passed)
}

fn suite(args: SuiteArgs) -> CliResult<bool> {
    let level: Level = args.level.parse()?;
    let selected: Vec<_> = if args.only.is_empty() {
        acceptance::criteria()
    } else {
        args.only
            .iter()
            .map(|id| acceptance::find(id).ok_or_else(|| usage(format!("unknown criterion `{id}`"))))
            .collect::<CliResult<_>>()?
    };
    let outcomes: Vec<_> = selected.iter().map(|c| c.run(level)).collect();
    if args.json {
        let rows: Vec<Value> = outcomes
            .iter()
            .map(|o| json!({ "id": o.id, "title": o.title, "passed": o.passed, "detail": o.detail }))
            .collect();
        print_json(&Value::Array(rows));
    } else {
        for o in &outcomes {
            say(o);
        }
        let failed = outcomes.iter().filter(|o| !o.passed).count();
        say(format!("{} of {} criteria passed", outcomes.len() - failed, outcomes.len()));
    }
    Ok(outcomes.iter().all(|o| o.passed))
}

fn configure_threads() -> CliResult<()> {
    if let Ok(raw) = std::env::var("LAMPLIGHT_THREADS") {
        let threads: usize = raw.parse().map_err(|_| usage(format!("LAMPLIGHT_THREADS=`{raw}` is not a count")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::Domain(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<bool> {
    configure_threads()?;
    match cli.command {
        Command::Gen(a) => gen(a).map(|_| true),
        Command::Dist(a) => dist(a).map(|_| true),
        Command::Tsp(a) => tsp(a).map(|_| true),
        Command::LampDist(a) => lamp_dist(a).map(|_| true),
        Command::LampGraph(a) => lamp_graph(a).map(|_| true),
        Command::Embed(a) => {
            print_json(&maps::embed(&a)?);
            Ok(true)
        }
        Command::Certify(a) => certify(a),
        Command::Suite(a) => suite(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
