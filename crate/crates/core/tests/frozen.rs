//! Worked examples; each value is recomputed by BFS on an explicit
//! lamplighter graph or by direct enumeration, then pinned.

use lamplight::distortion::{certify, enumerate_lamp_states, BoundedMap, Constant, Measure, Mode};
use lamplight::embed::{
    embed_binary_tree_to_lamp_path, embed_hamming_to_lamp_complete, embed_lamp_path_to_trees,
    embed_lamp_tree_to_hamming, grow_witness_set, CoalescenceEmbedding, InducedMap, LampCompleteToLampBinary,
    VertexMap,
};
use lamplight::graph::{build_binary_tree, build_complete, build_cycle, build_path, BinaryTreeVertex, PointedGraph};
use lamplight::tsp::{tsp_generic, TspInstance};
use lamplight::{LampState, LamplighterGraph, VertexSet};
use num_rational::Ratio;

fn bfs(la: &LamplighterGraph, u: &LampState, v: &LampState) -> u32 {
    la.graph.bfs(la.state_index(u))[la.state_index(v)]
}

#[test]
fn p3_round_trip() {
    let p3 = build_path(3).unwrap();
    let targets = VertexSet::from_indices(4, [3]);
    let instance = TspInstance::new(&p3, 0, targets, 0).unwrap();
    assert_eq!(instance.solve(&p3).unwrap(), 6);
}

#[test]
fn hamming_cube_into_lamplighter_of_k4() {
    let k4 = build_complete(4).unwrap();
    let la = LamplighterGraph::build(&k4).unwrap();
    let empty = embed_hamming_to_lamp_complete(2, 2, &[]).unwrap();
    let first = embed_hamming_to_lamp_complete(2, 2, &[1]).unwrap();
    let second = embed_hamming_to_lamp_complete(2, 2, &[2]).unwrap();
    assert_eq!(bfs(&la, &empty, &first), 4);
    assert_eq!(bfs(&la, &empty, &second), 5);
}

#[test]
fn binary_words_into_lamplighter_of_path() {
    let p = build_path(3).unwrap();
    let la = LamplighterGraph::build(&p).unwrap();
    let root = embed_binary_tree_to_lamp_path(3, &BinaryTreeVertex::root()).unwrap();
    let one = embed_binary_tree_to_lamp_path(3, &BinaryTreeVertex::parse("1").unwrap()).unwrap();
    let zero = embed_binary_tree_to_lamp_path(3, &BinaryTreeVertex::parse("0").unwrap()).unwrap();
    assert_eq!(bfs(&la, &root, &one), 2);
    assert_eq!(bfs(&la, &root, &zero), 1);
}

#[test]
fn hamming_embedding_on_p1() {
    let p1 = build_path(1).unwrap();
    let la = LamplighterGraph::build(&p1).unwrap();
    let u = LampState::dark(&p1, 0).unwrap();
    let v = LampState::from_labels(&p1, &["v1"], "v1").unwrap();
    let fu = embed_lamp_tree_to_hamming(&p1, 0, &u).unwrap();
    let fv = embed_lamp_tree_to_hamming(&p1, 0, &v).unwrap();
    assert!(fu.is_empty());
    assert_eq!(fu.distance(&fv), 2);
    assert_eq!(bfs(&la, &u, &v), 2);
}

#[test]
fn path_into_trees_k2() {
    let p2 = build_path(2).unwrap();
    let state = LampState::from_labels(&p2, &["v0"], "v1").unwrap();
    let (left, right) = embed_lamp_path_to_trees(2, &state).unwrap();
    assert_eq!((left.label(), right.label()), ("1".to_string(), "00".to_string()));
}

#[test]
fn k3_into_c9_lift_with_paths() {
    let three = Ratio::from_integer(3);
    let f = VertexMap::new(build_complete(3).unwrap(), build_cycle(9).unwrap(), vec![0, 3, 6], three, three).unwrap();
    let lift = InducedMap::with_paths(&f, 1).unwrap();
    let la = LamplighterGraph::build(&lift.target).unwrap();
    let la_source = LamplighterGraph::build(&f.source).unwrap();
    let domain = enumerate_lamp_states(&f.source).unwrap();
    let (mut lo, mut hi) = (Ratio::from_integer(u64::MAX), Ratio::from_integer(0));
    for (i, u) in domain.iter().enumerate() {
        for v in &domain[i + 1..] {
            let source = bfs(&la_source, u, v) as u64;
            let target = bfs(&la, &lift.point(u).unwrap(), &lift.point(v).unwrap()) as u64;
            let r = Ratio::new(target, source);
            lo = lo.min(r);
            hi = hi.max(r);
        }
    }
    assert_eq!((lo, hi), (Ratio::new(7, 3), Ratio::from_integer(4)));
    let report = certify(&lift, &domain, Mode::Exhaustive, None).unwrap();
    assert_eq!((report.colipschitz, report.lipschitz), (Constant::Exact(lo), Constant::Exact(hi)));
}

#[test]
fn witness_growth_on_b4() {
    let q = PointedGraph::new(build_binary_tree(4).unwrap(), 0).unwrap();
    let w = grow_witness_set(&q, 6, 8).unwrap();
    assert_eq!(w.trace, vec![1, 4, 7]);
    let c = tsp_generic(&q.graph, 0, &w.set, 0).unwrap() + w.set.len() as u32;
    assert_eq!(c, 7);
}

#[test]
fn lamplighter_of_k3_into_binary() {
    let map = LampCompleteToLampBinary::new(3, Ratio::from_integer(1)).unwrap();
    let domain = enumerate_lamp_states(&map.complete).unwrap();
    let report = certify(&map, &domain, Mode::Exhaustive, None).unwrap();
    assert_eq!(report.distortion, Some(Constant::Exact(Ratio::new(4, 3))));
    assert_eq!(report.pairs, 276);
    let a = map.apply(&domain[0]).unwrap();
    let b = map.apply(&domain[domain.len() - 1]).unwrap();
    let direct = map.target_distance(&a, &b).unwrap();
    assert_eq!(direct, Measure::Int(report_distance(&map, &a, &b)));
}

fn report_distance(map: &LampCompleteToLampBinary, a: &LampState, b: &LampState) -> u64 {
    let flipped = a.lamps.symmetric_difference(&b.lamps);
    (tsp_generic(&map.target, a.pos, &flipped, b.pos).unwrap() + flipped.len() as u32) as u64
}

#[test]
fn coalescence_of_two_p2() {
    let p2 = PointedGraph::new(build_path(2).unwrap(), 0).unwrap();
    let map = CoalescenceEmbedding::new(&p2, &p2).unwrap();
    let domain = enumerate_lamp_states(&map.coalescence.graph.graph).unwrap();
    assert_eq!(domain.len(), 160);
    let report = certify(&map, &domain, Mode::Exhaustive, None).unwrap();
    assert!(report.passed);
    assert_eq!((report.colipschitz, report.lipschitz), (Constant::int(1), Constant::int(2)));
}
