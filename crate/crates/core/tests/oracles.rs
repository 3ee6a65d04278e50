//! Independent re-computations checked against the library routes.

use std::collections::{BTreeSet, VecDeque};

use lamplight::embed::{
    embed_lamp_tree_to_hamming, hamming_coordinates, regular_polygon_vertex, HammingPoint, LampCompleteToLampBinary,
};
use lamplight::graph::random::{random_connected_graph, random_pointed_graph, random_tree};
use lamplight::graph::{
    build_binary_tree, build_clover, build_complete, build_cycle, build_hamming_graph, build_path, build_rose,
    build_star, coalesce, path_edge_set, PointedGraph,
};
use lamplight::distortion::{enumerate_lamp_states, BoundedMap};
use lamplight::tsp::{tsp_coalescence, tsp_generic, tsp_tree};
use lamplight::{lamp_distance, Graph, LampState, LamplighterGraph, VertexSet};
use num_rational::Ratio;
use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut out = UnGraph::new_undirected();
    let nodes: Vec<_> = (0..g.order()).map(|_| out.add_node(())).collect();
    for &(u, v) in g.edges() {
        out.add_edge(nodes[u], nodes[v], ());
    }
    out
}

/// `n` paths of length `k` (cycles if `closed`) sharing one hub vertex.
fn petgraph_flower(n: usize, k: usize, closed: bool) -> UnGraph<(), ()> {
    let mut g = UnGraph::new_undirected();
    let hub = g.add_node(());
    for _ in 0..n {
        let mut prev = hub;
        let len = if closed { k - 1 } else { k };
        for _ in 0..len {
            let next = g.add_node(());
            g.add_edge(prev, next, ());
            prev = next;
        }
        if closed {
            g.add_edge(prev, hub, ());
        }
    }
    g
}

#[test]
fn families_match_petgraph_constructions() {
    for n in 1..=4 {
        for k in 1..=4 {
            assert!(is_isomorphic(&to_petgraph(&build_star(n, k).unwrap()), &petgraph_flower(n, k, false)));
        }
        for k in 3..=6 {
            assert!(is_isomorphic(&to_petgraph(&build_rose(n, k).unwrap()), &petgraph_flower(n, k, true)));
        }
    }
    for k in 1..=6 {
        assert!(is_isomorphic(&to_petgraph(&build_path(k).unwrap()), &petgraph_flower(1, k, false)));
    }
    for k in 3..=7 {
        assert!(is_isomorphic(&to_petgraph(&build_cycle(k).unwrap()), &petgraph_flower(1, k, true)));
    }
    let p2 = PointedGraph::new(build_path(2).unwrap(), 0).unwrap();
    let glued = coalesce(&p2, &p2).unwrap();
    assert!(is_isomorphic(&to_petgraph(&glued.graph.graph), &to_petgraph(&build_path(4).unwrap())));

    let mut cube = UnGraph::<(), ()>::new_undirected();
    let nodes: Vec<_> = (0..8).map(|_| cube.add_node(())).collect();
    for a in 0..8usize {
        for b in a + 1..8 {
            if (a ^ b).count_ones() == 1 {
                cube.add_edge(nodes[a], nodes[b], ());
            }
        }
    }
    assert!(is_isomorphic(&to_petgraph(&build_hamming_graph(3).unwrap()), &cube));
}

#[test]
fn binary_tree_shape() {
    let b = build_binary_tree(4).unwrap();
    assert_eq!(b.order(), 31);
    let leaves = (0..31).filter(|&v| b.degree(v) == 1).count();
    assert_eq!(leaves, 16);
    assert_eq!(b.diameter().unwrap(), 8);
}

/// Shortest `x → y` walk covering `targets`, by BFS over `(vertex, visited)`.
fn tsp_by_state_search(g: &Graph, x: usize, targets: &[usize], y: usize) -> u32 {
    let bit = |v: usize| targets.iter().position(|&t| t == v).map_or(0, |i| 1u32 << i);
    let full = (1u32 << targets.len()) - 1;
    let mut dist = vec![u32::MAX; g.order() << targets.len()];
    let start = (x, bit(x));
    dist[start.0 << targets.len() | start.1 as usize] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some((v, mask)) = queue.pop_front() {
        let d = dist[v << targets.len() | mask as usize];
        if v == y && mask == full {
            return d;
        }
        for w in g.neighbors(v) {
            let m = mask | bit(w);
            let slot = &mut dist[w << targets.len() | m as usize];
            if *slot == u32::MAX {
                *slot = d + 1;
                queue.push_back((w, m));
            }
        }
    }
    unreachable!("connected graph")
}

#[test]
fn held_karp_matches_state_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.gen_range(2..=9);
        let g = random_connected_graph(n, 0.3, &mut rng).unwrap();
        let targets: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
        let set = VertexSet::from_indices(n, targets.iter().copied());
        for x in 0..n {
            for y in 0..n {
                assert_eq!(tsp_generic(&g, x, &set, y).unwrap(), tsp_by_state_search(&g, x, &targets, y));
            }
        }
    }
}

#[test]
fn coalescence_split_matches_held_karp() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..40 {
        let a = random_pointed_graph(rng.gen_range(1..=5), 0.4, &mut rng).unwrap();
        let b = random_pointed_graph(rng.gen_range(1..=5), 0.4, &mut rng).unwrap();
        let co = coalesce(&a, &b).unwrap();
        let g = &co.graph.graph;
        let n = g.order();
        for _ in 0..20 {
            let set = VertexSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5)));
            let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
            assert_eq!(tsp_coalescence(&co, x, &set, y).unwrap(), tsp_generic(g, x, &set, y).unwrap());
        }
    }
}

#[test]
fn clover_distances_route_through_the_base() {
    let petal = PointedGraph::new(build_cycle(5).unwrap(), 2).unwrap();
    let clover = build_clover(&petal, 3).unwrap();
    let g = &clover.graph.graph;
    let d = |u, v| petal.graph.dist(u, v).unwrap();
    for c in 0..3 {
        for c2 in 0..3 {
            for u in 0..5 {
                for v in 0..5 {
                    let expected = if c == c2 { d(u, v) } else { d(u, 2) + d(2, v) };
                    assert_eq!(g.dist(clover.vertex(c, u), clover.vertex(c2, v)).unwrap(), expected);
                }
            }
        }
    }
}

/// `f(A, x)` by deleting each edge in turn and flooding from `x`.
fn hamming_keys_by_edge_deletion(tree: &Graph, state: &LampState) -> BTreeSet<String> {
    let n = tree.order();
    let mut keys = BTreeSet::new();
    for (e, &(u, v)) in tree.edges().iter().enumerate() {
        let mut seen = vec![false; n];
        seen[state.pos] = true;
        let mut stack = vec![state.pos];
        while let Some(w) = stack.pop() {
            for z in tree.neighbors(w) {
                if tree.edge_id(w, z) != Some(e) && !seen[z] {
                    seen[z] = true;
                    stack.push(z);
                }
            }
        }
        let behind: Vec<String> = state.lamps.iter().filter(|&a| !seen[a]).map(|a| a.to_string()).collect();
        if !behind.is_empty() {
            keys.insert(format!("F:{}-{}|{}", u.min(v), u.max(v), behind.join(",")));
        }
    }
    keys
}

#[test]
fn hamming_coordinates_match_edge_deletion() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let n = rng.gen_range(1..=9);
        let tree = random_tree(n, &mut rng).unwrap();
        let lamps = VertexSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.4)));
        let state = LampState::new(&tree, lamps, rng.gen_range(0..n)).unwrap();
        let keys = hamming_coordinates(&tree, &state).unwrap();
        assert_eq!(keys.0, hamming_keys_by_edge_deletion(&tree, &state));
        let reach = tsp_tree(&tree, state.pos, &state.lamps, state.pos).unwrap() / 2;
        assert_eq!(keys.len(), reach as usize);
    }
}

#[test]
fn hamming_point_is_a_three_factor_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let tree = random_tree(7, &mut rng).unwrap();
    let x0 = 3;
    let states = enumerate_lamp_states(&tree).unwrap();
    for _ in 0..500 {
        let u = &states[rng.gen_range(0..states.len())];
        let v = &states[rng.gen_range(0..states.len())];
        let fu = embed_lamp_tree_to_hamming(&tree, x0, u).unwrap();
        let fv = embed_lamp_tree_to_hamming(&tree, x0, v).unwrap();
        let f = hamming_coordinates(&tree, u).unwrap().distance(&hamming_coordinates(&tree, v).unwrap());
        let path = path_edge_set(&tree, x0, u.pos)
            .unwrap()
            .symmetric_difference(&path_edge_set(&tree, x0, v.pos).unwrap())
            .len() as u64;
        let lamps = u.lamps.symmetric_difference_count(&v.lamps) as u64;
        assert_eq!(fu.distance(&fv), f + path + lamps);
    }
    assert_eq!(HammingPoint::default().distance(&HammingPoint::default()), 0);
}

#[test]
fn polygon_chords_follow_the_sine_law() {
    for k in 3..=12 {
        for j in 0..k {
            let [x, y] = regular_polygon_vertex(k, j);
            let chord = (x * x + y * y).sqrt();
            let expected = k as f64 / 2.0 * (std::f64::consts::PI * j as f64 / k as f64).sin();
            assert!((chord - expected).abs() < 1e-9, "k={k} j={j}: {chord} vs {expected}");
        }
    }
}

#[test]
fn lamp_metric_matches_bfs_on_cycles_and_complete_graphs() {
    for g in [build_cycle(5).unwrap(), build_complete(4).unwrap(), build_star(2, 2).unwrap()] {
        let la = LamplighterGraph::build(&g).unwrap();
        let states = enumerate_lamp_states(&g).unwrap();
        let origin = &states[0];
        let row = la.graph.bfs(la.state_index(origin));
        for s in &states {
            assert_eq!(lamp_distance(&g, origin, s).unwrap(), row[la.state_index(s)]);
        }
    }
}

#[test]
fn lamp_binary_direct_route_matches_gadget_route() {
    for k in 1..=4 {
        let map = LampCompleteToLampBinary::new(k, Ratio::from_integer(1)).unwrap();
        let lifted = map.gadget_route().unwrap();
        let states = enumerate_lamp_states(&map.complete).unwrap();
        for u in &states {
            for v in &states {
                let direct = map.target_distance(&map.apply(u).unwrap(), &map.apply(v).unwrap()).unwrap();
                let gadget = lifted.target_distance(&lifted.apply(u).unwrap(), &lifted.apply(v).unwrap()).unwrap();
                assert_eq!(direct, gadget);
            }
        }
    }
}
