//! The extractor against brute-force enumeration of induced paths and cycles.

mod common;

use common::{graphs_max_degree_3, labelled_cubic_graphs, mask_of, InducedSets};
use cubicbox::graph::{random_cubic, remove_random_edges};
use cubicbox::partition::primary_partition;
use cubicbox::special::{
    find_induced_cycle, is_special, load_structure, removables_from_scratch, Ambient, Seed, SpecialFinder,
    StructureKind, TOUCH_LIMIT,
};
use cubicbox::Graph;
use proptest::prelude::*;

fn check_extraction(g: &Graph, alive: &[bool], seed: Seed, sets: &InducedSets) {
    let amb = Ambient::restricted(g, alive);
    let ex = SpecialFinder::new(g.vertex_count())
        .with_audit(true)
        .find(amb, seed)
        .unwrap_or_else(|e| panic!("{g:?} seed {seed:?}: {e}"));
    assert!(ex.within_iteration_bound(), "{g:?}: {} iterations for {} vertices", ex.iterations, ex.vertices.len());
    let m = mask_of(&ex.vertices);
    match ex.kind {
        StructureKind::Cycle => {
            assert!(sets.cycles.contains(&m), "{g:?}: {:?} is not an induced cycle", ex.vertices);
            assert!(sets.special_cycle(m), "{g:?}: cycle {:?} is not special", ex.vertices);
        }
        StructureKind::Path => {
            assert!(sets.paths.contains(&m), "{g:?}: {:?} is not an induced path", ex.vertices);
            let ends = (ex.vertices[0], *ex.vertices.last().unwrap());
            assert!(sets.special_path(m, ends), "{g:?}: path {:?} is not special", ex.vertices);
        }
    }
}

fn alive_mask(alive: &[bool]) -> u32 {
    alive.iter().enumerate().filter(|(_, &a)| a).fold(0, |m, (v, _)| m | 1 << v)
}

#[test]
fn extractions_are_special_on_every_small_connected_graph() {
    let mut checked = 0;
    for n in 3..=7 {
        for g in graphs_max_degree_3(n) {
            if !g.is_connected() {
                continue;
            }
            let alive = vec![true; n];
            let sets = InducedSets::new(&g, alive_mask(&alive));
            for v in 0..n {
                check_extraction(&g, &alive, Seed::Vertex(v), &sets);
            }
            if let Some(cycle) = find_induced_cycle(Ambient::whole(&g), 0) {
                assert!(sets.cycles.contains(&mask_of(&cycle)), "{g:?}: {cycle:?}");
                check_extraction(&g, &alive, Seed::Cycle(&cycle), &sets);
            }
            checked += 1;
        }
    }
    assert!(checked > 10_000, "only {checked} graphs");
}

#[test]
fn extractions_are_special_on_labelled_cubic_graphs_of_order_8() {
    let graphs = labelled_cubic_graphs(8);
    for g in graphs.iter().step_by(7) {
        let alive = vec![true; 8];
        let sets = InducedSets::new(g, 0xff);
        for v in 0..8 {
            check_extraction(g, &alive, Seed::Vertex(v), &sets);
        }
    }
}

/// Orders the vertices of an induced path mask from its smaller end point.
fn path_order(g: &Graph, mask: u32) -> Vec<usize> {
    let inside = |v: usize| mask >> v & 1 == 1;
    let members: Vec<usize> = (0..g.vertex_count()).filter(|&v| inside(v)).collect();
    let deg = |v: usize| g.neighbors(v).iter().filter(|&&w| inside(w)).count();
    let start = *members.iter().find(|&&v| deg(v) <= 1).unwrap();
    let mut order = vec![start];
    while order.len() < members.len() {
        let last = *order.last().unwrap();
        let next = g.neighbors(last).into_iter().find(|&w| inside(w) && !order.contains(&w)).unwrap();
        order.push(next);
    }
    order
}

fn cycle_order(g: &Graph, mask: u32) -> Vec<usize> {
    let inside = |v: usize| mask >> v & 1 == 1;
    let start = mask.trailing_zeros() as usize;
    let mut order = vec![start];
    loop {
        let last = *order.last().unwrap();
        match g.neighbors(last).into_iter().find(|&w| inside(w) && !order.contains(&w)) {
            Some(w) => order.push(w),
            None => return order,
        }
    }
}

/// The local tests used by the extractor agree with the definitions on every
/// induced path and cycle of every small graph.
fn compare_local_and_global(g: &Graph, alive: &[bool]) {
    let sets = InducedSets::new(g, alive_mask(alive));
    let amb = Ambient::restricted(g, alive);
    for &c in &sets.cycles {
        let order = cycle_order(g, c);
        let ws = load_structure(amb, StructureKind::Cycle, &order);
        let brute: Vec<usize> = order.iter().copied().filter(|&x| sets.removable_from_cycle(c, x)).collect();
        let mut brute = brute;
        brute.sort_unstable();
        assert_eq!(removables_from_scratch(amb, &ws), brute, "{g:?} cycle {order:?}");
        assert_eq!(is_special(amb, &ws), sets.special_cycle(c), "{g:?} cycle {order:?}");
    }
    for &p in &sets.paths {
        let order = path_order(g, p);
        let ws = load_structure(amb, StructureKind::Path, &order);
        let ends = (order[0], *order.last().unwrap());
        assert_eq!(is_special(amb, &ws), sets.special_path(p, ends), "{g:?} path {order:?}");
    }
}

#[test]
fn local_tests_match_definitions_exhaustively() {
    for n in 1..=6 {
        for g in graphs_max_degree_3(n) {
            compare_local_and_global(&g, &vec![true; n]);
        }
    }
}

fn small_graph() -> impl Strategy<Value = (Graph, Vec<bool>)> {
    (4usize..=9).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        (Just(n), Just(pairs), proptest::collection::vec(any::<bool>(), m), proptest::collection::vec(0u8..5, n))
            .prop_map(|(n, pairs, pick, alive)| {
                let mut degree = vec![0; n];
                let mut edges = Vec::new();
                for (&(u, v), take) in pairs.iter().zip(pick) {
                    if take && degree[u] < 3 && degree[v] < 3 {
                        degree[u] += 1;
                        degree[v] += 1;
                        edges.push((u, v));
                    }
                }
                let alive = alive.into_iter().map(|a| a != 0).collect();
                (Graph::from_edges(n, edges).unwrap(), alive)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn local_tests_match_definitions_with_dead_vertices((g, alive) in small_graph()) {
        compare_local_and_global(&g, &alive);
    }

    #[test]
    fn audited_extraction_from_any_alive_vertex((g, alive) in small_graph()) {
        let sets = InducedSets::new(&g, alive_mask(&alive));
        for v in (0..g.vertex_count()).filter(|&v| alive[v]) {
            check_extraction(&g, &alive, Seed::Vertex(v), &sets);
        }
    }

    #[test]
    fn audited_extraction_on_larger_graphs(n in (2usize..=40).prop_map(|k| 2 * k), seed in any::<u64>(), drop in 0.0f64..0.4) {
        let g = remove_random_edges(&random_cubic(n, seed).unwrap(), drop, seed);
        let mut alive = vec![true; n];
        let mut finder = SpecialFinder::new(n).with_audit(true);
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            let ex = finder.find(Ambient::restricted(&g, &alive), Seed::Vertex(v));
            let ex = ex.map_err(|e| TestCaseError::fail(format!("{g:?}: {e}")))?;
            prop_assert!(ex.within_iteration_bound());
            for &s in &ex.vertices {
                alive[s] = false;
                for w in g.neighbors(s) {
                    alive[w] = false;
                }
            }
        }
    }

    #[test]
    fn bfs_cycles_are_induced(n in (2usize..=60).prop_map(|k| 2 * k), seed in any::<u64>(), root in 0usize..4) {
        let g = random_cubic(n, seed).unwrap();
        let cycle = find_induced_cycle(Ambient::whole(&g), root).unwrap();
        let inside: std::collections::HashSet<usize> = cycle.iter().copied().collect();
        prop_assert_eq!(inside.len(), cycle.len());
        for (i, &v) in cycle.iter().enumerate() {
            prop_assert!(g.has_edge(v, cycle[(i + 1) % cycle.len()]));
            prop_assert_eq!(g.neighbors(v).iter().filter(|w| inside.contains(w)).count(), 2);
        }
    }
}

#[test]
fn forests_have_no_induced_cycle() {
    let g = Graph::from_edges(7, [(0, 1), (1, 2), (1, 3), (4, 5), (5, 6)]).unwrap();
    for root in 0..7 {
        assert_eq!(find_induced_cycle(Ambient::whole(&g), root), None);
    }
}

#[test]
fn update_and_iteration_bounds_on_large_graphs() {
    for seed in 0..5 {
        let g = random_cubic(3000, seed).unwrap();
        let p = primary_partition(&g).unwrap();
        for e in &p.extractions {
            assert!(e.max_touched <= TOUCH_LIMIT, "touched {}", e.max_touched);
            assert!(e.iterations <= 2 * e.size + 2);
        }
    }
}
