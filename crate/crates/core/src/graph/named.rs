//! Small named cubic graphs used in tests and examples.

use super::Graph;

pub fn k4() -> Graph {
    Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

pub fn k33() -> Graph {
    let edges = (0..3).flat_map(|u| (3..6).map(move |v| (u, v)));
    Graph::from_edges(6, edges).unwrap()
}

/// The 3-dimensional hypercube.
pub fn cube() -> Graph {
    let edges = (0..8usize).flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b)))).filter(|&(u, v)| u < v);
    Graph::from_edges(8, edges).unwrap()
}

/// Triangular prism.
pub fn prism() -> Graph {
    generalized_petersen(3, 1)
}

pub fn petersen() -> Graph {
    generalized_petersen(5, 2)
}

pub fn mobius_kantor() -> Graph {
    generalized_petersen(8, 3)
}

/// Outer cycle `0..k`, spokes `i ~ k + i`, inner vertices `k + i ~ k + (i + step) mod k`.
pub fn generalized_petersen(k: usize, step: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((i, k + i));
        edges.push((k + i, k + (i + step) % k));
    }
    edges.iter_mut().for_each(|e| *e = (e.0.min(e.1), e.0.max(e.1)));
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(2 * k, edges).unwrap()
}

/// All named graphs with their display names.
pub fn all() -> Vec<(&'static str, Graph)> {
    vec![
        ("K4", k4()),
        ("K3,3", k33()),
        ("cube", cube()),
        ("prism", prism()),
        ("Mobius-Kantor", mobius_kantor()),
        ("Petersen", petersen()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_cubic_with_expected_orders() {
        let orders: Vec<usize> = all().iter().map(|(_, g)| g.vertex_count()).collect();
        assert_eq!(orders, vec![4, 6, 8, 6, 16, 10]);
        for (name, g) in all() {
            assert!(g.is_cubic(), "{name}");
            assert!(g.is_connected(), "{name}");
        }
    }
}
