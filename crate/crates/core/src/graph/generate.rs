//! Seeded random instances.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError};

/// Uniform random simple cubic graph via the configuration model, rejecting
/// pairings with loops or parallel edges.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph, GraphError> {
    if n < 4 || n % 2 == 1 {
        return Err(GraphError::BadCubicOrder(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..3 * n).map(|i| i / 3).collect();
    let mut adj = vec![[usize::MAX; 3]; n];
    let mut deg = vec![0u8; n];
    'attempt: loop {
        stubs.shuffle(&mut rng);
        deg.fill(0);
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || adj[u][..deg[u] as usize].contains(&v) {
                continue 'attempt;
            }
            adj[u][deg[u] as usize] = v;
            adj[v][deg[v] as usize] = u;
            deg[u] += 1;
            deg[v] += 1;
        }
        let edges = stubs.chunks_exact(2).map(|p| (p[0], p[1]));
        return Graph::from_edges(n, edges);
    }
}

/// Removes `round(fraction * m)` edges chosen uniformly at random.
pub fn remove_random_edges(g: &Graph, fraction: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let drop = ((fraction.clamp(0.0, 1.0) * edges.len() as f64).round() as usize).min(edges.len());
    edges.shuffle(&mut rng);
    Graph::from_edges(g.vertex_count(), edges.into_iter().skip(drop)).expect("subgraph of a simple graph")
}
