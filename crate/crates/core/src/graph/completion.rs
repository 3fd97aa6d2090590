//! Embedding a graph of maximum degree three as an induced subgraph of a
//! cubic graph.

use super::{Graph, GraphError};

/// A cubic supergraph whose first `original_count` vertices induce the input.
#[derive(Debug, Clone)]
pub struct CubicCompletion {
    pub graph: Graph,
    pub original_count: usize,
}

/// Adds a cycle whose length equals the total degree deficit and attaches
/// every deficient vertex to fresh cycle vertices. When the deficit is 1 or 2
/// disjoint 4-cycles are added first so that the cycle has at least 3 vertices.
pub fn complete_to_cubic(h: &Graph) -> Result<CubicCompletion, GraphError> {
    let n = h.vertex_count();
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let mut deficits: Vec<(usize, usize)> = (0..n).filter(|&v| h.degree(v) < 3).map(|v| (v, 3 - h.degree(v))).collect();
    let mut total: usize = deficits.iter().map(|d| d.1).sum();
    if total == 0 {
        return Ok(CubicCompletion { graph: h.clone(), original_count: n });
    }
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    let mut next = n;
    while total < 3 {
        for i in 0..4 {
            edges.push((next + i, next + (i + 1) % 4));
            deficits.push((next + i, 1));
        }
        next += 4;
        total += 4;
    }
    let ring = next;
    for i in 0..total {
        edges.push((ring + i, ring + (i + 1) % total));
    }
    let mut slot = 0;
    for (v, k) in deficits {
        for _ in 0..k {
            edges.push((v, ring + slot));
            slot += 1;
        }
    }
    let graph = Graph::from_edges(ring + total, edges)?;
    debug_assert!(graph.is_cubic());
    Ok(CubicCompletion { graph, original_count: n })
}
