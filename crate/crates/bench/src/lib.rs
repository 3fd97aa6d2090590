//! Fixed benchmark inputs.

use cubicbox::graph::{random_cubic, remove_random_edges};
use cubicbox::Graph;

/// Orders used by the scaling benchmarks.
pub const SIZES: [usize; 4] = [10_000, 100_000, 200_000, 400_000];

/// Random cubic graph of order `n`, seeded by `n`.
pub fn cubic(n: usize) -> Graph {
    random_cubic(n, n as u64).expect("benchmark orders are even")
}

/// Cubic graph of order `n` with a fifth of its edges removed.
pub fn sparse(n: usize) -> Graph {
    remove_random_edges(&cubic(n), 0.2, n as u64)
}
