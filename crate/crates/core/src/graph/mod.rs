//! Simple undirected graphs of maximum degree three.
//!
//! Vertices are `0..n`. Every graph built through [`Graph::from_edges`] is
//! simple: no loops, no parallel edges.

mod completion;
mod generate;
mod io;
pub mod named;

use std::fmt;

pub use completion::{complete_to_cubic, CubicCompletion};
pub use generate::{random_cubic, remove_random_edges};
pub use io::{parse_graph, serialize_graph, Format};

/// What went wrong while reading an input file.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} has degree {degree}; at most 3 is supported")]
    DegreeTooLarge { vertex: usize, degree: usize },
    #[error("random cubic graphs need an even order of at least 4, got {0}")]
    BadCubicOrder(usize),
    #[error("the graph has no vertices")]
    Empty,
}

impl GraphError {
    pub(crate) fn at_line(line: usize, kind: ParseErrorKind) -> Self {
        GraphError::Parse { line, kind }
    }
}

/// Largest vertex degree a [`Graph`] can hold.
pub const MAX_DEGREE: usize = 3;

/// Adjacency of one vertex, 16 bytes so that lookups stay within one cache
/// line and large graphs stay compact.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
#[repr(align(16))]
struct Row {
    degree: u32,
    nbrs: [u32; MAX_DEGREE],
}

/// Neighbours of one vertex in increasing order, returned by value.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Neighbors {
    len: usize,
    items: [usize; MAX_DEGREE],
}

impl std::ops::Deref for Neighbors {
    type Target = [usize];

    #[inline]
    fn deref(&self) -> &[usize] {
        &self.items[..self.len]
    }
}

impl IntoIterator for Neighbors {
    type Item = usize;
    type IntoIter = std::iter::Take<std::array::IntoIter<usize, MAX_DEGREE>>;

    #[inline]
    fn into_iter(self) -> Self::IntoIter {
        self.items.into_iter().take(self.len)
    }
}

impl fmt::Debug for Neighbors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}

impl<const K: usize> PartialEq<[usize; K]> for Neighbors {
    fn eq(&self, other: &[usize; K]) -> bool {
        **self == other[..]
    }
}

/// An undirected simple graph of maximum degree three with sorted neighbour
/// lists. Vertex ids must fit in 32 bits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<Row>,
    edge_count: usize,
}

impl Graph {
    /// Graph on `n` vertices without edges.
    ///
    /// # Panics
    /// If `n` does not fit in 32 bits.
    pub fn empty(n: usize) -> Self {
        assert!(u32::try_from(n).is_ok(), "graphs are limited to 2^32 - 1 vertices");
        Graph { rows: vec![Row { degree: 0, nbrs: [0; MAX_DEGREE] }; n], edge_count: 0 }
    }

    /// Builds a graph from an edge list. Edges may be given in either
    /// orientation, but each unordered pair at most once.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        let mut degree = vec![0usize; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for (a, b) in [(u, v), (v, u)] {
                let row = &mut g.rows[a];
                let d = row.degree as usize;
                if row.nbrs[..d].contains(&(b as u32)) {
                    return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
                }
                degree[a] += 1;
                if d == MAX_DEGREE {
                    continue;
                }
                row.nbrs[d] = b as u32;
                row.degree += 1;
            }
            g.edge_count += 1;
        }
        if let Some(vertex) = (0..n).find(|&v| degree[v] > MAX_DEGREE) {
            return Err(GraphError::DegreeTooLarge { vertex, degree: degree[vertex] });
        }
        for row in &mut g.rows {
            row.nbrs[..row.degree as usize].sort_unstable();
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Neighbours of `v` in increasing order.
    #[inline]
    pub fn neighbors(&self, v: usize) -> Neighbors {
        let row = &self.rows[v];
        Neighbors { len: row.degree as usize, items: row.nbrs.map(|w| w as usize) }
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].degree as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.degree(v) == 3)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let row = &self.rows[u];
        row.nbrs[..row.degree as usize].contains(&(v as u32))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count())
            .flat_map(move |u| self.neighbors(u).into_iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Subgraph induced by the first `k` vertices.
    pub fn induced_prefix(&self, k: usize) -> Graph {
        let k = k.min(self.vertex_count());
        let edges = self.edges().filter(|&(_, v)| v < k);
        Graph::from_edges(k, edges).expect("subgraph of a simple graph is simple")
    }

    /// Connected component label of every vertex, numbered in order of their
    /// smallest vertex.
    pub fn component_labels(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut stack = Vec::new();
        let mut next = 0;
        for root in 0..n {
            if label[root] != usize::MAX {
                continue;
            }
            label[root] = next;
            stack.push(root);
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels().iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
