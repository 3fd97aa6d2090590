//! Vertex classification of a cubic graph.
//!
//! Special structures are extracted repeatedly and removed together with
//! their neighbours. The extracted vertices, their neighbours and the
//! leftover vertices are then refined into ten classes. Neighbour vertices
//! that see two leftover vertices become anchors that absorb small groups of
//! leftovers. The remaining neighbours, together with anchored vertices that
//! see two neighbours and path end points, form a graph of maximum degree
//! two whose components are called chains.

mod chains;
mod fine;
mod primary;
mod validate;

use serde::Serialize;

use crate::graph::Graph;
use crate::special::{ExtractError, StructureKind};

pub use chains::{build_chains, Chain, ChainKind};
pub use fine::{fine_partition, AnchorGroup, GroupShape};
pub use primary::{primary_partition, ExtractionStats, Primary, Region, SpecialComponent};
pub use validate::{validate_partition, Clause, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexClass {
    /// On an extracted cycle.
    Cycle,
    /// End point of an extracted path.
    PathEnd,
    /// Interior path vertex next to an end point.
    PathSecondEnd,
    /// Any other interior path vertex.
    PathInner,
    /// Neighbour vertex at the end of a chain path.
    NeighborEnd,
    /// Neighbour vertex inside a chain.
    NeighborInner,
    /// Neighbour vertex that absorbed two leftover vertices.
    Anchor,
    /// Absorbed leftover with one neighbour-class vertex adjacent.
    AnchoredSingle,
    /// Absorbed leftover with two neighbour-class vertices adjacent.
    AnchoredDouble,
    /// Leftover vertex not absorbed by any anchor.
    Free,
}

impl VertexClass {
    pub fn is_extracted(self) -> bool {
        matches!(self, Self::Cycle | Self::PathEnd | Self::PathSecondEnd | Self::PathInner)
    }

    pub fn is_path(self) -> bool {
        matches!(self, Self::PathEnd | Self::PathSecondEnd | Self::PathInner)
    }

    pub fn is_neighbor(self) -> bool {
        matches!(self, Self::NeighborEnd | Self::NeighborInner)
    }

    pub fn is_anchored(self) -> bool {
        matches!(self, Self::AnchoredSingle | Self::AnchoredDouble)
    }

    /// Member of the graph on which chains are formed.
    pub fn is_chain_member(self) -> bool {
        self.is_neighbor() || matches!(self, Self::AnchoredDouble | Self::PathEnd)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum PartitionError {
    #[error(transparent)]
    Extract(#[from] ExtractError),
    #[error("partition property violated: {0}")]
    Violation(#[from] Violation),
}

/// Complete classification of a cubic graph.
#[derive(Debug, Clone, Serialize)]
pub struct Partition {
    pub classes: Vec<VertexClass>,
    pub specials: Vec<SpecialComponent>,
    pub groups: Vec<AnchorGroup>,
    pub chains: Vec<Chain>,
    /// Unique neighbour-class vertex adjacent to a cycle, second-end,
    /// anchored-single or path-inner vertex.
    pub link: Vec<Option<usize>>,
    /// Unique path-inner vertex adjacent to an anchor.
    pub base: Vec<Option<usize>>,
    #[serde(skip)]
    pub extractions: Vec<ExtractionStats>,
}

impl Partition {
    /// Runs every stage and validates the result.
    pub fn build(g: &Graph) -> Result<Partition, PartitionError> {
        let partition = Self::build_unchecked(g)?;
        validate_partition(g, &partition)?;
        Ok(partition)
    }

    pub fn build_unchecked(g: &Graph) -> Result<Partition, PartitionError> {
        let n = g.vertex_count();
        let primary = primary_partition(g)?;
        let groups = fine_partition(g, &primary);
        let mut classes: Vec<VertexClass> = primary
            .region
            .iter()
            .map(|r| match r {
                Region::Extracted => VertexClass::Cycle,
                Region::Neighbor => VertexClass::NeighborInner,
                Region::Rest => VertexClass::Free,
            })
            .collect();
        refine_extracted(&primary.specials, &mut classes);
        for group in &groups {
            classes[group.anchor] = VertexClass::Anchor;
            for b in group.absorbed() {
                classes[b] = VertexClass::AnchoredSingle;
            }
        }
        for group in &groups {
            for b in group.absorbed() {
                if count_neighbors(g, &classes, b, VertexClass::is_neighbor) == 2 {
                    classes[b] = VertexClass::AnchoredDouble;
                }
            }
        }
        let chains = build_chains(g, &classes)?;
        for chain in &chains {
            if chain.kind == ChainKind::Path {
                for end in [chain.vertices[0], *chain.vertices.last().unwrap()] {
                    if classes[end].is_neighbor() {
                        classes[end] = VertexClass::NeighborEnd;
                    }
                }
            }
        }
        let mut link = vec![None; n];
        let mut base = vec![None; n];
        for v in 0..n {
            match classes[v] {
                VertexClass::Cycle
                | VertexClass::PathSecondEnd
                | VertexClass::PathInner
                | VertexClass::AnchoredSingle => link[v] = unique_neighbor(g, &classes, v, VertexClass::is_neighbor),
                VertexClass::Anchor => base[v] = unique_neighbor(g, &classes, v, |c| c == VertexClass::PathInner),
                _ => {}
            }
        }
        Ok(Partition {
            classes,
            specials: primary.specials,
            groups,
            chains,
            link,
            base,
            extractions: primary.extractions,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.classes.len()
    }

    pub fn count(&self, class: VertexClass) -> usize {
        self.classes.iter().filter(|&&c| c == class).count()
    }

    /// Number of vertices on chains.
    pub fn chain_vertex_count(&self) -> usize {
        self.chains.iter().map(|c| c.vertices.len()).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("partition serialises")
    }
}

fn refine_extracted(specials: &[SpecialComponent], classes: &mut [VertexClass]) {
    for special in specials {
        let vs = &special.vertices;
        match special.kind {
            StructureKind::Cycle => vs.iter().for_each(|&v| classes[v] = VertexClass::Cycle),
            StructureKind::Path => {
                let t = vs.len();
                for (i, &v) in vs.iter().enumerate() {
                    classes[v] = if i == 0 || i + 1 == t {
                        VertexClass::PathEnd
                    } else if i == 1 || i + 2 == t {
                        VertexClass::PathSecondEnd
                    } else {
                        VertexClass::PathInner
                    };
                }
            }
        }
    }
}

pub(crate) fn count_neighbors(
    g: &Graph,
    classes: &[VertexClass],
    v: usize,
    pred: impl Fn(VertexClass) -> bool,
) -> usize {
    g.neighbors(v).iter().filter(|&&w| pred(classes[w])).count()
}

pub(crate) fn unique_neighbor(
    g: &Graph,
    classes: &[VertexClass],
    v: usize,
    pred: impl Fn(VertexClass) -> bool,
) -> Option<usize> {
    let mut it = g.neighbors(v).into_iter().filter(|&w| pred(classes[w]));
    let first = it.next()?;
    it.next().is_none().then_some(first)
}
