//! Linear orders used to place intervals: one over free vertices, one along
//! chains and one along extracted structures.

use crate::graph::Graph;
use crate::partition::{ChainKind, Partition, VertexClass};
use crate::special::StructureKind;

use super::IntervalError;

/// Ranks are 1-based; 0 marks vertices outside the ordered set.
#[derive(Debug, Clone)]
pub struct Orderings {
    pub free_rank: Vec<usize>,
    pub free_count: usize,
    pub chain_rank: Vec<usize>,
    pub chain_kind: Vec<Option<ChainKind>>,
    pub special_rank: Vec<usize>,
    /// Extracted structures in ranking order; cycles start at their lead
    /// vertex.
    pub special_sequences: Vec<(StructureKind, Vec<usize>)>,
}

impl Orderings {
    pub fn build(g: &Graph, p: &Partition) -> Result<Orderings, IntervalError> {
        let n = g.vertex_count();

        // Free vertices by id, each free edge kept consecutive.
        let mut free_rank = vec![0; n];
        let mut next = 1;
        for v in 0..n {
            if p.classes[v] != VertexClass::Free || free_rank[v] != 0 {
                continue;
            }
            free_rank[v] = next;
            next += 1;
            if let Some(&w) = g.neighbors(v).iter().find(|&&w| p.classes[w] == VertexClass::Free) {
                free_rank[w] = next;
                next += 1;
            }
        }
        let free_count = next - 1;

        let mut chain_rank = vec![0; n];
        let mut chain_kind = vec![None; n];
        let mut rank = 0;
        for chain in &p.chains {
            for &v in &chain.vertices {
                rank += 1;
                chain_rank[v] = rank;
                chain_kind[v] = Some(chain.kind);
            }
        }
        if n >= 2 && rank > n - 2 {
            return Err(IntervalError::ChainRank { rank, limit: n - 2 });
        }

        let mut orderings = Orderings {
            free_rank,
            free_count,
            chain_rank,
            chain_kind,
            special_rank: vec![0; n],
            special_sequences: Vec::with_capacity(p.specials.len()),
        };
        let mut rank = 0;
        for special in &p.specials {
            let mut seq = special.vertices.clone();
            if special.kind == StructureKind::Cycle {
                let lead = orderings.lead_vertex(p, &seq)?;
                let at = seq.iter().position(|&v| v == lead).unwrap();
                seq.rotate_left(at);
                if seq[1] > seq[seq.len() - 1] {
                    seq[1..].reverse();
                }
            }
            for &v in &seq {
                rank += 1;
                orderings.special_rank[v] = rank;
            }
            orderings.special_sequences.push((special.kind, seq));
        }
        Ok(orderings)
    }

    /// Left end of a chain neighbour vertex on the first axis, in units.
    pub fn chain_left(&self, z: usize, n: usize) -> i64 {
        let offset = if self.chain_kind[z] == Some(ChainKind::Alternating) { 0 } else { n };
        (offset + self.chain_rank[z]) as i64
    }

    /// Cycle vertex whose linked neighbour vertex starts leftmost on the
    /// first axis; ties go to the smaller id.
    fn lead_vertex(&self, p: &Partition, cycle: &[usize]) -> Result<usize, IntervalError> {
        let n = p.vertex_count();
        let mut best: Option<(i64, usize)> = None;
        for &c in cycle {
            let z = p.link[c].ok_or(IntervalError::MissingLink { vertex: c, what: "neighbour link" })?;
            let key = (self.chain_left(z, n), c);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        Ok(best.expect("cycles are non-empty").1)
    }
}
