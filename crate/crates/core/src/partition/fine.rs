//! Anchors: neighbour vertices that absorb the leftovers around them.

use serde::Serialize;

use super::primary::{Primary, Region};
use crate::graph::Graph;

/// How the absorbed vertices of a group are joined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupShape {
    /// The two vertices next to the anchor are adjacent.
    Triangle,
    /// Two non-adjacent vertices, nothing else.
    Open,
    /// Open, plus a tail on the first vertex.
    FirstTail,
    /// Open, plus a tail on the second vertex.
    SecondTail,
    /// Open, plus tails on both.
    BothTails,
}

/// An anchor with the leftover vertices it absorbed. `first < second` are
/// its leftover neighbours; tails hang off them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnchorGroup {
    pub anchor: usize,
    pub first: usize,
    pub second: usize,
    pub first_tail: Option<usize>,
    pub second_tail: Option<usize>,
    pub shape: GroupShape,
}

impl AnchorGroup {
    pub fn absorbed(&self) -> impl Iterator<Item = usize> + '_ {
        [Some(self.first), Some(self.second), self.first_tail, self.second_tail].into_iter().flatten()
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(self.anchor).chain(self.absorbed())
    }

    /// Edges of the group in the shape it claims, as unordered pairs.
    pub fn expected_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = vec![(self.anchor, self.first), (self.anchor, self.second)];
        if self.shape == GroupShape::Triangle {
            edges.push((self.first, self.second));
        }
        if let Some(t) = self.first_tail {
            edges.push((self.first, t));
        }
        if let Some(t) = self.second_tail {
            edges.push((self.second, t));
        }
        edges
    }
}

/// Scans neighbour vertices in increasing order; one that still sees two
/// unabsorbed leftovers absorbs them and their unabsorbed leftover neighbours.
pub fn fine_partition(g: &Graph, primary: &Primary) -> Vec<AnchorGroup> {
    let n = g.vertex_count();
    let rest = |v: usize| primary.region[v] == Region::Rest;
    let mut absorbed = vec![false; n];
    let mut groups = Vec::new();
    for v in 0..n {
        if primary.region[v] != Region::Neighbor {
            continue;
        }
        let free: Vec<usize> = g.neighbors(v).into_iter().filter(|&w| rest(w) && !absorbed[w]).collect();
        if free.len() != 2 {
            continue;
        }
        let (first, second) = (free[0], free[1]);
        let tail_of =
            |x: usize, other: usize| g.neighbors(x).into_iter().find(|&w| w != other && rest(w) && !absorbed[w]);
        let first_tail = tail_of(first, second);
        let second_tail = tail_of(second, first);
        let shape = match (g.has_edge(first, second), first_tail, second_tail) {
            (true, _, _) => GroupShape::Triangle,
            (false, None, None) => GroupShape::Open,
            (false, Some(_), None) => GroupShape::FirstTail,
            (false, None, Some(_)) => GroupShape::SecondTail,
            (false, Some(_), Some(_)) => GroupShape::BothTails,
        };
        let group = AnchorGroup { anchor: v, first, second, first_tail, second_tail, shape };
        for b in group.absorbed() {
            absorbed[b] = true;
        }
        groups.push(group);
    }
    groups
}
