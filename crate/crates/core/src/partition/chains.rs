//! Components of the graph induced by neighbour vertices, anchored vertices
//! with two neighbour-class neighbours, and path end points.

use serde::Serialize;

use super::validate::{Clause, Violation};
use super::VertexClass;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainKind {
    /// Cycle alternating between neighbour vertices and the others; starts
    /// at a neighbour vertex.
    Alternating,
    /// Any other cycle; first and last vertices are adjacent neighbour vertices.
    Mixed,
    /// Path (possibly a single vertex) with neighbour vertices at both ends.
    Path,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Chain {
    pub kind: ChainKind,
    pub vertices: Vec<usize>,
}

/// Chains ordered alternating cycles first, then mixed cycles, then paths;
/// within a kind by smallest vertex.
pub fn build_chains(g: &Graph, classes: &[VertexClass]) -> Result<Vec<Chain>, Violation> {
    let n = g.vertex_count();
    let member = |v: usize| classes[v].is_chain_member();
    let is_n = |v: usize| classes[v].is_neighbor();
    let mut seen = vec![false; n];
    let mut chains = Vec::new();
    let mut component = Vec::new();
    let mut stack = Vec::new();
    let links = |v: usize| g.neighbors(v).into_iter().filter(move |&w| member(w));
    for root in 0..n {
        if !member(root) || seen[root] {
            continue;
        }
        component.clear();
        seen[root] = true;
        stack.push(root);
        while let Some(v) = stack.pop() {
            component.push(v);
            if links(v).count() > 2 {
                return Err(Violation::new(Clause::ChainDegree, vec![v]));
            }
            for w in links(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        let ends: Vec<usize> = component.iter().copied().filter(|&v| links(v).count() <= 1).collect();
        let (kind, start, second) = if component.len() == 1 {
            (ChainKind::Path, root, None)
        } else if !ends.is_empty() {
            let start = *ends.iter().min().unwrap();
            (ChainKind::Path, start, links(start).next())
        } else {
            let alternating =
                component.len() % 2 == 0 && component.iter().all(|&v| links(v).all(|w| is_n(v) != is_n(w)));
            if alternating {
                let start = component.iter().copied().filter(|&v| is_n(v)).min().unwrap();
                (ChainKind::Alternating, start, links(start).min())
            } else {
                // Smallest ordered pair (last, first) of adjacent neighbour vertices.
                let mut nv: Vec<usize> = component.iter().copied().filter(|&v| is_n(v)).collect();
                nv.sort_unstable();
                let pair = nv.iter().find_map(|&last| links(last).filter(|&w| is_n(w)).min().map(|f| (last, f)));
                let Some((last, first)) = pair else {
                    return Err(Violation::new(Clause::ChainKind, component.clone()));
                };
                let next = links(first).find(|&w| w != last);
                (ChainKind::Mixed, first, next)
            }
        };
        let mut order = vec![start];
        if let Some(mut cur) = second {
            let mut prev = start;
            while cur != start {
                order.push(cur);
                match links(cur).find(|&w| w != prev) {
                    Some(next) => {
                        prev = cur;
                        cur = next;
                    }
                    None => break,
                }
            }
        }
        debug_assert_eq!(order.len(), component.len());
        chains.push(Chain { kind, vertices: order });
    }
    chains.sort_by_key(|c| c.kind);
    Ok(chains)
}
