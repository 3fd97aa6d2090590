//! Structural checks on a finished partition. Every check is local, so the
//! whole validation runs in linear time and is always part of the pipeline.

use std::fmt;

use super::{count_neighbors, unique_neighbor, ChainKind, GroupShape, Partition, VertexClass};
use crate::graph::Graph;
use crate::special::StructureKind;

/// A named property of the partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    FreeVsExtracted,
    AnchorVsFreeOrNeighbor,
    FreeVsAnchored,
    CycleVsPath,
    AnchorVsOuterExtracted,
    ExtractedVsAnchored,
    PathEndVsPathEnd,
    PathEndVsPathInner,
    InnerNeighborVsFree,
    AnchorVsAnchor,
    NeighborEndFreeCount,
    AnchoredSingleNeighborCount,
    AnchoredDoubleNeighborCount,
    CycleOrSecondEndNeighborCount,
    PathInnerUpperCount,
    AnchorBaseCount,
    PathEndNeighborCount,
    SpecialInduced,
    SpecialsSeparated,
    ExtractedHasNeighbor,
    LeftoverDegree,
    NeighborFreeCount,
    AnchorNeighborhood,
    GroupShape,
    GroupsCoverAnchored,
    ChainDegree,
    ChainEnds,
    ChainKind,
    ChainsCoverMembers,
    NeighborSeesCore,
    ChainInteriorIndependent,
    DoubleChainNeighborThird,
    ChainSize,
    Links,
}

impl Clause {
    pub fn description(self) -> &'static str {
        use Clause::*;
        match self {
            FreeVsExtracted => "free vertices are not adjacent to extracted vertices",
            AnchorVsFreeOrNeighbor => "anchors are not adjacent to free or neighbour vertices",
            FreeVsAnchored => "free vertices are not adjacent to anchored vertices",
            CycleVsPath => "cycle vertices are not adjacent to path vertices",
            AnchorVsOuterExtracted => "anchors are not adjacent to cycle, end or second-end vertices",
            ExtractedVsAnchored => "extracted vertices are not adjacent to anchored vertices",
            PathEndVsPathEnd => "path end points are pairwise non-adjacent",
            PathEndVsPathInner => "path end points are not adjacent to inner path vertices",
            InnerNeighborVsFree => "inner neighbour vertices are not adjacent to free vertices",
            AnchorVsAnchor => "anchors are pairwise non-adjacent",
            NeighborEndFreeCount => "a chain-end neighbour vertex sees at most one free vertex",
            AnchoredSingleNeighborCount => "an anchored-single vertex sees exactly one neighbour vertex",
            AnchoredDoubleNeighborCount => "an anchored-double vertex sees exactly two neighbour vertices",
            CycleOrSecondEndNeighborCount => "cycle and second-end vertices see exactly one neighbour vertex",
            PathInnerUpperCount => "an inner path vertex sees exactly one anchor or neighbour vertex",
            AnchorBaseCount => "an anchor sees exactly one inner path vertex",
            PathEndNeighborCount => "a path end point sees exactly two neighbour vertices",
            SpecialInduced => "each extracted structure induces a cycle or a path of at least 3 vertices",
            SpecialsSeparated => "distinct extracted structures are non-adjacent",
            ExtractedHasNeighbor => "every extracted vertex sees a neighbour or anchor vertex",
            LeftoverDegree => "leftover vertices induce a graph of maximum degree 1",
            NeighborFreeCount => "a neighbour vertex sees at most one free vertex",
            AnchorNeighborhood => "an anchor sees one extracted and two anchored vertices",
            GroupShape => "each anchor group induces exactly its declared shape",
            GroupsCoverAnchored => "anchor groups partition anchors and anchored vertices into components",
            ChainDegree => "the chain graph has maximum degree 2",
            ChainEnds => "chain paths end at neighbour vertices",
            ChainKind => "chain kinds and rotations are consistent",
            ChainsCoverMembers => "chains partition the chain graph into its components",
            NeighborSeesCore => "every neighbour or anchor vertex sees a cycle or interior path vertex",
            ChainInteriorIndependent => "anchored-double vertices and path end points are independent",
            DoubleChainNeighborThird => {
                "a neighbour vertex with two anchored-double or end neighbours has its third in the path interior"
            }
            ChainSize => "at most n - 2 vertices lie on chains",
            Links => "recorded link and base vertices are the unique ones",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.description())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{clause} (vertices {vertices:?})")]
pub struct Violation {
    pub clause: Clause,
    pub vertices: Vec<usize>,
}

impl Violation {
    pub fn new(clause: Clause, vertices: Vec<usize>) -> Self {
        Violation { clause, vertices }
    }
}

fn check(ok: bool, clause: Clause, vertices: &[usize]) -> Result<(), Violation> {
    if ok {
        Ok(())
    } else {
        Err(Violation::new(clause, vertices.to_vec()))
    }
}

use VertexClass as V;

/// Two class predicates whose vertices must not be adjacent.
type NonAdjacency = (fn(VertexClass) -> bool, fn(VertexClass) -> bool, Clause);

fn forbidden_edge(a: VertexClass, b: VertexClass) -> Option<Clause> {
    let table: [NonAdjacency; 11] = [
        (|c| c == V::Free, V::is_extracted, Clause::FreeVsExtracted),
        (|c| c == V::Free || c.is_neighbor(), |c| c == V::Anchor, Clause::AnchorVsFreeOrNeighbor),
        (|c| c == V::Free, V::is_anchored, Clause::FreeVsAnchored),
        (|c| c == V::Cycle, V::is_path, Clause::CycleVsPath),
        (|c| matches!(c, V::Cycle | V::PathEnd | V::PathSecondEnd), |c| c == V::Anchor, Clause::AnchorVsOuterExtracted),
        (V::is_extracted, V::is_anchored, Clause::ExtractedVsAnchored),
        (|c| c == V::PathEnd, |c| c == V::PathEnd, Clause::PathEndVsPathEnd),
        (|c| c == V::PathEnd, |c| c == V::PathInner, Clause::PathEndVsPathInner),
        (|c| c == V::NeighborInner, |c| c == V::Free, Clause::InnerNeighborVsFree),
        (|c| c == V::Anchor, |c| c == V::Anchor, Clause::AnchorVsAnchor),
        (
            |c| matches!(c, V::AnchoredDouble | V::PathEnd),
            |c| matches!(c, V::AnchoredDouble | V::PathEnd),
            Clause::ChainInteriorIndependent,
        ),
    ];
    table.iter().find(|(p, q, _)| (p(a) && q(b)) || (p(b) && q(a))).map(|t| t.2)
}

/// Returns the first violated property, if any.
pub fn validate_partition(g: &Graph, p: &Partition) -> Result<(), Violation> {
    let n = g.vertex_count();
    let cls = &p.classes;
    check(cls.len() == n, Clause::Links, &[])?;

    for (u, v) in g.edges() {
        if let Some(clause) = forbidden_edge(cls[u], cls[v]) {
            return Err(Violation::new(clause, vec![u, v]));
        }
    }

    let count = |v: usize, pred: fn(VertexClass) -> bool| count_neighbors(g, cls, v, pred);
    for v in 0..n {
        let c = cls[v];
        let at = [v];
        match c {
            V::NeighborEnd | V::NeighborInner => {
                check(count(v, |c| c == V::Free) <= 1, Clause::NeighborFreeCount, &at)?;
                check(count(v, |c| c.is_extracted() && c != V::PathEnd) >= 1, Clause::NeighborSeesCore, &at)?;
                if count(v, |c| matches!(c, V::AnchoredDouble | V::PathEnd)) == 2 {
                    let third_ok = g
                        .neighbors(v)
                        .iter()
                        .filter(|&&w| !matches!(cls[w], V::AnchoredDouble | V::PathEnd))
                        .all(|&w| cls[w] == V::PathInner);
                    check(third_ok, Clause::DoubleChainNeighborThird, &at)?;
                }
            }
            V::Anchor => {
                check(count(v, V::is_extracted) == 1, Clause::AnchorNeighborhood, &at)?;
                check(count(v, V::is_anchored) == 2, Clause::AnchorNeighborhood, &at)?;
                check(count(v, |c| c == V::PathInner) == 1, Clause::AnchorBaseCount, &at)?;
                check(count(v, |c| c.is_extracted() && c != V::PathEnd) >= 1, Clause::NeighborSeesCore, &at)?;
            }
            V::AnchoredSingle => check(count(v, V::is_neighbor) == 1, Clause::AnchoredSingleNeighborCount, &at)?,
            V::AnchoredDouble => check(count(v, V::is_neighbor) == 2, Clause::AnchoredDoubleNeighborCount, &at)?,
            V::Cycle | V::PathSecondEnd => {
                check(count(v, V::is_neighbor) == 1, Clause::CycleOrSecondEndNeighborCount, &at)?
            }
            V::PathInner => {
                check(count(v, |c| c == V::Anchor || c.is_neighbor()) == 1, Clause::PathInnerUpperCount, &at)?
            }
            V::PathEnd => check(count(v, V::is_neighbor) == 2, Clause::PathEndNeighborCount, &at)?,
            V::Free => {}
        }
        if c == V::NeighborEnd {
            check(count(v, |c| c == V::Free) <= 1, Clause::NeighborEndFreeCount, &at)?;
        }
        if c.is_extracted() {
            check(count(v, |c| c.is_neighbor() || c == V::Anchor) >= 1, Clause::ExtractedHasNeighbor, &at)?;
        }
        if c == V::Free || c.is_anchored() {
            check(count(v, |c| c == V::Free || c.is_anchored()) <= 1, Clause::LeftoverDegree, &at)?;
        }
    }

    check_specials(g, p)?;
    check_groups(g, p)?;
    check_chains(g, p)?;
    check_links(g, p)
}

fn check_specials(g: &Graph, p: &Partition) -> Result<(), Violation> {
    let n = g.vertex_count();
    let mut owner = vec![usize::MAX; n];
    for (i, s) in p.specials.iter().enumerate() {
        for &v in &s.vertices {
            check(owner[v] == usize::MAX && p.classes[v].is_extracted(), Clause::SpecialInduced, &[v])?;
            owner[v] = i;
        }
    }
    for (v, &o) in owner.iter().enumerate() {
        check(p.classes[v].is_extracted() == (o != usize::MAX), Clause::SpecialInduced, &[v])?;
    }
    for (u, v) in g.edges() {
        if owner[u] != usize::MAX && owner[v] != usize::MAX && owner[u] != owner[v] {
            return Err(Violation::new(Clause::SpecialsSeparated, vec![u, v]));
        }
    }
    for (i, s) in p.specials.iter().enumerate() {
        let vs = &s.vertices;
        let t = vs.len();
        check(t >= 3, Clause::SpecialInduced, vs)?;
        let cycle = s.kind == StructureKind::Cycle;
        for (k, &v) in vs.iter().enumerate() {
            let inside = g.neighbors(v).iter().filter(|&&w| owner[w] == i).count();
            let expected = if cycle || (k > 0 && k + 1 < t) { 2 } else { 1 };
            check(inside == expected, Clause::SpecialInduced, &[v])?;
            if k + 1 < t {
                check(g.has_edge(v, vs[k + 1]), Clause::SpecialInduced, &[v, vs[k + 1]])?;
            }
        }
        if cycle {
            check(g.has_edge(vs[0], vs[t - 1]), Clause::SpecialInduced, &[vs[0], vs[t - 1]])?;
        }
    }
    Ok(())
}

fn check_groups(g: &Graph, p: &Partition) -> Result<(), Violation> {
    let n = g.vertex_count();
    let mut owner = vec![usize::MAX; n];
    for (i, group) in p.groups.iter().enumerate() {
        let members: Vec<usize> = group.members().collect();
        check(p.classes[group.anchor] == V::Anchor, Clause::GroupsCoverAnchored, &members)?;
        for &b in &members[1..] {
            check(p.classes[b].is_anchored(), Clause::GroupsCoverAnchored, &members)?;
        }
        for &v in &members {
            check(owner[v] == usize::MAX, Clause::GroupsCoverAnchored, &members)?;
            owner[v] = i;
        }
        let tails = group.first_tail.is_some() as u8 + group.second_tail.is_some() as u8;
        let declared = match (g.has_edge(group.first, group.second), group.first_tail, group.second_tail) {
            (true, None, None) => GroupShape::Triangle,
            (false, None, None) => GroupShape::Open,
            (false, Some(_), None) => GroupShape::FirstTail,
            (false, None, Some(_)) => GroupShape::SecondTail,
            (false, Some(_), Some(_)) => GroupShape::BothTails,
            (true, _, _) => return Err(Violation::new(Clause::GroupShape, members)),
        };
        check(declared == group.shape && tails <= 2, Clause::GroupShape, &members)?;
        let mut expected = group.expected_edges();
        expected.iter_mut().for_each(|e| *e = (e.0.min(e.1), e.0.max(e.1)));
        for (a, &u) in members.iter().enumerate() {
            for &v in &members[a + 1..] {
                let want = expected.contains(&(u.min(v), u.max(v)));
                check(g.has_edge(u, v) == want, Clause::GroupShape, &[u, v])?;
            }
        }
    }
    for v in 0..n {
        let in_group = p.classes[v] == V::Anchor || p.classes[v].is_anchored();
        check(in_group == (owner[v] != usize::MAX), Clause::GroupsCoverAnchored, &[v])?;
        if in_group {
            for w in g.neighbors(v) {
                let w_in = p.classes[w] == V::Anchor || p.classes[w].is_anchored();
                check(!w_in || owner[w] == owner[v], Clause::GroupsCoverAnchored, &[v, w])?;
            }
        }
    }
    Ok(())
}

fn check_chains(g: &Graph, p: &Partition) -> Result<(), Violation> {
    let n = g.vertex_count();
    let cls = &p.classes;
    let mut owner = vec![usize::MAX; n];
    for (i, chain) in p.chains.iter().enumerate() {
        let vs = &chain.vertices;
        check(!vs.is_empty(), Clause::ChainsCoverMembers, &[])?;
        for &v in vs {
            check(cls[v].is_chain_member() && owner[v] == usize::MAX, Clause::ChainsCoverMembers, &[v])?;
            owner[v] = i;
        }
    }
    for v in 0..n {
        check(cls[v].is_chain_member() == (owner[v] != usize::MAX), Clause::ChainsCoverMembers, &[v])?;
    }
    let mut previous_kind = ChainKind::Alternating;
    for (i, chain) in p.chains.iter().enumerate() {
        let vs = &chain.vertices;
        let t = vs.len();
        check(chain.kind >= previous_kind, Clause::ChainKind, vs)?;
        previous_kind = chain.kind;
        let cyclic = chain.kind != ChainKind::Path;
        for (k, &v) in vs.iter().enumerate() {
            let inside = g.neighbors(v).iter().filter(|&&w| cls[w].is_chain_member()).count();
            check(inside <= 2, Clause::ChainDegree, &[v])?;
            let expected = match (cyclic, t) {
                (true, _) => 2,
                (false, 1) => 0,
                (false, _) if k == 0 || k + 1 == t => 1,
                _ => 2,
            };
            check(inside == expected, Clause::ChainsCoverMembers, &[v])?;
            check(
                g.neighbors(v).iter().all(|&w| !cls[w].is_chain_member() || owner[w] == i),
                Clause::ChainsCoverMembers,
                &[v],
            )?;
            if k + 1 < t {
                check(g.has_edge(v, vs[k + 1]), Clause::ChainsCoverMembers, &[v, vs[k + 1]])?;
            }
            let at_end = !cyclic && (k == 0 || k + 1 == t);
            if cls[v].is_neighbor() {
                check((cls[v] == V::NeighborEnd) == at_end, Clause::ChainEnds, &[v])?;
            }
        }
        let is_n = |v: usize| cls[v].is_neighbor();
        match chain.kind {
            ChainKind::Path => check(is_n(vs[0]) && is_n(vs[t - 1]), Clause::ChainEnds, vs)?,
            ChainKind::Alternating => {
                check(t >= 4 && t % 2 == 0 && g.has_edge(vs[0], vs[t - 1]), Clause::ChainKind, vs)?;
                check(vs.iter().enumerate().all(|(k, &v)| is_n(v) == (k % 2 == 0)), Clause::ChainKind, vs)?;
            }
            ChainKind::Mixed => {
                check(t >= 3 && g.has_edge(vs[0], vs[t - 1]), Clause::ChainKind, vs)?;
                check(is_n(vs[0]) && is_n(vs[t - 1]), Clause::ChainKind, vs)?;
            }
        }
    }
    check(p.chain_vertex_count() + 2 <= n, Clause::ChainSize, &[])
}

fn check_links(g: &Graph, p: &Partition) -> Result<(), Violation> {
    let cls = &p.classes;
    for v in 0..g.vertex_count() {
        let want_link = match cls[v] {
            V::Cycle | V::PathSecondEnd | V::PathInner | V::AnchoredSingle => {
                unique_neighbor(g, cls, v, VertexClass::is_neighbor)
            }
            _ => None,
        };
        let want_base = if cls[v] == V::Anchor { unique_neighbor(g, cls, v, |c| c == V::PathInner) } else { None };
        check(p.link[v] == want_link && p.base[v] == want_base, Clause::Links, &[v])?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn catches_a_relabelled_vertex() {
        let g = named::petersen();
        let mut p = Partition::build(&g).unwrap();
        let v = p.classes.iter().position(|&c| c == V::Cycle || c.is_path()).unwrap();
        p.classes[v] = V::Free;
        assert!(validate_partition(&g, &p).is_err());
    }

    #[test]
    fn catches_a_broken_chain_rotation() {
        let g = named::cube();
        let mut p = Partition::build(&g).unwrap();
        if let Some(chain) = p.chains.iter_mut().find(|c| c.kind != ChainKind::Path) {
            chain.vertices.rotate_left(1);
            assert!(validate_partition(&g, &p).is_err());
        }
    }

    #[test]
    fn clause_descriptions_are_distinct() {
        use std::collections::HashSet;
        let all =
            [Clause::FreeVsExtracted, Clause::AnchorVsAnchor, Clause::ChainSize, Clause::Links, Clause::GroupShape];
        let set: HashSet<&str> = all.iter().map(|c| c.description()).collect();
        assert_eq!(set.len(), all.len());
    }
}
