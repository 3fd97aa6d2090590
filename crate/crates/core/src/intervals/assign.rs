//! Interval placement on each axis.

use crate::graph::Graph;
use crate::partition::{AnchorGroup, ChainKind, GroupShape, Partition, VertexClass as V};
use crate::special::StructureKind;

use super::{Fixed, Interval, IntervalAssignment, IntervalError, Orderings};

const HALF: Fixed = Fixed::HALF;

fn int(k: usize) -> Fixed {
    Fixed::int(k as i64)
}

/// Partially filled axis.
struct Axis {
    index: usize,
    slots: Vec<Option<Interval>>,
}

impl Axis {
    fn new(index: usize, n: usize) -> Self {
        Axis { index, slots: vec![None; n] }
    }

    fn set(&mut self, v: usize, lo: Fixed, hi: Fixed) {
        debug_assert!(self.slots[v].is_none(), "axis {} assigns vertex {v} twice", self.index);
        self.slots[v] = Some(Interval::new(lo, hi));
    }

    fn get(&self, v: usize) -> Result<Interval, IntervalError> {
        self.slots[v].ok_or(IntervalError::Missing { axis: self.index, vertex: v })
    }

    fn lo(&self, v: usize) -> Result<Fixed, IntervalError> {
        Ok(self.get(v)?.lo)
    }

    fn hi(&self, v: usize) -> Result<Fixed, IntervalError> {
        Ok(self.get(v)?.hi)
    }

    fn finish(self, lo_bound: Fixed, hi_bound: Fixed) -> Result<Vec<Interval>, IntervalError> {
        let axis = self.index;
        self.slots
            .into_iter()
            .enumerate()
            .map(|(vertex, slot)| {
                let interval = slot.ok_or(IntervalError::Missing { axis, vertex })?;
                if !interval.is_valid() {
                    return Err(IntervalError::Inverted { axis, vertex, interval });
                }
                if interval.lo < lo_bound || interval.hi > hi_bound {
                    return Err(IntervalError::OutOfRange { axis, vertex, interval });
                }
                Ok(interval)
            })
            .collect()
    }
}

fn free_neighbor(g: &Graph, p: &Partition, v: usize) -> Option<usize> {
    g.neighbors(v).into_iter().find(|&w| p.classes[w] == V::Free)
}

fn link(p: &Partition, v: usize) -> Result<usize, IntervalError> {
    p.link[v].ok_or(IntervalError::MissingLink { vertex: v, what: "neighbour link" })
}

fn base(p: &Partition, u: usize) -> Result<usize, IntervalError> {
    p.base[u].ok_or(IntervalError::MissingLink { vertex: u, what: "inner path base" })
}

/// Inner path vertex hanging below an anchor rather than a neighbour vertex.
fn under_anchor(g: &Graph, p: &Partition, v: usize) -> bool {
    g.neighbors(v).iter().any(|&w| p.classes[w] == V::Anchor)
}

/// Free vertices sit far right as points or touching half-unit pairs, in
/// order on the first axis and reversed on the second.
fn place_free(g: &Graph, p: &Partition, o: &Orderings, axis: &mut Axis, offset: usize, reversed: bool) {
    let n = g.vertex_count();
    for v in 0..n {
        if p.classes[v] != V::Free {
            continue;
        }
        let r = o.free_rank[v];
        let key = |r: usize| if reversed { o.free_count + 1 - r } else { r };
        let at = int(offset + key(r));
        match free_neighbor(g, p, v).map(|w| o.free_rank[w]) {
            None => axis.set(v, at, at),
            // `v` precedes its partner in the free order.
            Some(rw) if rw == r + 1 => {
                if reversed {
                    axis.set(v, at - HALF, at)
                } else {
                    axis.set(v, at, at + HALF)
                }
            }
            Some(_) => {
                if reversed {
                    axis.set(v, at, at + HALF)
                } else {
                    axis.set(v, at - HALF, at)
                }
            }
        }
    }
}

pub fn assign_first(g: &Graph, p: &Partition, o: &Orderings) -> Result<Vec<Interval>, IntervalError> {
    let n = g.vertex_count();
    let mut ax = Axis::new(0, n);
    place_free(g, p, o, &mut ax, 2 * n, false);
    let rank = |v: usize| int(o.chain_rank[v]);
    let nn = int(n);

    for chain in &p.chains {
        let vs = &chain.vertices;
        let t = vs.len();
        match chain.kind {
            ChainKind::Alternating => {
                let (c1, ct) = (vs[0], vs[t - 1]);
                ax.set(c1, rank(c1), rank(ct));
                for &c in &vs[1..t - 1] {
                    ax.set(c, rank(c), rank(c) + int(1));
                }
                ax.set(ct, rank(ct), rank(ct) + HALF);
            }
            ChainKind::Mixed | ChainKind::Path => {
                let interior = if chain.kind == ChainKind::Mixed {
                    let (c1, ct) = (vs[0], vs[t - 1]);
                    ax.set(c1, nn + rank(c1), nn + rank(ct));
                    ax.set(ct, nn + rank(ct), nn + rank(ct) + HALF);
                    &vs[1..t - 1]
                } else {
                    let ends: &[usize] = if t == 1 { &vs[..1] } else { &[vs[0], vs[t - 1]] };
                    for &e in ends {
                        let right = match free_neighbor(g, p, e) {
                            Some(a) => ax.lo(a)?,
                            None => int(2 * n),
                        };
                        ax.set(e, nn + rank(e), right);
                    }
                    if t >= 2 {
                        &vs[1..t - 1]
                    } else {
                        &vs[..0]
                    }
                };
                for &c in interior {
                    if p.classes[c].is_neighbor() {
                        ax.set(c, nn + rank(c), nn + rank(c) + int(1));
                    } else {
                        ax.set(c, nn, nn + rank(c) + int(1));
                    }
                }
            }
        }
    }

    for v in 0..n {
        match p.classes[v] {
            V::AnchoredSingle => ax.set(v, int(0), ax.lo(link(p, v)?)?),
            V::PathSecondEnd => ax.set(v, Fixed::int(-1), ax.lo(link(p, v)?)?),
            V::Anchor => ax.set(v, Fixed::int(-1), nn),
            V::PathInner if under_anchor(g, p, v) => ax.set(v, Fixed::int(-1), Fixed::int(-1)),
            V::PathInner => ax.set(v, Fixed::int(-1), ax.lo(link(p, v)?)?),
            _ => {}
        }
    }

    for (kind, seq) in &o.special_sequences {
        if *kind != StructureKind::Cycle {
            continue;
        }
        let t = seq.len();
        let x = ax.lo(link(p, seq[0])?)?;
        ax.set(seq[0], x, x);
        for (i, &c) in seq.iter().enumerate().skip(1) {
            let right = ax.lo(link(p, c)?)? + HALF;
            if i == 1 || i == t - 1 {
                ax.set(c, x, right);
            } else {
                ax.set(c, x + HALF, right);
            }
        }
    }
    ax.finish(Fixed::int(-1), int(2 * n + o.free_count))
}

/// Second-axis intervals of an anchor group, in tenths above `10 * rank`
/// of the inner path vertex below the anchor.
pub fn group_layout(group: &AnchorGroup) -> Vec<(usize, i64, i64)> {
    let mut out = Vec::with_capacity(5);
    if group.shape == GroupShape::Triangle {
        out.push((group.anchor, 3, 7));
        out.push((group.first, 2, 5));
        out.push((group.second, 5, 8));
    } else {
        out.push((group.anchor, 4, 6));
        out.push((group.first, 2, 4));
        out.push((group.second, 6, 8));
        if let Some(t) = group.first_tail {
            out.push((t, 1, 2));
        }
        if let Some(t) = group.second_tail {
            out.push((t, 8, 9));
        }
    }
    out
}

pub fn assign_second(g: &Graph, p: &Partition, o: &Orderings) -> Result<Vec<Interval>, IntervalError> {
    let n = g.vertex_count();
    let mut ax = Axis::new(1, n);
    place_free(g, p, o, &mut ax, n, true);
    let nn = int(n);

    for v in 0..n {
        if p.classes[v].is_neighbor() {
            let right = match free_neighbor(g, p, v) {
                Some(a) => ax.lo(a)?,
                None => nn,
            };
            ax.set(v, int(0), right);
        }
    }

    let rank = |v: usize| int(o.special_rank[v]);
    for (kind, seq) in &o.special_sequences {
        let t = seq.len();
        let last = seq[t - 1];
        match kind {
            StructureKind::Path => {
                for &c in &seq[..t - 1] {
                    ax.set(c, rank(c), rank(c) + int(1));
                }
                ax.set(last, rank(last), rank(last) + HALF);
            }
            StructureKind::Cycle => {
                ax.set(seq[0], rank(seq[0]), rank(last));
                for &c in &seq[1..t - 1] {
                    ax.set(c, rank(c), rank(c) + int(1));
                }
                ax.set(last, rank(last), rank(last) + HALF);
            }
        }
    }

    for group in &p.groups {
        let floor = 10 * o.special_rank[base(p, group.anchor)?] as i64;
        for (v, lo, hi) in group_layout(group) {
            ax.set(v, Fixed(floor + lo), Fixed(floor + hi));
        }
        check_group(g, group, &ax, floor)?;
    }
    ax.finish(int(0), int(n + o.free_count) + HALF)
}

/// The group's second-axis intervals reproduce its induced subgraph and stay
/// strictly inside the unit after the base vertex's rank.
fn check_group(g: &Graph, group: &AnchorGroup, ax: &Axis, floor: i64) -> Result<(), IntervalError> {
    let members: Vec<usize> = group.members().collect();
    let mismatch = IntervalError::GroupMismatch { anchor: group.anchor };
    for (i, &u) in members.iter().enumerate() {
        let iu = ax.get(u)?;
        if iu.lo.0 <= floor || iu.hi.0 >= floor + 10 {
            return Err(mismatch);
        }
        for &v in &members[i + 1..] {
            if iu.intersects(&ax.get(v)?) != g.has_edge(u, v) {
                return Err(mismatch);
            }
        }
    }
    Ok(())
}

pub fn assign_third(g: &Graph, p: &Partition, o: &Orderings) -> Result<Vec<Interval>, IntervalError> {
    let n = g.vertex_count();
    let mut ax = Axis::new(2, n);
    let rank = |v: usize| int(o.chain_rank[v]);
    let nn = int(n);
    let one = int(1);

    // Generic placement of a chain vertex that is not the last one.
    let leading = |ax: &mut Axis, c: usize, left: Fixed| match p.classes[c] {
        V::AnchoredDouble => ax.set(c, left, nn),
        V::PathEnd => ax.set(c, left, nn + one),
        _ => ax.set(c, left, left + one),
    };

    for chain in &p.chains {
        let vs = &chain.vertices;
        let t = vs.len();
        let (c1, ct) = (vs[0], vs[t - 1]);
        match chain.kind {
            ChainKind::Alternating => {
                for &c in &vs[..t - 1] {
                    leading(&mut ax, c, rank(c));
                }
                let right = if p.classes[ct] == V::PathEnd { nn + one } else { nn };
                ax.set(ct, rank(c1) + one, right);
            }
            ChainKind::Mixed => {
                ax.set(c1, rank(c1), rank(c1) + one);
                for &c in &vs[1..t - 1] {
                    leading(&mut ax, c, rank(c));
                }
                ax.set(ct, rank(c1) + one, rank(ct) + HALF);
            }
            ChainKind::Path => {
                for &c in &vs[..t - 1] {
                    leading(&mut ax, c, rank(c));
                }
                ax.set(ct, rank(ct), rank(ct) + HALF);
            }
        }
    }

    for v in 0..n {
        match p.classes[v] {
            V::Cycle | V::PathSecondEnd => ax.set(v, ax.hi(link(p, v)?)?, nn + one),
            V::AnchoredSingle => ax.set(v, ax.hi(link(p, v)?)?, nn),
            V::PathInner if under_anchor(g, p, v) => ax.set(v, nn + one, nn + one),
            V::PathInner => ax.set(v, ax.hi(link(p, v)?)?, nn + one),
            V::Anchor => ax.set(v, nn, nn + one),
            V::Free => ax.set(v, one, nn + one),
            _ => {}
        }
    }
    ax.finish(int(0), nn + one)
}

/// All three axes, each checked for range and orientation but not yet
/// against the edges.
pub fn assign_intervals(g: &Graph, p: &Partition) -> Result<IntervalAssignment, IntervalError> {
    let o = Orderings::build(g, p)?;
    Ok(IntervalAssignment { axes: [assign_first(g, p, &o)?, assign_second(g, p, &o)?, assign_third(g, p, &o)?] })
}

/// All three axes, with the per-edge conditions checked.
pub fn build_intervals(g: &Graph, p: &Partition) -> Result<IntervalAssignment, IntervalError> {
    let assignment = assign_intervals(g, p)?;
    assignment.check_edges(g)?;
    Ok(assignment)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn iv(lo: i64, hi: i64) -> Interval {
        Interval::from_tenths(lo, hi)
    }

    #[test]
    fn k4_hand_computed() {
        let g = named::k4();
        let p = Partition::build(&g).unwrap();
        let a = build_intervals(&g, &p).unwrap();
        assert_eq!(a.axes[0], vec![iv(50, 50), iv(50, 55), iv(50, 55), iv(50, 80)]);
        assert_eq!(a.axes[1], vec![iv(10, 30), iv(20, 30), iv(30, 35), iv(0, 40)]);
        assert_eq!(a.axes[2], vec![iv(15, 50), iv(15, 50), iv(15, 50), iv(10, 15)]);
    }

    #[test]
    fn group_layouts_match_shapes() {
        let mk = |shape, first_tail, second_tail| AnchorGroup {
            anchor: 0,
            first: 1,
            second: 2,
            first_tail,
            second_tail,
            shape,
        };
        let cases = [
            (mk(GroupShape::Triangle, None, None), vec![(0, 1), (0, 2), (1, 2)]),
            (mk(GroupShape::Open, None, None), vec![(0, 1), (0, 2)]),
            (mk(GroupShape::FirstTail, Some(3), None), vec![(0, 1), (0, 2), (1, 3)]),
            (mk(GroupShape::SecondTail, None, Some(4)), vec![(0, 1), (0, 2), (2, 4)]),
            (mk(GroupShape::BothTails, Some(3), Some(4)), vec![(0, 1), (0, 2), (1, 3), (2, 4)]),
        ];
        for (group, edges) in cases {
            let layout = group_layout(&group);
            for (i, &(u, ul, uh)) in layout.iter().enumerate() {
                assert!(ul > 0 && uh < 10);
                for &(v, vl, vh) in &layout[i + 1..] {
                    let meets = ul <= vh && vl <= uh;
                    let adjacent = edges.contains(&(u.min(v), u.max(v)));
                    assert_eq!(meets, adjacent, "{:?}: {u} {v}", group.shape);
                }
            }
        }
    }
}
