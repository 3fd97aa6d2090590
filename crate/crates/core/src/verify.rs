//! Independent geometric check of a box representation.
//!
//! The intersection graph is recomputed by comparing every pair of boxes, so
//! the check is quadratic and shares no state with the construction.

use serde::Serialize;

use crate::graph::Graph;
use crate::intervals::{Interval, IntervalAssignment};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Box3 {
    pub x: Interval,
    pub y: Interval,
    pub z: Interval,
}

impl Box3 {
    pub fn axes(&self) -> [Interval; 3] {
        [self.x, self.y, self.z]
    }

    pub fn axis_mut(&mut self, axis: usize) -> &mut Interval {
        match axis {
            0 => &mut self.x,
            1 => &mut self.y,
            2 => &mut self.z,
            _ => panic!("axis {axis} out of range"),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.axes().iter().all(Interval::is_valid)
    }

    pub fn intersects(&self, other: &Box3) -> bool {
        self.x.intersects(&other.x) && self.y.intersects(&other.y) && self.z.intersects(&other.z)
    }

    /// Some axis on which the two boxes meet end to end.
    pub fn touches(&self, other: &Box3) -> bool {
        self.axes().iter().zip(other.axes().iter()).any(|(a, b)| a.touches(b))
    }
}

pub fn assemble_boxes(a: &IntervalAssignment) -> Vec<Box3> {
    let [x, y, z] = &a.axes;
    (0..a.vertex_count()).map(|v| Box3 { x: x[v], y: y[v], z: z[v] }).collect()
}

/// Boxes of the first `count` vertices, or `None` if there are fewer.
pub fn restrict(mut boxes: Vec<Box3>, count: usize) -> Option<Vec<Box3>> {
    (count <= boxes.len()).then(|| {
        boxes.truncate(count);
        boxes
    })
}

/// Pairs of closed boxes that intersect, in increasing order. Fails only on
/// inverted boxes. Arbitrary input may have any number of such pairs, so the
/// result is not a [`Graph`].
pub fn intersecting_pairs(boxes: &[Box3]) -> Result<Vec<(usize, usize)>, Vec<usize>> {
    let bad: Vec<usize> = (0..boxes.len()).filter(|&v| !boxes[v].is_valid()).collect();
    if !bad.is_empty() {
        return Err(bad);
    }
    let mut pairs = Vec::new();
    for u in 0..boxes.len() {
        for v in u + 1..boxes.len() {
            if boxes[u].intersects(&boxes[v]) {
                pairs.push((u, v));
            }
        }
    }
    Ok(pairs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub vertex_count_matches: bool,
    /// Boxes with an inverted interval on some axis.
    pub malformed: Vec<usize>,
    pub edges_match: bool,
    /// Edges of the graph whose boxes do not intersect.
    pub missing_edges: Vec<(usize, usize)>,
    /// Intersecting pairs that are not edges.
    pub extra_edges: Vec<(usize, usize)>,
    pub touch_ok: bool,
    /// Edges whose boxes share interior points.
    pub overlapping_edges: Vec<(usize, usize)>,
    /// Per axis: every edge's intervals intersect on that axis.
    pub axis_supergraph: [bool; 3],
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.vertex_count_matches && self.malformed.is_empty() && self.edges_match && self.touch_ok
    }
}

/// Checks that `boxes` intersect exactly on the edges of `g` and that
/// adjacent boxes meet only on their boundaries.
pub fn verify(g: &Graph, boxes: &[Box3]) -> VerificationReport {
    let mut report = VerificationReport {
        vertex_count_matches: g.vertex_count() == boxes.len(),
        malformed: Vec::new(),
        edges_match: false,
        missing_edges: Vec::new(),
        extra_edges: Vec::new(),
        touch_ok: false,
        overlapping_edges: Vec::new(),
        axis_supergraph: [false; 3],
    };
    if !report.vertex_count_matches {
        return report;
    }
    let pairs = match intersecting_pairs(boxes) {
        Ok(pairs) => pairs,
        Err(bad) => {
            report.malformed = bad;
            return report;
        }
    };
    report.missing_edges = g.edges().filter(|&(u, v)| pairs.binary_search(&(u, v)).is_err()).collect();
    report.extra_edges = pairs.into_iter().filter(|&(u, v)| !g.has_edge(u, v)).collect();
    report.edges_match = report.missing_edges.is_empty() && report.extra_edges.is_empty();
    report.overlapping_edges =
        g.edges().filter(|&(u, v)| boxes[u].intersects(&boxes[v]) && !boxes[u].touches(&boxes[v])).collect();
    report.touch_ok = report.overlapping_edges.is_empty();
    for axis in 0..3 {
        report.axis_supergraph[axis] = g.edges().all(|(u, v)| boxes[u].axes()[axis].intersects(&boxes[v].axes()[axis]));
    }
    report
}
