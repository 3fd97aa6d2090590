//! Three interval assignments whose intersection graphs are supergraphs of
//! the cubic graph and jointly cut out exactly its edges.
//!
//! All endpoints are multiples of one tenth and are stored as integers.

mod assign;
mod ordering;

use std::fmt;
use std::ops::{Add, Sub};

use serde::{Serialize, Serializer};

use crate::graph::Graph;
use crate::verify::{assemble_boxes, Box3};

pub use assign::{assign_first, assign_intervals, assign_second, assign_third, build_intervals};
pub use ordering::Orderings;

/// A number with one decimal digit, stored in tenths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fixed(pub i64);

impl Fixed {
    pub const HALF: Fixed = Fixed(5);
    pub const TENTH: Fixed = Fixed(1);

    pub const fn int(k: i64) -> Fixed {
        Fixed(10 * k)
    }

    pub const fn tenths(self) -> i64 {
        self.0
    }
}

impl Add for Fixed {
    type Output = Fixed;
    fn add(self, rhs: Fixed) -> Fixed {
        Fixed(self.0 + rhs.0)
    }
}

impl Sub for Fixed {
    type Output = Fixed;
    fn sub(self, rhs: Fixed) -> Fixed {
        Fixed(self.0 - rhs.0)
    }
}

impl fmt::Display for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.0 < 0 { "-" } else { "" };
        let a = self.0.unsigned_abs();
        if a % 10 == 0 {
            write!(f, "{sign}{}", a / 10)
        } else {
            write!(f, "{sign}{}.{}", a / 10, a % 10)
        }
    }
}

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Fixed,
    pub hi: Fixed,
}

impl Interval {
    pub fn new(lo: Fixed, hi: Fixed) -> Interval {
        Interval { lo, hi }
    }

    pub fn point(x: Fixed) -> Interval {
        Interval { lo: x, hi: x }
    }

    pub fn from_tenths(lo: i64, hi: i64) -> Interval {
        Interval { lo: Fixed(lo), hi: Fixed(hi) }
    }

    pub fn is_valid(&self) -> bool {
        self.lo <= self.hi
    }

    /// Closed intervals overlap, shared end points included.
    #[inline]
    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// The intervals meet in exactly one end point of each.
    #[inline]
    pub fn touches(&self, other: &Interval) -> bool {
        self.lo == other.hi || other.lo == self.hi
    }

    pub fn contains_point(&self, x: Fixed) -> bool {
        self.lo <= x && x <= self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.lo.0, self.hi.0].serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntervalError {
    #[error("axis {axis}: vertex {vertex} received no interval")]
    Missing { axis: usize, vertex: usize },
    #[error("axis {axis}: vertex {vertex} has inverted interval {interval}")]
    Inverted { axis: usize, vertex: usize, interval: Interval },
    #[error("axis {axis}: vertex {vertex} has interval {interval} outside the expected range")]
    OutOfRange { axis: usize, vertex: usize, interval: Interval },
    #[error("chain rank {rank} exceeds n - 2 = {limit}")]
    ChainRank { rank: usize, limit: usize },
    #[error("vertex {vertex} has no recorded {what}")]
    MissingLink { vertex: usize, what: &'static str },
    #[error("anchor group of {anchor} does not reproduce its induced subgraph on the second axis")]
    GroupMismatch { anchor: usize },
    #[error("axis {axis}: edge ({u}, {v}) is not an intersecting pair")]
    MissingEdge { axis: usize, u: usize, v: usize },
    #[error("edge ({u}, {v}) touches on no axis")]
    NoTouch { u: usize, v: usize },
}

/// Per-axis intervals for every vertex of the cubic graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalAssignment {
    pub axes: [Vec<Interval>; 3],
}

impl IntervalAssignment {
    pub fn vertex_count(&self) -> usize {
        self.axes[0].len()
    }

    /// Checks the per-edge conditions: every edge intersects on every axis
    /// and touches on at least one. Linear time.
    pub fn check_edges(&self, g: &Graph) -> Result<(), IntervalError> {
        check_box_edges(g, &assemble_boxes(self))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("intervals serialise")
    }
}

/// [`IntervalAssignment::check_edges`] on assembled boxes, which keep the
/// three intervals of a vertex together.
pub fn check_box_edges(g: &Graph, boxes: &[Box3]) -> Result<(), IntervalError> {
    for (u, v) in g.edges() {
        let (a, b) = (boxes[u].axes(), boxes[v].axes());
        if let Some(axis) = (0..3).find(|&k| !a[k].intersects(&b[k])) {
            return Err(IntervalError::MissingEdge { axis, u, v });
        }
        if !(0..3).any(|k| a[k].touches(&b[k])) {
            return Err(IntervalError::NoTouch { u, v });
        }
    }
    Ok(())
}
