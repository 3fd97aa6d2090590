//! The growing induced path or cycle, kept as an intrusive doubly linked list
//! over vertex ids so that every extension step costs O(1).

use std::collections::BTreeSet;

use serde::Serialize;

const NIL: usize = usize::MAX;
const NIL32: u32 = u32::MAX;
const MEMBER: u32 = 1;
const CANDIDATE: u32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StructureKind {
    Cycle,
    Path,
}

/// Per-vertex state. Everything an update reads about a vertex sits in one
/// aligned 16-byte slot.
#[derive(Debug, Clone, Copy)]
#[repr(align(16))]
struct Slot {
    next: u32,
    prev: u32,
    flags: u32,
    /// Visit mark used by the searches of the owning finder.
    stamp: u32,
}

const EMPTY: Slot = Slot { next: NIL32, prev: NIL32, flags: 0, stamp: 0 };

#[inline]
fn widen(v: u32) -> usize {
    if v == NIL32 {
        NIL
    } else {
        v as usize
    }
}

/// Ordered vertex set inducing a path or a cycle, together with the set of
/// candidate removable vertices.
///
/// The per-vertex slots are sized for the whole ambient graph and reused
/// across extractions; [`WorkingStructure::clear`] only touches members.
#[derive(Debug, Clone)]
pub struct WorkingStructure {
    kind: StructureKind,
    head: usize,
    tail: usize,
    len: usize,
    slots: Vec<Slot>,
    removables: BTreeSet<usize>,
}

impl WorkingStructure {
    /// # Panics
    /// If `n` does not fit in 32 bits.
    pub fn new(n: usize) -> Self {
        assert!(n < NIL32 as usize, "graphs are limited to 2^32 - 1 vertices");
        WorkingStructure {
            kind: StructureKind::Path,
            head: NIL,
            tail: NIL,
            len: 0,
            slots: vec![EMPTY; n],
            removables: BTreeSet::new(),
        }
    }

    pub fn kind(&self) -> StructureKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.slots[v].flags & MEMBER != 0
    }

    pub fn head(&self) -> usize {
        self.head
    }

    pub fn tail(&self) -> usize {
        self.tail
    }

    /// Successor along the stored order; for a path the tail has none.
    pub fn next(&self, v: usize) -> Option<usize> {
        Some(self.slots[v].next).filter(|&w| w != NIL32).map(|w| w as usize)
    }

    pub fn prev(&self, v: usize) -> Option<usize> {
        Some(self.slots[v].prev).filter(|&w| w != NIL32).map(|w| w as usize)
    }

    pub fn candidate_removables(&self) -> impl Iterator<Item = usize> + '_ {
        self.removables.iter().copied()
    }

    pub(crate) fn first_candidate(&self) -> Option<usize> {
        self.removables.first().copied()
    }

    pub(crate) fn has_candidates(&self) -> bool {
        !self.removables.is_empty()
    }

    /// Marks member `v` as a candidate or not.
    pub(crate) fn set_candidate(&mut self, v: usize, on: bool) {
        debug_assert!(!on || self.contains(v));
        if on != (self.slots[v].flags & CANDIDATE != 0) {
            self.slots[v].flags ^= CANDIDATE;
            if on {
                self.removables.insert(v);
            } else {
                self.removables.remove(&v);
            }
        }
    }

    /// Stamps `v` with `epoch`; false if it already carried that stamp.
    #[inline]
    pub(crate) fn visit(&mut self, v: usize, epoch: u32) -> bool {
        let slot = &mut self.slots[v];
        if slot.stamp == epoch {
            return false;
        }
        slot.stamp = epoch;
        true
    }

    pub(crate) fn reset_stamps(&mut self) {
        self.slots.iter_mut().for_each(|s| s.stamp = 0);
    }

    /// Vertices from head to tail (for a cycle, once around from head).
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len);
        let mut v = self.head;
        for _ in 0..self.len {
            out.push(v);
            v = widen(self.slots[v].next);
        }
        out
    }

    pub fn clear(&mut self) {
        for v in self.vertices() {
            let stamp = self.slots[v].stamp;
            self.slots[v] = Slot { stamp, ..EMPTY };
        }
        self.removables.clear();
        self.head = NIL;
        self.tail = NIL;
        self.len = 0;
        self.kind = StructureKind::Path;
    }

    pub(crate) fn start_vertex(&mut self, v: usize) {
        self.clear();
        self.slots[v].flags |= MEMBER;
        self.head = v;
        self.tail = v;
        self.len = 1;
    }

    /// Replaces the contents by `cycle`, listed in cyclic order.
    pub(crate) fn start_cycle(&mut self, cycle: &[usize]) {
        self.clear();
        for &v in cycle {
            self.push_back(v);
        }
        self.close();
    }

    pub(crate) fn push_back(&mut self, v: usize) {
        debug_assert!(self.kind == StructureKind::Path && !self.contains(v));
        self.slots[v].flags |= MEMBER;
        if self.len == 0 {
            self.head = v;
        } else {
            self.slots[self.tail].next = v as u32;
            self.slots[v].prev = self.tail as u32;
        }
        self.tail = v;
        self.len += 1;
    }

    pub(crate) fn push_front(&mut self, v: usize) {
        debug_assert!(self.kind == StructureKind::Path && !self.contains(v));
        self.slots[v].flags |= MEMBER;
        if self.len == 0 {
            self.tail = v;
        } else {
            self.slots[self.head].prev = v as u32;
            self.slots[v].next = self.head as u32;
        }
        self.head = v;
        self.len += 1;
    }

    /// Appends next to `end`, which must be the head or the tail.
    pub(crate) fn push_at(&mut self, end: usize, v: usize) {
        if end == self.tail {
            self.push_back(v);
        } else {
            debug_assert_eq!(end, self.head);
            self.push_front(v);
        }
    }

    fn unlink(&mut self, v: usize) {
        self.set_candidate(v, false);
        let stamp = self.slots[v].stamp;
        self.slots[v] = Slot { stamp, ..EMPTY };
        self.len -= 1;
    }

    /// Removes an end point of a path of length at least 2.
    pub(crate) fn remove_end(&mut self, v: usize) {
        debug_assert!(self.kind == StructureKind::Path && self.len >= 2);
        if v == self.head {
            let h = widen(self.slots[v].next);
            self.slots[h].prev = NIL32;
            self.head = h;
        } else {
            debug_assert_eq!(v, self.tail);
            let t = widen(self.slots[v].prev);
            self.slots[t].next = NIL32;
            self.tail = t;
        }
        self.unlink(v);
    }

    /// Removes a vertex of a cycle, leaving the path that runs from its
    /// successor around to its predecessor.
    pub(crate) fn cut_cycle_at(&mut self, v: usize) {
        debug_assert_eq!(self.kind, StructureKind::Cycle);
        let (h, t) = (widen(self.slots[v].next), widen(self.slots[v].prev));
        self.slots[t].next = NIL32;
        self.slots[h].prev = NIL32;
        self.head = h;
        self.tail = t;
        self.kind = StructureKind::Path;
        self.unlink(v);
    }

    /// Joins tail to head.
    pub(crate) fn close(&mut self) {
        debug_assert!(self.len >= 3);
        self.slots[self.tail].next = self.head as u32;
        self.slots[self.head].prev = self.tail as u32;
        self.kind = StructureKind::Cycle;
    }
}
