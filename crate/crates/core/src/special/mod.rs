//! Extraction of special induced cycles and paths.
//!
//! A structure grows from a seed by local exchanges until it can no longer be
//! extended. Each exchange either adds one vertex or swaps an end point for a
//! vertex that closes a cycle, so an extraction ending at `l` vertices takes at
//! most `2l + 2` iterations, each inspecting a bounded neighbourhood.

mod structure;

pub use structure::{StructureKind, WorkingStructure};

use crate::graph::Graph;

/// A graph restricted to the vertices still marked alive.
#[derive(Clone, Copy)]
pub struct Ambient<'a> {
    graph: &'a Graph,
    alive: Option<&'a [bool]>,
}

impl<'a> Ambient<'a> {
    pub fn whole(graph: &'a Graph) -> Self {
        Ambient { graph, alive: None }
    }

    pub fn restricted(graph: &'a Graph, alive: &'a [bool]) -> Self {
        assert_eq!(alive.len(), graph.vertex_count());
        Ambient { graph, alive: Some(alive) }
    }

    pub fn graph(&self) -> &'a Graph {
        self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.alive.is_none_or(|a| a[v])
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + 'a {
        let alive = self.alive;
        self.graph.neighbors(v).into_iter().filter(move |&w| alive.is_none_or(|a| a[w]))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.contains(u) && self.contains(v) && self.graph.has_edge(u, v)
    }
}

/// One extension step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// Append a vertex at an end of a path; may close a cycle.
    Grow { added: usize },
    /// Replace cycle vertex `removed` by `first`, attached to `near`, and
    /// `second`, attached to `first` or (when `bridging`) to the other
    /// neighbour of `removed`.
    Reroute { removed: usize, near: usize, far: usize, first: usize, second: usize, bridging: bool },
    /// Replace a path end point by a vertex adjacent to both ends of the rest.
    Close { removed: usize, added: usize },
    /// Replace a path end point by two vertices.
    Detour { removed: usize, first: usize, second: usize },
}

impl Move {
    fn participants(&self) -> ([usize; 3], usize) {
        match *self {
            Move::Grow { added } => ([added, 0, 0], 1),
            Move::Reroute { removed, first, second, .. } | Move::Detour { removed, first, second } => {
                ([removed, first, second], 3)
            }
            Move::Close { removed, added } => ([removed, added, 0], 2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExtractError {
    #[error("seed vertex {0} is not alive")]
    DeadSeed(usize),
    #[error("seed does not induce a cycle")]
    SeedNotInducedCycle,
    #[error("extraction took {iterations} iterations for a structure of {size} vertices")]
    IterationBound { iterations: usize, size: usize },
    #[error("candidate {0} has no removal witness")]
    StaleCandidate(usize),
    #[error("incremental removable set diverged from recomputation after {0} iterations")]
    AuditMismatch(usize),
}

#[derive(Debug, Clone, Copy)]
pub enum Seed<'s> {
    Vertex(usize),
    Cycle(&'s [usize]),
}

/// Result of one extraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extraction {
    pub kind: StructureKind,
    pub vertices: Vec<usize>,
    pub iterations: usize,
    /// Largest number of vertices re-examined by a single update of the
    /// candidate set.
    pub max_touched: usize,
}

impl Extraction {
    pub fn within_iteration_bound(&self) -> bool {
        self.iterations <= 2 * self.vertices.len() + 2
    }
}

/// Upper bound on vertices re-examined per update.
pub const TOUCH_LIMIT: usize = 200;

#[inline]
fn s_neighbor_pair(amb: Ambient, ws: &WorkingStructure, v: usize) -> Option<(usize, usize)> {
    let mut found = [0usize; 2];
    let mut k = 0;
    // Members are alive, so the unfiltered adjacency suffices here and below.
    for w in amb.graph().neighbors(v) {
        if ws.contains(w) {
            if k == 2 {
                return None;
            }
            found[k] = w;
            k += 1;
        }
    }
    (k == 2).then_some((found[0], found[1]))
}

/// Whether the structure neighbours of `w`, ignoring `skip`, are exactly `allowed`.
#[inline]
fn touches_exactly(amb: Ambient, ws: &WorkingStructure, w: usize, skip: usize, allowed: &[usize]) -> bool {
    let mut count = 0;
    for y in amb.graph().neighbors(w) {
        if y != skip && ws.contains(y) {
            if !allowed.contains(&y) {
                return false;
            }
            count += 1;
        }
    }
    count == allowed.len()
}

/// Whether the structure neighbours of `w`, ignoring `skip`, lie inside `allowed`.
#[inline]
fn touches_within(amb: Ambient, ws: &WorkingStructure, w: usize, skip: usize, allowed: &[usize]) -> bool {
    amb.graph().neighbors(w).iter().all(|&y| y == skip || !ws.contains(y) || allowed.contains(&y))
}

/// Witness that `x` can be exchanged for two outside vertices while keeping
/// an induced path or cycle. For a cycle this is exactly removability.
pub fn cycle_move(amb: Ambient, ws: &WorkingStructure, x: usize) -> Option<Move> {
    if !ws.contains(x) {
        return None;
    }
    let (p, q) = s_neighbor_pair(amb, ws, x)?;
    let outside_first =
        |s: usize| amb.neighbors(s).filter(move |&a| !ws.contains(a) && touches_exactly(amb, ws, a, x, &[s]));
    for (near, far) in [(p, q), (q, p)] {
        for first in outside_first(near) {
            let second = amb.neighbors(first).find(|&b| !ws.contains(b) && touches_exactly(amb, ws, b, x, &[]));
            if let Some(second) = second {
                return Some(Move::Reroute { removed: x, near, far, first, second, bridging: false });
            }
        }
    }
    for (near, far) in [(p, q), (q, p)] {
        for first in outside_first(near) {
            let second =
                amb.neighbors(far).find(|&b| b != first && !ws.contains(b) && touches_exactly(amb, ws, b, x, &[far]));
            if let Some(second) = second {
                return Some(Move::Reroute { removed: x, near, far, first, second, bridging: true });
            }
        }
    }
    None
}

/// Smallest vertex whose addition keeps a path induced.
pub fn path_growth(amb: Ambient, ws: &WorkingStructure) -> Option<usize> {
    if ws.kind() != StructureKind::Path || ws.is_empty() {
        return None;
    }
    let (h, t) = (ws.head(), ws.tail());
    let ends = [h, t];
    amb.neighbors(h)
        .chain(amb.neighbors(t))
        .filter(|&y| !ws.contains(y) && touches_within(amb, ws, y, usize::MAX, &ends))
        .min()
}

/// Witness that end point `x` of a maximal path is removable.
pub fn endpoint_move(amb: Ambient, ws: &WorkingStructure, x: usize) -> Option<Move> {
    if ws.kind() != StructureKind::Path || ws.len() < 2 {
        return None;
    }
    let (inner, other) = if x == ws.head() {
        (ws.next(x)?, ws.tail())
    } else if x == ws.tail() {
        (ws.prev(x)?, ws.head())
    } else {
        return None;
    };
    if ws.len() >= 3 {
        let closing =
            amb.neighbors(inner).find(|&a| !ws.contains(a) && touches_exactly(amb, ws, a, x, &[inner, other]));
        if let Some(added) = closing {
            return Some(Move::Close { removed: x, added });
        }
    }
    for first in amb.neighbors(inner).filter(|&a| !ws.contains(a) && touches_exactly(amb, ws, a, x, &[inner])) {
        let second = amb.neighbors(first).find(|&b| !ws.contains(b) && touches_within(amb, ws, b, x, &[other]));
        if let Some(second) = second {
            return Some(Move::Detour { removed: x, first, second });
        }
    }
    None
}

/// Whether the current structure is special in the ambient graph.
pub fn is_special(amb: Ambient, ws: &WorkingStructure) -> bool {
    match ws.kind() {
        StructureKind::Cycle => !ws.has_candidates(),
        StructureKind::Path => {
            path_growth(amb, ws).is_none()
                && endpoint_move(amb, ws, ws.head()).is_none()
                && endpoint_move(amb, ws, ws.tail()).is_none()
        }
    }
}

/// The next extension step prescribed by the tie-breaking rules, or `None`
/// when the structure is special.
pub fn next_move(amb: Ambient, ws: &WorkingStructure) -> Result<Option<Move>, ExtractError> {
    match ws.kind() {
        StructureKind::Cycle => match ws.first_candidate() {
            None => Ok(None),
            Some(x) => cycle_move(amb, ws, x).map(Some).ok_or(ExtractError::StaleCandidate(x)),
        },
        StructureKind::Path => {
            if let Some(added) = path_growth(amb, ws) {
                return Ok(Some(Move::Grow { added }));
            }
            let (a, b) = (ws.head().min(ws.tail()), ws.head().max(ws.tail()));
            Ok(endpoint_move(amb, ws, a).or_else(|| endpoint_move(amb, ws, b)))
        }
    }
}

fn close_if_cycle(amb: Ambient, ws: &mut WorkingStructure) {
    if ws.kind() == StructureKind::Path && ws.len() >= 3 && amb.has_edge(ws.head(), ws.tail()) {
        ws.close();
    }
}

/// Applies `mv`; the candidate set is not updated.
pub fn apply_move(amb: Ambient, ws: &mut WorkingStructure, mv: Move) {
    match mv {
        Move::Grow { added } => {
            let end = if amb.has_edge(added, ws.tail()) { ws.tail() } else { ws.head() };
            ws.push_at(end, added);
        }
        Move::Reroute { removed, near, far, first, second, bridging } => {
            ws.cut_cycle_at(removed);
            ws.push_at(near, first);
            ws.push_at(if bridging { far } else { first }, second);
        }
        Move::Close { removed, added } => {
            let inner = if removed == ws.head() { ws.next(removed) } else { ws.prev(removed) };
            ws.remove_end(removed);
            ws.push_at(inner.expect("path has at least two vertices"), added);
        }
        Move::Detour { removed, first, second } => {
            let inner = if removed == ws.head() { ws.next(removed) } else { ws.prev(removed) };
            ws.remove_end(removed);
            ws.push_at(inner.expect("path has at least two vertices"), first);
            ws.push_at(first, second);
        }
    }
    close_if_cycle(amb, ws);
}

/// Candidate removable vertices computed from scratch.
pub fn removables_from_scratch(amb: Ambient, ws: &WorkingStructure) -> Vec<usize> {
    let mut out: Vec<usize> = ws.vertices().into_iter().filter(|&x| cycle_move(amb, ws, x).is_some()).collect();
    out.sort_unstable();
    out
}

/// Loads `vertices`, listed in path or cyclic order, as a structure of the
/// given kind and computes its candidate set from scratch. The caller is
/// responsible for the vertices inducing that kind.
pub fn load_structure(amb: Ambient, kind: StructureKind, vertices: &[usize]) -> WorkingStructure {
    let mut ws = WorkingStructure::new(amb.vertex_count());
    match kind {
        StructureKind::Cycle => ws.start_cycle(vertices),
        StructureKind::Path => vertices.iter().for_each(|&v| ws.push_back(v)),
    }
    for x in removables_from_scratch(amb, &ws) {
        ws.set_candidate(x, true);
    }
    ws
}

/// Reusable scratch space for repeated extractions on one ambient graph.
#[derive(Debug, Clone)]
pub struct SpecialFinder {
    ws: WorkingStructure,
    epoch: u32,
    frontier: Vec<(usize, u8)>,
    examine: Vec<usize>,
    parent: Vec<usize>,
    depth: Vec<usize>,
    audit: bool,
}

impl SpecialFinder {
    pub fn new(n: usize) -> Self {
        SpecialFinder {
            ws: WorkingStructure::new(n),
            epoch: 0,
            frontier: Vec::new(),
            examine: Vec::new(),
            parent: vec![usize::MAX; n],
            depth: vec![0; n],
            audit: false,
        }
    }

    /// Cross-checks the incremental candidate set against a full
    /// recomputation after every iteration (quadratic; for tests).
    pub fn with_audit(mut self, audit: bool) -> Self {
        self.audit = audit;
        self
    }

    pub fn structure(&self) -> &WorkingStructure {
        &self.ws
    }

    fn next_epoch(&mut self) -> u32 {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.ws.reset_stamps();
            self.epoch = 1;
        }
        self.epoch
    }

    /// Re-examines every member whose removal witness may read the membership
    /// of a participant. Such a witness reaches the participant from the
    /// member through one structure neighbour and at most two outside
    /// vertices, so the walk only continues through outside vertices.
    /// Returns the number of vertices visited.
    pub fn update_removables(&mut self, amb: Ambient, participants: &[usize]) -> usize {
        // Walked vertices are outside the structure and examined ones inside,
        // so one stamp serves both (participants may be either).
        let epoch = self.next_epoch();
        self.frontier.clear();
        self.examine.clear();
        for &p in participants {
            if self.ws.visit(p, epoch) {
                self.frontier.push((p, 0));
                if self.ws.contains(p) {
                    self.examine.push(p);
                }
            }
        }
        let mut i = 0;
        while i < self.frontier.len() {
            let (v, d) = self.frontier[i];
            i += 1;
            for w in amb.graph().neighbors(v) {
                if self.ws.contains(w) {
                    if self.ws.visit(w, epoch) {
                        self.examine.push(w);
                    }
                    if d < 3 {
                        for y in amb.graph().neighbors(w) {
                            if self.ws.contains(y) && self.ws.visit(y, epoch) {
                                self.examine.push(y);
                            }
                        }
                    }
                } else if d < 2 && amb.contains(w) && self.ws.visit(w, epoch) {
                    self.frontier.push((w, d + 1));
                }
            }
        }
        for k in 0..self.examine.len() {
            let x = self.examine[k];
            let on = cycle_move(amb, &self.ws, x).is_some();
            self.ws.set_candidate(x, on);
        }
        self.frontier.len() + self.examine.len()
    }

    /// BFS from `root`, stopping at the first non-tree edge. The tree paths
    /// from its ends to their common ancestor form an induced cycle.
    pub fn induced_cycle_from(&mut self, amb: Ambient, root: usize) -> Option<Vec<usize>> {
        let epoch = self.next_epoch();
        self.frontier.clear();
        self.ws.visit(root, epoch);
        self.parent[root] = usize::MAX;
        self.depth[root] = 0;
        self.frontier.push((root, 0));
        let mut i = 0;
        while i < self.frontier.len() {
            let u = self.frontier[i].0;
            i += 1;
            for w in amb.neighbors(u) {
                if self.ws.visit(w, epoch) {
                    self.parent[w] = u;
                    self.depth[w] = self.depth[u] + 1;
                    self.frontier.push((w, 0));
                } else if self.parent[u] != w && self.parent[w] != u {
                    return Some(self.tree_cycle(u, w));
                }
            }
        }
        None
    }

    fn tree_cycle(&self, u: usize, w: usize) -> Vec<usize> {
        let (mut a, mut b) = (u, w);
        let mut left = Vec::new();
        let mut right = Vec::new();
        while a != b {
            if self.depth[a] >= self.depth[b] {
                left.push(a);
                a = self.parent[a];
            } else {
                right.push(b);
                b = self.parent[b];
            }
        }
        left.push(a);
        left.extend(right.into_iter().rev());
        left
    }

    /// Grows `seed` into a special structure of the ambient graph.
    pub fn find(&mut self, amb: Ambient, seed: Seed) -> Result<Extraction, ExtractError> {
        match seed {
            Seed::Vertex(v) => {
                if !amb.contains(v) {
                    return Err(ExtractError::DeadSeed(v));
                }
                self.ws.start_vertex(v);
            }
            Seed::Cycle(cycle) => {
                if let Some(&v) = cycle.iter().find(|&&v| !amb.contains(v)) {
                    return Err(ExtractError::DeadSeed(v));
                }
                if !induces_cycle(amb, cycle) {
                    return Err(ExtractError::SeedNotInducedCycle);
                }
                self.ws.start_cycle(cycle);
                for &x in cycle {
                    if cycle_move(amb, &self.ws, x).is_some() {
                        self.ws.set_candidate(x, true);
                    }
                }
            }
        }
        let guard = 4 * amb.vertex_count() + 8;
        let mut iterations = 0;
        let mut max_touched = 0;
        loop {
            iterations += 1;
            let Some(mv) = next_move(amb, &self.ws)? else { break };
            apply_move(amb, &mut self.ws, mv);
            let (parts, k) = mv.participants();
            debug_assert!(locally_induced(amb, &self.ws, &parts[..k]));
            max_touched = max_touched.max(self.update_removables(amb, &parts[..k]));
            if self.audit {
                let incremental: Vec<usize> = self.ws.candidate_removables().collect();
                if incremental != removables_from_scratch(amb, &self.ws) {
                    return Err(ExtractError::AuditMismatch(iterations));
                }
            }
            if iterations > guard {
                return Err(ExtractError::IterationBound { iterations, size: self.ws.len() });
            }
        }
        let extraction = Extraction { kind: self.ws.kind(), vertices: self.ws.vertices(), iterations, max_touched };
        self.ws.clear();
        if !extraction.within_iteration_bound() {
            return Err(ExtractError::IterationBound { iterations, size: extraction.vertices.len() });
        }
        Ok(extraction)
    }
}

fn induces_cycle(amb: Ambient, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    (0..k).all(|i| {
        let (v, succ, pred) = (cycle[i], cycle[(i + 1) % k], cycle[(i + k - 1) % k]);
        amb.has_edge(v, succ)
            && amb.neighbors(v).filter(|w| sorted.binary_search(w).is_ok()).count() == 2
            && amb.has_edge(v, pred)
    })
}

/// Structure degrees around the participants of the last move are those of an
/// induced path or cycle.
fn locally_induced(amb: Ambient, ws: &WorkingStructure, participants: &[usize]) -> bool {
    let expected = |v: usize| match ws.kind() {
        StructureKind::Cycle => 2,
        StructureKind::Path if ws.len() == 1 => 0,
        StructureKind::Path if v == ws.head() || v == ws.tail() => 1,
        StructureKind::Path => 2,
    };
    participants
        .iter()
        .flat_map(|&p| std::iter::once(p).chain(amb.neighbors(p)))
        .filter(|&v| ws.contains(v))
        .all(|v| amb.neighbors(v).filter(|&w| ws.contains(w)).count() == expected(v))
}

/// An induced cycle in the component of `root`, or `None` if it is a tree.
pub fn find_induced_cycle(amb: Ambient, root: usize) -> Option<Vec<usize>> {
    SpecialFinder::new(amb.vertex_count()).induced_cycle_from(amb, root)
}

/// One-shot extraction from `seed`.
pub fn find_special(amb: Ambient, seed: Seed) -> Result<Extraction, ExtractError> {
    SpecialFinder::new(amb.vertex_count()).find(amb, seed)
}
