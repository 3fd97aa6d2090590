//! Brute-force helpers shared by the integration tests.
#![allow(dead_code)]

use cubicbox::Graph;

/// Every labelled graph on `n` vertices with maximum degree at most 3.
pub fn graphs_max_degree_3(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    let mut degree = vec![0u8; n];
    let mut chosen = Vec::new();
    fn rec(
        i: usize,
        n: usize,
        pairs: &[(usize, usize)],
        degree: &mut [u8],
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Graph>,
    ) {
        if i == pairs.len() {
            out.push(Graph::from_edges(n, chosen.iter().copied()).unwrap());
            return;
        }
        rec(i + 1, n, pairs, degree, chosen, out);
        let (u, v) = pairs[i];
        if degree[u] < 3 && degree[v] < 3 {
            degree[u] += 1;
            degree[v] += 1;
            chosen.push((u, v));
            rec(i + 1, n, pairs, degree, chosen, out);
            chosen.pop();
            degree[u] -= 1;
            degree[v] -= 1;
        }
    }
    rec(0, n, &pairs, &mut degree, &mut chosen, &mut out);
    out
}

/// Every labelled simple cubic graph on `n` vertices. Equivalent to
/// filtering all 3-regular stub pairings for simplicity and removing
/// duplicate edge sets, without enumerating the pairings.
pub fn labelled_cubic_graphs(n: usize) -> Vec<Graph> {
    fn rec(n: usize, deficit: &mut [u8], adj: &mut Vec<Vec<usize>>, out: &mut Vec<Graph>) {
        let Some(v) = (0..n).find(|&v| deficit[v] > 0) else {
            let edges = (0..n).flat_map(|u| adj[u].iter().filter(move |&&w| w > u).map(move |&w| (u, w)));
            out.push(Graph::from_edges(n, edges).unwrap());
            return;
        };
        let need = deficit[v] as usize;
        let candidates: Vec<usize> = (v + 1..n).filter(|&w| deficit[w] > 0 && !adj[v].contains(&w)).collect();
        let k = candidates.len();
        if k < need {
            return;
        }
        for mask in 0u32..(1 << k) {
            if mask.count_ones() as usize != need {
                continue;
            }
            let picked: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| candidates[i]).collect();
            for &w in &picked {
                adj[v].push(w);
                adj[w].push(v);
                deficit[w] -= 1;
            }
            deficit[v] = 0;
            rec(n, deficit, adj, out);
            deficit[v] = need as u8;
            for &w in &picked {
                adj[v].pop();
                adj[w].pop();
                deficit[w] += 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut vec![3; n], &mut vec![Vec::new(); n], &mut out);
    out
}

/// Backtracking isomorphism test for small graphs.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    fn rec(i: usize, a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let n = a.vertex_count();
        if i == n {
            return true;
        }
        for c in 0..n {
            if used[c] || a.degree(i) != b.degree(c) {
                continue;
            }
            if (0..i).all(|j| a.has_edge(i, j) == b.has_edge(c, map[j])) {
                map.push(c);
                used[c] = true;
                if rec(i + 1, a, b, map, used) {
                    return true;
                }
                used[c] = false;
                map.pop();
            }
        }
        false
    }
    rec(0, a, b, &mut Vec::new(), &mut vec![false; n])
}

/// Representatives of the isomorphism classes among `graphs`.
pub fn isomorphism_classes(graphs: &[Graph]) -> Vec<Graph> {
    let mut reps: Vec<Graph> = Vec::new();
    for g in graphs {
        if !reps.iter().any(|r| isomorphic(r, g)) {
            reps.push(g.clone());
        }
    }
    reps
}

/// All vertex sets of a small graph that induce a path (including single
/// vertices) or a cycle, restricted to the vertices in `alive`.
pub struct InducedSets {
    pub n: usize,
    pub paths: Vec<u32>,
    pub cycles: Vec<u32>,
}

impl InducedSets {
    pub fn new(g: &Graph, alive: u32) -> Self {
        let n = g.vertex_count();
        assert!(n <= 20);
        let nbr: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
        let mut paths = Vec::new();
        let mut cycles = Vec::new();
        for mask in 1u32..(1 << n) {
            if mask & !alive != 0 {
                continue;
            }
            let k = mask.count_ones();
            let degs: Vec<u32> = (0..n).filter(|v| mask >> v & 1 == 1).map(|v| (nbr[v] & mask).count_ones()).collect();
            if !connected(&nbr, mask) {
                continue;
            }
            if k >= 3 && degs.iter().all(|&d| d == 2) {
                cycles.push(mask);
            } else if k == 1 || (degs.iter().filter(|&&d| d == 1).count() == 2 && degs.iter().all(|&d| d <= 2)) {
                paths.push(mask);
            }
        }
        InducedSets { n, paths, cycles }
    }

    fn any_superset(&self, core: u32, min_size: u32, cycles: bool, paths: bool) -> bool {
        let hit = |t: &u32| t & core == core && t.count_ones() >= min_size;
        (cycles && self.cycles.iter().any(hit)) || (paths && self.paths.iter().any(hit))
    }

    /// Vertex `x` of cycle `c` lies in some induced path or cycle of size at
    /// least `|c| + 1` together with the rest of the cycle.
    pub fn removable_from_cycle(&self, c: u32, x: usize) -> bool {
        self.any_superset(c & !(1 << x), c.count_ones() + 1, true, true)
    }

    pub fn special_cycle(&self, c: u32) -> bool {
        (0..self.n).filter(|&x| c >> x & 1 == 1).all(|x| !self.removable_from_cycle(c, x))
    }

    /// `ends` are the end points of the path `p` (equal for a single vertex).
    pub fn special_path(&self, p: u32, ends: (usize, usize)) -> bool {
        let size = p.count_ones();
        let maximal = !self.cycles.iter().any(|&t| t & p == p) && !self.any_superset(p, size + 1, false, true);
        // An empty remainder (single-vertex path) constrains nothing.
        let removable = |x: usize| {
            let core = p & !(1 << x);
            core != 0 && (self.any_superset(core, size, true, false) || self.any_superset(core, size + 1, false, true))
        };
        maximal && !removable(ends.0) && !removable(ends.1)
    }
}

fn connected(nbr: &[u32], mask: u32) -> bool {
    let start = mask.trailing_zeros();
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = nbr[v] & mask & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == mask
}

pub fn mask_of(vs: &[usize]) -> u32 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}
