//! Repeated extraction of special structures.

use serde::Serialize;

use crate::graph::Graph;
use crate::special::{Ambient, ExtractError, Seed, SpecialFinder, StructureKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    Extracted,
    Neighbor,
    Rest,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialComponent {
    pub kind: StructureKind,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtractionStats {
    pub size: usize,
    pub kind: StructureKind,
    pub iterations: usize,
    pub max_touched: usize,
    pub seeded_with_cycle: bool,
}

#[derive(Debug, Clone)]
pub struct Primary {
    pub specials: Vec<SpecialComponent>,
    pub region: Vec<Region>,
    pub extractions: Vec<ExtractionStats>,
}

/// Whether `v` lies in a component of at least three alive vertices.
fn in_large_component(g: &Graph, alive: &[bool], v: usize) -> bool {
    let mut live = g.neighbors(v).into_iter().filter(|&w| alive[w]);
    match (live.next(), live.next()) {
        (Some(_), Some(_)) => true,
        (Some(w), None) => g.neighbors(w).iter().any(|&x| x != v && alive[x]),
        _ => false,
    }
}

/// Extracts special structures until every alive component has at most two
/// vertices. The first extraction in each component starts from an induced
/// cycle, later ones from the smallest alive vertex.
pub fn primary_partition(g: &Graph) -> Result<Primary, ExtractError> {
    let n = g.vertex_count();
    let component = g.component_labels();
    let mut seeded = vec![false; component.iter().max().map_or(0, |&c| c + 1)];
    let mut alive = vec![true; n];
    let mut region = vec![Region::Rest; n];
    let mut finder = SpecialFinder::new(n);
    let mut specials = Vec::new();
    let mut extractions = Vec::new();
    for v in 0..n {
        while alive[v] && in_large_component(g, &alive, v) {
            let amb = Ambient::restricted(g, &alive);
            let cycle = if seeded[component[v]] { None } else { finder.induced_cycle_from(amb, v) };
            seeded[component[v]] = true;
            let ex = match &cycle {
                Some(c) => finder.find(amb, Seed::Cycle(c))?,
                None => finder.find(amb, Seed::Vertex(v))?,
            };
            for &s in &ex.vertices {
                region[s] = Region::Extracted;
            }
            for &s in &ex.vertices {
                alive[s] = false;
                for w in g.neighbors(s) {
                    alive[w] = false;
                    if region[w] != Region::Extracted {
                        region[w] = Region::Neighbor;
                    }
                }
            }
            extractions.push(ExtractionStats {
                size: ex.vertices.len(),
                kind: ex.kind,
                iterations: ex.iterations,
                max_touched: ex.max_touched,
                seeded_with_cycle: cycle.is_some(),
            });
            specials.push(SpecialComponent { kind: ex.kind, vertices: ex.vertices });
        }
    }
    Ok(Primary { specials, region, extractions })
}
