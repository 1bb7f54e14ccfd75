//! The map-balance objective: four requirement violation counts and their
//! sum `F_tot`, which the search minimizes.
//!
//! * REQ1 — no two adjacent land hexes share a terrain type.
//! * REQ2 — every river hex has one to three river neighbors.
//! * REQ3 — the river hexes form a single connected region.
//! * REQ4 — every land hex has a land neighbor exactly one spade away.
//!
//! Counting units: REQ1 counts offending unordered adjacent pairs (or cells,
//! see [`Req1Counting`]), REQ2 and REQ4 count offending cells, REQ3 counts
//! river components beyond the first.

use crate::board::MapState;
use crate::terrain::wheel_distance;

/// Per-requirement violation counts plus their total.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ViolationReport {
    pub req1: u32,
    pub req2: u32,
    pub req3: u32,
    pub req4: u32,
    /// `F_tot`: the sum of the four counts.
    pub total: u32,
}

impl ViolationReport {
    /// Assembles a report from the four counts; the total is their sum.
    pub fn from_counts(req1: u32, req2: u32, req3: u32, req4: u32) -> Self {
        Self {
            req1,
            req2,
            req3,
            req4,
            total: req1 + req2 + req3 + req4,
        }
    }
}

/// Counting unit for REQ1. Same-terrain adjacency can be charged per
/// offending pair or per offending cell; official maps score 0 either way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Req1Counting {
    /// One violation per unordered adjacent same-terrain land pair.
    #[default]
    PerPair,
    /// One violation per land cell with any same-terrain land neighbor.
    PerCell,
}

/// REQ1 violations with the default per-pair counting.
pub fn req1_violations(m: &MapState) -> u32 {
    req1_violations_with(m, Req1Counting::PerPair)
}

/// REQ1 violations under an explicit counting mode.
pub fn req1_violations_with(m: &MapState, mode: Req1Counting) -> u32 {
    let layout = m.layout();
    let terrains = m.terrains();
    let mut count = 0;
    for i in 0..terrains.len() {
        if !terrains[i].is_land() {
            continue;
        }
        match mode {
            Req1Counting::PerPair => {
                // Visit each unordered pair once via i < j.
                for &j in layout.neighbor_indices(i) {
                    let j = j as usize;
                    if j > i && terrains[j] == terrains[i] {
                        count += 1;
                    }
                }
            }
            Req1Counting::PerCell => {
                let offending = layout
                    .neighbor_indices(i)
                    .iter()
                    .any(|&j| terrains[j as usize] == terrains[i]);
                if offending {
                    count += 1;
                }
            }
        }
    }
    count
}

/// REQ2 violations: river cells whose river-neighbor count is 0 or ≥ 4.
pub fn req2_violations(m: &MapState) -> u32 {
    let layout = m.layout();
    let terrains = m.terrains();
    let mut count = 0;
    for i in 0..terrains.len() {
        if !terrains[i].is_river() {
            continue;
        }
        let river_neighbors = layout
            .neighbor_indices(i)
            .iter()
            .filter(|&&j| terrains[j as usize].is_river())
            .count();
        if !(1..=3).contains(&river_neighbors) {
            count += 1;
        }
    }
    count
}

/// REQ3 violations: connected components of the river subgraph beyond the
/// first, found by depth-first traversal. Zero river cells count as zero.
pub fn req3_violations(m: &MapState) -> u32 {
    let layout = m.layout();
    let terrains = m.terrains();
    let mut visited = vec![false; terrains.len()];
    let mut stack = Vec::new();
    let mut components = 0u32;
    for start in 0..terrains.len() {
        if !terrains[start].is_river() || visited[start] {
            continue;
        }
        components += 1;
        visited[start] = true;
        stack.push(start);
        while let Some(i) = stack.pop() {
            for &j in layout.neighbor_indices(i) {
                let j = j as usize;
                if terrains[j].is_river() && !visited[j] {
                    visited[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    components.saturating_sub(1)
}

/// REQ4 violations: land cells with no land neighbor exactly one spade away.
/// River neighbors never satisfy the requirement.
pub fn req4_violations(m: &MapState) -> u32 {
    let layout = m.layout();
    let terrains = m.terrains();
    let mut count = 0;
    for i in 0..terrains.len() {
        let Some(pos) = terrains[i].wheel_position() else {
            continue;
        };
        let satisfied = layout.neighbor_indices(i).iter().any(|&j| {
            terrains[j as usize]
                .wheel_position()
                .is_some_and(|p| wheel_distance(pos, p) == 1)
        });
        if !satisfied {
            count += 1;
        }
    }
    count
}

/// Scores a map: the four counts and their sum, with default REQ1 counting.
pub fn evaluate(m: &MapState) -> ViolationReport {
    evaluate_with(m, Req1Counting::default())
}

/// Scores a map under an explicit REQ1 counting mode.
pub fn evaluate_with(m: &MapState, mode: Req1Counting) -> ViolationReport {
    ViolationReport::from_counts(
        req1_violations_with(m, mode),
        req2_violations(m),
        req3_violations(m),
        req4_violations(m),
    )
}
