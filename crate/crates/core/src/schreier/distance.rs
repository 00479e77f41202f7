use rayon::prelude::*;
use serde::Serialize;
use std::collections::VecDeque;

use super::LevelGraph;
use crate::error::{Error, Result};

/// Largest vertex count for all-pairs diameters: `4^8`. For `k = 3` this
/// admits levels up to 10 (`3^10 = 59049`).
pub const EXACT_DIAMETER_BUDGET: usize = 65_536;

const UNSEEN: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiameterMode {
    /// All-pairs BFS.
    Exact,
    /// Repeated farthest-point sweeps; a lower bound only.
    DoubleSweep { sweeps: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphMetrics {
    pub diameter: u32,
    /// `true` when `diameter` is only a lower bound.
    pub lower_bound: bool,
    pub connected: bool,
    /// Per-vertex eccentricities (exact mode only).
    pub eccentricities: Option<Vec<u32>>,
}

impl LevelGraph {
    /// BFS distances from `source`; `u32::MAX` marks unreachable vertices.
    /// Loops never shorten a path, so they are skipped implicitly.
    pub fn bfs(&self, source: u32) -> Vec<u32> {
        let mut dist = vec![UNSEEN; self.vertex_count()];
        let mut queue = VecDeque::with_capacity(self.vertex_count());
        dist[source as usize] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u as usize] + 1;
            for &v in self.neighbors_of(u) {
                if dist[v as usize] == UNSEEN {
                    dist[v as usize] = next;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Eccentricity of `source`, or `None` if some vertex is unreachable.
    pub fn eccentricity(&self, source: u32) -> Option<u32> {
        let dist = self.bfs(source);
        let max = *dist.iter().max().unwrap();
        (max != UNSEEN).then_some(max)
    }
}

/// Exact shortest-path length between `u` and `v`, or `None` if they lie
/// in different components.
pub fn bfs_distance(g: &LevelGraph, u: u32, v: u32) -> Option<u32> {
    if u == v {
        return Some(0);
    }
    let mut dist = vec![UNSEEN; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[u as usize] = 0;
    queue.push_back(u);
    while let Some(x) = queue.pop_front() {
        let next = dist[x as usize] + 1;
        for &y in g.neighbors_of(x) {
            if dist[y as usize] == UNSEEN {
                if y == v {
                    return Some(next);
                }
                dist[y as usize] = next;
                queue.push_back(y);
            }
        }
    }
    None
}

pub fn diameter(g: &LevelGraph, mode: DiameterMode) -> Result<GraphMetrics> {
    match mode {
        DiameterMode::Exact => exact_diameter(g),
        DiameterMode::DoubleSweep { sweeps } => Ok(double_sweep(g, sweeps.max(1))),
    }
}

fn exact_diameter(g: &LevelGraph) -> Result<GraphMetrics> {
    if g.vertex_count() > EXACT_DIAMETER_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "exact diameter vertices",
            requested: g.vertex_count() as u128,
            budget: EXACT_DIAMETER_BUDGET as u128,
        });
    }
    let ecc: Vec<Option<u32>> = (0..g.vertex_count() as u32)
        .into_par_iter()
        .map(|v| g.eccentricity(v))
        .collect();
    let connected = ecc.iter().all(Option::is_some);
    let eccentricities: Vec<u32> = ecc.into_iter().map(|e| e.unwrap_or(UNSEEN)).collect();
    let diameter = if connected {
        eccentricities.iter().copied().max().unwrap_or(0)
    } else {
        UNSEEN
    };
    Ok(GraphMetrics {
        diameter,
        lower_bound: false,
        connected,
        eccentricities: Some(eccentricities),
    })
}

fn double_sweep(g: &LevelGraph, sweeps: usize) -> GraphMetrics {
    let mut start = 0u32;
    let mut best = 0u32;
    let mut connected = true;
    for _ in 0..sweeps {
        let dist = g.bfs(start);
        if dist.contains(&UNSEEN) {
            connected = false;
        }
        let (far, &d) = dist
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != UNSEEN)
            .max_by_key(|(i, &d)| (d, std::cmp::Reverse(*i)))
            .unwrap();
        if d <= best && best > 0 {
            break;
        }
        best = best.max(d);
        start = far as u32;
    }
    GraphMetrics {
        diameter: best,
        lower_bound: true,
        connected,
        eccentricities: None,
    }
}
