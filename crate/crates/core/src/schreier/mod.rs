//! Schreier graphs of `H(k)`: the action graphs on level `n` of the tree
//! and balls in the orbital graph of the ray `000...`.

mod ball;
mod distance;
mod export;
mod growth;

pub use ball::{
    growth_ball, growth_ball_with_budget, growth_function, growth_function_within, BallGraph,
    CanonicalBall, MAX_BALL_VERTICES,
};
pub use distance::{bfs_distance, diameter, DiameterMode, GraphMetrics, EXACT_DIAMETER_BUDGET};
pub use export::{export_graph, ExportGraph, GraphFormat};
pub use growth::{fit_growth, growth_exponent_diagnostics, FitReport};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{Alphabet, Transposition, Word};

/// Default vertex budget for [`build_level_graph`].
pub const MAX_LEVEL_VERTICES: u64 = 1 << 22;

/// One labeled edge `{u, v}` with `u <= v`; `generator` indexes
/// [`Alphabet::transpositions`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: u32,
    pub v: u32,
    pub generator: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// The Schreier graph `Γ_n`: vertices are the `k^n` words of length `n`,
/// indexed by their base-`k` value (first letter most significant). Every
/// vertex carries one edge per generator, loops included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelGraph {
    alphabet: Alphabet,
    level: usize,
    generators: Vec<Transposition>,
    /// `neighbors[v * |S| + s]` is the image of `v` under generator `s`.
    neighbors: Vec<u32>,
}

/// `build_level_graph` with the default budget.
pub fn build_level_graph(alphabet: Alphabet, n: usize) -> Result<LevelGraph> {
    LevelGraph::build(alphabet, n, MAX_LEVEL_VERTICES)
}

impl LevelGraph {
    pub fn build(alphabet: Alphabet, n: usize, max_vertices: u64) -> Result<Self> {
        let size = alphabet.level_size(n).unwrap_or(u128::MAX);
        if size > max_vertices as u128 || size > u32::MAX as u128 {
            return Err(Error::BudgetExceeded {
                what: "level graph vertices",
                requested: size,
                budget: max_vertices as u128,
            });
        }
        let size = size as usize;
        let generators = alphabet.transpositions();
        let degree = generators.len();
        let mut neighbors = vec![0u32; size * degree];
        neighbors
            .par_chunks_mut(degree)
            .enumerate()
            .for_each(|(v, row)| {
                let word = Word::from_index(alphabet, n, v as u64);
                for (slot, &t) in row.iter_mut().zip(&generators) {
                    let mut letters = word.letters().to_vec();
                    t.act_in_place(&mut letters);
                    *slot = Word::from_letters_unchecked(letters).index(alphabet) as u32;
                }
            });
        Ok(LevelGraph {
            alphabet,
            level: n,
            generators,
            neighbors,
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn generators(&self) -> &[Transposition] {
        &self.generators
    }

    pub fn degree(&self) -> usize {
        self.generators.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.neighbors.len() / self.degree()
    }

    pub fn word(&self, v: u32) -> Word {
        Word::from_index(self.alphabet, self.level, v as u64)
    }

    /// Vertex index of `w`, which must have length `n`.
    pub fn vertex(&self, w: &Word) -> Result<u32> {
        if w.len() != self.level {
            return Err(Error::InvalidArgument(format!(
                "word {w} is not on level {}",
                self.level
            )));
        }
        Ok(w.index(self.alphabet) as u32)
    }

    #[inline]
    pub fn neighbor(&self, v: u32, generator: usize) -> u32 {
        self.neighbors[v as usize * self.degree() + generator]
    }

    #[inline]
    pub fn neighbors_of(&self, v: u32) -> &[u32] {
        let d = self.degree();
        &self.neighbors[v as usize * d..(v as usize + 1) * d]
    }

    /// Edges in vertex-major, then generator order; each non-loop edge is
    /// listed once, from its smaller endpoint.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() as u32 {
            for (generator, &v) in self.neighbors_of(u).iter().enumerate() {
                if u <= v {
                    out.push(Edge { u, v, generator });
                }
            }
        }
        out
    }

    pub fn loop_count(&self) -> usize {
        (0..self.vertex_count() as u32)
            .map(|u| self.neighbors_of(u).iter().filter(|&&v| v == u).count())
            .sum()
    }

    /// Canonical labeled form of the radius-`r` ball around `center`.
    pub fn canonical_ball(&self, center: u32, radius: u32) -> CanonicalBall {
        CanonicalBall::from_neighbors(center as usize, radius, self.degree(), |v, s| {
            Some(self.neighbor(v as u32, s) as usize)
        })
    }
}
