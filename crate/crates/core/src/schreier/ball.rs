use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::group::{Alphabet, TailWord, Transposition, TreePoint};

/// Default vertex budget for balls in the orbital graph.
pub const MAX_BALL_VERTICES: usize = 1 << 24;

/// The radius-`r` ball around `center` in the orbital graph of eventually
/// zero words. Vertices are numbered in BFS order, so `distance` is
/// nondecreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallGraph {
    pub alphabet: Alphabet,
    pub center: TailWord,
    pub radius: u32,
    pub vertices: Vec<TailWord>,
    pub distance: Vec<u32>,
    /// `neighbors[v * |S| + s]`: image of `v` under generator `s` when it
    /// lies in the ball, `None` otherwise (only possible at distance `r`).
    pub neighbors: Vec<Option<u32>>,
    /// `gamma[t]` = number of vertices at distance `<= t`.
    pub gamma: Vec<u64>,
}

impl BallGraph {
    pub fn degree(&self) -> usize {
        self.alphabet.generator_count()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn neighbor(&self, v: u32, generator: usize) -> Option<u32> {
        self.neighbors[v as usize * self.degree() + generator]
    }

    pub fn canonical_form(&self) -> CanonicalBall {
        // the center is vertex 0
        CanonicalBall::from_neighbors(0, self.radius, self.degree(), |v, s| {
            self.neighbor(v as u32, s).map(|x| x as usize)
        })
    }
}

/// BFS over eventually-zero words, recording the whole ball.
pub fn growth_ball(alphabet: Alphabet, center: &TailWord, radius: u32) -> Result<BallGraph> {
    growth_ball_with_budget(alphabet, center, radius, MAX_BALL_VERTICES)
}

pub fn growth_ball_with_budget(
    alphabet: Alphabet,
    center: &TailWord,
    radius: u32,
    max_vertices: usize,
) -> Result<BallGraph> {
    let gens = alphabet.transpositions();
    let degree = gens.len();
    let mut index: HashMap<TailWord, u32> = HashMap::new();
    let mut vertices = vec![center.clone()];
    let mut distance = vec![0u32];
    index.insert(center.clone(), 0);

    let mut head = 0usize;
    while head < vertices.len() {
        let d = distance[head];
        if d == radius {
            break;
        }
        for &t in &gens {
            let w = vertices[head].act(t);
            if !index.contains_key(&w) {
                if vertices.len() >= max_vertices {
                    return Err(ball_budget(max_vertices));
                }
                index.insert(w.clone(), vertices.len() as u32);
                vertices.push(w);
                distance.push(d + 1);
            }
        }
        head += 1;
    }

    let mut neighbors = Vec::with_capacity(vertices.len() * degree);
    for w in &vertices {
        for &t in &gens {
            neighbors.push(index.get(&w.act(t)).copied());
        }
    }
    let gamma = cumulative(&distance, radius);
    Ok(BallGraph {
        alphabet,
        center: center.clone(),
        radius,
        vertices,
        distance,
        neighbors,
        gamma,
    })
}

fn cumulative(distance: &[u32], radius: u32) -> Vec<u64> {
    let mut per_layer = vec![0u64; radius as usize + 1];
    for &d in distance {
        per_layer[d as usize] += 1;
    }
    per_layer
        .iter()
        .scan(0u64, |acc, &c| {
            *acc += c;
            Some(*acc)
        })
        .collect()
}

fn ball_budget(max_vertices: usize) -> Error {
    Error::BudgetExceeded {
        what: "orbital ball vertices",
        requested: max_vertices as u128 + 1,
        budget: max_vertices as u128,
    }
}

/// `γ(0), ..., γ(r)` without storing the ball. The graph is undirected, so
/// a new layer only has to be checked against the two layers before it.
pub fn growth_function(
    alphabet: Alphabet,
    center: &TailWord,
    radius: u32,
    max_vertices: usize,
) -> Result<Vec<u64>> {
    let gamma = growth_function_within(alphabet, center, radius, max_vertices);
    if gamma.len() <= radius as usize {
        return Err(ball_budget(max_vertices));
    }
    Ok(gamma)
}

/// Like [`growth_function`], but stops before the first radius whose ball
/// would exceed `max_vertices` and returns the counts reached so far.
pub fn growth_function_within(
    alphabet: Alphabet,
    center: &TailWord,
    radius: u32,
    max_vertices: usize,
) -> Vec<u64> {
    let gens: Vec<Transposition> = alphabet.transpositions();
    let mut previous: HashSet<TailWord> = HashSet::new();
    let mut current: HashSet<TailWord> = HashSet::from([center.clone()]);
    let mut gamma = vec![1u64];
    for _ in 0..radius {
        let mut next = HashSet::new();
        for w in &current {
            for &t in &gens {
                let x = w.act(t);
                if !current.contains(&x) && !previous.contains(&x) {
                    next.insert(x);
                }
            }
        }
        let total = gamma.last().unwrap() + next.len() as u64;
        if total > max_vertices as u64 {
            break;
        }
        gamma.push(total);
        previous = std::mem::replace(&mut current, next);
    }
    gamma
}

/// A pointed, generator-labeled ball written in a canonical numbering:
/// vertices are numbered in the order a BFS from the center discovers them,
/// scanning generators in index order. Two balls are label-isomorphic iff
/// their canonical forms are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalBall {
    pub radius: u32,
    /// `table[v][s]`: canonical id of the `s`-neighbor of `v`, or `None`
    /// when that neighbor is outside the ball.
    pub table: Vec<Vec<Option<u32>>>,
}

impl CanonicalBall {
    pub(crate) fn from_neighbors(
        center: usize,
        radius: u32,
        degree: usize,
        neighbor: impl Fn(usize, usize) -> Option<usize>,
    ) -> Self {
        let mut id: HashMap<usize, u32> = HashMap::from([(center, 0)]);
        let mut dist: Vec<u32> = vec![0];
        let mut order = vec![center];
        let mut queue = VecDeque::from([center]);
        while let Some(v) = queue.pop_front() {
            let d = dist[id[&v] as usize];
            if d == radius {
                continue;
            }
            for s in 0..degree {
                if let Some(x) = neighbor(v, s) {
                    if let Entry::Vacant(slot) = id.entry(x) {
                        slot.insert(order.len() as u32);
                        order.push(x);
                        dist.push(d + 1);
                        queue.push_back(x);
                    }
                }
            }
        }
        let table = order
            .iter()
            .map(|&v| {
                (0..degree)
                    .map(|s| neighbor(v, s).and_then(|x| id.get(&x).copied()))
                    .collect()
            })
            .collect();
        CanonicalBall { radius, table }
    }

    pub fn vertex_count(&self) -> usize {
        self.table.len()
    }
}
