//! The `k`-peg Towers of Hanoi puzzle.
//!
//! A configuration of `n` disks is the word `x_1 ... x_n` with disk `i` on
//! peg `x_i`; disk 1 is the smallest. A move between pegs `i` and `j` moves
//! the smallest disk sitting on either peg to the other one, which is
//! exactly the action of the generator `a_(ij)`.

mod frame_stewart;

pub use frame_stewart::{frame_stewart_count, frame_stewart_moves, frame_stewart_split, PegMove};

use serde::Serialize;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::group::{apply_generator, Alphabet, Letter, Transposition, Word};
use crate::schreier::{build_level_graph, diameter, DiameterMode};

/// Largest state space searched exhaustively by this module.
pub const PUZZLE_BUDGET: u128 = 1 << 20;

/// Disk positions: `pegs[i]` is the peg of disk `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiskConfig {
    pegs: Word,
}

impl DiskConfig {
    pub fn new(pegs: Word) -> Self {
        DiskConfig { pegs }
    }

    /// All `n` disks on `peg`.
    pub fn tower(peg: Letter, n: usize) -> Self {
        DiskConfig {
            pegs: Word::constant(peg, n),
        }
    }

    pub fn word(&self) -> &Word {
        &self.pegs
    }

    pub fn disks(&self) -> usize {
        self.pegs.len()
    }

    /// Peg of disk `d` (1-based).
    pub fn peg_of(&self, disk: usize) -> Letter {
        self.pegs.letters()[disk - 1]
    }
}

/// An unordered pair of distinct pegs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Move {
    pegs: Transposition,
}

impl Move {
    pub fn new(alphabet: Alphabet, i: usize, j: usize) -> Result<Self> {
        Ok(Move {
            pegs: Transposition::new(alphabet, i, j)?,
        })
    }

    pub fn pegs(self) -> (Letter, Letter) {
        self.pegs.pegs()
    }

    pub fn generator(self) -> Transposition {
        self.pegs
    }

    pub fn all(alphabet: Alphabet) -> Vec<Move> {
        alphabet
            .transpositions()
            .into_iter()
            .map(|pegs| Move { pegs })
            .collect()
    }
}

/// The smallest disk on either peg of `m` moves to the other peg; with no
/// disk on either peg nothing happens.
pub fn apply_move(c: &DiskConfig, m: Move) -> DiskConfig {
    let (i, j) = m.pegs();
    let mut pegs = c.pegs.letters().to_vec();
    // disks are listed smallest first
    if let Some(disk) = pegs.iter().position(|&p| p == i || p == j) {
        pegs[disk] = if pegs[disk] == i { j } else { i };
    }
    DiskConfig {
        pegs: Word::from_letters_unchecked(pegs),
    }
}

fn check_space(alphabet: Alphabet, n: usize) -> Result<usize> {
    let size = alphabet.level_size(n).unwrap_or(u128::MAX);
    if size > PUZZLE_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "puzzle configurations",
            requested: size,
            budget: PUZZLE_BUDGET,
        });
    }
    Ok(size as usize)
}

/// Exhaustively compares puzzle moves with generator actions on every
/// configuration of `n` disks on `k` pegs.
pub fn moves_equal_generators(n: usize, k: usize) -> Result<bool> {
    let alphabet = Alphabet::new(k)?;
    let size = check_space(alphabet, n)?;
    let moves = Move::all(alphabet);
    Ok((0..size as u64).all(|idx| {
        let c = DiskConfig::new(Word::from_index(alphabet, n, idx));
        moves
            .iter()
            .all(|&m| apply_move(&c, m).pegs == apply_generator(m.generator(), &c.pegs))
    }))
}

/// Shortest move sequence from `from` to `to`, as the configurations
/// visited (both ends included).
pub fn puzzle_path(k: usize, from: &DiskConfig, to: &DiskConfig) -> Result<Vec<DiskConfig>> {
    let alphabet = Alphabet::new(k)?;
    let n = from.disks();
    if to.disks() != n {
        return Err(Error::InvalidArgument(
            "configurations have different disk counts".into(),
        ));
    }
    let size = check_space(alphabet, n)?;
    let moves = Move::all(alphabet);
    let start = from.pegs.index(alphabet) as usize;
    let goal = to.pegs.index(alphabet) as usize;
    let mut parent = vec![u32::MAX; size];
    parent[start] = start as u32;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        if x == goal {
            break;
        }
        let c = DiskConfig::new(Word::from_index(alphabet, n, x as u64));
        for &m in &moves {
            let y = apply_move(&c, m).pegs.index(alphabet) as usize;
            if parent[y] == u32::MAX {
                parent[y] = x as u32;
                queue.push_back(y);
            }
        }
    }
    if parent[goal] == u32::MAX {
        return Err(Error::InvalidArgument("target unreachable".into()));
    }
    let mut path = vec![goal];
    while *path.last().unwrap() != start {
        path.push(parent[*path.last().unwrap()] as usize);
    }
    path.reverse();
    Ok(path
        .into_iter()
        .map(|i| DiskConfig::new(Word::from_index(alphabet, n, i as u64)))
        .collect())
}

/// Exact number of moves between two configurations.
pub fn puzzle_distance(k: usize, from: &DiskConfig, to: &DiskConfig) -> Result<u32> {
    Ok(puzzle_path(k, from, to)?.len() as u32 - 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceRow {
    pub n: usize,
    /// Moves from `0^n` to `1^n`.
    pub distance: u32,
    pub frame_stewart: u128,
    pub diameter: u32,
    pub distance_below_diameter: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    pub k: usize,
    pub rows: Vec<DistanceRow>,
}

/// Tabulates the classical distance, the Frame-Stewart count and the
/// diameter of `Γ_n` for `n = 1..=max_n`.
pub fn distance_vs_diameter_report(max_n: usize, k: usize) -> Result<DistanceReport> {
    let alphabet = Alphabet::new(k)?;
    let rows = (1..=max_n)
        .map(|n| {
            let distance = puzzle_distance(k, &DiskConfig::tower(0, n), &DiskConfig::tower(1, n))?;
            let g = build_level_graph(alphabet, n)?;
            let d = diameter(&g, DiameterMode::Exact)?.diameter;
            Ok(DistanceRow {
                n,
                distance,
                frame_stewart: frame_stewart_count(n, k),
                diameter: d,
                distance_below_diameter: distance < d,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DistanceReport { k, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(a: Alphabet, s: &str) -> DiskConfig {
        DiskConfig::new(a.parse_word(s).unwrap())
    }

    #[test]
    fn move_examples() {
        let a = Alphabet::new(3).unwrap();
        let m01 = Move::new(a, 0, 1).unwrap();
        let m12 = Move::new(a, 1, 2).unwrap();
        assert_eq!(apply_move(&config(a, "000"), m01), config(a, "100"));
        assert_eq!(apply_move(&config(a, "222"), m01), config(a, "222"));
        assert_eq!(apply_move(&config(a, "012"), m12), config(a, "022"));
    }

    #[test]
    fn small_correspondence() {
        assert!(moves_equal_generators(3, 3).unwrap());
        assert!(moves_equal_generators(4, 4).unwrap());
        assert!(moves_equal_generators(0, 3).unwrap());
        assert!(moves_equal_generators(30, 3).is_err());
    }

    #[test]
    fn distances() {
        for n in 1..=6 {
            let d = puzzle_distance(3, &DiskConfig::tower(0, n), &DiskConfig::tower(1, n)).unwrap();
            assert_eq!(d, (1 << n) - 1);
        }
        let d = puzzle_distance(4, &DiskConfig::tower(0, 4), &DiskConfig::tower(1, 4)).unwrap();
        assert_eq!(d, 9);
        let c = DiskConfig::tower(2, 3);
        assert_eq!(puzzle_distance(3, &c, &c).unwrap(), 0);
    }

    #[test]
    fn report_small() {
        let r = distance_vs_diameter_report(3, 3).unwrap();
        assert_eq!(r.rows[2].distance, 7);
        assert_eq!(r.rows[2].diameter, 7);
        assert!(!r.rows[2].distance_below_diameter);
        for k in 3..=5 {
            let r = distance_vs_diameter_report(1, k).unwrap();
            assert_eq!((r.rows[0].distance, r.rows[0].diameter), (1, 1));
        }
    }
}
