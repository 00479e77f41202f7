//! Words over `{0, ..., k-1}`, the Hanoi automaton and group words acting on
//! the rooted tree.

mod automaton;
mod contraction;
mod element;
mod word;

pub use automaton::{Automaton, AutomatonState};
pub use contraction::{contraction_probe, LengthProbe, ProbeReport, MAX_PROBE_LENGTH};
pub use element::{root_permutation_and_sections, Decomposition, Factor, GroupWord};
pub use word::{TailWord, TreePoint, Word};

use serde::Serialize;
use std::fmt;

use crate::error::{Error, Result};

/// A letter of the alphabet; also a peg number.
pub type Letter = u8;

/// Largest supported number of pegs.
pub const MAX_PEGS: usize = 16;

/// The alphabet `{0, ..., k-1}` with `3 <= k <= MAX_PEGS`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Alphabet {
    k: u8,
}

impl Alphabet {
    pub fn new(k: usize) -> Result<Self> {
        if !(3..=MAX_PEGS).contains(&k) {
            return Err(Error::InvalidAlphabet(k));
        }
        Ok(Alphabet { k: k as u8 })
    }

    pub fn size(self) -> usize {
        self.k as usize
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> {
        0..self.k
    }

    pub fn check_letter(self, letter: usize) -> Result<Letter> {
        if letter < self.size() {
            Ok(letter as Letter)
        } else {
            Err(Error::InvalidLetter {
                letter,
                k: self.size(),
            })
        }
    }

    /// All transpositions `(i, j)`, `i < j`, in lexicographic order. This is
    /// the generating set `S` of `H(k)`; its order fixes generator indices
    /// everywhere else in the crate.
    pub fn transpositions(self) -> Vec<Transposition> {
        let mut out = Vec::with_capacity(self.generator_count());
        for i in 0..self.k {
            for j in i + 1..self.k {
                out.push(Transposition { i, j });
            }
        }
        out
    }

    /// `|S| = k(k-1)/2`. Every generator is an involution, so this is also
    /// `|S ∪ S^-1|`.
    pub fn generator_count(self) -> usize {
        let k = self.size();
        k * (k - 1) / 2
    }

    /// Index of `t` in [`Alphabet::transpositions`].
    pub fn generator_index(self, t: Transposition) -> usize {
        let k = self.size();
        let (i, j) = (t.i as usize, t.j as usize);
        // pairs (a, b) with a < i come first
        i * (2 * k - i - 1) / 2 + (j - i - 1)
    }

    /// `k^n`, or `None` on overflow.
    pub fn level_size(self, n: usize) -> Option<u128> {
        (self.k as u128).checked_pow(u32::try_from(n).ok()?)
    }

    /// Parses a word written as digits (`"012"`); letters above 9 are not
    /// expressible this way, use [`Word::new`] instead.
    pub fn parse_word(self, text: &str) -> Result<Word> {
        let letters = text
            .chars()
            .map(|c| {
                let d = c
                    .to_digit(10)
                    .ok_or_else(|| Error::InvalidArgument(format!("not a digit: {c:?}")))?;
                self.check_letter(d as usize)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::from_letters_unchecked(letters))
    }
}

/// The generator `a_(ij)`: swaps `i` and `j` at the first position holding
/// either letter and leaves the rest of the word alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Transposition {
    i: Letter,
    j: Letter,
}

impl Transposition {
    /// Builds `a_(ij)`; the pair is unordered and stored with `i < j`.
    pub fn new(alphabet: Alphabet, i: usize, j: usize) -> Result<Self> {
        let a = alphabet.check_letter(i)?;
        let b = alphabet.check_letter(j)?;
        if a == b {
            return Err(Error::InvalidTransposition(i, j));
        }
        Ok(Transposition {
            i: a.min(b),
            j: a.max(b),
        })
    }

    pub fn pegs(self) -> (Letter, Letter) {
        (self.i, self.j)
    }

    #[inline]
    pub fn moves(self, letter: Letter) -> bool {
        letter == self.i || letter == self.j
    }

    /// The root permutation: swaps `i` and `j`.
    #[inline]
    pub fn swap(self, letter: Letter) -> Letter {
        if letter == self.i {
            self.j
        } else if letter == self.j {
            self.i
        } else {
            letter
        }
    }

    /// Acts in place on a finite word. Returns the position that changed.
    #[inline]
    pub fn act_in_place(self, letters: &mut [Letter]) -> Option<usize> {
        let pos = letters.iter().position(|&x| self.moves(x))?;
        letters[pos] = self.swap(letters[pos]);
        Some(pos)
    }

    /// Short edge label such as `a01`; pegs above 9 are separated by `_`.
    pub fn label(self) -> String {
        if self.j < 10 {
            format!("a{}{}", self.i, self.j)
        } else {
            format!("a{}_{}", self.i, self.j)
        }
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// `apply_generator`: the action of `a_(ij)` on a finite word.
pub fn apply_generator(t: Transposition, w: &Word) -> Word {
    let mut out = w.clone();
    t.act_in_place(out.letters_mut());
    out
}

/// `apply_generator_tail`: the action of `a_(ij)` on an eventually-zero
/// infinite word.
pub fn apply_generator_tail(t: Transposition, w: &TailWord) -> TailWord {
    w.act(t)
}
