use std::fmt;

use super::{Alphabet, Letter, Transposition, TreePoint};

/// A generator raised to `±1`. The generators are involutions, so the sign
/// never changes the action; it is carried along for bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub generator: Transposition,
    pub inverse: bool,
}

impl From<Transposition> for Factor {
    fn from(generator: Transposition) -> Self {
        Factor {
            generator,
            inverse: false,
        }
    }
}

/// A product `f_1 f_2 ... f_m` of generators. As a map it acts with the
/// rightmost factor first: `g(w) = f_1(f_2(... f_m(w)))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupWord {
    factors: Vec<Factor>,
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord::default()
    }

    pub fn new(factors: Vec<Factor>) -> Self {
        GroupWord { factors }
    }

    pub fn from_generators(gens: impl IntoIterator<Item = Transposition>) -> Self {
        GroupWord {
            factors: gens.into_iter().map(Factor::from).collect(),
        }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `self * other`: `other` acts first.
    pub fn compose(&self, other: &GroupWord) -> GroupWord {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        GroupWord { factors }
    }

    /// Cancels adjacent equal generators until none remain. No other
    /// relations of the group are used.
    pub fn reduced(&self) -> GroupWord {
        let mut stack: Vec<Factor> = Vec::with_capacity(self.factors.len());
        for &f in &self.factors {
            if stack.last().map(|top| top.generator) == Some(f.generator) {
                stack.pop();
            } else {
                stack.push(f);
            }
        }
        GroupWord { factors: stack }
    }

    pub fn is_reduced(&self) -> bool {
        self.factors
            .windows(2)
            .all(|p| p[0].generator != p[1].generator)
    }

    /// `evaluate_group_word`: applies the factors right to left.
    pub fn evaluate<P: TreePoint>(&self, point: &P) -> P {
        self.factors
            .iter()
            .rev()
            .fold(point.clone(), |p, f| p.act(f.generator))
    }

    /// Image of a single letter under the root permutation.
    pub fn permute_letter(&self, letter: Letter) -> Letter {
        self.factors
            .iter()
            .rev()
            .fold(letter, |x, f| f.generator.swap(x))
    }

    /// The section `g_x`, freely reduced.
    pub fn section(&self, letter: Letter) -> GroupWord {
        let mut current = letter;
        let mut kept = Vec::new();
        for f in self.factors.iter().rev() {
            // the section of a_(ij) at x is trivial for x in {i,j}, else a_(ij)
            if !f.generator.moves(current) {
                kept.push(*f);
            }
            current = f.generator.swap(current);
        }
        kept.reverse();
        GroupWord { factors: kept }.reduced()
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("e");
        }
        for (pos, factor) in self.factors.iter().enumerate() {
            if pos > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", factor.generator.label())?;
            if factor.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// `g = π_g (g_0, ..., g_{k-1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// `permutation[x] = π_g(x)`.
    pub permutation: Vec<Letter>,
    pub sections: Vec<GroupWord>,
}

/// The wreath decomposition of `g`, with `g(xw) = π_g(x) g_x(w)`.
pub fn root_permutation_and_sections(g: &GroupWord, alphabet: Alphabet) -> Decomposition {
    Decomposition {
        permutation: alphabet.letters().map(|x| g.permute_letter(x)).collect(),
        sections: alphabet.letters().map(|x| g.section(x)).collect(),
    }
}
