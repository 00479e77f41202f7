use serde::Serialize;
use std::fmt;

use super::{Alphabet, Letter, Transposition};
use crate::error::Result;

/// Something a generator can act on: a vertex of the tree or a point of its
/// boundary.
pub trait TreePoint: Clone {
    fn act(&self, t: Transposition) -> Self;
}

/// A finite word `x_1 ... x_n`; a vertex on level `n` of the tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(alphabet: Alphabet, letters: Vec<usize>) -> Result<Self> {
        let letters = letters
            .into_iter()
            .map(|x| alphabet.check_letter(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word { letters })
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    /// `x^n`.
    pub fn constant(letter: Letter, n: usize) -> Self {
        Word {
            letters: vec![letter; n],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub(crate) fn letters_mut(&mut self) -> &mut [Letter] {
        &mut self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.letters.starts_with(&self.letters)
    }

    /// Base-`k` value with the first letter most significant.
    pub fn index(&self, alphabet: Alphabet) -> u64 {
        let k = alphabet.size() as u64;
        self.letters.iter().fold(0u64, |acc, &x| acc * k + x as u64)
    }

    /// Inverse of [`Word::index`] for words of length `n`.
    pub fn from_index(alphabet: Alphabet, n: usize, mut index: u64) -> Self {
        let k = alphabet.size() as u64;
        let mut letters = vec![0; n];
        for slot in letters.iter_mut().rev() {
            *slot = (index % k) as Letter;
            index /= k;
        }
        Word { letters }
    }
}

impl TreePoint for Word {
    fn act(&self, t: Transposition) -> Self {
        let mut out = self.clone();
        t.act_in_place(&mut out.letters);
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[Letter]) -> fmt::Result {
    if letters.iter().all(|&x| x < 10) {
        for x in letters {
            write!(f, "{x}")?;
        }
        Ok(())
    } else {
        for (pos, x) in letters.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// An eventually-zero infinite word `p 000...`, stored by its prefix `p`
/// with trailing zeros stripped so equality is structural. The empty
/// prefix is the ray `ξ = 000...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct TailWord {
    prefix: Vec<Letter>,
}

impl TailWord {
    /// The ray `000...`.
    pub fn xi() -> Self {
        TailWord { prefix: Vec::new() }
    }

    pub fn new(word: &Word) -> Self {
        let mut prefix = word.letters.clone();
        strip_zeros(&mut prefix);
        TailWord { prefix }
    }

    pub fn prefix(&self) -> &[Letter] {
        &self.prefix
    }

    /// First `n` letters, zero-padded (`n` may be shorter than the prefix).
    pub fn truncate(&self, n: usize) -> Word {
        let mut letters: Vec<Letter> = self.prefix.iter().copied().take(n).collect();
        letters.resize(n, 0);
        Word { letters }
    }
}

fn strip_zeros(prefix: &mut Vec<Letter>) {
    while prefix.last() == Some(&0) {
        prefix.pop();
    }
}

impl TreePoint for TailWord {
    fn act(&self, t: Transposition) -> Self {
        let mut prefix = self.prefix.clone();
        if t.act_in_place(&mut prefix).is_some() {
            strip_zeros(&mut prefix);
        } else if t.moves(0) {
            // the first tail zero is the first letter in {0, j}
            prefix.push(t.swap(0));
        }
        TailWord { prefix }
    }
}

impl fmt::Display for TailWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.prefix)?;
        f.write_str("0...")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: Alphabet, i: usize, j: usize) -> Transposition {
        Transposition::new(a, i, j).unwrap()
    }

    #[test]
    fn tail_examples() {
        let a = Alphabet::new(3).unwrap();
        let xi = TailWord::xi();
        let one = xi.act(t(a, 0, 1));
        assert_eq!(one.prefix(), &[1]);
        assert_eq!(xi.act(t(a, 1, 2)), xi);
        assert_eq!(one.act(t(a, 0, 2)).prefix(), &[1, 2]);
        // swapping back to zero re-canonicalises
        assert_eq!(one.act(t(a, 0, 1)), xi);
    }

    #[test]
    fn index_round_trip() {
        let a = Alphabet::new(4).unwrap();
        for idx in 0..256 {
            let w = Word::from_index(a, 4, idx);
            assert_eq!(w.index(a), idx);
        }
        assert_eq!(a.parse_word("013").unwrap().index(a), 7);
    }

    #[test]
    fn display() {
        let a = Alphabet::new(3).unwrap();
        assert_eq!(a.parse_word("021").unwrap().to_string(), "021");
        assert_eq!(
            TailWord::new(&a.parse_word("1200").unwrap()).to_string(),
            "120..."
        );
        assert_eq!(TailWord::xi().to_string(), "0...");
    }
}
