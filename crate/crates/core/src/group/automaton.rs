use serde::Serialize;

use super::{Alphabet, Letter, Transposition, Word};

/// One state of an invertible automaton: its output permutation and its
/// transition on every input letter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutomatonState {
    pub id: usize,
    /// `"e"` for the identity, otherwise the generator label (`"a01"`).
    pub label: String,
    pub output: Vec<Letter>,
    pub transitions: Vec<usize>,
}

/// A finite invertible transducer over `{0, ..., k-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Automaton {
    pub k: usize,
    pub identity: usize,
    pub states: Vec<AutomatonState>,
}

impl Automaton {
    /// The automaton generating `H(k)`: state 0 is the identity, then one
    /// state per transposition in [`Alphabet::transpositions`] order. State
    /// `(i,j)` swaps `i` and `j` and falls into the identity on reading
    /// either; on any other letter it stays put.
    pub fn hanoi(alphabet: Alphabet) -> Self {
        let k = alphabet.size();
        let mut states = vec![AutomatonState {
            id: 0,
            label: "e".to_string(),
            output: alphabet.letters().collect(),
            transitions: vec![0; k],
        }];
        for (idx, t) in alphabet.transpositions().into_iter().enumerate() {
            let id = idx + 1;
            states.push(AutomatonState {
                id,
                label: t.label(),
                output: alphabet.letters().map(|x| t.swap(x)).collect(),
                transitions: alphabet
                    .letters()
                    .map(|x| if t.moves(x) { 0 } else { id })
                    .collect(),
            });
        }
        Automaton {
            k,
            identity: 0,
            states,
        }
    }

    /// State id of generator `t` in [`Automaton::hanoi`].
    pub fn state_of(alphabet: Alphabet, t: Transposition) -> usize {
        alphabet.generator_index(t) + 1
    }

    /// Runs the transducer from `state` over `w`.
    pub fn run(&self, state: usize, w: &Word) -> Word {
        let mut current = state;
        let out = w
            .letters()
            .iter()
            .map(|&x| {
                let s = &self.states[current];
                current = s.transitions[x as usize];
                s.output[x as usize]
            })
            .collect();
        Word::from_letters_unchecked(out)
    }

    /// Every output map is a bijection and the identity state is trivial.
    pub fn is_valid(&self) -> bool {
        let bijective = self.states.iter().all(|s| {
            let mut seen = vec![false; self.k];
            s.output.len() == self.k
                && s.transitions.len() == self.k
                && s.transitions.iter().all(|&q| q < self.states.len())
                && s.output.iter().all(|&y| {
                    let fresh = (y as usize) < self.k && !seen[y as usize];
                    if fresh {
                        seen[y as usize] = true;
                    }
                    fresh
                })
        });
        let id = &self.states[self.identity];
        bijective
            && id.output.iter().enumerate().all(|(x, &y)| x == y as usize)
            && id.transitions.iter().all(|&q| q == self.identity)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("automaton serializes")
    }
}
