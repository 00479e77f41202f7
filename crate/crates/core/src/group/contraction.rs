//! Empirical contraction test: take sections repeatedly and watch whether
//! word length falls.
//!
//! Lengths are lengths of freely reduced words, which only bound the true
//! group length from above. Descent seen here is therefore evidence of
//! contraction; a failure to descend proves nothing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeSet;

use super::{Alphabet, GroupWord, Transposition};
use crate::error::{Error, Result};

/// Longest starting word accepted by [`contraction_probe`].
pub const MAX_PROBE_LENGTH: usize = 24;

/// Distinct sections kept per descent step before the word is given up on.
const FRONTIER_CAP: usize = 1 << 14;

const WITNESS_LIMIT: usize = 5;

/// Results for all probed words of one starting length.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LengthProbe {
    pub length: usize,
    pub words_tested: usize,
    pub exhaustive: bool,
    /// Entry `d` is the largest section length seen after `d` steps
    /// (entry 0 is `length` itself).
    pub max_length_by_depth: Vec<usize>,
    pub descended: usize,
    pub all_descended: bool,
    /// A few starting words whose iterated sections did not all reach
    /// length <= 1 within the depth budget.
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeReport {
    pub k: usize,
    pub max_length: usize,
    pub samples: usize,
    pub seed: u64,
    pub depth_budget: usize,
    pub lengths: Vec<LengthProbe>,
    pub note: &'static str,
}

impl ProbeReport {
    pub fn all_descended(&self) -> bool {
        self.lengths.iter().all(|l| l.all_descended)
    }
}

/// Probes reduced words of every length `1..=max_length`. A length is
/// enumerated exhaustively when it has at most `samples` reduced words and
/// sampled (seeded) otherwise. Each word is descended at most `max_length`
/// steps.
pub fn contraction_probe(
    alphabet: Alphabet,
    max_length: usize,
    samples: usize,
    seed: u64,
) -> Result<ProbeReport> {
    if max_length < 2 {
        return Err(Error::InvalidArgument(
            "contraction probe needs max_length >= 2".into(),
        ));
    }
    if max_length > MAX_PROBE_LENGTH {
        return Err(Error::BudgetExceeded {
            what: "contraction probe word length",
            requested: max_length as u128,
            budget: MAX_PROBE_LENGTH as u128,
        });
    }
    let gens = alphabet.transpositions();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let depth_budget = max_length;

    let lengths = (1..=max_length)
        .map(|length| {
            let count = reduced_word_count(gens.len(), length);
            let exhaustive = count <= samples as u128;
            let words = if exhaustive {
                all_reduced_words(&gens, length)
            } else {
                (0..samples)
                    .map(|_| random_reduced_word(&gens, length, &mut rng))
                    .collect()
            };
            probe_length(alphabet, length, exhaustive, &words, depth_budget)
        })
        .collect();

    Ok(ProbeReport {
        k: alphabet.size(),
        max_length,
        samples,
        seed,
        depth_budget,
        lengths,
        note: "lengths are freely reduced word lengths (upper bounds on group length)",
    })
}

fn probe_length(
    alphabet: Alphabet,
    length: usize,
    exhaustive: bool,
    words: &[GroupWord],
    budget: usize,
) -> LengthProbe {
    let mut max_by_depth = vec![0usize; budget + 1];
    let mut descended = 0;
    let mut witnesses = Vec::new();
    for w in words {
        let (trace, ok) = descend(w, alphabet.size() as u8, budget);
        for (d, slot) in max_by_depth.iter_mut().enumerate() {
            // once a word is done its later sections keep its final length bound
            let v = trace.get(d).or(trace.last()).copied().unwrap_or(0);
            *slot = (*slot).max(v);
        }
        if ok {
            descended += 1;
        } else if witnesses.len() < WITNESS_LIMIT {
            witnesses.push(w.to_string());
        }
    }
    while max_by_depth.len() > 1
        && max_by_depth[max_by_depth.len() - 2] <= 1
        && *max_by_depth.last().unwrap() <= 1
    {
        max_by_depth.pop();
    }
    LengthProbe {
        length,
        words_tested: words.len(),
        exhaustive,
        max_length_by_depth: max_by_depth,
        descended,
        all_descended: descended == words.len(),
        witnesses,
    }
}

/// Iterates "replace every word by all of its sections". Returns the
/// maximum length at each depth and whether length <= 1 was reached.
fn descend(word: &GroupWord, k: u8, budget: usize) -> (Vec<usize>, bool) {
    let mut frontier: BTreeSet<GroupWord> = BTreeSet::from([word.reduced()]);
    let mut trace = vec![max_len(&frontier)];
    for _ in 0..budget {
        if *trace.last().unwrap() <= 1 {
            return (trace, true);
        }
        let next: BTreeSet<GroupWord> = frontier
            .iter()
            .flat_map(|g| (0..k).map(move |x| g.section(x)))
            .filter(|s| s.len() > 1)
            .collect();
        if next.len() > FRONTIER_CAP {
            trace.push(max_len(&next));
            return (trace, false);
        }
        trace.push(max_len(&next));
        frontier = next;
    }
    let ok = *trace.last().unwrap() <= 1;
    (trace, ok)
}

fn max_len(set: &BTreeSet<GroupWord>) -> usize {
    set.iter().map(GroupWord::len).max().unwrap_or(0)
}

fn reduced_word_count(gens: usize, length: usize) -> u128 {
    if length == 0 {
        return 1;
    }
    (gens as u128).saturating_mul((gens as u128 - 1).saturating_pow(length as u32 - 1))
}

fn all_reduced_words(gens: &[Transposition], length: usize) -> Vec<GroupWord> {
    let mut words: Vec<Vec<Transposition>> = vec![Vec::new()];
    for _ in 0..length {
        words = words
            .into_iter()
            .flat_map(|w| {
                gens.iter()
                    .filter(|&&g| w.last() != Some(&g))
                    .map(|&g| {
                        let mut next = w.clone();
                        next.push(g);
                        next
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    words.into_iter().map(GroupWord::from_generators).collect()
}

fn random_reduced_word(gens: &[Transposition], length: usize, rng: &mut ChaCha8Rng) -> GroupWord {
    let mut out: Vec<Transposition> = Vec::with_capacity(length);
    while out.len() < length {
        let g = gens[rng.gen_range(0..gens.len())];
        if out.last() != Some(&g) {
            out.push(g);
        }
    }
    GroupWord::from_generators(out)
}
