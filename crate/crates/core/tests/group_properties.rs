use hanoi_groups::group::{
    apply_generator, apply_generator_tail, contraction_probe, root_permutation_and_sections,
    Alphabet, Automaton, GroupWord, Letter, TailWord, Transposition, Word,
};
use proptest::prelude::*;

/// Direct recursive reading of the generator: swap `i` and `j` at the
/// first position holding either, copy everything before it.
fn oracle_swap(i: Letter, j: Letter, w: &[Letter]) -> Vec<Letter> {
    match w.split_first() {
        None => Vec::new(),
        Some((&x, rest)) if x == i => [&[j][..], rest].concat(),
        Some((&x, rest)) if x == j => [&[i][..], rest].concat(),
        Some((&x, rest)) => [vec![x], oracle_swap(i, j, rest)].concat(),
    }
}

fn all_words(k: usize, n: usize) -> Vec<Word> {
    let a = Alphabet::new(k).unwrap();
    (0..(k as u64).pow(n as u32))
        .map(|idx| Word::from_index(a, n, idx))
        .collect()
}

fn word_of(a: Alphabet, letters: &[usize]) -> Word {
    Word::new(a, letters.to_vec()).unwrap()
}

#[test]
fn involution_exhaustive() {
    for k in [3, 4] {
        let a = Alphabet::new(k).unwrap();
        for n in 0..=6 {
            for w in all_words(k, n) {
                for t in a.transpositions() {
                    assert_eq!(apply_generator(t, &apply_generator(t, &w)), w);
                }
            }
        }
    }
}

#[test]
fn generator_matches_recursive_oracle() {
    for k in [3, 4, 5] {
        let a = Alphabet::new(k).unwrap();
        for n in 0..=5 {
            for w in all_words(k, n) {
                for t in a.transpositions() {
                    let (i, j) = t.pegs();
                    assert_eq!(
                        apply_generator(t, &w).letters(),
                        &oracle_swap(i, j, w.letters())[..]
                    );
                }
            }
        }
    }
}

#[test]
fn automaton_matches_recursion() {
    for k in [3, 4] {
        let a = Alphabet::new(k).unwrap();
        let aut = Automaton::hanoi(a);
        assert!(aut.is_valid());
        for n in 0..=6 {
            for w in all_words(k, n) {
                assert_eq!(aut.run(aut.identity, &w), w);
                for t in a.transpositions() {
                    assert_eq!(
                        aut.run(Automaton::state_of(a, t), &w),
                        apply_generator(t, &w)
                    );
                }
            }
        }
    }
}

#[test]
fn decomposition_identity_exhaustive() {
    let a = Alphabet::new(3).unwrap();
    let gens = a.transpositions();
    let mut elements = vec![GroupWord::identity()];
    let mut frontier = vec![Vec::<Transposition>::new()];
    for _ in 0..4 {
        let mut next = Vec::new();
        for g in &frontier {
            for &t in &gens {
                let mut h = g.clone();
                h.push(t);
                elements.push(GroupWord::from_generators(h.clone()));
                next.push(h);
            }
        }
        frontier = next;
    }
    for g in &elements {
        let d = root_permutation_and_sections(g, a);
        for n in 1..=5 {
            for w in all_words(3, n) {
                let x = w.letters()[0];
                let tail = Word::from_index(a, n - 1, w.index(a) % 3u64.pow(n as u32 - 1));
                let image = g.evaluate(&w);
                let rebuilt: Vec<Letter> = std::iter::once(d.permutation[x as usize])
                    .chain(
                        d.sections[x as usize]
                            .evaluate(&tail)
                            .letters()
                            .iter()
                            .copied(),
                    )
                    .collect();
                assert_eq!(image.letters(), &rebuilt[..], "g = {g}, w = {w}");
            }
        }
    }
}

#[test]
fn tail_consistency_exhaustive() {
    for k in [3, 4] {
        let a = Alphabet::new(k).unwrap();
        for n in 0..=6 {
            for p in all_words(k, n) {
                let tail = TailWord::new(&p);
                for t in a.transpositions() {
                    let image = apply_generator_tail(t, &tail);
                    let len = image.prefix().len().max(6);
                    let mut padded = p.letters().iter().map(|&x| x as usize).collect::<Vec<_>>();
                    padded.resize(len, 0);
                    assert_eq!(
                        image.truncate(len),
                        apply_generator(t, &word_of(a, &padded)),
                        "t = {t}, p = {p}"
                    );
                }
            }
        }
    }
}

#[test]
fn three_pegs_descend() {
    let report = contraction_probe(Alphabet::new(3).unwrap(), 8, 1000, 0).unwrap();
    assert!(report.all_descended(), "{report:?}");
    let last = report.lengths.last().unwrap();
    assert!(last.exhaustive);
    assert_eq!(last.words_tested, 3 * 2usize.pow(7));
}

#[test]
fn four_pegs_keep_fixed_letter_sections() {
    // a01 a02 fixes the letter 3, so its section there is itself
    let a = Alphabet::new(4).unwrap();
    let g = GroupWord::from_generators([
        Transposition::new(a, 0, 1).unwrap(),
        Transposition::new(a, 0, 2).unwrap(),
    ]);
    assert_eq!(g.section(3), g);
    let report = contraction_probe(a, 4, 1000, 0).unwrap();
    assert!(!report.all_descended());
    assert!(!report.lengths[1].witnesses.is_empty());
}

fn arb_case() -> impl Strategy<Value = (usize, Vec<(usize, usize)>, Vec<usize>, usize)> {
    (3usize..=6).prop_flat_map(|k| {
        let pair = (0..k, 0..k).prop_filter("distinct pegs", |(i, j)| i != j);
        (
            Just(k),
            prop::collection::vec(pair, 0..12),
            prop::collection::vec(0..k, 0..24),
            0usize..24,
        )
    })
}

fn group_word(a: Alphabet, pairs: &[(usize, usize)]) -> GroupWord {
    GroupWord::from_generators(
        pairs
            .iter()
            .map(|&(i, j)| Transposition::new(a, i, j).unwrap()),
    )
}

proptest! {
    #[test]
    fn prefix_compatibility((k, pairs, letters, cut) in arb_case()) {
        let a = Alphabet::new(k).unwrap();
        let g = group_word(a, &pairs);
        let v = word_of(a, &letters);
        let u = word_of(a, &letters[..cut.min(letters.len())]);
        prop_assert!(u.is_prefix_of(&v));
        prop_assert!(g.evaluate(&u).is_prefix_of(&g.evaluate(&v)));
        prop_assert_eq!(g.evaluate(&v).len(), v.len());
    }

    #[test]
    fn reduction_preserves_action((k, pairs, letters, _cut) in arb_case()) {
        let a = Alphabet::new(k).unwrap();
        let g = group_word(a, &pairs);
        let r = g.reduced();
        prop_assert!(r.is_reduced());
        prop_assert!(r.len() <= g.len());
        let w = word_of(a, &letters);
        prop_assert_eq!(r.evaluate(&w), g.evaluate(&w));
        prop_assert_eq!(g.compose(&g_inverse(&g)).reduced(), GroupWord::identity());
    }

    #[test]
    fn evaluation_is_rightmost_first((k, pairs, letters, _cut) in arb_case()) {
        let a = Alphabet::new(k).unwrap();
        let g = group_word(a, &pairs);
        let w = word_of(a, &letters);
        let mut expected: Vec<Letter> = w.letters().to_vec();
        for &(i, j) in pairs.iter().rev() {
            let (i, j) = (i.min(j) as Letter, i.max(j) as Letter);
            expected = oracle_swap(i, j, &expected);
        }
        let image = g.evaluate(&w);
        prop_assert_eq!(image.letters(), &expected[..]);
    }

    #[test]
    fn tail_action_matches_long_truncation((k, pairs, letters, _cut) in arb_case()) {
        let a = Alphabet::new(k).unwrap();
        let g = group_word(a, &pairs);
        let tail = TailWord::new(&word_of(a, &letters));
        let image = g.evaluate(&tail);
        // each generator changes one letter, so the change stays within
        // |prefix| + |g| positions
        let len = letters.len() + pairs.len() + 1;
        prop_assert_eq!(image.truncate(len), g.evaluate(&tail.truncate(len)));
        prop_assert!(image.prefix().last() != Some(&0));
    }
}

fn g_inverse(g: &GroupWord) -> GroupWord {
    GroupWord::new(g.factors().iter().rev().copied().collect())
}
