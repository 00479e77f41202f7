//! The automaton of H(3) and a few words pushed through it.

use hanoi_groups::group::{Alphabet, Automaton, GroupWord, Transposition};

fn main() -> hanoi_groups::Result<()> {
    let a = Alphabet::new(3)?;
    let aut = Automaton::hanoi(a);
    println!("{}", aut.to_json());

    let w = a.parse_word("0120")?;
    for t in a.transpositions() {
        let state = Automaton::state_of(a, t);
        println!("{} : {w} -> {}", t.label(), aut.run(state, &w));
    }

    // rightmost factor acts first
    let g =
        GroupWord::from_generators([Transposition::new(a, 0, 1)?, Transposition::new(a, 0, 2)?]);
    println!("{g} : {w} -> {}", g.evaluate(&w));
    for x in a.letters() {
        println!("  section at {x}: {}", g.section(x));
    }
    Ok(())
}
