//! Hanoi Towers groups `H(k)`: the automaton groups generated by the
//! transposition automorphisms `a_(ij)` of the `k`-ary rooted tree.
//!
//! The crate builds the automata, the level Schreier graphs and the orbital
//! graph of the ray `000...`, and measures them:
//!
//! * [`group`]: alphabets, words, the automaton, group words and their
//!   wreath decomposition, and an empirical contraction probe.
//! * [`schreier`]: level graphs, BFS distances and diameters, balls of the
//!   orbital graph, growth functions and fits, DOT/CSV export.
//! * [`spectral`]: a dense Jacobi eigensolver, the closed-form spectrum of
//!   `H(3)` built from iterated preimages of `f(x) = x^2 - x - 3`, spectral
//!   gaps, the limiting spectral measure and a Julia-set approximation.
//! * [`hanoi`]: the `k`-peg puzzle, its move/generator correspondence,
//!   Frame-Stewart counts and exact puzzle distances.
//! * [`cli`]: the command-line front end used by the `hanoi-groups` binary.
//!
//! Group words act on the left with the rightmost factor applied first.

pub mod cli;
pub mod error;
pub mod group;
pub mod hanoi;
pub mod schreier;
pub mod spectral;

pub use error::{Error, Result};
