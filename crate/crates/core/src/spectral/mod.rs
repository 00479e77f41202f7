//! Spectra of the level Schreier graphs.
//!
//! Numeric spectra come from a dense Jacobi eigensolver; for `H(3)` they
//! are checked against the closed form generated by iterating the inverse
//! branches of `f(x) = x^2 - x - 3`. Gap series, the limiting spectral
//! measure, the diameter bound and a backward-orbit picture of the Julia
//! set of `f` build on the two.

mod chung;
mod closed_form;
mod compare;
mod gap;
mod jacobi;
mod julia;
mod kns;
mod matrix;
mod report;

pub use chung::{chung_bound_check, BoundReport};
pub use closed_form::{
    closed_form_spectrum, expected_distinct_count, multiplicity_a, multiplicity_b, preimage_layers,
    preimage_set, ClosedEntry, PreimageLayers, PreimagePoint, PreimageSet, Provenance,
    QuadraticMap, SpectrumClosedForm, MAX_CLOSED_LEVEL,
};
pub use compare::{compare_spectra, MatchReport, MatchedValue};
pub use gap::{gap_series, GapRow, GapSeries, GapSource};
pub use jacobi::{
    eigen_sym, jacobi_eigenvalues, SpectralValue, SpectrumNumeric, DEFAULT_CLUSTER_TOLERANCE,
    DEFAULT_SWEEP_TOLERANCE, DENSE_BUDGET,
};
pub use julia::{
    in_confining_interval, julia_approximation, JuliaApproximation, CONFINING_INTERVAL,
    MAX_JULIA_DEPTH,
};
pub use kns::{
    atom_mass, atom_mass_exact, atom_weight, convergence_gap, counting_mass, counting_measure,
    kns_weights, to_f64, CountingAtom, CountingMeasure, KnsAtom, KnsMeasure, Rational,
    MAX_ATOM_DEPTH,
};
pub use matrix::{adjacency_matrix, markov_operator, SymMatrix};
pub use report::{ReportEntry, Scale, SpectrumReport, SPECTRUM_CSV_HEADER};

use crate::error::Result;
use crate::group::Alphabet;
use crate::schreier::build_level_graph;

/// Numeric spectrum of `Γ_n` on the requested scale.
pub fn level_spectrum(alphabet: Alphabet, n: usize, scale: Scale) -> Result<SpectrumNumeric> {
    let g = build_level_graph(alphabet, n)?;
    let t = adjacency_matrix(&g);
    let spectrum = eigen_sym(&t, DEFAULT_SWEEP_TOLERANCE)?;
    Ok(spectrum.scaled(scale.factor(alphabet.generator_count())))
}
