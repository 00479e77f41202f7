use serde::Serialize;

use super::{adjacency_matrix, eigen_sym, markov_operator, DEFAULT_SWEEP_TOLERANCE};
use crate::error::{Error, Result};
use crate::group::Alphabet;
use crate::schreier::{build_level_graph, diameter, DiameterMode};

/// Both sides of the diameter bound `d <= ln(|V| - 1) / (-ln λ) + 1` for
/// `Γ_n`, where `λ` is the largest eigenvalue below 1 of the lazy walk
/// `(M_n + I) / 2`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub k: usize,
    pub n: usize,
    pub vertices: usize,
    pub diameter: u32,
    pub lambda_star: f64,
    pub bound: f64,
    pub holds: bool,
    /// Gap of the unshifted operator, `1 - λ(n)`.
    pub delta: f64,
    pub n_over_delta: f64,
    /// Largest `|μ|` over eigenvalues `μ != 1` of `M_n` itself.
    pub unshifted_lambda_abs: f64,
    /// The bound with `unshifted_lambda_abs`; `None` when that is 1.
    pub unshifted_bound: Option<f64>,
}

pub fn chung_bound_check(alphabet: Alphabet, n: usize) -> Result<BoundReport> {
    if n < 1 {
        return Err(Error::InvalidArgument("bound needs level n >= 1".into()));
    }
    let g = build_level_graph(alphabet, n)?;
    let d = diameter(&g, DiameterMode::Exact)?.diameter;
    let m = markov_operator(&adjacency_matrix(&g), alphabet.generator_count())?;
    let spectrum = eigen_sym(&m, DEFAULT_SWEEP_TOLERANCE)?;
    let tol = spectrum.cluster_tolerance;
    let below_one = |v: f64| v < 1.0 - tol;

    let lambda = spectrum
        .values
        .iter()
        .rev()
        .map(|v| v.value)
        .find(|&v| below_one(v))
        .unwrap_or(1.0);
    // (M + I) / 2 has eigenvalues (μ + 1) / 2
    let lambda_star = (lambda + 1.0) / 2.0;
    let ln_size = ((g.vertex_count() - 1) as f64).ln();
    let bound = ln_size / -lambda_star.ln() + 1.0;

    let unshifted_lambda_abs = spectrum
        .values
        .iter()
        .map(|v| v.value)
        .filter(|&v| below_one(v))
        .map(f64::abs)
        .fold(0.0, f64::max);
    let unshifted_bound =
        (unshifted_lambda_abs < 1.0 - tol).then(|| ln_size / -unshifted_lambda_abs.ln() + 1.0);

    let delta = 1.0 - lambda;
    Ok(BoundReport {
        k: alphabet.size(),
        n,
        vertices: g.vertex_count(),
        diameter: d,
        lambda_star,
        bound,
        holds: d as f64 <= bound,
        delta,
        n_over_delta: n as f64 / delta,
        unshifted_lambda_abs,
        unshifted_bound,
    })
}
