use serde::Serialize;

use super::{adjacency_matrix, eigen_sym, DEFAULT_SWEEP_TOLERANCE};
use crate::error::{Error, Result};
use crate::group::Alphabet;
use crate::schreier::build_level_graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GapSource {
    Closed,
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GapRow {
    pub n: usize,
    /// Largest eigenvalue of `M_n` other than 1.
    pub lambda: f64,
    /// `1 - lambda`.
    pub delta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapSeries {
    pub k: usize,
    pub source: GapSource,
    pub rows: Vec<GapRow>,
}

impl GapSeries {
    /// `δ(n+1) / δ(n)` for consecutive rows.
    pub fn ratios(&self) -> Vec<f64> {
        self.rows
            .windows(2)
            .map(|w| w[1].delta / w[0].delta)
            .collect()
    }
}

/// Spectral gaps `δ(1), ..., δ(levels)`. The closed source (H(3) only)
/// needs no matrices; the numeric source diagonalizes each `T_n`.
pub fn gap_series(alphabet: Alphabet, levels: usize, source: GapSource) -> Result<GapSeries> {
    if levels < 1 {
        return Err(Error::InvalidArgument(
            "gap series needs levels >= 1".into(),
        ));
    }
    let rows = match source {
        GapSource::Closed => {
            if alphabet.size() != 3 {
                return Err(Error::InvalidArgument(
                    "closed form available only for k=3".into(),
                ));
            }
            closed_gaps(levels)
        }
        GapSource::Numeric => (1..=levels)
            .map(|n| numeric_gap(alphabet, n))
            .collect::<Result<_>>()?,
    };
    Ok(GapSeries {
        k: alphabet.size(),
        source,
        rows,
    })
}

/// The second eigenvalue of `T_n` is `g^(n-1)(0)` for the upper inverse
/// branch `g(y) = (1 + sqrt(13 + 4y)) / 2`. The distance to the fixed point
/// `e = 3 - x` obeys `e' = 2e / (5 + sqrt(25 - 4e))`, which avoids the
/// cancellation in `3 - x` once `x` is close to 3.
fn closed_gaps(levels: usize) -> Vec<GapRow> {
    let mut e = 3.0f64;
    let mut rows = Vec::with_capacity(levels);
    for n in 1..=levels {
        let delta = e / 3.0;
        rows.push(GapRow {
            n,
            lambda: 1.0 - delta,
            delta,
        });
        e = 2.0 * e / (5.0 + (25.0 - 4.0 * e).sqrt());
    }
    rows
}

fn numeric_gap(alphabet: Alphabet, n: usize) -> Result<GapRow> {
    let g = build_level_graph(alphabet, n)?;
    let spectrum = eigen_sym(&adjacency_matrix(&g), DEFAULT_SWEEP_TOLERANCE)?;
    let degree = alphabet.generator_count() as f64;
    let top = spectrum.values.last().map(|v| v.value).unwrap_or(degree);
    let second = spectrum
        .values
        .iter()
        .rev()
        .map(|v| v.value)
        .find(|&v| top - v > spectrum.cluster_tolerance)
        .unwrap_or(top);
    let lambda = second / degree;
    Ok(GapRow {
        n,
        lambda,
        delta: 1.0 - lambda,
    })
}
