use serde::Serialize;

use super::preimage_layers;
use crate::error::{Error, Result};

/// Largest backward-iteration depth for [`julia_approximation`].
pub const MAX_JULIA_DEPTH: usize = 22;

/// Backward orbits of `f` starting in `[-2, 3]` stay there: the two inverse
/// branches map `[-2, 3]` onto `[-2, (1-√5)/2]` and `[(1+√5)/2, 3]`.
pub const CONFINING_INTERVAL: (f64, f64) = (-2.0, 3.0);

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JuliaApproximation {
    pub depth: usize,
    /// Sorted exact-depth preimages of the seeds.
    pub points: Vec<f64>,
    pub min: f64,
    pub max: f64,
    /// Endpoints of the widest gap between consecutive points.
    pub largest_gap: (f64, f64),
    pub complex_excluded: usize,
}

/// The depth-`d` backward orbit cloud of `seeds` under both inverse
/// branches of `f`.
pub fn julia_approximation(depth: usize, seeds: &[f64]) -> Result<JuliaApproximation> {
    if depth > MAX_JULIA_DEPTH {
        return Err(Error::BudgetExceeded {
            what: "backward iteration depth",
            requested: depth as u128,
            budget: MAX_JULIA_DEPTH as u128,
        });
    }
    if seeds.is_empty() {
        return Err(Error::InvalidArgument("no seed points".into()));
    }
    let layers = preimage_layers(seeds, depth);
    let mut points: Vec<f64> = layers
        .layers
        .last()
        .unwrap()
        .iter()
        .map(|p| p.value)
        .collect();
    points.sort_by(f64::total_cmp);
    let min = points.first().copied().unwrap_or(f64::NAN);
    let max = points.last().copied().unwrap_or(f64::NAN);
    let largest_gap = points
        .windows(2)
        .map(|w| (w[0], w[1]))
        .max_by(|a, b| (a.1 - a.0).total_cmp(&(b.1 - b.0)))
        .unwrap_or((min, max));
    Ok(JuliaApproximation {
        depth,
        points,
        min,
        max,
        largest_gap,
        complex_excluded: layers.complex_excluded,
    })
}

pub fn in_confining_interval(x: f64) -> bool {
    (CONFINING_INTERVAL.0..=CONFINING_INTERVAL.1).contains(&x)
}
