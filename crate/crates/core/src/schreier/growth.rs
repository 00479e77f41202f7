use serde::Serialize;

use crate::error::{Error, Result};

/// Ratio of upper- to lower-half log-log slopes above which growth is
/// flagged as faster than any polynomial on the fitted window.
const CURVATURE_FLAG: f64 = 1.25;

/// Descriptive fits of a growth function `γ(r)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitReport {
    pub r_min: usize,
    pub r_max: usize,
    pub points: usize,
    /// Least-squares slope of `ln γ(r)` against `ln r`.
    pub exponent: f64,
    pub intercept: f64,
    pub rms_residual: f64,
    /// The same slope on two adjacent sub-windows of equal log-length: the
    /// halves of the window, or the doublings `[R/4, R/2]` and `[R/2, R]`
    /// for [`growth_exponent_diagnostics`]. Comparing whole doublings keeps
    /// log-periodic oscillation out of the ratio.
    pub lower_exponent: f64,
    pub upper_exponent: f64,
    /// Slope of `ln γ(r)` against `(ln r)^(k-2)`.
    pub polylog_power: u32,
    pub polylog_slope: f64,
    pub polylog_rms_residual: f64,
    /// Set when the local exponent grows markedly across the window.
    pub non_polynomial: bool,
}

/// Fits on the top half of the available radii, `[R/2, R]`.
pub fn growth_exponent_diagnostics(gamma: &[u64], k: usize) -> Result<FitReport> {
    if gamma.len() < 8 {
        return Err(Error::InvalidArgument(format!(
            "growth fit needs at least 8 points, got {}",
            gamma.len()
        )));
    }
    let r_max = gamma.len() - 1;
    let mut fit = fit_growth(gamma, k, (r_max / 2).max(1), r_max)?;
    let lower = log_points(gamma, (r_max / 4).max(1), r_max / 2);
    let upper = log_points(gamma, r_max / 2, r_max);
    fit.lower_exponent = least_squares(&lower).0;
    fit.upper_exponent = least_squares(&upper).0;
    fit.non_polynomial = curved(fit.lower_exponent, fit.upper_exponent);
    Ok(fit)
}

fn log_points(gamma: &[u64], r_min: usize, r_max: usize) -> Vec<(f64, f64)> {
    (r_min..=r_max)
        .map(|r| ((r as f64).ln(), (gamma[r] as f64).ln()))
        .collect()
}

fn curved(lower: f64, upper: f64) -> bool {
    lower > 0.0 && upper / lower > CURVATURE_FLAG
}

/// Fits `γ(r)` for `r` in `[r_min, r_max]` (inclusive, `r_min >= 1`).
pub fn fit_growth(gamma: &[u64], k: usize, r_min: usize, r_max: usize) -> Result<FitReport> {
    if r_min == 0 || r_max >= gamma.len() || r_max < r_min + 3 {
        return Err(Error::InvalidArgument(format!(
            "bad fit window [{r_min}, {r_max}] for {} points",
            gamma.len()
        )));
    }
    let pts = log_points(gamma, r_min, r_max);
    let (exponent, intercept, rms_residual) = least_squares(&pts);

    let mid = ((r_min as f64).ln() + (r_max as f64).ln()) / 2.0;
    let lower: Vec<_> = pts.iter().copied().filter(|p| p.0 <= mid).collect();
    let upper: Vec<_> = pts.iter().copied().filter(|p| p.0 >= mid).collect();
    let lower_exponent = least_squares(&lower).0;
    let upper_exponent = least_squares(&upper).0;

    let polylog_power = k.saturating_sub(2) as u32;
    let poly: Vec<(f64, f64)> = pts
        .iter()
        .map(|&(x, y)| (x.powi(polylog_power as i32), y))
        .collect();
    let (polylog_slope, _, polylog_rms_residual) = least_squares(&poly);

    let non_polynomial = curved(lower_exponent, upper_exponent);
    Ok(FitReport {
        r_min,
        r_max,
        points: pts.len(),
        exponent,
        intercept,
        rms_residual,
        lower_exponent,
        upper_exponent,
        polylog_power,
        polylog_slope,
        polylog_rms_residual,
        non_polynomial,
    })
}

/// Returns `(slope, intercept, rms residual)`; a degenerate abscissa
/// yields a zero slope.
fn least_squares(pts: &[(f64, f64)]) -> (f64, f64, f64) {
    let n = pts.len() as f64;
    if pts.is_empty() {
        return (0.0, 0.0, 0.0);
    }
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let intercept = my - slope * mx;
    let rss: f64 = pts
        .iter()
        .map(|p| (p.1 - intercept - slope * p.0).powi(2))
        .sum();
    (slope, intercept, (rss / n).sqrt())
}
