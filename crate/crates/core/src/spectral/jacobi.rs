//! Cyclic Jacobi eigenvalues for dense symmetric matrices.

use serde::Serialize;

use super::SymMatrix;
use crate::error::{Error, Result};

/// Largest dimension accepted by [`eigen_sym`]: `3^7`.
pub const DENSE_BUDGET: usize = 2187;

/// Default stopping point: off-diagonal Frobenius norm below this fraction
/// of its initial value.
pub const DEFAULT_SWEEP_TOLERANCE: f64 = 1e-12;

/// Eigenvalues closer than this (absolute) are merged into one value with
/// multiplicity.
pub const DEFAULT_CLUSTER_TOLERANCE: f64 = 1e-6;

const MAX_SWEEPS: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralValue {
    pub value: f64,
    pub multiplicity: u64,
}

/// A numerically computed spectrum: the raw sorted eigenvalues and their
/// clustering into distinct values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumNumeric {
    pub eigenvalues: Vec<f64>,
    pub values: Vec<SpectralValue>,
    pub cluster_tolerance: f64,
    pub sweeps: usize,
}

impl SpectrumNumeric {
    /// Clusters sorted eigenvalues: consecutive values within `tolerance`
    /// join the same cluster, represented by its mean.
    pub fn cluster(mut eigenvalues: Vec<f64>, tolerance: f64, sweeps: usize) -> Self {
        eigenvalues.sort_by(f64::total_cmp);
        let mut values: Vec<SpectralValue> = Vec::new();
        let mut start = 0;
        for i in 1..=eigenvalues.len() {
            if i == eigenvalues.len() || eigenvalues[i] - eigenvalues[i - 1] > tolerance {
                let group = &eigenvalues[start..i];
                values.push(SpectralValue {
                    value: group.iter().sum::<f64>() / group.len() as f64,
                    multiplicity: group.len() as u64,
                });
                start = i;
            }
        }
        SpectrumNumeric {
            eigenvalues,
            values,
            cluster_tolerance: tolerance,
            sweeps,
        }
    }

    pub fn dimension(&self) -> u64 {
        self.eigenvalues.len() as u64
    }

    pub fn distinct_count(&self) -> usize {
        self.values.len()
    }

    /// `Σ multiplicity · value`.
    pub fn weighted_sum(&self) -> f64 {
        self.values
            .iter()
            .map(|v| v.multiplicity as f64 * v.value)
            .sum()
    }

    pub fn scaled(&self, factor: f64) -> SpectrumNumeric {
        SpectrumNumeric {
            eigenvalues: self.eigenvalues.iter().map(|x| x * factor).collect(),
            values: self
                .values
                .iter()
                .map(|v| SpectralValue {
                    value: v.value * factor,
                    multiplicity: v.multiplicity,
                })
                .collect(),
            cluster_tolerance: self.cluster_tolerance * factor.abs(),
            sweeps: self.sweeps,
        }
    }
}

/// Full spectrum with the default cluster tolerance.
pub fn eigen_sym(m: &SymMatrix, sweep_tolerance: f64) -> Result<SpectrumNumeric> {
    let (eigenvalues, sweeps) = jacobi_eigenvalues(m, sweep_tolerance, DENSE_BUDGET)?;
    Ok(SpectrumNumeric::cluster(
        eigenvalues,
        DEFAULT_CLUSTER_TOLERANCE,
        sweeps,
    ))
}

/// Unsorted eigenvalues and the number of sweeps used.
pub fn jacobi_eigenvalues(
    m: &SymMatrix,
    sweep_tolerance: f64,
    budget: usize,
) -> Result<(Vec<f64>, usize)> {
    let n = m.dim();
    if n > budget {
        return Err(Error::BudgetExceeded {
            what: "dense eigensolver dimension",
            requested: n as u128,
            budget: budget as u128,
        });
    }
    m.check_symmetric()?;
    let mut a = m.data().to_vec();
    let off0 = off_diagonal_norm(&a, n);
    if off0 == 0.0 {
        return Ok(((0..n).map(|i| a[i * n + i]).collect(), 0));
    }
    let target = sweep_tolerance * off0;
    let mut row_p = vec![0.0; n];
    let mut row_q = vec![0.0; n];
    for sweep in 1..=MAX_SWEEPS {
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                row_p.copy_from_slice(&a[p * n..(p + 1) * n]);
                row_q.copy_from_slice(&a[q * n..(q + 1) * n]);
                for k in 0..n {
                    let (xp, xq) = (row_p[k], row_q[k]);
                    a[p * n + k] = c * xp - s * xq;
                    a[q * n + k] = s * xp + c * xq;
                }
                for k in 0..n {
                    a[k * n + p] = a[p * n + k];
                    a[k * n + q] = a[q * n + k];
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
        if off_diagonal_norm(&a, n) <= target {
            return Ok(((0..n).map(|i| a[i * n + i]).collect(), sweep));
        }
    }
    Err(Error::NoConvergence(MAX_SWEEPS))
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j] * a[i * n + j];
            }
        }
    }
    sum.sqrt()
}
