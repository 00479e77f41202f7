use serde::Serialize;

use super::{SpectrumClosedForm, SpectrumNumeric};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MatchedValue {
    pub closed_value: f64,
    pub numeric_value: f64,
    pub closed_multiplicity: u64,
    pub numeric_multiplicity: u64,
}

impl MatchedValue {
    pub fn deviation(&self) -> f64 {
        (self.closed_value - self.numeric_value).abs()
    }
}

/// Outcome of matching a numeric spectrum against the closed form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatchReport {
    pub matched: bool,
    pub tolerance: f64,
    pub pairs: Vec<MatchedValue>,
    /// Pairs within tolerance whose multiplicities differ.
    pub multiplicity_mismatches: Vec<MatchedValue>,
    /// Closed-form values with no numeric value within tolerance.
    pub unmatched_closed: Vec<f64>,
    pub unmatched_numeric: Vec<f64>,
    pub max_deviation: f64,
}

/// Greedy nearest matching of distinct values. `closed` must be on the same
/// scale as `numeric` (see [`SpectrumClosedForm::on_scale`]).
pub fn compare_spectra(
    numeric: &SpectrumNumeric,
    closed: &SpectrumClosedForm,
    tolerance: f64,
) -> Result<MatchReport> {
    if numeric.dimension() != closed.total_multiplicity() {
        return Err(Error::DimensionMismatch {
            numeric: numeric.dimension(),
            closed: closed.total_multiplicity(),
        });
    }
    let nums = &numeric.values;
    let mut used = vec![false; nums.len()];
    let mut pairs = Vec::new();
    let mut unmatched_closed = Vec::new();
    for e in &closed.entries {
        let start = nums.partition_point(|v| v.value < e.value);
        let nearest = nearest_unused(nums.iter().map(|v| v.value), &used, start, e.value);
        match nearest {
            Some(idx) if (nums[idx].value - e.value).abs() <= tolerance => {
                used[idx] = true;
                pairs.push(MatchedValue {
                    closed_value: e.value,
                    numeric_value: nums[idx].value,
                    closed_multiplicity: e.multiplicity,
                    numeric_multiplicity: nums[idx].multiplicity,
                });
            }
            _ => unmatched_closed.push(e.value),
        }
    }
    let unmatched_numeric: Vec<f64> = nums
        .iter()
        .zip(&used)
        .filter(|(_, &u)| !u)
        .map(|(v, _)| v.value)
        .collect();
    let multiplicity_mismatches: Vec<MatchedValue> = pairs
        .iter()
        .filter(|p| p.closed_multiplicity != p.numeric_multiplicity)
        .copied()
        .collect();
    let max_deviation = pairs
        .iter()
        .map(MatchedValue::deviation)
        .fold(0.0, f64::max);
    Ok(MatchReport {
        matched: unmatched_closed.is_empty()
            && unmatched_numeric.is_empty()
            && multiplicity_mismatches.is_empty(),
        tolerance,
        pairs,
        multiplicity_mismatches,
        unmatched_closed,
        unmatched_numeric,
        max_deviation,
    })
}

fn nearest_unused(
    values: impl Iterator<Item = f64> + Clone,
    used: &[bool],
    start: usize,
    target: f64,
) -> Option<usize> {
    let vals: Vec<f64> = values.collect();
    let right = (start..vals.len()).find(|&i| !used[i]);
    let left = (0..start).rev().find(|&i| !used[i]);
    match (left, right) {
        (Some(l), Some(r)) => {
            if (target - vals[l]).abs() <= (vals[r] - target).abs() {
                Some(l)
            } else {
                Some(r)
            }
        }
        (l, r) => l.or(r),
    }
}
