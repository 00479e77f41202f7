//! The spectrum of `Γ_n` for `H(3)` in closed form.
//!
//! On the adjacency scale the spectrum of `Γ_n` is `{3}`, the `i`-fold
//! preimages of 0 under `f(x) = x^2 - x - 3` for `i < n`, and the `j`-fold
//! preimages of -2 for `j < n - 1`. Every point of `f^-i(0)` has
//! multiplicity `a_(n-i)` and every point of `f^-j(-2)` has `b_(n-j)`, where
//! `a_m = (3^(m-1) + 3) / 2` and `b_m = (3^(m-1) - 1) / 2`.

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use super::Scale;
use crate::error::{Error, Result};

/// Largest level [`closed_form_spectrum`] will expand (`3 * 2^21 - 1`
/// distinct values).
pub const MAX_CLOSED_LEVEL: usize = 22;

/// The renormalization map `f(x) = x^2 - x - 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct QuadraticMap;

impl QuadraticMap {
    #[inline]
    pub fn eval(self, x: f64) -> f64 {
        x * x - x - 3.0
    }

    #[inline]
    pub fn derivative(self, x: f64) -> f64 {
        2.0 * x - 1.0
    }

    /// Real solutions of `f(x) = y`, smaller first: `(1 ± sqrt(13 + 4y)) / 2`.
    #[inline]
    pub fn preimages(self, y: f64) -> Option<(f64, f64)> {
        let disc = 13.0 + 4.0 * y;
        if disc < 0.0 {
            return None;
        }
        let root = disc.sqrt();
        Some(((1.0 - root) / 2.0, (1.0 + root) / 2.0))
    }

    /// The increasing inverse branch `(1 + sqrt(13 + 4y)) / 2`.
    #[inline]
    pub fn upper_branch(self, y: f64) -> f64 {
        (1.0 + (13.0 + 4.0 * y).sqrt()) / 2.0
    }
}

/// One point of an iterated preimage set, with the index of its image in
/// the previous layer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PreimagePoint {
    pub value: f64,
    pub parent: Option<usize>,
}

/// `layers[d]` holds the exact-depth preimages `f^-d(targets)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PreimageLayers {
    pub layers: Vec<Vec<PreimagePoint>>,
    /// Points whose preimages are complex and were dropped.
    pub complex_excluded: usize,
}

pub fn preimage_layers(targets: &[f64], depth: usize) -> PreimageLayers {
    let f = QuadraticMap;
    let mut layers = vec![targets
        .iter()
        .map(|&value| PreimagePoint {
            value,
            parent: None,
        })
        .collect::<Vec<_>>()];
    let mut complex_excluded = 0;
    for _ in 0..depth {
        let prev = layers.last().unwrap();
        let mut next = Vec::with_capacity(prev.len() * 2);
        for (idx, p) in prev.iter().enumerate() {
            match f.preimages(p.value) {
                Some((lo, hi)) => {
                    next.push(PreimagePoint {
                        value: lo,
                        parent: Some(idx),
                    });
                    next.push(PreimagePoint {
                        value: hi,
                        parent: Some(idx),
                    });
                }
                None => complex_excluded += 1,
            }
        }
        layers.push(next);
    }
    PreimageLayers {
        layers,
        complex_excluded,
    }
}

/// Sorted union of `f^-d(targets)` over `d = 0..=depth`.
#[derive(Debug, Clone, PartialEq)]
pub struct PreimageSet {
    pub values: Vec<f64>,
    pub complex_excluded: usize,
}

pub fn preimage_set(targets: &[f64], depth: usize) -> PreimageSet {
    let layers = preimage_layers(targets, depth);
    let mut values: Vec<f64> = layers.layers.iter().flatten().map(|p| p.value).collect();
    values.sort_by(f64::total_cmp);
    values.dedup();
    PreimageSet {
        values,
        complex_excluded: layers.complex_excluded,
    }
}

/// `a_m = (3^(m-1) + 3) / 2`, for `m >= 1`.
pub fn multiplicity_a(m: u32) -> u64 {
    assert!(m >= 1);
    (3u64.pow(m - 1) + 3) / 2
}

/// `b_m = (3^(m-1) - 1) / 2`, for `m >= 1`.
pub fn multiplicity_b(m: u32) -> u64 {
    assert!(m >= 1);
    (3u64.pow(m - 1) - 1) / 2
}

/// Serialized flat, as `"provenance": name, "depth": depth-or-null`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// The top eigenvalue 3.
    Top,
    /// A point of `f^-depth(0)`.
    Zero { depth: u32 },
    /// A point of `f^-depth(-2)`.
    MinusTwo { depth: u32 },
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::Top => "top",
            Provenance::Zero { .. } => "zero",
            Provenance::MinusTwo { .. } => "minus_two",
        }
    }

    pub fn depth(self) -> Option<u32> {
        match self {
            Provenance::Top => None,
            Provenance::Zero { depth } | Provenance::MinusTwo { depth } => Some(depth),
        }
    }
}

impl Serialize for Provenance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("provenance", self.name())?;
        map.serialize_entry("depth", &self.depth())?;
        map.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClosedEntry {
    pub value: f64,
    pub multiplicity: u64,
    #[serde(flatten)]
    pub provenance: Provenance,
}

/// The spectrum of `T_n` for `H(3)`, sorted by value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumClosedForm {
    pub level: usize,
    pub scale: Scale,
    pub entries: Vec<ClosedEntry>,
}

impl SpectrumClosedForm {
    /// The same spectrum on another scale (`M = T / 3`).
    pub fn on_scale(&self, scale: Scale) -> SpectrumClosedForm {
        let factor = scale.factor(3) / self.scale.factor(3);
        SpectrumClosedForm {
            level: self.level,
            scale,
            entries: self
                .entries
                .iter()
                .map(|e| ClosedEntry {
                    value: e.value * factor,
                    ..*e
                })
                .collect(),
        }
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// Number of strictly distinct `f64` values.
    pub fn distinct_value_count(&self) -> usize {
        let mut count = usize::from(!self.entries.is_empty());
        for w in self.entries.windows(2) {
            if w[1].value > w[0].value {
                count += 1;
            }
        }
        count
    }

    /// Smallest gap between consecutive values.
    pub fn min_gap(&self) -> f64 {
        self.entries
            .windows(2)
            .map(|w| w[1].value - w[0].value)
            .fold(f64::INFINITY, f64::min)
    }

    /// Largest eigenvalue below the top one.
    pub fn second_largest(&self) -> Option<f64> {
        self.entries
            .iter()
            .filter(|e| e.provenance != Provenance::Top)
            .map(|e| e.value)
            .max_by(f64::total_cmp)
    }
}

/// `3 * 2^(n-1) - 1`.
pub fn expected_distinct_count(n: usize) -> u64 {
    3 * (1u64 << (n - 1)) - 1
}

pub fn closed_form_spectrum(n: usize) -> Result<SpectrumClosedForm> {
    if n < 1 {
        return Err(Error::InvalidArgument(
            "closed-form spectrum needs level n >= 1".into(),
        ));
    }
    if n > MAX_CLOSED_LEVEL {
        return Err(Error::BudgetExceeded {
            what: "closed-form spectrum level",
            requested: n as u128,
            budget: MAX_CLOSED_LEVEL as u128,
        });
    }
    let mut entries = vec![ClosedEntry {
        value: 3.0,
        multiplicity: 1,
        provenance: Provenance::Top,
    }];
    let zero = preimage_layers(&[0.0], n - 1);
    for (i, layer) in zero.layers.iter().enumerate() {
        let multiplicity = multiplicity_a((n - i) as u32);
        entries.extend(layer.iter().map(|p| ClosedEntry {
            value: p.value,
            multiplicity,
            provenance: Provenance::Zero { depth: i as u32 },
        }));
    }
    if n >= 2 {
        let minus_two = preimage_layers(&[-2.0], n - 2);
        for (j, layer) in minus_two.layers.iter().enumerate() {
            let multiplicity = multiplicity_b((n - j) as u32);
            entries.extend(layer.iter().map(|p| ClosedEntry {
                value: p.value,
                multiplicity,
                provenance: Provenance::MinusTwo { depth: j as u32 },
            }));
        }
    }
    entries.sort_by(|x, y| x.value.total_cmp(&y.value));
    Ok(SpectrumClosedForm {
        level: n,
        scale: Scale::T,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_point_and_partner() {
        let f = QuadraticMap;
        assert_eq!(f.eval(3.0), 3.0);
        assert_eq!(f.eval(-2.0), 3.0);
        assert_eq!(f.derivative(3.0), 5.0);
    }

    #[test]
    fn level_one_and_two() {
        let s1 = closed_form_spectrum(1).unwrap();
        let pairs: Vec<_> = s1
            .entries
            .iter()
            .map(|e| (e.value, e.multiplicity))
            .collect();
        assert_eq!(pairs, vec![(0.0, 2), (3.0, 1)]);

        let s2 = closed_form_spectrum(2).unwrap();
        let r = 13f64.sqrt();
        let want = [
            (-2.0, 1),
            ((1.0 - r) / 2.0, 2),
            (0.0, 3),
            ((1.0 + r) / 2.0, 2),
            (3.0, 1),
        ];
        assert_eq!(s2.entries.len(), 5);
        for (e, (v, m)) in s2.entries.iter().zip(want) {
            assert!((e.value - v).abs() < 1e-15);
            assert_eq!(e.multiplicity, m);
        }
        assert_eq!(s2.total_multiplicity(), 9);
    }

    #[test]
    fn level_three_counts() {
        let s3 = closed_form_spectrum(3).unwrap();
        assert_eq!(s3.distinct_value_count(), 11);
        assert_eq!(s3.total_multiplicity(), 27);
    }

    #[test]
    fn level_zero_rejected() {
        assert!(closed_form_spectrum(0).is_err());
        assert!(closed_form_spectrum(MAX_CLOSED_LEVEL + 1).is_err());
    }

    #[test]
    fn shallow_preimages() {
        assert_eq!(preimage_set(&[0.0], 0).values, vec![0.0]);
        let r = 13f64.sqrt();
        let d1 = preimage_set(&[0.0], 1).values;
        assert_eq!(d1, vec![(1.0 - r) / 2.0, 0.0, (1.0 + r) / 2.0]);
        assert!((d1[0] + 1.30278).abs() < 1e-5);
    }

    #[test]
    fn complex_preimages_are_counted() {
        // 13 + 4y < 0 below y = -3.25
        let s = preimage_set(&[-4.0], 2);
        assert_eq!(s.values, vec![-4.0]);
        assert_eq!(s.complex_excluded, 1);
    }

    #[test]
    fn multiplicity_formulas() {
        assert_eq!(multiplicity_a(1), 2);
        assert_eq!(multiplicity_a(2), 3);
        assert_eq!(multiplicity_b(1), 0);
        assert_eq!(multiplicity_b(2), 1);
        assert_eq!(multiplicity_b(3), 4);
    }
}
