//! The limiting spectral measure of `Γ_n` for `H(3)` and the per-level
//! counting measures that converge to it.
//!
//! Every point of `f^-i(0)` and of `f^-i(-2)` carries weight `1/(6·3^i)`.
//! There are `2^i` real points in each set at depth `i`, so the mass up to
//! depth `d` is `1 - (2/3)^(d+1)`.

use num_rational::Ratio;
use serde::Serialize;

use super::{closed_form_spectrum, preimage_layers, Provenance};
use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

/// Largest depth whose atoms [`kns_weights`] materializes.
pub const MAX_ATOM_DEPTH: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KnsAtom {
    pub value: f64,
    #[serde(flatten)]
    pub provenance: Provenance,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KnsMeasure {
    pub max_depth: usize,
    /// Atoms on the adjacency scale, sorted by value.
    pub atoms: Vec<KnsAtom>,
}

impl KnsMeasure {
    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|a| a.weight).sum()
    }

    /// Weight of the atom at `value`, if any lies within `tol`.
    pub fn weight_at(&self, value: f64, tol: f64) -> Option<f64> {
        self.atoms
            .iter()
            .find(|a| (a.value - value).abs() <= tol)
            .map(|a| a.weight)
    }
}

/// `1 / (6·3^depth)`.
pub fn atom_weight(depth: u32) -> Rational {
    Rational::new(1, 6 * 3i128.pow(depth))
}

/// All atoms of depth `<= max_depth`.
pub fn kns_weights(max_depth: usize) -> Result<KnsMeasure> {
    if max_depth > MAX_ATOM_DEPTH {
        return Err(Error::BudgetExceeded {
            what: "spectral measure atom depth",
            requested: max_depth as u128,
            budget: MAX_ATOM_DEPTH as u128,
        });
    }
    let mut atoms = Vec::new();
    for (target, zero) in [(0.0, true), (-2.0, false)] {
        let layers = preimage_layers(&[target], max_depth);
        for (depth, layer) in layers.layers.iter().enumerate() {
            let depth = depth as u32;
            let weight = to_f64(atom_weight(depth));
            let provenance = if zero {
                Provenance::Zero { depth }
            } else {
                Provenance::MinusTwo { depth }
            };
            atoms.extend(layer.iter().map(|p| KnsAtom {
                value: p.value,
                provenance,
                weight,
            }));
        }
    }
    atoms.sort_by(|x, y| x.value.total_cmp(&y.value));
    Ok(KnsMeasure { max_depth, atoms })
}

/// Exact mass of all atoms of depth `<= depth`, from the atom counts
/// `2 · 2^i` per depth.
pub fn atom_mass_exact(depth: u32) -> Rational {
    (0..=depth)
        .map(|i| Rational::from_integer(2 * 2i128.pow(i)) * atom_weight(i))
        .sum()
}

/// The same mass accumulated in floating point.
pub fn atom_mass(depth: u32) -> f64 {
    (0..=depth)
        .map(|i| 2.0 * 2f64.powi(i as i32) / (6.0 * 3f64.powi(i as i32)))
        .sum()
}

/// `ν_n`: each eigenvalue of `Γ_n` weighted by multiplicity `/ 3^n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountingMeasure {
    pub level: usize,
    pub atoms: Vec<CountingAtom>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CountingAtom {
    pub value: f64,
    #[serde(flatten)]
    pub provenance: Provenance,
    #[serde(serialize_with = "serialize_ratio")]
    pub mass: Rational,
}

fn serialize_ratio<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub fn counting_measure(n: usize) -> Result<CountingMeasure> {
    let spectrum = closed_form_spectrum(n)?;
    let total = 3i128.pow(n as u32);
    Ok(CountingMeasure {
        level: n,
        atoms: spectrum
            .entries
            .iter()
            .map(|e| CountingAtom {
                value: e.value,
                provenance: e.provenance,
                mass: Rational::new(e.multiplicity as i128, total),
            })
            .collect(),
    })
}

/// `ν_n` of one atom, by provenance: `a_(n-i)/3^n` for depth-`i` preimages of
/// 0, `b_(n-j)/3^n` for preimages of -2, `1/3^n` for the top.
/// Depth-`i` atoms absent from level `n` have mass 0.
pub fn counting_mass(n: usize, provenance: Provenance) -> Rational {
    let total = 3i128.pow(n as u32);
    let mult = match provenance {
        Provenance::Top => 1,
        Provenance::Zero { depth } if (depth as usize) < n => {
            super::multiplicity_a((n - depth as usize) as u32) as i128
        }
        Provenance::MinusTwo { depth } if (depth as usize) + 1 < n => {
            super::multiplicity_b((n - depth as usize) as u32) as i128
        }
        _ => 0,
    };
    Rational::new(mult, total)
}

/// `max |ν_n(atom) - weight(atom)|` over atoms of depth `<= depth`, exactly.
pub fn convergence_gap(n: usize, depth: u32) -> Rational {
    (0..=depth)
        .flat_map(|d| {
            [
                Provenance::Zero { depth: d },
                Provenance::MinusTwo { depth: d },
            ]
        })
        .map(|p| {
            let diff = counting_mass(n, p) - atom_weight(p.depth().unwrap());
            if diff < Rational::from_integer(0) {
                -diff
            } else {
                diff
            }
        })
        .max()
        .unwrap_or_else(|| Rational::from_integer(0))
}

pub fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
