use serde::Serialize;
use std::io::Write;

use super::{SpectrumClosedForm, SpectrumNumeric};
use crate::error::Result;

/// Which operator a spectrum belongs to: the adjacency matrix `T_n` or the
/// Markov operator `M_n = T_n / |S|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Scale {
    T,
    M,
}

impl Scale {
    /// Multiplier taking `T`-scale values to this scale.
    pub fn factor(self, generator_count: usize) -> f64 {
        match self {
            Scale::T => 1.0,
            Scale::M => 1.0 / generator_count as f64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportEntry {
    pub value: f64,
    pub multiplicity: u64,
    /// `top`, `zero`, `minus_two` or `numeric`.
    pub provenance: &'static str,
    pub depth: Option<u32>,
}

/// Serialized spectrum: `{level, scale, entries: [{value, multiplicity,
/// provenance, depth}]}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub level: usize,
    pub scale: Scale,
    pub entries: Vec<ReportEntry>,
}

pub const SPECTRUM_CSV_HEADER: &str = "value,multiplicity,provenance,depth";

impl SpectrumReport {
    pub fn from_closed(closed: &SpectrumClosedForm, scale: Scale) -> Self {
        let s = closed.on_scale(scale);
        SpectrumReport {
            level: s.level,
            scale,
            entries: s
                .entries
                .iter()
                .map(|e| ReportEntry {
                    value: e.value,
                    multiplicity: e.multiplicity,
                    provenance: e.provenance.name(),
                    depth: e.provenance.depth(),
                })
                .collect(),
        }
    }

    /// `numeric` must already be on `scale`.
    pub fn from_numeric(numeric: &SpectrumNumeric, level: usize, scale: Scale) -> Self {
        SpectrumReport {
            level,
            scale,
            entries: numeric
                .values
                .iter()
                .map(|v| ReportEntry {
                    value: v.value,
                    multiplicity: v.multiplicity,
                    provenance: "numeric",
                    depth: None,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spectrum report serializes")
    }

    pub fn write_csv(&self, out: &mut dyn Write) -> Result<()> {
        writeln!(out, "{SPECTRUM_CSV_HEADER}")?;
        for e in &self.entries {
            let depth = e.depth.map(|d| d.to_string()).unwrap_or_default();
            writeln!(
                out,
                "{},{},{},{}",
                e.value, e.multiplicity, e.provenance, depth
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::closed_form_spectrum;

    #[test]
    fn csv_for_level_two() {
        let r = SpectrumReport::from_closed(&closed_form_spectrum(2).unwrap(), Scale::T);
        let mut buf = Vec::new();
        r.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], SPECTRUM_CSV_HEADER);
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[1], "-2,1,minus_two,0");
        assert_eq!(lines[5], "3,1,top,");
        let total: u64 = lines[1..]
            .iter()
            .map(|l| l.split(',').nth(1).unwrap().parse::<u64>().unwrap())
            .sum();
        assert_eq!(total, 9);
    }

    #[test]
    fn json_shape() {
        let r = SpectrumReport::from_closed(&closed_form_spectrum(1).unwrap(), Scale::M);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["level"], 1);
        assert_eq!(v["scale"], "M");
        assert_eq!(v["entries"][1]["value"], 1.0);
        assert_eq!(v["entries"][1]["provenance"], "top");
        assert!(v["entries"][1]["depth"].is_null());
        assert_eq!(v["entries"][0]["depth"], 0);
    }
}
