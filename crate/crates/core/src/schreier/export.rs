use std::io::Write;

use serde::Serialize;

use super::{BallGraph, LevelGraph};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    Dot,
    Csv,
}

/// A labeled multigraph that can be written out edge by edge.
pub trait ExportGraph {
    fn vertex_count(&self) -> usize;
    fn vertex_name(&self, v: u32) -> String;
    /// `(u, v, label)` with `u <= v`, loops included.
    fn labeled_edges(&self) -> Vec<(u32, u32, String)>;
}

impl ExportGraph for LevelGraph {
    fn vertex_count(&self) -> usize {
        LevelGraph::vertex_count(self)
    }

    fn vertex_name(&self, v: u32) -> String {
        self.word(v).to_string()
    }

    fn labeled_edges(&self) -> Vec<(u32, u32, String)> {
        self.edges()
            .into_iter()
            .map(|e| (e.u, e.v, self.generators()[e.generator].label()))
            .collect()
    }
}

impl ExportGraph for BallGraph {
    fn vertex_count(&self) -> usize {
        BallGraph::vertex_count(self)
    }

    fn vertex_name(&self, v: u32) -> String {
        self.vertices[v as usize].to_string()
    }

    fn labeled_edges(&self) -> Vec<(u32, u32, String)> {
        let gens = self.alphabet.transpositions();
        let mut out = Vec::new();
        for u in 0..self.vertex_count() as u32 {
            for (s, t) in gens.iter().enumerate() {
                if let Some(v) = self.neighbor(u, s) {
                    if u <= v {
                        out.push((u, v, t.label()));
                    }
                }
            }
        }
        out
    }
}

/// CSV: header `u,v,label`, one edge per row. DOT: an undirected
/// multigraph with words as vertex labels and generators as edge labels.
pub fn export_graph<G: ExportGraph + ?Sized>(
    g: &G,
    format: GraphFormat,
    out: &mut dyn Write,
) -> Result<()> {
    match format {
        GraphFormat::Csv => {
            writeln!(out, "u,v,label")?;
            for (u, v, label) in g.labeled_edges() {
                writeln!(out, "{u},{v},{label}")?;
            }
        }
        GraphFormat::Dot => {
            writeln!(out, "graph schreier {{")?;
            for v in 0..g.vertex_count() as u32 {
                writeln!(out, "  {v} [label=\"{}\"];", g.vertex_name(v))?;
            }
            for (u, v, label) in g.labeled_edges() {
                writeln!(out, "  {u} -- {v} [label=\"{label}\"];")?;
            }
            writeln!(out, "}}")?;
        }
    }
    Ok(())
}
