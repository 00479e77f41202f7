//! Writes Γ_2 of H(3) as DOT and a ball of the orbital graph as CSV.

use hanoi_groups::group::{Alphabet, TailWord};
use hanoi_groups::schreier::{build_level_graph, export_graph, growth_ball, GraphFormat};

fn main() -> hanoi_groups::Result<()> {
    let a = Alphabet::new(3)?;
    let mut out = std::io::stdout().lock();
    export_graph(&build_level_graph(a, 2)?, GraphFormat::Dot, &mut out)?;
    export_graph(
        &growth_ball(a, &TailWord::xi(), 3)?,
        GraphFormat::Csv,
        &mut out,
    )?;
    Ok(())
}
