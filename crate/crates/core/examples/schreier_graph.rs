//! Level Schreier graphs of H(3): sizes, loops, and the corner vertices.

use hanoi_groups::group::{Alphabet, Word};
use hanoi_groups::schreier::build_level_graph;

fn main() -> hanoi_groups::Result<()> {
    let a = Alphabet::new(3)?;
    for n in 0..=6 {
        let g = build_level_graph(a, n)?;
        println!(
            "n={n}: {} vertices, {} edges, {} loops",
            g.vertex_count(),
            g.edges().len(),
            g.loop_count()
        );
    }
    let g = build_level_graph(a, 3)?;
    for corner in 0..3 {
        let v = g.vertex(&Word::constant(corner, 3))?;
        let around: Vec<String> = g
            .neighbors_of(v)
            .iter()
            .map(|&u| g.word(u).to_string())
            .collect();
        println!("{} -> {}", g.word(v), around.join(" "));
    }
    Ok(())
}
