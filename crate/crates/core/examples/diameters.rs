//! Exact diameters against 2^n - 1, and double-sweep bounds past the
//! exact budget.

use hanoi_groups::group::Alphabet;
use hanoi_groups::schreier::{build_level_graph, diameter, DiameterMode};

fn main() -> hanoi_groups::Result<()> {
    let h3 = Alphabet::new(3)?;
    for n in 1..=8 {
        let m = diameter(&build_level_graph(h3, n)?, DiameterMode::Exact)?;
        println!(
            "H(3) n={n}: diameter {} (2^n - 1 = {})",
            m.diameter,
            (1u32 << n) - 1
        );
    }
    for n in 11..=12 {
        let m = diameter(
            &build_level_graph(h3, n)?,
            DiameterMode::DoubleSweep { sweeps: 4 },
        )?;
        println!("H(3) n={n}: diameter >= {}", m.diameter);
    }
    let h4 = Alphabet::new(4)?;
    for n in 1..=6 {
        let m = diameter(&build_level_graph(h4, n)?, DiameterMode::Exact)?;
        println!("H(4) n={n}: diameter {}", m.diameter);
    }
    Ok(())
}
