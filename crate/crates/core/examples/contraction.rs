//! Iterated sections of random reduced words shrink.

use hanoi_groups::group::{contraction_probe, Alphabet};

fn main() -> hanoi_groups::Result<()> {
    for k in [3, 4] {
        let report = contraction_probe(Alphabet::new(k)?, 8, 1000, 0)?;
        for p in &report.lengths {
            println!(
                "k={k} length {}: {} words ({}), {} descended, lengths by depth {:?}",
                p.length,
                p.words_tested,
                if p.exhaustive { "all" } else { "sampled" },
                p.descended,
                p.max_length_by_depth
            );
        }
    }
    Ok(())
}
