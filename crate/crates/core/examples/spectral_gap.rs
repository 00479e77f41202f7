//! Spectral gaps of H(3) shrinking by a factor of 5 per level.

use hanoi_groups::group::Alphabet;
use hanoi_groups::spectral::{gap_series, GapSource};

fn main() -> hanoi_groups::Result<()> {
    let a = Alphabet::new(3)?;
    let closed = gap_series(a, 16, GapSource::Closed)?;
    let ratios = closed.ratios();
    for (i, row) in closed.rows.iter().enumerate() {
        let ratio = if i > 0 {
            format!("{:.6}", ratios[i - 1])
        } else {
            "-".into()
        };
        println!("n={:2} delta={:.6e} ratio={ratio}", row.n, row.delta);
    }
    let numeric = gap_series(a, 5, GapSource::Numeric)?;
    for (c, m) in closed.rows.iter().zip(&numeric.rows) {
        println!("n={} closed {:.12} numeric {:.12}", c.n, c.delta, m.delta);
    }
    Ok(())
}
