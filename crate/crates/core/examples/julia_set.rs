//! Backward orbit of 0 under f(x) = x^2 - x - 3.

use hanoi_groups::spectral::julia_approximation;

fn main() -> hanoi_groups::Result<()> {
    for depth in [4, 8, 16] {
        let j = julia_approximation(depth, &[0.0])?;
        println!(
            "depth {depth}: {} points in [{:.6}, {:.6}], widest gap ({:.6}, {:.6})",
            j.points.len(),
            j.min,
            j.max,
            j.largest_gap.0,
            j.largest_gap.1
        );
    }
    Ok(())
}
