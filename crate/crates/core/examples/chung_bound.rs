//! Diameters against the bound from the lazy random walk.

use hanoi_groups::group::Alphabet;
use hanoi_groups::spectral::chung_bound_check;

fn main() -> hanoi_groups::Result<()> {
    let a = Alphabet::new(3)?;
    for n in 1..=5 {
        let r = chung_bound_check(a, n)?;
        println!(
            "n={n}: diameter {} <= {:.2} ({}), n/delta = {:.1}",
            r.diameter,
            r.bound,
            if r.holds { "holds" } else { "fails" },
            r.n_over_delta
        );
    }
    Ok(())
}
