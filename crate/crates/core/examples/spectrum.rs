//! Closed-form spectrum of H(3) next to the Jacobi eigenvalues.

use hanoi_groups::group::Alphabet;
use hanoi_groups::spectral::{
    closed_form_spectrum, compare_spectra, level_spectrum, Scale, SpectrumReport,
};

fn main() -> hanoi_groups::Result<()> {
    let a = Alphabet::new(3)?;
    let closed = closed_form_spectrum(3)?;
    SpectrumReport::from_closed(&closed, Scale::T).write_csv(&mut std::io::stdout())?;

    for n in 1..=5 {
        let closed = closed_form_spectrum(n)?;
        let numeric = level_spectrum(a, n, Scale::T)?;
        let report = compare_spectra(&numeric, &closed, 1e-8)?;
        println!(
            "n={n}: {} distinct values, matched={}, max deviation {:.1e}",
            closed.distinct_value_count(),
            report.matched,
            report.max_deviation
        );
    }
    println!(
        "n=20: {} distinct values",
        closed_form_spectrum(20)?.distinct_value_count()
    );
    Ok(())
}
