//! Growth of the orbital graph of 000... for H(3) and H(4).

use hanoi_groups::group::{Alphabet, TailWord};
use hanoi_groups::schreier::{
    fit_growth, growth_exponent_diagnostics, growth_function, MAX_BALL_VERTICES,
};

fn main() -> hanoi_groups::Result<()> {
    let h3 = growth_function(Alphabet::new(3)?, &TailWord::xi(), 1024, MAX_BALL_VERTICES)?;
    for m in 0..=10 {
        let r = 1usize << m;
        println!("H(3) gamma({r}) = {}", h3[r]);
    }
    let fit = fit_growth(&h3, 3, 64, 1024)?;
    println!(
        "H(3) exponent on [64, 1024]: {:.4} (log2 3 = {:.4})",
        fit.exponent,
        3f64.log2()
    );

    let h4 = growth_function(Alphabet::new(4)?, &TailWord::xi(), 40, MAX_BALL_VERTICES)?;
    let diag = growth_exponent_diagnostics(&h4, 4)?;
    println!(
        "H(4) gamma(40) = {}; log-log slopes {:.2} -> {:.2}, slope against (ln r)^2 {:.3}",
        h4[40], diag.lower_exponent, diag.upper_exponent, diag.polylog_slope
    );
    Ok(())
}
