//! Atom weights of the limiting spectral measure and the convergence of
//! the level counting measures.

use hanoi_groups::spectral::{
    atom_mass_exact, convergence_gap, counting_measure, kns_weights, to_f64,
};

fn main() -> hanoi_groups::Result<()> {
    let m = kns_weights(2)?;
    for atom in &m.atoms {
        println!(
            "{:>10.6} {:<9} weight {:.6}",
            atom.value,
            atom.provenance.name(),
            atom.weight
        );
    }
    for d in [0, 1, 5, 10, 30] {
        println!("mass up to depth {d}: {}", atom_mass_exact(d));
    }
    for n in [2, 5, 10] {
        let nu = counting_measure(n)?;
        println!(
            "n={n}: {} atoms, |nu_n(0) - 1/6| = {} ~ {:.3e}",
            nu.atoms.len(),
            convergence_gap(n, 0),
            to_f64(convergence_gap(n, 0))
        );
    }
    Ok(())
}
