//! Component ranks and spectra of harmonic morphisms: one even rank, one
//! spectrum, eigenvalues in `±λ` pairs.
//!
//!     cargo run --example rank_lemma

use qhm::catalog;
use qhm::spectral::{is_umbilical, q_rank, spectrum_report};
use qhm::{ExactMap, Rational};

fn describe(name: &str, map: &ExactMap) -> qhm::Result<()> {
    let spectrum = spectrum_report(map)?;
    let (umbilical, positives) = is_umbilical(map)?;
    println!("{name}");
    println!("  Q-rank {} (component ranks {:?})", q_rank(map)?, spectrum.ranks);
    println!(
        "  spectra equal: {}, ±λ paired: {}, decided exactly: {}",
        spectrum.spectra_equal, spectrum.plus_minus_paired, spectrum.exact
    );
    println!("  positive eigenvalues {positives:?}, umbilical: {umbilical}");
    assert!(spectrum.spectra_equal && spectrum.plus_minus_paired && spectrum.rank_is_even);
    Ok(())
}

pub fn run_example() -> qhm::Result<()> {
    describe("standard Hopf map R^4 -> R^3", &catalog::standard_hopf::<Rational>())?;
    describe("two-eigenvalue map R^8 -> R^3", &catalog::non_umbilical_8_3::<Rational>())?;
    describe("umbilical map R^8 -> R^5", &catalog::umbilical_8_5::<Rational>())?;
    describe("Hopf map on R^6 with a 2-dimensional kernel", &catalog::padded_hopf::<Rational>())?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> qhm::Result<()> {
    run_example()
}
