//! Verify the Hopf construction maps in exact arithmetic, then show what a
//! failing verdict looks like.
//!
//!     cargo run --example verify_hopf

use qhm::constructions::hopf_construction;
use qhm::verify::{check_harmonic_morphism, conformality_oracle, dilation};
use qhm::{ExactMap, QuadraticMap, Rational, Scalar};

pub fn run_example() -> qhm::Result<()> {
    for n in [1, 2, 4, 8] {
        let map: ExactMap = hopf_construction(n)?;
        let report = check_harmonic_morphism(&map);
        println!(
            "Hopf construction R^{} -> R^{}: harmonic morphism = {}",
            map.domain_dim(),
            map.codomain_dim(),
            report.is_harmonic_morphism
        );
        assert!(report.is_harmonic_morphism);
        assert!(conformality_oracle(&map, 25, n as u64));

        let x: Vec<Rational> = (1..=map.domain_dim() as i64).map(Rational::from_i64).collect();
        let norm2 = x.iter().fold(Rational::from_i64(0), |acc, v| acc + v.clone() * v.clone());
        let lambda2 = dilation(&map, &x)?;
        println!("  dilation at (1, 2, ...) = {lambda2} = 4 * |X|^2 = 4 * {norm2}");
        assert_eq!(lambda2, Rational::from_i64(4) * norm2);
    }

    let squares: ExactMap = QuadraticMap::from_i64(&[&[&[1, 0], &[0, -1]], &[&[2, 0], &[0, -2]]])?;
    let report = check_harmonic_morphism(&squares);
    println!("\n(x^2 - y^2, 2x^2 - 2y^2): harmonic = {}, hwc = {}", report.is_harmonic, report.is_hwc);
    for v in &report.anticommute_violations {
        println!("  components {} and {} do not anticommute (residual {})", v.i, v.j, v.residual);
    }
    for v in &report.square_violations {
        println!("  components {} and {} have different squares (residual {})", v.i, v.j, v.residual);
    }
    assert!(!report.is_harmonic_morphism);
    Ok(())
}

#[allow(dead_code)]
fn main() -> qhm::Result<()> {
    run_example()
}
