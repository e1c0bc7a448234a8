//! Complete lifts double the domain and stay harmonic morphisms.
//!
//!     cargo run --example complete_lift

use qhm::constructions::{complete_lift, hopf_construction};
use qhm::verify::check_harmonic_morphism;
use qhm::{ExactMap, Rational, Scalar};

pub fn run_example() -> qhm::Result<()> {
    let mut map: ExactMap = hopf_construction(1)?;
    for _ in 0..3 {
        let lift = complete_lift(&map)?;
        let ok = check_harmonic_morphism(&lift).is_harmonic_morphism;
        println!(
            "R^{} -> R^{} lifts to R^{} -> R^{}: harmonic morphism = {ok}",
            map.domain_dim(),
            map.codomain_dim(),
            lift.domain_dim(),
            lift.codomain_dim()
        );
        assert!(ok);

        let x: Vec<Rational> = (0..map.domain_dim()).map(|i| Rational::from_ratio(i as i64 - 1, 2)).collect();
        let xx: Vec<Rational> = x.iter().chain(&x).cloned().collect();
        let twice: Vec<Rational> = map.evaluate(&x)?.into_iter().map(|v| v * Rational::from_i64(2)).collect();
        assert_eq!(lift.evaluate(&xx)?, twice);
        map = lift;
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qhm::Result<()> {
    run_example()
}
