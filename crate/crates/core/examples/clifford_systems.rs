//! Irreducible Clifford systems, their maps, and the correspondence with
//! umbilical morphisms.
//!
//!     cargo run --example clifford_systems

use qhm::catalog;
use qhm::clifford::{
    are_equivalent, clifford_from_umbilical, delta, equivalence_invariants, irreducible, qhm_from_clifford,
};
use qhm::verify::check_harmonic_morphism;
use qhm::{ExactMap, Rational};

pub fn run_example() -> qhm::Result<()> {
    println!(" n  δ(n)  dim  product trace");
    for n in 1..=9 {
        let system = irreducible::<Rational>(n)?;
        let inv = equivalence_invariants(&system)?;
        println!("{n:>2}  {:>4}  {:>3}  {}", delta(n)?, inv.dim, inv.product_trace);
        if n <= 5 {
            let map = qhm_from_clifford(&system)?;
            assert!(check_harmonic_morphism(&map).is_harmonic_morphism);
        }
    }

    let s = irreducible::<Rational>(4)?;
    let t = s.negate_member(4);
    println!("\nn = 4: system and its copy with P_4 negated equivalent? {}", are_equivalent(&s, &t)?);

    let map: ExactMap = catalog::umbilical_8_5();
    let bridge = clifford_from_umbilical(&map)?;
    println!(
        "umbilical R^8 -> R^5 map = {} x (map of a Clifford system with {} members on R^{})",
        bridge.scale,
        bridge.system.count(),
        bridge.system.dim()
    );
    assert_eq!(qhm_from_clifford(&bridge.system)?.scale(&bridge.scale), map);
    Ok(())
}

#[allow(dead_code)]
fn main() -> qhm::Result<()> {
    run_example()
}
