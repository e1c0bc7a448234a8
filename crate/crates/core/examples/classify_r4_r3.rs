//! Classify a disguised map `R^4 -> R^3` and recover rotations that turn it
//! into a multiple of the standard Hopf map.
//!
//!     cargo run --example classify_r4_r3

use qhm::classify43::{classify, hopf_standard, phi_t, phi_t_flipped, rotation_G, sphere_restriction_check, UnitPhase};
use qhm::random::{random_orthogonal, rng};
use qhm::Rational;

pub fn run_example() -> qhm::Result<()> {
    let mut r = rng(7);
    let q = random_orthogonal(4, &mut r);
    let map = phi_t(2.5, &UnitPhase::from_angle(1.2))?.precompose(&q)?;

    let c = classify(&map)?;
    println!("lambda = {:.12}, t = {:.12}, flipped = {}", c.lambda, c.t, c.orientation_flipped);
    println!("residual of G^t ∘ λφ₀ ∘ P against the input: {:.2e}", c.residual(&map, 50, 1));
    println!("restricts to S^3 -> S^2 after scaling: {}", sphere_restriction_check(&map)?);

    let flipped = phi_t_flipped(1.0, &UnitPhase::from_angle(0.4))?;
    let c = classify(&flipped)?;
    println!("\nsign-flipped member: flipped = {}, t = {:.12}", c.orientation_flipped, c.t);

    // Exact check of G(t)·φ_t = λφ₀ at a rational point of the circle.
    let phase = UnitPhase::from_half_tangent(Rational::new(3.into(), 7.into()));
    let lambda = Rational::new(5.into(), 2.into());
    let lhs = phi_t(lambda.clone(), &phase)?.postcompose(&rotation_G(&phase))?;
    println!(
        "\ncos t = {}, sin t = {}: G(t)·φ_t == λφ₀ exactly: {}",
        phase.cos,
        phase.sin,
        lhs == hopf_standard(lambda)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> qhm::Result<()> {
    run_example()
}
