//! Bring a randomly rotated map to block normal form, inspect the blocks and
//! rebuild the map from them.
//!
//!     cargo run --example normal_form

use qhm::catalog;
use qhm::random::{random_orthogonal, rng};
use qhm::spectral::{normal_form, reconstruct, split_singular};
use qhm::FloatMap;

pub fn run_example() -> qhm::Result<()> {
    let base: FloatMap = catalog::non_umbilical_8_3();
    let q = random_orthogonal(8, &mut rng(2024));
    let map = base.precompose(&q)?;

    let nf = normal_form(&map)?;
    println!("k = {}, r = {}, D = {:?}", nf.k, nf.r, nf.d.iter().map(|d| format!("{d:.12}")).collect::<Vec<_>>());
    for (i, b) in nf.blocks.iter().enumerate() {
        println!("B_{} =\n{:?}", i + 1, b.map(|v: &f64| (v * 1e9).round() / 1e9 + 0.0));
    }
    println!("constraint residual {:.2e}", nf.constraint_residual());

    let back = reconstruct(&nf, map.codomain_dim())?;
    let err = map
        .components()
        .iter()
        .zip(back.components())
        .map(|(a, b)| a.matrix().sub(b.matrix()).max_abs())
        .fold(0.0, f64::max);
    println!("reconstruction error {err:.2e}");
    assert!(err < 1e-8);

    let split = split_singular(&catalog::padded_hopf::<f64>())?;
    println!(
        "\npadded Hopf map factors through a {}x{} projection onto a map R^{} -> R^{}",
        split.projection.rows(),
        split.projection.cols(),
        split.core.domain_dim(),
        split.core.codomain_dim()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> qhm::Result<()> {
    run_example()
}
