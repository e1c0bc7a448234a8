//! Write maps to the text format, read them back, and drive the `qhm`
//! command in-process.
//!
//!     cargo run --example mapfile_io

use qhm::catalog;
use qhm::cli::run;
use qhm::mapfile::{read_map, write_map, AnyMap};
use qhm::{ExactMap, Rational, Scalar};

pub fn run_example() -> qhm::Result<()> {
    let map: ExactMap = catalog::standard_hopf::<Rational>().scale(&Rational::from_ratio(2, 3));
    let text = write_map(&map);
    print!("{text}");
    assert_eq!(read_map(&text)?, AnyMap::Exact(map));

    let generated = run(["qhm", "generate", "hopf", "4"], &mut std::io::empty());
    let verified = run(["qhm", "verify", "-", "--json"], &mut generated.stdout.as_bytes());
    println!("\nqhm generate hopf 4 | qhm verify - --json   (exit {})", verified.code);
    print!("{}", verified.stdout);

    let refused = run(["qhm", "generate", "hopf", "3"], &mut std::io::empty());
    print!("\nqhm generate hopf 3   (exit {})\n{}", refused.code, refused.stderr);
    Ok(())
}

#[allow(dead_code)]
fn main() -> qhm::Result<()> {
    run_example()
}
