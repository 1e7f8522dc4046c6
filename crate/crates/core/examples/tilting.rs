//! The unit and counit of the tilting adjunction for the resolved dualizing complex.

use gorlab::algebra::io::{load_algebra, load_module};
use gorlab::gorenstein::verify_tilting;
use gorlab::homological::DEFAULT_DEPTH;

fn main() -> gorlab::Result<()> {
    let a = load_algebra("upper_triangular:2")?;
    for m in ["simple:0", "simple:1"] {
        let r = verify_tilting(&load_module(&a, m)?, (-3, 3), DEFAULT_DEPTH)?;
        println!("{m}: passed {}", r.passed);
    }
    Ok(())
}
