//! G-projective approximation `0 → Y → X → M → 0` of the torsion module Z/6 over Z[C_6].

use gorlab::algebra::io::{load_algebra, load_module};
use gorlab::approximation::gprojective_approximation;
use gorlab::homological::DEFAULT_DEPTH;

fn main() -> gorlab::Result<()> {
    let a = load_algebra("cyclic:6:Z")?;
    let m = load_module(&a, "torsion_trivial:6")?;
    let t = gprojective_approximation(&m, DEFAULT_DEPTH)?;
    println!("M = {}", t.target.normal_form());
    println!("X = {} (after {} syzygies, padded {})", t.gprojective_part.normal_form(), t.steps, t.padded);
    println!("Y = {}", t.finite_part.normal_form());
    println!("certified: {}", t.certificate.passed());
    Ok(())
}
