//! Serre duality over a field, degree by degree.

use gorlab::algebra::io::{load_algebra, load_module};
use gorlab::duality::verify_serre_duality_field;
use gorlab::homological::DEFAULT_DEPTH;

fn main() -> gorlab::Result<()> {
    let a = load_algebra("quantum_exterior:2:F5")?;
    let k = load_module(&a, "residue")?;
    let r = verify_serre_duality_field(&k, &k, (-2, 2), DEFAULT_DEPTH)?;
    for row in &r.rows {
        println!("{:>3} | {} vs {} in degree {}: {:?}", row.degree, row.lhs, row.rhs, row.dual_degree, row.status);
    }
    println!("{:?}", r.verdict);
    Ok(())
}
