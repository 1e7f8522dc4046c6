//! The dualizing bimodule and its resolution by projective bimodules.

use gorlab::algebra::io::load_algebra;
use gorlab::gorenstein::{dualizing_bimodule, omega_hat};
use gorlab::homological::DEFAULT_DEPTH;

fn main() -> gorlab::Result<()> {
    let a = load_algebra("upper_triangular:2")?;
    let w = dualizing_bimodule(&a)?;
    println!("omega: rank {}, biduality {}", w.bimodule.dim(), w.biduality_verified);
    let h = omega_hat(&a, DEFAULT_DEPTH)?;
    for (j, t) in h.terms.iter().enumerate() {
        println!("degree {}: {}", -(j as i64), t.normal_form());
    }
    println!("length {}, verified {}", h.length(), h.verify()?);
    Ok(())
}
