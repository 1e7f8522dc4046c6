//! Nondegeneracy of the composition pairing into the Serre functor.

use gorlab::algebra::io::{load_algebra, load_module};
use gorlab::duality::trace_pairing_probe;
use gorlab::homological::DEFAULT_DEPTH;

fn main() -> gorlab::Result<()> {
    let a = load_algebra("truncated_poly:3")?;
    let m = load_module(&a, "residue")?;
    let n = load_module(&a, "cyclic_quotient:2")?;
    let r = trace_pairing_probe(&m, &n, DEFAULT_DEPTH)?;
    println!("dims {:?}, kernels {} {}, {:?}", r.dims, r.left_kernel, r.right_kernel, r.verdict);
    Ok(())
}
