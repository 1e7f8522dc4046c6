//! Tate cohomology of the trivial module over Z[C_6].

use gorlab::algebra::io::load_algebra;
use gorlab::algebra::named::trivial;
use gorlab::homological::DEFAULT_DEPTH;
use gorlab::stable::tate_ext;

fn main() -> gorlab::Result<()> {
    let a = load_algebra("cyclic:6:Z")?;
    let z = trivial(&a)?;
    let t = tate_ext(&z, &z, (-4, 4), DEFAULT_DEPTH)?;
    println!("{}", t.groups);
    Ok(())
}
