//! Local duality over Z at each prime dividing the group order.

use gorlab::algebra::io::{load_algebra, load_module};
use gorlab::duality::verify_local_duality_integer;
use gorlab::homological::DEFAULT_DEPTH;

fn main() -> gorlab::Result<()> {
    let a = load_algebra("cyclic:6:Z")?;
    let z = load_module(&a, "trivial")?;
    for p in [2, 3] {
        let r = verify_local_duality_integer(&z, &z, p, (-2, 2), DEFAULT_DEPTH)?;
        let rows: Vec<String> = r.rows.iter().map(|row| format!("{}:{}", row.degree, row.lhs)).collect();
        println!("p = {p}: {} -> {:?}", rows.join(" "), r.verdict);
    }
    Ok(())
}
