//! Sites where an algebra has infinite global dimension.

use gorlab::algebra::io::load_algebra;
use gorlab::homological::DEFAULT_DEPTH;
use gorlab::support::singular_locus;

fn main() -> gorlab::Result<()> {
    for spec in ["cyclic:6:Z", "upper_triangular:2", "truncated_poly:2"] {
        let s = singular_locus(&load_algebra(spec)?, DEFAULT_DEPTH)?;
        let sites: Vec<String> = s.singular().iter().map(|p| p.to_string()).collect();
        println!("{spec}: [{}] certified {}", sites.join(", "), s.is_certified());
    }
    Ok(())
}
