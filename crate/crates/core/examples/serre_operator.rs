//! The Serre operator at a site of dimension 0 (a field) and 1 (over Z).

use gorlab::algebra::io::{load_algebra, load_module};
use gorlab::approximation::serre_operator;
use gorlab::homological::DEFAULT_DEPTH;

fn main() -> gorlab::Result<()> {
    for (spec, m, d) in [("truncated_poly:3", "cyclic_quotient:2", 0), ("upper_triangular:2", "simple:0", 0), ("cyclic:3:Z", "trivial", 1)] {
        let a = load_algebra(spec)?;
        let s = serre_operator(&load_module(&a, m)?, d, DEFAULT_DEPTH)?;
        println!("{spec} {m}, d = {d}: S(M) = {}, G-projective {}", s.module.normal_form(), s.verdict.is_yes());
    }
    Ok(())
}
