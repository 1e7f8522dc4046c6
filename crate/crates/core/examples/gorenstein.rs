//! Decide Gorensteinness for a few presets and print the injective dimension at each site.

use gorlab::algebra::io::load_algebra;
use gorlab::gorenstein::{gorenstein_check, GorensteinStatus};
use gorlab::homological::DEFAULT_DEPTH;

fn main() -> gorlab::Result<()> {
    for spec in ["truncated_poly:3", "upper_triangular:2", "cyclic:6:Z", "fat_point"] {
        let v = gorenstein_check(&load_algebra(spec)?, DEFAULT_DEPTH)?;
        match &v.status {
            GorensteinStatus::Gorenstein { sites } => {
                let dims: Vec<String> = sites.iter().map(|(s, d)| format!("{s}: {}", d.d_left)).collect();
                println!("{spec}: Gorenstein ({})", dims.join(", "));
            }
            GorensteinStatus::NotGorenstein { site, side, certificate } => {
                println!("{spec}: not Gorenstein at {site} ({side}): {certificate}");
            }
            GorensteinStatus::Inconclusive { depth, reason } => println!("{spec}: inconclusive at depth {depth}: {reason}"),
        }
    }
    Ok(())
}
