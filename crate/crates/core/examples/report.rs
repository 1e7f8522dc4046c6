//! A combined report driven by a config, printed as text and as JSON.

use gorlab::algebra::io::load_algebra;
use gorlab::duality::{report, ReportConfig};

fn main() -> gorlab::Result<()> {
    let cfg: ReportConfig = serde_json::from_str(
        r#"{"singular_locus": true, "local": [{"m": "trivial", "n": "trivial", "prime": 2, "range": [-2, 2]}]}"#,
    )?;
    let r = report(&load_algebra("cyclic:2:Z")?, &cfg)?;
    print!("{}", r.to_text());
    println!("{}", serde_json::to_string_pretty(&r.to_json())?);
    Ok(())
}
