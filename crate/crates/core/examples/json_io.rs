//! Write an algebra and a module to JSON and read them back.

use gorlab::algebra::io::{load_algebra, read_algebra, read_module, write_algebra, write_module};
use gorlab::algebra::named::module_preset;

fn main() -> gorlab::Result<()> {
    let dir = std::env::temp_dir().join(format!("gorlab-json-io-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let a = load_algebra("truncated_poly:3")?;
    let m = module_preset(&a, "cyclic_quotient:2")?;
    let (ap, mp) = (dir.join("alg.json"), dir.join("module.json"));
    write_algebra(&a, &ap)?;
    write_module(&m, "alg.json", &mp)?;
    println!("{}", std::fs::read_to_string(&mp)?);
    let b = read_algebra(&ap)?;
    let back = read_module(&b, &mp)?;
    println!("round trip: rank {} -> {}, {}", m.dim(), back.dim(), back.normal_form());
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
