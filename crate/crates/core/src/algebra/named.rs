//! Named modules over the preset algebras.

use super::bimodule::Bimodule;
use super::finite::Alg;
use super::module::Module;
use crate::error::{Error, Result};
use crate::linear::{BaseRing, Matrix, Scalar};

/// The trivial module of a group algebra (every group element acts as 1).
pub fn trivial(alg: &Alg) -> Result<Module> {
    Module::from_character(alg, &vec![Scalar::one(); alg.rank()])
}

/// `R` with every non-unit basis element acting as 0; the residue field of a local algebra
/// whose first basis element is 1 and whose other basis elements are nilpotent.
pub fn residue(alg: &Alg) -> Result<Module> {
    let mut chi = vec![Scalar::zero(); alg.rank()];
    chi[0] = Scalar::one();
    Module::from_character(alg, &chi)
}

/// `A / A·e_j`.
pub fn cyclic_quotient(alg: &Alg, j: usize) -> Result<Module> {
    check_index(alg, j)?;
    let reg = Module::regular(alg);
    let gen = Matrix::column_vector(alg.base(), &alg.basis_element(j));
    Ok(reg.quotient(&gen)?.0)
}

/// The left ideal `A·e_j`.
pub fn left_ideal(alg: &Alg, j: usize) -> Result<Module> {
    check_index(alg, j)?;
    let reg = Module::regular(alg);
    let gen = Matrix::column_vector(alg.base(), &alg.basis_element(j));
    Ok(reg.submodule(&gen)?.0)
}

/// `R/m` with trivial action, over a group algebra.
pub fn torsion_trivial(alg: &Alg, m: i64) -> Result<Module> {
    if alg.base() != BaseRing::Integers || m < 2 {
        return Err(Error::InvalidInput("torsion_trivial needs base Z and m ≥ 2".into()));
    }
    let z = BaseRing::Integers;
    let one = Matrix::from_i64(z, &[&[1]]);
    let acts = vec![one; alg.rank()];
    Ok(Module::from_presentation(alg, 1, &Matrix::from_i64(z, &[&[m]]), &acts)?.module)
}

/// The simple module `S_i` of the upper triangular algebra on which `e_ii` acts as 1.
pub fn upper_triangular_simple(alg: &Alg, i: usize) -> Result<Module> {
    let n = (0..).find(|k| k * (k + 1) / 2 >= alg.rank()).unwrap_or(0);
    if n * (n + 1) / 2 != alg.rank() || i >= n {
        return Err(Error::InvalidInput("not an upper triangular algebra or index out of range".into()));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let chi: Vec<Scalar> = pairs.iter().map(|&(a, b)| Scalar::from(i64::from(a == i && b == i))).collect();
    Module::from_character(alg, &chi)
}

fn check_index(alg: &Alg, j: usize) -> Result<()> {
    if j >= alg.rank() {
        return Err(Error::InvalidInput(format!("basis index {j} out of range")));
    }
    Ok(())
}

/// Parse a module spec: `regular`, `trivial`, `residue` (alias `k`), `top`, `omega`,
/// `cyclic_quotient:j`, `left_ideal:j`, `simple:i`, `torsion_trivial:m`, `free:k`, and direct
/// sums joined by `+`.
pub fn module_preset(alg: &Alg, spec: &str) -> Result<Module> {
    let parts: Vec<&str> = spec.split('+').map(str::trim).collect();
    if parts.len() > 1 {
        let mods = parts.iter().map(|p| module_preset(alg, p)).collect::<Result<Vec<_>>>()?;
        return Ok(Module::direct_sum(&mods)?.module);
    }
    let fields: Vec<&str> = spec.split(':').collect();
    let num = |i: usize| -> Result<usize> {
        fields
            .get(i)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::InvalidInput(format!("module spec {spec} needs an index")))
    };
    match fields[0] {
        "regular" | "A" => Ok(Module::regular(alg)),
        "free" => Ok(Module::free(alg, num(1)?)),
        "trivial" => trivial(alg),
        "residue" | "k" => residue(alg),
        "top" => Ok(crate::homological::top(&Module::regular(alg))?.0),
        "omega" => Bimodule::dualizing(alg)?.left_module(),
        "cyclic_quotient" => cyclic_quotient(alg, num(1)?),
        "left_ideal" => left_ideal(alg, num(1)?),
        "simple" => upper_triangular_simple(alg, num(1)?),
        "torsion_trivial" => torsion_trivial(alg, num(1)? as i64),
        other => Err(Error::InvalidInput(format!("unknown module {other}"))),
    }
}
