//! JSON files for algebras and modules. Scalars are decimal strings, rationals `"p/q"`.
//!
//! ```json
//! {"base": "Q", "rank": 2, "unit": ["1", "0"], "mult": [[["1","0"],["0","1"]], [["0","1"],["0","0"]]]}
//! {"algebra": "dual.json", "side": "left", "generators": 1, "relations": [],
//!  "action": {"0": [["1"]], "1": [["0"]]}}
//! ```
//!
//! `mult[i][j]` holds the coordinates of `e_i·e_j`. Each entry of `relations` is one relation,
//! a vector of length `generators`. `action[i]` is the matrix of `e_i` on the generators: column
//! `j` is the image of generator `j`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::finite::{Alg, FiniteAlgebra};
use super::module::{Module, Side};
use super::named::module_preset;
use super::presets::preset;
use crate::error::{Error, Result};
use crate::linear::{BaseRing, Matrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BaseSpec {
    Named(String),
    Prime {
        #[serde(rename = "Fp")]
        p: u64,
    },
}

impl BaseSpec {
    pub fn ring(&self) -> Result<BaseRing> {
        match self {
            BaseSpec::Named(s) if s == "Q" => Ok(BaseRing::Rationals),
            BaseSpec::Named(s) if s == "Z" => Ok(BaseRing::Integers),
            BaseSpec::Named(s) => Err(Error::InvalidInput(format!("base must be \"Q\", \"Z\" or {{\"Fp\": p}}, got {s:?}"))),
            BaseSpec::Prime { p } => BaseRing::prime_field(*p),
        }
    }

    pub fn of(base: BaseRing) -> BaseSpec {
        match base {
            BaseRing::Rationals => BaseSpec::Named("Q".into()),
            BaseRing::Integers => BaseSpec::Named("Z".into()),
            BaseRing::PrimeField(p) => BaseSpec::Prime { p },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub base: BaseSpec,
    pub rank: usize,
    pub unit: Vec<Scalar>,
    pub mult: Vec<Vec<Vec<Scalar>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl AlgebraFile {
    pub fn of(a: &FiniteAlgebra) -> AlgebraFile {
        let n = a.rank();
        let mult = (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a.coeff(i, j, k).clone()).collect()).collect()).collect();
        AlgebraFile {
            base: BaseSpec::of(a.base()),
            rank: n,
            unit: a.unit().to_vec(),
            mult,
            name: Some(a.name().to_string()),
        }
    }

    /// Build and validate the algebra.
    pub fn build(&self, fallback_name: &str) -> Result<Alg> {
        let base = self.base.ring()?;
        if self.unit.len() != self.rank {
            return Err(Error::Shape(format!("unit has {} entries, rank is {}", self.unit.len(), self.rank)));
        }
        let name = self.name.clone().unwrap_or_else(|| fallback_name.to_string());
        let a = FiniteAlgebra::new(name, base, self.mult.clone(), self.unit.clone())?;
        let v = a.validate();
        if let Some(f) = v.failures.first() {
            return Err(Error::InvalidInput(format!("{} axiom failures, first: {f}", v.failures.len())));
        }
        Ok(a)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub algebra: String,
    pub side: Side,
    pub generators: usize,
    #[serde(default)]
    pub relations: Vec<Vec<Scalar>>,
    pub action: BTreeMap<String, Vec<Vec<Scalar>>>,
}

impl ModuleFile {
    /// The canonical presentation of `m`; `algebra` is written as given.
    pub fn of(m: &Module, algebra: &str) -> ModuleFile {
        let g = m.dim();
        let rel = m.relations();
        let relations = rel.columns().into_iter().filter(|c| c.iter().any(|x| !x.is_zero())).collect();
        let action = (0..m.alg().rank()).map(|i| (i.to_string(), matrix_rows(m.act(i)))).collect();
        ModuleFile { algebra: algebra.to_string(), side: m.side(), generators: g, relations, action }
    }

    /// Build over `a`; a right module becomes a left module over `A^op`.
    pub fn build(&self, a: &Alg) -> Result<Module> {
        let base = a.base();
        let g = self.generators;
        let alg = match self.side {
            Side::Left => a.clone(),
            Side::Right => a.opposite(),
        };
        let mut act = Vec::with_capacity(alg.rank());
        for i in 0..alg.rank() {
            let rows = self
                .action
                .get(&i.to_string())
                .ok_or_else(|| Error::InvalidInput(format!("action of e{i} is missing")))?;
            act.push(matrix_from_rows(base, rows, g, g, &format!("action of e{i}"))?);
        }
        if let Some(k) = self.action.keys().find(|k| k.parse::<usize>().map_or(true, |i| i >= alg.rank())) {
            return Err(Error::InvalidInput(format!("action key {k:?} is not a basis index")));
        }
        let mut rel = Matrix::zeros(base, g, self.relations.len());
        for (j, r) in self.relations.iter().enumerate() {
            if r.len() != g {
                return Err(Error::Shape(format!("relation {j} has {} entries, expected {g}", r.len())));
            }
            for (i, x) in r.iter().enumerate() {
                rel.set(i, j, checked(base, x)?);
            }
        }
        let m = Module::from_presentation(&alg, g, &rel, &act)?.module;
        m.check()?;
        Ok(m.with_side(self.side))
    }
}

fn checked(base: BaseRing, x: &Scalar) -> Result<Scalar> {
    if base == BaseRing::Integers && !x.is_integer() {
        return Err(Error::InvalidInput(format!("{x} is not an integer")));
    }
    Ok(base.normalize(x))
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<Scalar>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

fn matrix_from_rows(base: BaseRing, rows: &[Vec<Scalar>], r: usize, c: usize, what: &str) -> Result<Matrix> {
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(Error::Shape(format!("{what} must be {r}×{c}")));
    }
    let rows = rows.iter().map(|row| row.iter().map(|x| checked(base, x)).collect()).collect::<Result<_>>()?;
    Ok(Matrix::from_rows(base, rows))
}

fn is_file(spec: &str) -> bool {
    spec.ends_with(".json") || Path::new(spec).is_file()
}

pub fn read_algebra(path: impl AsRef<Path>) -> Result<Alg> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    let file: AlgebraFile = serde_json::from_str(&text)?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("algebra");
    file.build(stem)
}

pub fn write_algebra(a: &FiniteAlgebra, path: impl AsRef<Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(&AlgebraFile::of(a))?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}

/// An algebra from a JSON path or a preset spec such as `cyclic:6:Z`.
pub fn load_algebra(spec: &str) -> Result<Alg> {
    if is_file(spec) {
        read_algebra(spec)
    } else {
        preset(spec)
    }
}

/// Read a module file. Its `algebra` field must name the same algebra as `a`, resolved
/// relative to the module file.
pub fn read_module(a: &Alg, path: impl AsRef<Path>) -> Result<Module> {
    let path = path.as_ref();
    let file: ModuleFile = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    let spec = if is_file(&file.algebra) {
        path.parent().map_or(file.algebra.clone(), |d| d.join(&file.algebra).to_string_lossy().into_owned())
    } else {
        file.algebra.clone()
    };
    let named = load_algebra(&spec)?;
    if *named != **a {
        return Err(Error::AlgebraMismatch(format!("module file is over {}, not {}", named.name(), a.name())));
    }
    file.build(a)
}

pub fn write_module(m: &Module, algebra: &str, path: impl AsRef<Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(&ModuleFile::of(m, algebra))?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}

/// A module from a JSON path or a named spec such as `residue` or `cyclic_quotient:2`.
pub fn load_module(a: &Alg, spec: &str) -> Result<Module> {
    if is_file(spec) {
        read_module(a, spec)
    } else {
        module_preset(a, spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::named::{cyclic_quotient, torsion_trivial};
    use crate::algebra::presets::{cyclic_group_algebra, quantum_exterior, truncated_poly};

    fn tmp(name: &str) -> std::path::PathBuf {
        let d = std::env::temp_dir().join(format!("gorlab-io-{}", std::process::id()));
        std::fs::create_dir_all(&d).unwrap();
        d.join(name)
    }

    #[test]
    fn algebras_round_trip() {
        for a in [
            truncated_poly(3, BaseRing::Rationals).unwrap(),
            cyclic_group_algebra(3, BaseRing::Integers).unwrap(),
            quantum_exterior(&Scalar::fraction(1, 2), BaseRing::Rationals).unwrap(),
            quantum_exterior(&Scalar::from(2), BaseRing::PrimeField(5)).unwrap(),
        ] {
            let p = tmp(&format!("{}.json", a.fingerprint()));
            write_algebra(&a, &p).unwrap();
            let b = load_algebra(p.to_str().unwrap()).unwrap();
            assert!(*a == *b && b.name() == a.name());
        }
    }

    #[test]
    fn scalars_are_strings() {
        let a = quantum_exterior(&Scalar::fraction(1, 2), BaseRing::Rationals).unwrap();
        let v = serde_json::to_value(AlgebraFile::of(&a)).unwrap();
        assert_eq!(v["base"], "Q");
        let leaves: Vec<&serde_json::Value> = v["mult"].as_array().unwrap().iter().flat_map(|r| r.as_array().unwrap()).flat_map(|c| c.as_array().unwrap()).collect();
        assert!(leaves.iter().all(|x| x.is_string()));
        let a = quantum_exterior(&Scalar::fraction(2, 3), BaseRing::Rationals).unwrap();
        assert!(serde_json::to_string(&AlgebraFile::of(&a)).unwrap().contains("/"));
        let f = serde_json::to_value(AlgebraFile::of(&truncated_poly(2, BaseRing::PrimeField(7)).unwrap())).unwrap();
        assert_eq!(f["base"], serde_json::json!({"Fp": 7}));
    }

    #[test]
    fn modules_round_trip() {
        let a = cyclic_group_algebra(2, BaseRing::Integers).unwrap();
        let ap = tmp("c2.json");
        write_algebra(&a, &ap).unwrap();
        let m = torsion_trivial(&a, 6).unwrap();
        let mp = tmp("z6.json");
        write_module(&m, "c2.json", &mp).unwrap();
        let back = load_module(&a, mp.to_str().unwrap()).unwrap();
        assert_eq!(back.normal_form(), m.normal_form());
        assert!(crate::algebra::module_iso(&back, &m).unwrap().is_iso());

        let t = truncated_poly(3, BaseRing::Rationals).unwrap();
        let n = cyclic_quotient(&t, 2).unwrap();
        let mp = tmp("n.json");
        write_module(&n, "truncated_poly:3", &mp).unwrap();
        let back = load_module(&t, mp.to_str().unwrap()).unwrap();
        assert!(crate::algebra::module_iso(&back, &n).unwrap().is_iso());
        // wrong algebra
        assert!(load_module(&truncated_poly(2, BaseRing::Rationals).unwrap(), mp.to_str().unwrap()).is_err());
    }

    #[test]
    fn malformed_input_is_rejected() {
        let bad = r#"{"base": "Q", "rank": 1, "unit": ["1"], "mult": [[["2"]]]}"#;
        let f: AlgebraFile = serde_json::from_str(bad).unwrap();
        assert!(f.build("x").is_err());
        let frac = r#"{"base": "Z", "rank": 1, "unit": ["1"], "mult": [[["1/2"]]]}"#;
        assert!(serde_json::from_str::<AlgebraFile>(frac).unwrap().build("x").is_err());
        assert!(serde_json::from_str::<AlgebraFile>(r#"{"base": "R", "rank": 0, "unit": [], "mult": []}"#)
            .unwrap()
            .build("x")
            .is_err());

        let a = truncated_poly(2, BaseRing::Rationals).unwrap();
        let m: ModuleFile = serde_json::from_str(
            r#"{"algebra": "truncated_poly:2", "side": "left", "generators": 1, "relations": [],
                "action": {"0": [["1"]], "1": [["1"]]}}"#,
        )
        .unwrap();
        // x acting as 1 is not nilpotent
        assert!(m.build(&a).is_err());
    }
}
