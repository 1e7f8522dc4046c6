use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::hom::HomSpace;
use super::module::{Module, ModuleMap};
use crate::error::Result;
use crate::linear::{BaseRing, Scalar};

/// Exhaustive search is used over `F_p` when `|Hom| ≤ 2^16`.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 16;
/// Random trials otherwise.
pub const RANDOM_TRIALS: usize = 64;
pub const DEFAULT_SEED: u64 = 0x5eed_0f15;

/// Outcome of [`module_iso`].
#[derive(Clone, Debug)]
pub enum IsoOutcome {
    /// A verified isomorphism and its verified inverse.
    Iso { forward: ModuleMap, backward: ModuleMap },
    /// Invariants differ, or the search was exhaustive.
    NonIsomorphic { reason: String },
    /// Bounded random search failed.
    NotFound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IsoStatus {
    Isomorphic,
    CertifiedNonIsomorphic,
    NotFoundProbabilistic,
}

impl IsoOutcome {
    pub fn status(&self) -> IsoStatus {
        match self {
            IsoOutcome::Iso { .. } => IsoStatus::Isomorphic,
            IsoOutcome::NonIsomorphic { .. } => IsoStatus::CertifiedNonIsomorphic,
            IsoOutcome::NotFound => IsoStatus::NotFoundProbabilistic,
        }
    }

    pub fn is_iso(&self) -> bool {
        matches!(self, IsoOutcome::Iso { .. })
    }

    pub fn witness(&self) -> Option<&ModuleMap> {
        match self {
            IsoOutcome::Iso { forward, .. } => Some(forward),
            _ => None,
        }
    }
}

/// Search for an isomorphism `M → N`.
pub fn module_iso(m: &Module, n: &Module) -> Result<IsoOutcome> {
    module_iso_seeded(m, n, DEFAULT_SEED)
}

pub fn module_iso_seeded(m: &Module, n: &Module, seed: u64) -> Result<IsoOutcome> {
    if m.normal_form() != n.normal_form() {
        return Ok(IsoOutcome::NonIsomorphic {
            reason: format!("underlying modules differ: {} vs {}", m.normal_form(), n.normal_form()),
        });
    }
    if m.is_zero() {
        return Ok(IsoOutcome::Iso { forward: ModuleMap::zero(m, n), backward: ModuleMap::zero(n, m) });
    }
    let h = HomSpace::new(m, n)?;
    if h.is_zero() {
        return Ok(IsoOutcome::NonIsomorphic { reason: "Hom(M, N) = 0".into() });
    }
    let try_map = |f: ModuleMap| -> Result<Option<IsoOutcome>> {
        if let Some(g) = f.inverse()? {
            verify_pair(&f, &g);
            return Ok(Some(IsoOutcome::Iso { forward: f, backward: g }));
        }
        Ok(None)
    };
    let d = h.dim();
    for f in h.basis() {
        if let Some(out) = try_map(f)? {
            return Ok(out);
        }
    }
    if let BaseRing::PrimeField(p) = m.base() {
        let exhaustive = (p as f64).powi(d as i32) <= EXHAUSTIVE_LIMIT as f64;
        if exhaustive {
            let total = p.pow(d as u32);
            for code in 1..total {
                let mut c = Vec::with_capacity(d);
                let mut x = code;
                for _ in 0..d {
                    c.push(Scalar::from((x % p) as i64));
                    x /= p;
                }
                if let Some(out) = try_map(h.map(&c))? {
                    return Ok(out);
                }
            }
            return Ok(IsoOutcome::NonIsomorphic {
                reason: format!("exhaustive search over {total} elements of Hom(M, N)"),
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TRIALS {
        let c: Vec<Scalar> = (0..d).map(|_| Scalar::from(rng.gen_range(-4i64..=4))).collect();
        if let Some(out) = try_map(h.map(&c))? {
            return Ok(out);
        }
    }
    Ok(IsoOutcome::NotFound)
}

fn verify_pair(f: &ModuleMap, g: &ModuleMap) {
    let gf = g.after(f).expect("composable");
    let fg = f.after(g).expect("composable");
    assert!(gf.same_as(&ModuleMap::identity(f.source())), "inverse fails on the source");
    assert!(fg.same_as(&ModuleMap::identity(f.target())), "inverse fails on the target");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presets::{cyclic_group_algebra, truncated_poly};
    use crate::algebra::Bimodule;

    #[test]
    fn omega_is_free_for_group_algebras() {
        let a = cyclic_group_algebra(3, BaseRing::Rationals).unwrap();
        let w = Bimodule::dualizing(&a).unwrap().left_module().unwrap();
        let out = module_iso(&w, &Module::regular(&a)).unwrap();
        assert!(out.is_iso());
    }

    #[test]
    fn dimension_mismatch_is_certified() {
        let a = truncated_poly(2, BaseRing::Rationals).unwrap();
        let k = Module::from_character(&a, &[Scalar::one(), Scalar::zero()]).unwrap();
        let k2 = Module::direct_sum(&[k.clone(), k.clone()]).unwrap().module;
        assert_eq!(module_iso(&k, &k2).unwrap().status(), IsoStatus::CertifiedNonIsomorphic);
        assert!(module_iso(&k, &k).unwrap().is_iso());
        // A vs k ⊕ k: same dimension, not isomorphic; over F_2 the search is exhaustive
        let a2 = truncated_poly(2, BaseRing::PrimeField(2)).unwrap();
        let k = Module::from_character(&a2, &[Scalar::one(), Scalar::zero()]).unwrap();
        let k2 = Module::direct_sum(&[k.clone(), k]).unwrap().module;
        let out = module_iso(&Module::regular(&a2), &k2).unwrap();
        assert_eq!(out.status(), IsoStatus::CertifiedNonIsomorphic);
    }
}
