use std::fmt;

use serde::Serialize;

use super::cover::is_projective;
use super::resolution::Resolution;
use super::stable_iso::stable_iso;
use crate::algebra::{Bimodule, Module};
use crate::error::Result;

pub const DEFAULT_DEPTH: usize = 12;
const RECURRENCE_SEED: u64 = 0x0d1e_5eed;

/// Data of a syzygy recurrence `Ω^b M ≅ (Ω^a M)^{⊕m}` in the stable category.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Recurrence {
    pub a: usize,
    pub b: usize,
    pub multiplicity: usize,
    /// Number of canonical generators of `Ω^0 … Ω^b`.
    pub syzygy_sizes: Vec<usize>,
    pub obstruction: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FinitenessVerdict {
    /// `Ω^d M` is projective and `Ω^{d-1} M` is not.
    Finite { d: usize, certificate: String },
    /// No syzygy up to `Ω^{bound-1}` is projective and no recurrence was found.
    AtLeast { bound: usize },
    InfiniteCertified { certificate: Recurrence },
}

impl FinitenessVerdict {
    pub fn finite(&self) -> Option<usize> {
        match self {
            FinitenessVerdict::Finite { d, .. } => Some(*d),
            _ => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, FinitenessVerdict::InfiniteCertified { .. })
    }
}

impl fmt::Display for FinitenessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FinitenessVerdict::Finite { d, .. } => write!(f, "Finite({d})"),
            FinitenessVerdict::AtLeast { bound } => write!(f, "AtLeast({bound})"),
            FinitenessVerdict::InfiniteCertified { certificate: c } => write!(
                f,
                "InfiniteCertified(Ω^{} ≅ (Ω^{})^{} stably)",
                c.b, c.a, c.multiplicity
            ),
        }
    }
}

/// Projective dimension of `M`, searching syzygies `Ω^0 … Ω^{depth-1}`.
pub fn proj_dim(m: &Module, depth: usize) -> Result<FinitenessVerdict> {
    let mut res = Resolution::new(m);
    proj_dim_with(&mut res, depth)
}

pub fn proj_dim_with(res: &mut Resolution, depth: usize) -> Result<FinitenessVerdict> {
    for d in 0..depth.max(1) {
        res.extend_to(d)?;
        let om = res.syzygy(d).clone();
        if is_projective(&om)? {
            let method = if om.base().is_field() {
                "minimal projective cover is an isomorphism"
            } else {
                "free cover splits"
            };
            return Ok(FinitenessVerdict::Finite { d, certificate: format!("Ω^{d} is projective: {method}") });
        }
        let db = om.dim();
        for a in (0..d).rev() {
            let oa = res.syzygy(a).clone();
            let da = oa.dim();
            if da == 0 || db % da != 0 {
                continue;
            }
            let mult = db / da;
            let target = oa.power(mult)?;
            if stable_iso(&om, &target, RECURRENCE_SEED)?.is_some() {
                let sizes = (0..=d).map(|j| res.syzygy(j).dim()).collect();
                return Ok(FinitenessVerdict::InfiniteCertified {
                    certificate: Recurrence {
                        a,
                        b: d,
                        multiplicity: mult,
                        syzygy_sizes: sizes,
                        obstruction: format!("Ω^{a} is not projective (its cover has no section)"),
                    },
                });
            }
        }
    }
    Ok(FinitenessVerdict::AtLeast { bound: depth })
}

/// Recompute a recurrence certificate from scratch.
pub fn verify_recurrence(m: &Module, cert: &Recurrence) -> Result<bool> {
    let mut res = Resolution::new(m);
    res.extend_to(cert.b)?;
    let oa = res.syzygy(cert.a).clone();
    if is_projective(&oa)? {
        return Ok(false);
    }
    let target = oa.power(cert.multiplicity)?;
    Ok(stable_iso(res.syzygy(cert.b), &target, RECURRENCE_SEED)?.is_some())
}

/// Projective dimension of a bimodule as a left `A`-module and as a right `A`-module.
pub fn is_perfect_both_sides(b: &Bimodule, depth: usize) -> Result<(FinitenessVerdict, FinitenessVerdict)> {
    Ok((proj_dim(&b.left_module()?, depth)?, proj_dim(&b.right_module()?, depth)?))
}
