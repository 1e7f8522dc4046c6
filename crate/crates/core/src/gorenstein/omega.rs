use crate::algebra::{Alg, Bimodule, Module, ModuleMap};
use crate::error::{Error, Result};
use crate::linear::Matrix;
use crate::homological::{homology, is_perfect_both_sides, is_projective, ChainComplex, FinitenessVerdict, Resolution};

/// `ω = Hom_R(A, R)` with its structure checked.
#[derive(Clone, Debug)]
pub struct DualizingBimodule {
    pub bimodule: Bimodule,
    /// `Hom_R(ω, R) ≅ A` holds on the nose in the dual of the dual basis.
    pub biduality_verified: bool,
}

pub fn dualizing_bimodule(a: &Alg) -> Result<DualizingBimodule> {
    let w = Bimodule::dualizing(a)?;
    let dual = w.left_module()?.dual_over_base()?;
    let reg = Module::regular(&a.opposite());
    let biduality_verified = dual.acts() == reg.acts() && dual.normal_form() == reg.normal_form();
    Ok(DualizingBimodule { bimodule: w, biduality_verified })
}

/// A bounded complex of bimodules, projective on both sides, resolving `ω`: terms in
/// degrees `-length..=0`.
#[derive(Clone, Debug)]
pub struct OmegaHat {
    pub alg: Alg,
    /// `terms[j]` sits in degree `-j`.
    pub terms: Vec<Bimodule>,
    /// `diffs[j]: terms[j+1] → terms[j]` as maps of `A^e`-modules.
    pub diffs: Vec<ModuleMap>,
    /// `terms[0] → ω`.
    pub augmentation: ModuleMap,
    pub omega: Bimodule,
    pub left: FinitenessVerdict,
    pub right: FinitenessVerdict,
}

impl OmegaHat {
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    /// The complex of `A^e`-modules in degrees `-length..=0`.
    pub fn complex(&self) -> Result<ChainComplex> {
        let l = self.length();
        let mods = (0..=l).rev().map(|j| self.terms[j].env_module().clone()).collect();
        let diffs = (0..l).rev().map(|j| self.diffs[j].clone()).collect();
        ChainComplex::new(-(l as i64), mods, diffs)
    }

    /// Exactness in negative degrees, surjectivity of the augmentation onto `ω` with kernel
    /// the image of `d`, and projectivity of every term on each side.
    pub fn verify(&self) -> Result<bool> {
        let c = self.complex()?;
        for i in c.lo()..0 {
            if !c.is_exact_at(i)? {
                return Ok(false);
            }
        }
        if !self.augmentation.is_surjective()? {
            return Ok(false);
        }
        let t0 = self.terms[0].env_module();
        let incoming = match self.diffs.first() {
            Some(d) => d.matrix().clone(),
            None => Matrix::zeros(t0.base(), t0.dim(), 0),
        };
        let h0 = homology(t0.base(), &incoming, &t0.relations(), self.augmentation.matrix(), &self.omega.env_module().relations())?;
        if !h0.normal_form().is_zero() {
            return Ok(false);
        }
        for t in &self.terms {
            if !is_projective(&t.left_module()?)? || !is_projective(&t.right_module()?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Truncate an `A^e`-resolution of `ω` at `L = max(pd_A ω, pd_{A^op} ω)`, ending in `Ω^L`.
pub fn omega_hat(a: &Alg, depth: usize) -> Result<OmegaHat> {
    let w = Bimodule::dualizing(a)?;
    let (left, right) = is_perfect_both_sides(&w, depth)?;
    let (Some(dl), Some(dr)) = (left.finite(), right.finite()) else {
        let bad = if left.finite().is_none() { &left } else { &right };
        return Err(Error::NotCertified {
            depth,
            reason: format!("ω is not certified perfect on both sides: {bad}"),
        });
    };
    let l = dl.max(dr);
    let env = w.env_module().clone();
    if l == 0 {
        return Ok(OmegaHat {
            alg: a.clone(),
            terms: vec![w.clone()],
            diffs: Vec::new(),
            augmentation: ModuleMap::identity(&env),
            omega: w,
            left,
            right,
        });
    }
    let mut res = Resolution::new(&env);
    res.extend_to(l - 1)?;
    let mut terms = Vec::with_capacity(l + 1);
    for j in 0..l {
        terms.push(Bimodule::from_env_module(a, a, res.term(j).clone())?);
    }
    terms.push(Bimodule::from_env_module(a, a, res.syzygy(l).clone())?);
    let mut diffs: Vec<ModuleMap> = (1..l).map(|j| res.differential(j)).collect();
    diffs.push(res.syzygy_inclusion(l).clone());
    Ok(OmegaHat { alg: a.clone(), terms, diffs, augmentation: res.augmentation().clone(), omega: w, left, right })
}
