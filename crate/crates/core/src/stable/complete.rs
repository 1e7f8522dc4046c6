use serde::Serialize;

use crate::algebra::{dual_over_algebra, HomSpace, Module, ModuleMap};
use crate::error::{Error, Result};
use crate::homological::{homology, r_map_is_iso, ChainComplex, Resolution};
use crate::linear::{unit_vector, Matrix};

/// `M* = Hom_A(M, A)`, `M** = Hom_{A^op}(M*, A^op)` and the evaluation map `M → M**`.
#[derive(Clone, Debug)]
pub struct Biduality {
    pub dual_hom: HomSpace,
    pub dual: Module,
    pub bidual_hom: HomSpace,
    pub bidual: Module,
    pub eval: ModuleMap,
    pub bijective: bool,
}

pub fn biduality(m: &Module) -> Result<Biduality> {
    let (dual_hom, dual) = dual_over_algebra(m)?;
    let (bidual_hom, bidual) = dual_over_algebra(&dual)?;
    let bidual = bidual.over(m.alg())?;
    let base = m.base();
    let rank = m.alg().rank();
    let fs = dual_hom.basis();
    let mut e = Matrix::zeros(base, bidual.dim(), m.dim());
    for j in 0..m.dim() {
        let mut phi = Matrix::zeros(base, rank, dual.dim());
        for (c, f) in fs.iter().enumerate() {
            for (r, v) in f.apply(&unit_vector(m.dim(), j)).into_iter().enumerate() {
                phi.set(r, c, v);
            }
        }
        for (r, v) in bidual_hom.coords_of(&phi)?.into_iter().enumerate() {
            e.set(r, j, v);
        }
    }
    let bijective = r_map_is_iso(&e, m.normal_form(), bidual.normal_form())?;
    let eval = ModuleMap::new(m, &bidual, e)?;
    Ok(Biduality { dual_hom, dual, bidual_hom, bidual, eval, bijective })
}

/// A two-sided complex of projectives through `M`: `X^{-j} = P_j` from a resolution of `M`,
/// `X^{j+1} = Q_j^*` from a resolution `Q` of `M*` over `A^op`, spliced by
/// `P_0 ↠ M → M** ↪ Q_0^*`. `M` is the cokernel of `X^{-1} → X^0`. The window grows on demand.
#[derive(Clone, Debug)]
pub struct CompleteResolution {
    module: Module,
    right: Resolution,
    left: Resolution,
    bidual: Biduality,
    dual_homs: Vec<HomSpace>,
    dual_terms: Vec<Module>,
    dual_diffs: Vec<ModuleMap>,
    splice: ModuleMap,
}

impl CompleteResolution {
    /// Build the degrees `-1..=1`; exactness is not assumed (see [`CompleteResolution::verify`]).
    pub fn new(m: &Module) -> Result<CompleteResolution> {
        let bid = biduality(m)?;
        let mut right = Resolution::new(m);
        right.extend_to(1)?;
        let mut left = Resolution::new(&bid.dual);
        left.extend_to(0)?;
        let (h0, q0) = dual_over_algebra(left.term(0))?;
        let q0 = q0.over(m.alg())?;
        // ε*: M** → Q_0^*, f ↦ f∘ε
        let eps = left.augmentation().matrix().clone();
        let eps_star = bid.bidual_hom.precompose(&h0, &eps)?;
        let d0 = eps_star.mul(bid.eval.matrix()).mul(right.augmentation().matrix());
        let splice = ModuleMap::new(right.term(0), &q0, d0)?;
        Ok(CompleteResolution {
            module: m.clone(),
            right,
            left,
            bidual: bid,
            dual_homs: vec![h0],
            dual_terms: vec![q0],
            dual_diffs: Vec::new(),
            splice,
        })
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn biduality(&self) -> &Biduality {
        &self.bidual
    }

    /// `X^0 = P_0 ↠ M`.
    pub fn augmentation(&self) -> &ModuleMap {
        self.right.augmentation()
    }

    /// Make degrees `lo..=hi` available.
    pub fn ensure(&mut self, lo: i64, hi: i64) -> Result<()> {
        if lo < 0 {
            self.right.extend_to((-lo) as usize)?;
        }
        while (self.dual_terms.len() as i64) < hi + 1 {
            let j = self.dual_terms.len();
            self.left.extend_to(j)?;
            let (h, q) = dual_over_algebra(self.left.term(j))?;
            let q = q.over(self.module.alg())?;
            let d = self.dual_homs[j - 1].precompose(&h, self.left.differential(j).matrix())?;
            self.dual_diffs.push(ModuleMap::new(&self.dual_terms[j - 1], &q, d)?);
            self.dual_homs.push(h);
            self.dual_terms.push(q);
        }
        Ok(())
    }

    /// `X^i`; call [`CompleteResolution::ensure`] first.
    pub fn term(&self, i: i64) -> &Module {
        if i <= 0 {
            self.right.term((-i) as usize)
        } else {
            &self.dual_terms[(i - 1) as usize]
        }
    }

    /// `d^i: X^i → X^{i+1}`.
    pub fn differential(&self, i: i64) -> ModuleMap {
        match i {
            i if i < 0 => self.right.differential((-i) as usize),
            0 => self.splice.clone(),
            i => self.dual_diffs[(i - 1) as usize].clone(),
        }
    }

    pub fn complex(&mut self, lo: i64, hi: i64) -> Result<ChainComplex> {
        if lo > hi {
            return Err(Error::InvalidInput(format!("empty window {lo}..{hi}")));
        }
        self.ensure(lo, hi)?;
        let mods = (lo..=hi).map(|i| self.term(i).clone()).collect();
        let diffs = (lo..hi).map(|i| self.differential(i)).collect();
        ChainComplex::new(lo, mods, diffs)
    }

    /// `Ω^i M` for any integer `i`: the cokernel of `X^{-i-1} → X^{-i}`.
    pub fn syzygy(&mut self, i: i64) -> Result<Module> {
        if i == 0 {
            return Ok(self.module.clone());
        }
        if i > 0 {
            self.right.extend_to(i as usize)?;
            return Ok(self.right.syzygy(i as usize).clone());
        }
        self.ensure(0, -i)?;
        Ok(self.differential(-i - 1).cokernel()?.0)
    }

    /// Interior exactness and total acyclicity on `lo..=hi`.
    pub fn verify(&mut self, lo: i64, hi: i64) -> Result<AcyclicityReport> {
        let c = self.complex(lo, hi)?;
        total_acyclicity_probe(&c)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AcyclicityReport {
    pub lo: i64,
    pub hi: i64,
    pub projective_terms: bool,
    /// Interior degrees where the complex is not exact.
    pub not_exact: Vec<i64>,
    /// Interior degrees where `Hom_A(X, A)` is not exact.
    pub hom_not_exact: Vec<i64>,
    pub passed: bool,
}

/// Exactness of `X` and of `Hom_A(X, A)` at every interior degree of the window.
pub fn total_acyclicity_probe(x: &ChainComplex) -> Result<AcyclicityReport> {
    let (lo, hi) = (x.lo(), x.hi());
    let mut projective_terms = true;
    for m in x.modules() {
        projective_terms &= crate::homological::is_projective(m)?;
    }
    let mut not_exact = Vec::new();
    for i in lo + 1..hi {
        if !x.is_exact_at(i)? {
            not_exact.push(i);
        }
    }
    let alg = x.modules()[0].alg().clone();
    let reg = Module::regular(&alg);
    let homs = x.modules().iter().map(|m| HomSpace::new(m, &reg)).collect::<Result<Vec<_>>>()?;
    // Hom(X^{i+1}, A) → Hom(X^i, A)
    let maps = (lo..hi)
        .map(|i| {
            let k = (i - lo) as usize;
            homs[k + 1].precompose(&homs[k], x.differential(i).expect("in window").matrix())
        })
        .collect::<Result<Vec<_>>>()?;
    let mut hom_not_exact = Vec::new();
    let base = alg.base();
    for i in lo + 1..hi {
        let k = (i - lo) as usize;
        let h = homology(
            base,
            &maps[k],
            &homs[k].normal_form().relation_matrix(base),
            &maps[k - 1],
            &homs[k - 1].normal_form().relation_matrix(base),
        )?;
        if !h.normal_form().is_zero() {
            hom_not_exact.push(i);
        }
    }
    let passed = projective_terms && not_exact.is_empty() && hom_not_exact.is_empty();
    Ok(AcyclicityReport { lo, hi, projective_terms, not_exact, hom_not_exact, passed })
}
