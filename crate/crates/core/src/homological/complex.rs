use crate::algebra::{Module, ModuleMap};
use crate::error::{Error, Result};
use crate::linear::{kernel, BaseRing, Matrix, Subquotient};

/// Homology `ker(outgoing) / im(incoming)` at the middle of `X → Y → Z`, where all three are
/// `R`-modules in canonical form given by their relation matrices.
pub fn homology(
    base: BaseRing,
    incoming: &Matrix,
    mid_rel: &Matrix,
    outgoing: &Matrix,
    next_rel: &Matrix,
) -> Result<Subquotient> {
    let g = mid_rel.rows();
    if incoming.rows() != g || outgoing.cols() != g {
        return Err(Error::Shape("homology: maps do not meet".into()));
    }
    let lattice = if outgoing.rows() == 0 {
        Matrix::identity(base, g)
    } else if next_rel.cols() == 0 {
        kernel(outgoing)
    } else {
        let k = kernel(&outgoing.hstack(&next_rel.neg()));
        let rows: Vec<usize> = (0..g).collect();
        k.select_rows(&rows)
    };
    let l0 = incoming.hstack(mid_rel);
    Subquotient::new(&lattice.hstack(&l0), &l0)
}

/// A bounded cochain complex of modules: `modules[k]` sits in degree `lo + k` and
/// `diffs[k]: modules[k] → modules[k+1]`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    lo: i64,
    modules: Vec<Module>,
    diffs: Vec<ModuleMap>,
}

impl ChainComplex {
    pub fn new(lo: i64, modules: Vec<Module>, diffs: Vec<ModuleMap>) -> Result<ChainComplex> {
        if modules.is_empty() || diffs.len() + 1 != modules.len() {
            return Err(Error::Shape("a complex with k terms needs k−1 differentials".into()));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.source().dim() != modules[k].dim() || d.target().dim() != modules[k + 1].dim() {
                return Err(Error::Shape(format!("differential in degree {} has the wrong shape", lo + k as i64)));
            }
        }
        for k in 1..diffs.len() {
            if !diffs[k].after(&diffs[k - 1])?.is_zero() {
                return Err(Error::InvalidInput(format!("d∘d ≠ 0 at degree {}", lo + k as i64)));
            }
        }
        Ok(ChainComplex { lo, modules, diffs })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.modules.len() as i64 - 1
    }

    pub fn module(&self, i: i64) -> Option<&Module> {
        usize::try_from(i - self.lo).ok().and_then(|k| self.modules.get(k))
    }

    /// `d^i: X^i → X^{i+1}`.
    pub fn differential(&self, i: i64) -> Option<&ModuleMap> {
        usize::try_from(i - self.lo).ok().and_then(|k| self.diffs.get(k))
    }

    pub fn modules(&self) -> &[Module] {
        &self.modules
    }

    /// `H^i` as a module; the terms outside the window are zero.
    pub fn cohomology(&self, i: i64) -> Result<Module> {
        let m = self
            .module(i)
            .ok_or_else(|| Error::InvalidInput(format!("degree {i} is outside the complex")))?;
        let base = m.base();
        let rel = m.relations();
        let incoming = match self.differential(i - 1) {
            Some(d) => d.matrix().clone(),
            None => Matrix::zeros(base, m.dim(), 0),
        };
        let (outgoing, next_rel) = match self.differential(i) {
            Some(d) => (d.matrix().clone(), d.target().relations()),
            None => (Matrix::zeros(base, 0, m.dim()), Matrix::zeros(base, 0, 0)),
        };
        let sq = homology(base, &incoming, &rel, &outgoing, &next_rel)?;
        Module::from_subquotient(m.alg(), &sq, m.acts())
    }

    pub fn is_exact_at(&self, i: i64) -> Result<bool> {
        Ok(self.cohomology(i)?.is_zero())
    }
}

/// Whether the `R`-linear map `t` between canonical forms `src → tgt` is bijective.
pub fn r_map_is_iso(t: &Matrix, src: &crate::linear::NormalForm, tgt: &crate::linear::NormalForm) -> Result<bool> {
    let base = t.base();
    let rel_t = tgt.relation_matrix(base);
    let rel_s = src.relation_matrix(base);
    let coker = Subquotient::quotient(base, tgt.generators(), &t.hstack(&rel_t))?;
    if !coker.normal_form().is_zero() {
        return Ok(false);
    }
    let ker = homology(base, &Matrix::zeros(base, src.generators(), 0), &rel_s, t, &rel_t)?;
    Ok(ker.normal_form().is_zero())
}
