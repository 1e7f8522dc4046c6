use serde::Serialize;

use crate::algebra::{Bimodule, HomSpace, Module, TensorSpace};
use crate::error::Result;
use crate::homological::r_map_is_iso;
use crate::linear::{Matrix, NormalForm};

/// `Hom_A(ω, M)` with the left action `(a·f)(x) = f(x·a)`.
pub fn nakayama(m: &Module) -> Result<Module> {
    let w = Bimodule::dualizing(m.alg())?;
    Ok(nakayama_with(&w, m)?.1)
}

pub fn nakayama_with(w: &Bimodule, m: &Module) -> Result<(HomSpace, Module)> {
    let hs = HomSpace::new(&w.left_module()?, m)?;
    let module = hs.module_by_precompose(m.alg(), w.racts())?;
    Ok((hs, module))
}

/// `ω ⊗_A M` with the left action of `ω`.
pub fn conakayama(m: &Module) -> Result<Module> {
    let w = Bimodule::dualizing(m.alg())?;
    Ok(conakayama_with(&w, m)?.1)
}

pub fn conakayama_with(w: &Bimodule, m: &Module) -> Result<(TensorSpace, Module)> {
    let t = TensorSpace::new(&w.right_module()?, m)?;
    let module = t.module_by_left(m.alg(), w.lacts())?;
    Ok((t, module))
}

#[derive(Clone, Debug, Serialize)]
pub struct AdjunctionReport {
    pub lhs: NormalForm,
    pub rhs: NormalForm,
    /// The natural map `Hom(ω⊗M, N) → Hom(M, Hom(ω, N))` is bijective.
    pub natural_iso: bool,
}

/// Check `Hom_A(ω ⊗_A M, N) ≅ Hom_A(M, Hom_A(ω, N))` through the explicit natural map
/// `f ↦ (m ↦ (w ↦ f(w ⊗ m)))`.
pub fn adjunction_check(m: &Module, n: &Module) -> Result<AdjunctionReport> {
    let w = Bimodule::dualizing(m.alg())?;
    let (t, cm) = conakayama_with(&w, m)?;
    let (hw, nn) = nakayama_with(&w, n)?;
    let h1 = HomSpace::new(&cm, n)?;
    let h2 = HomSpace::new(m, &nn)?;
    let base = m.base();
    let rank = m.alg().rank();
    let mut cols = Matrix::zeros(base, h2.dim(), h1.dim());
    for (l, f) in h1.basis().iter().enumerate() {
        let mut phi = Matrix::zeros(base, nn.dim(), m.dim());
        for j in 0..m.dim() {
            let mut wj = Matrix::zeros(base, n.dim(), rank);
            for wi in 0..rank {
                let class = t.pure(&crate::linear::unit_vector(rank, wi), &crate::linear::unit_vector(m.dim(), j));
                for (r, v) in f.apply(&class).into_iter().enumerate() {
                    wj.set(r, wi, v);
                }
            }
            for (r, v) in hw.coords_of(&wj)?.into_iter().enumerate() {
                phi.set(r, j, v);
            }
        }
        for (r, v) in h2.coords_of(&phi)?.into_iter().enumerate() {
            cols.set(r, l, v);
        }
    }
    let natural_iso = r_map_is_iso(&cols, h1.normal_form(), h2.normal_form())?;
    Ok(AdjunctionReport { lhs: h1.normal_form().clone(), rhs: h2.normal_form().clone(), natural_iso })
}
