use super::resolution::Resolution;
use crate::algebra::{Module, ModuleMap};
use crate::error::{Error, Result};

/// `0 → M → I^0 → … → I^n` with `I^j = D(Q_j)` for a minimal projective resolution `Q` of
/// `D M` over `A^op`, where `D = Hom_k(−, k)`.
#[derive(Clone, Debug)]
pub struct InjectiveResolution {
    pub terms: Vec<Module>,
    /// `diffs[j]: I^j → I^{j+1}`.
    pub diffs: Vec<ModuleMap>,
    pub coaugmentation: ModuleMap,
}

impl InjectiveResolution {
    /// The least `d` with `I^{d+1} = 0` inside the computed range.
    pub fn finite_length(&self) -> Option<usize> {
        (0..self.terms.len()).find(|&j| self.terms[j].is_zero()).map(|j| j.saturating_sub(1))
    }
}

pub fn injective_resolution_artin(m: &Module, n: usize) -> Result<InjectiveResolution> {
    if !m.base().is_field() {
        return Err(Error::ArtinBaseRequired(
            "injective modules over Z are not finitely generated".into(),
        ));
    }
    let alg = m.alg();
    let dm = m.dual_over_base()?;
    let mut q = Resolution::new(&dm);
    q.extend_to(n + 1)?;
    let terms = (0..=n + 1)
        .map(|j| Ok(q.term(j).dual_over_base()?.over(alg)?.with_side(m.side())))
        .collect::<Result<Vec<_>>>()?;
    let diffs = (0..=n)
        .map(|j| q.differential(j + 1).dual_between(&terms[j], &terms[j + 1]))
        .collect::<Result<Vec<_>>>()?;
    let coaugmentation = q.augmentation().dual_between(m, &terms[0])?;
    Ok(InjectiveResolution { terms, diffs, coaugmentation })
}
