use super::complex::homology;
use super::graded::GradedGroups;
use super::resolution::Resolution;
use crate::algebra::{HomSpace, Module, TensorSpace};
use crate::error::Result;
use crate::linear::{Matrix, NormalForm, Subquotient};

/// `Hom_A(P_0, N) → Hom_A(P_1, N) → …` for a resolution `P`.
#[derive(Clone, Debug)]
pub struct HomComplex {
    pub spaces: Vec<HomSpace>,
    /// `maps[j]: spaces[j] → spaces[j+1]`, precomposition with `d_{j+1}`.
    pub maps: Vec<Matrix>,
}

impl HomComplex {
    pub fn new(res: &mut Resolution, n: &Module, top: usize) -> Result<HomComplex> {
        res.extend_to(top)?;
        let spaces = (0..=top)
            .map(|j| HomSpace::new(res.term(j), n))
            .collect::<Result<Vec<_>>>()?;
        let mut maps = Vec::with_capacity(top);
        for j in 0..top {
            let d = res.differential(j + 1);
            maps.push(spaces[j].precompose(&spaces[j + 1], d.matrix())?);
        }
        Ok(HomComplex { spaces, maps })
    }

    /// Cohomology in degree `i` (requires `spaces[i+1]` unless it is the last term).
    pub fn cohomology(&self, i: usize) -> Result<Subquotient> {
        let h = &self.spaces[i];
        let base = h.base();
        let rel = h.normal_form().relation_matrix(base);
        let incoming = if i == 0 { Matrix::zeros(base, h.dim(), 0) } else { self.maps[i - 1].clone() };
        let (outgoing, next_rel) = match self.maps.get(i) {
            Some(m) => (m.clone(), self.spaces[i + 1].normal_form().relation_matrix(base)),
            None => (Matrix::zeros(base, 0, h.dim()), Matrix::zeros(base, 0, 0)),
        };
        homology(base, &incoming, &rel, &outgoing, &next_rel)
    }
}

/// `Ext^i_A(M, N)` for `0 ≤ i ≤ max`.
pub fn ext(m: &Module, n: &Module, max: usize) -> Result<GradedGroups> {
    let mut res = Resolution::new(m);
    ext_with(&mut res, n, max)
}

/// As [`ext`], reusing (and extending) a resolution of `M`.
pub fn ext_with(res: &mut Resolution, n: &Module, max: usize) -> Result<GradedGroups> {
    let hc = HomComplex::new(res, n, max + 1)?;
    let mut out = GradedGroups::new(0, max as i64);
    for i in 0..=max {
        out.insert(i as i64, hc.cohomology(i)?.normal_form().clone());
    }
    Ok(out)
}

/// `Tor^A_i(L, M)` for a right module `L` (left over `A^op`) and `0 ≤ i ≤ max`, from a
/// resolution of `M`.
pub fn tor(l: &Module, m: &Module, max: usize) -> Result<GradedGroups> {
    let mut res = Resolution::new(m);
    res.extend_to(max + 1)?;
    let spaces = (0..=max + 1)
        .map(|j| TensorSpace::new(l, res.term(j)))
        .collect::<Result<Vec<_>>>()?;
    let id = Matrix::identity(l.base(), l.dim());
    // maps[j]: T_{j+1} → T_j
    let mut maps = Vec::with_capacity(max + 1);
    for j in 0..=max {
        maps.push(spaces[j + 1].induced_map(&spaces[j], &id, res.differential(j + 1).matrix())?);
    }
    let base = l.base();
    let mut out = GradedGroups::new(0, max as i64);
    for i in 0..=max {
        let t = &spaces[i];
        let rel = t.normal_form().relation_matrix(base);
        let (outgoing, next_rel) = if i == 0 {
            (Matrix::zeros(base, 0, t.dim()), Matrix::zeros(base, 0, 0))
        } else {
            (maps[i - 1].clone(), spaces[i - 1].normal_form().relation_matrix(base))
        };
        let h = homology(base, &maps[i], &rel, &outgoing, &next_rel)?;
        out.insert(i as i64, h.normal_form().clone());
    }
    Ok(out)
}

/// A single `Ext^i` from a resolution.
pub fn ext_degree(res: &mut Resolution, n: &Module, i: usize) -> Result<NormalForm> {
    let hc = HomComplex::new(res, n, i + 1)?;
    Ok(hc.cohomology(i)?.normal_form().clone())
}
