use super::complex::ChainComplex;
use super::cover::{projective_cover, Cover};
use crate::algebra::{Module, ModuleMap};
use crate::error::Result;

/// A projective resolution `… → P_1 → P_0 → M`, extended on demand.
///
/// `syzygy(0) = M`, `syzygy(j+1) = ker(P_j → syzygy(j))`.
#[derive(Clone, Debug)]
pub struct Resolution {
    covers: Vec<Cover>,
    syzygies: Vec<Module>,
    inclusions: Vec<ModuleMap>,
}

impl Resolution {
    pub fn new(m: &Module) -> Resolution {
        Resolution { covers: Vec::new(), syzygies: vec![m.clone()], inclusions: Vec::new() }
    }

    /// Make sure `P_0, …, P_n` and `Ω^{n+1}` exist.
    pub fn extend_to(&mut self, n: usize) -> Result<()> {
        while self.covers.len() <= n {
            let j = self.covers.len();
            let cover = projective_cover(&self.syzygies[j])?;
            let (k, incl) = cover.map.kernel()?;
            self.syzygies.push(k);
            self.inclusions.push(incl);
            self.covers.push(cover);
        }
        Ok(())
    }

    pub fn module(&self) -> &Module {
        &self.syzygies[0]
    }

    /// Number of computed terms `P_0 … P_{len-1}`.
    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    pub fn term(&self, j: usize) -> &Module {
        &self.covers[j].projective
    }

    pub fn augmentation(&self) -> &ModuleMap {
        &self.covers[0].map
    }

    /// `P_j → Ω^j`.
    pub fn cover(&self, j: usize) -> &ModuleMap {
        &self.covers[j].map
    }

    /// `d_j: P_j → P_{j-1}` for `j ≥ 1`.
    pub fn differential(&self, j: usize) -> ModuleMap {
        assert!(j >= 1, "d_0 is the augmentation");
        self.inclusions[j - 1].after(&self.covers[j].map).expect("composable")
    }

    pub fn syzygy(&self, j: usize) -> &Module {
        &self.syzygies[j]
    }

    /// `Ω^{j} → P_{j-1}` for `j ≥ 1`.
    pub fn syzygy_inclusion(&self, j: usize) -> &ModuleMap {
        &self.inclusions[j - 1]
    }

    /// Length of the resolution if it is finite within the computed range: the least `d`
    /// with `Ω^{d+1} = 0`.
    pub fn finite_length(&self) -> Option<usize> {
        (1..self.syzygies.len()).find(|&j| self.syzygies[j].is_zero()).map(|j| j - 1)
    }

    /// The complex `P_n → … → P_0` in degrees `-n..0`.
    pub fn to_complex(&self, n: usize) -> Result<ChainComplex> {
        let mods: Vec<Module> = (0..=n).rev().map(|j| self.term(j).clone()).collect();
        let diffs: Vec<ModuleMap> = (1..=n).rev().map(|j| self.differential(j)).collect();
        ChainComplex::new(-(n as i64), mods, diffs)
    }

    /// Exactness of `P_n → … → P_0 → M → 0`, checked from ranks and normal forms.
    pub fn verify_exact(&self, n: usize) -> Result<bool> {
        if !self.augmentation().is_surjective()? {
            return Ok(false);
        }
        let c = self.to_complex(n)?;
        for i in (-(n as i64) + 1)..0 {
            if !c.is_exact_at(i)? {
                return Ok(false);
            }
        }
        let p0 = self.term(0);
        let incoming = if n >= 1 {
            self.differential(1).matrix().clone()
        } else {
            crate::linear::Matrix::zeros(p0.base(), p0.dim(), 0)
        };
        let aug = self.augmentation();
        let h = super::complex::homology(p0.base(), &incoming, &p0.relations(), aug.matrix(), &aug.target().relations())?;
        if n >= 1 && !h.normal_form().is_zero() {
            return Ok(false);
        }
        Ok(true)
    }
}

/// Projective resolution of length `n` (terms `P_0 … P_n`).
pub fn projective_resolution(m: &Module, n: usize) -> Result<Resolution> {
    let mut r = Resolution::new(m);
    r.extend_to(n)?;
    Ok(r)
}

/// `Ω^i M`.
pub fn syzygy(m: &Module, i: usize) -> Result<Module> {
    if i == 0 {
        return Ok(m.clone());
    }
    let r = projective_resolution(m, i - 1)?;
    Ok(r.syzygy(i).clone())
}
