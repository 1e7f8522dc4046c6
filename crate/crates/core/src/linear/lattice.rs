//! Lattices in `R^n`, subquotients `L/L0` and module normal forms.
//!
//! Every finitely generated module in the crate is eventually described as a subquotient of
//! some coordinate space: Hom spaces, kernels, cokernels and homology all go through
//! [`Subquotient`], which produces a canonical generating set (torsion generators first,
//! then free ones) and a coordinate map.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::lll::{height, lll_reduce};
use super::smith::smith_decompose;
use super::solve::{column_hermite, rref};
use super::{BaseRing, Matrix, Scalar};
use crate::error::{Error, Result};

/// Normal form of a finitely generated module over the base ring.
///
/// Also used as the canonical presentation of a module: generators `0..t` carry the
/// relations `d_i·x_i = 0`, generators `t..t+free_rank` are free.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalForm {
    /// Free rank over `Z`; dimension over a field.
    pub free_rank: usize,
    /// Invariant factors `d_1 | d_2 | …`, each ≥ 2 (always empty over a field).
    pub torsion: Vec<Scalar>,
}

impl NormalForm {
    pub fn zero() -> Self {
        NormalForm { free_rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        NormalForm { free_rank: rank, torsion: Vec::new() }
    }

    pub fn torsion(factors: &[i64]) -> Self {
        NormalForm { free_rank: 0, torsion: factors.iter().map(|&d| Scalar::from(d)).collect() }
    }

    pub fn generators(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Invariant factors as machine integers (panics on huge factors).
    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion.iter().map(|d| d.numer().to_u64().expect("factor")).collect()
    }

    /// Order of a finite module, `None` when there is a free part.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().fold(BigInt::from(1), |acc, d| acc * d.numer()))
    }

    pub fn direct_sum(&self, other: &NormalForm) -> NormalForm {
        let factors: Vec<Scalar> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        NormalForm { free_rank: self.free_rank + other.free_rank, torsion: merge_factors(factors) }
    }

    /// Relation matrix of the canonical presentation (generators × torsion relations).
    pub fn relation_matrix(&self, base: BaseRing) -> Matrix {
        let g = self.generators();
        let mut m = Matrix::zeros(base, g, self.torsion.len());
        for (i, d) in self.torsion.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    /// Reduce torsion coordinates of an element into `0..d_i`.
    pub fn reduce(&self, v: &mut [Scalar]) {
        for (x, d) in v.iter_mut().zip(&self.torsion) {
            *x = x.mod_floor(d);
        }
    }

    /// Whether `v` lies in the relation lattice (represents zero).
    pub fn is_zero_element(&self, v: &[Scalar]) -> bool {
        let t = self.torsion.len();
        v[..t].iter().zip(&self.torsion).all(|(x, d)| x.mod_floor(d).is_zero())
            && v[t..].iter().all(Scalar::is_zero)
    }

    /// Whether every column of `m` lies in the relation lattice.
    /// Row moduli for `vec(F)` (column-major) of a matrix with `cols` columns whose rows are
    /// coordinates in this module.
    pub fn vec_moduli(&self, cols: usize) -> Vec<Option<Scalar>> {
        let g = self.generators();
        (0..g * cols).map(|k| self.torsion.get(k % g).cloned()).collect()
    }

    pub fn is_zero_matrix(&self, m: &Matrix) -> bool {
        (0..m.cols()).all(|j| self.is_zero_element(&m.column(j)))
    }
}

/// Smith-normalize a list of torsion orders into a divisibility chain without units.
pub fn merge_factors(factors: Vec<Scalar>) -> Vec<Scalar> {
    if factors.len() <= 1 {
        return factors.into_iter().filter(|d| !d.abs().is_one()).map(|d| d.abs()).collect();
    }
    let n = factors.len();
    let mut d = Matrix::zeros(BaseRing::Integers, n, n);
    for (i, f) in factors.into_iter().enumerate() {
        d.set(i, i, f);
    }
    smith_decompose(&d).invariant_factors()
}

impl std::fmt::Display for NormalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("R".into()),
            r => parts.push(format!("R^{r}")),
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Normal form of `coker(m)` where `m` maps `R^cols → R^rows`.
pub fn cokernel_invariants(m: &Matrix) -> NormalForm {
    let s = smith_decompose(m);
    if m.base().is_field() {
        return NormalForm::free(m.rows() - s.rank());
    }
    NormalForm { free_rank: m.rows() - s.rank(), torsion: s.invariant_factors() }
}

/// A lattice (or subspace) given by a basis in column echelon form.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    /// Echelon basis of the span of the columns of `gens`.
    pub fn span(gens: &Matrix) -> Self {
        if gens.base().is_field() {
            let (r, pivots) = rref(&gens.transpose());
            let rows: Vec<usize> = (0..pivots.len()).collect();
            return EchelonBasis { basis: r.select_rows(&rows).transpose(), pivots };
        }
        let (h, _, pivots) = column_hermite(gens);
        let idx: Vec<usize> = (0..pivots.len()).collect();
        EchelonBasis { basis: h.select_columns(&idx), pivots }
    }

    pub fn full(base: BaseRing, n: usize) -> Self {
        EchelonBasis { basis: Matrix::identity(base, n), pivots: (0..n).collect() }
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows()
    }

    /// Coordinates of `x` in the basis, or `None` if `x` is not in the lattice.
    pub fn coords(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        let base = self.basis.base();
        let r = self.rank();
        let mut y: Vec<Scalar> = Vec::with_capacity(r);
        for k in 0..r {
            let i = self.pivots[k];
            let mut v = x[i].clone();
            for (j, yj) in y.iter().enumerate() {
                let b = self.basis.get(i, j);
                if !b.is_zero() && !yj.is_zero() {
                    v = base.sub(&v, &base.mul(b, yj));
                }
            }
            let p = self.basis.get(i, k);
            if base.is_field() {
                y.push(base.mul(&v, &base.inv(p)));
            } else {
                if !v.mod_floor(p).is_zero() {
                    return None;
                }
                y.push(v.div_floor(p));
            }
        }
        if self.basis.mul_vec(&y) != x.iter().map(|s| base.normalize(s)).collect::<Vec<_>>() {
            return None;
        }
        Some(y)
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        self.coords(x).is_some()
    }
}

/// The subquotient `L/L0` of a coordinate space, with canonical generators.
#[derive(Clone, Debug)]
pub struct Subquotient {
    lattice: EchelonBasis,
    u: Matrix,
    keep: Vec<usize>,
    reps: Matrix,
    nf: NormalForm,
    /// Inverse of the unimodular change applied to the free generators, if any.
    free_t_inv: Option<Matrix>,
}

impl Subquotient {
    /// `L` spanned by the columns of `l_gens`, `L0 ⊆ L` spanned by the columns of `l0_gens`.
    pub fn new(l_gens: &Matrix, l0_gens: &Matrix) -> Result<Self> {
        let base = l_gens.base();
        if l0_gens.rows() != l_gens.rows() {
            return Err(Error::Shape("subquotient ambient dimensions differ".into()));
        }
        let lattice = EchelonBasis::span(l_gens);
        Self::with_lattice(lattice, l0_gens, base)
    }

    /// Quotient of the whole coordinate space `R^n` by the span of `l0_gens`.
    pub fn quotient(base: BaseRing, n: usize, l0_gens: &Matrix) -> Result<Self> {
        Self::with_lattice(EchelonBasis::full(base, n), l0_gens, base)
    }

    pub fn with_lattice(lattice: EchelonBasis, l0_gens: &Matrix, base: BaseRing) -> Result<Self> {
        let r = lattice.rank();
        let mut c = Matrix::zeros(base, r, l0_gens.cols());
        for j in 0..l0_gens.cols() {
            let col = l0_gens.column(j);
            let y = lattice.coords(&col).ok_or_else(|| {
                Error::Precondition("subquotient: L0 is not contained in L".into())
            })?;
            for (i, v) in y.into_iter().enumerate() {
                c.set(i, j, v);
            }
        }
        let s = smith_decompose(&c);
        let mut keep = Vec::new();
        let mut torsion = Vec::new();
        for (k, d) in s.diagonal.iter().enumerate() {
            if !base.is_unit(d) {
                keep.push(k);
                torsion.push(d.clone());
            }
        }
        let free_rank = r - s.rank();
        keep.extend(s.rank()..r);
        let mut reps = lattice.basis().mul(&s.u_inv.select_columns(&keep));
        // Hermite bases of sublattices are skewed, and the skew compounds along resolutions;
        // any basis of the free part will do, so take a reduced one.
        let mut free_t_inv = None;
        let t0 = keep.len() - free_rank;
        if base == BaseRing::Integers && free_rank > 0 {
            let free_cols: Vec<usize> = (t0..keep.len()).collect();
            let free = reps.select_columns(&free_cols);
            let red = lll_reduce(&free);
            if height(&red.basis) < height(&free) {
                reps.set_block(0, t0, &red.basis);
                free_t_inv = Some(red.t_inv);
            }
        }
        Ok(Subquotient { lattice, u: s.u, keep, reps, nf: NormalForm { free_rank, torsion }, free_t_inv })
    }

    pub fn normal_form(&self) -> &NormalForm {
        &self.nf
    }

    pub fn generators(&self) -> usize {
        self.keep.len()
    }

    pub fn ambient(&self) -> usize {
        self.lattice.ambient()
    }

    pub fn base(&self) -> BaseRing {
        self.reps.base()
    }

    /// Representatives of the canonical generators as ambient vectors (columns).
    pub fn reps(&self) -> &Matrix {
        &self.reps
    }

    pub fn lattice(&self) -> &EchelonBasis {
        &self.lattice
    }

    /// Canonical coordinates of an ambient vector of `L` (torsion entries reduced).
    pub fn coords(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        let y = self.lattice.coords(x)?;
        let z = self.u.mul_vec(&y);
        let mut out: Vec<Scalar> = self.keep.iter().map(|&k| z[k].clone()).collect();
        self.nf.reduce(&mut out);
        if let Some(ti) = &self.free_t_inv {
            let t0 = out.len() - self.nf.free_rank;
            let tail = ti.mul_vec(&out[t0..]);
            out.truncate(t0);
            out.extend(tail);
        }
        Some(out)
    }

    /// Coordinates of each column; `None` if some column is outside `L`.
    pub fn coords_matrix(&self, xs: &Matrix) -> Option<Matrix> {
        let mut out = Matrix::zeros(self.base(), self.generators(), xs.cols());
        for j in 0..xs.cols() {
            for (i, v) in self.coords(&xs.column(j))?.into_iter().enumerate() {
                out.set(i, j, v);
            }
        }
        Some(out)
    }

    /// Ambient representative of the element with canonical coordinates `c`.
    pub fn element(&self, c: &[Scalar]) -> Vec<Scalar> {
        self.reps.mul_vec(c)
    }

    /// Matrix (in canonical coordinates) of the map induced by an ambient linear map
    /// `f: ambient → other.ambient` sending `L` into `L'` and `L0` into `L0'`.
    pub fn induced<F>(&self, other: &Subquotient, f: F) -> Result<Matrix>
    where
        F: Fn(&[Scalar]) -> Vec<Scalar>,
    {
        let mut out = Matrix::zeros(self.base(), other.generators(), self.generators());
        for j in 0..self.generators() {
            let img = f(&self.reps.column(j));
            let c = other
                .coords(&img)
                .ok_or_else(|| Error::Precondition("induced map leaves the target lattice".into()))?;
            for (i, v) in c.into_iter().enumerate() {
                out.set(i, j, v);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cokernels() {
        let z = BaseRing::Integers;
        assert!(cokernel_invariants(&Matrix::identity(z, 2)).is_zero());
        let nf = cokernel_invariants(&Matrix::from_i64(z, &[&[2, 0], &[0, 3]]));
        assert_eq!(nf, NormalForm::torsion(&[6]));
        assert_eq!(cokernel_invariants(&Matrix::zeros(z, 2, 2)), NormalForm::free(2));
        let q = BaseRing::Rationals;
        assert_eq!(cokernel_invariants(&Matrix::from_i64(q, &[&[2, 0], &[0, 3]])), NormalForm::zero());
    }

    #[test]
    fn echelon_membership() {
        let z = BaseRing::Integers;
        let l = EchelonBasis::span(&Matrix::from_i64(z, &[&[2, 0], &[0, 3], &[2, 3]]));
        assert_eq!(l.rank(), 2);
        let v = |a: i64, b: i64, c: i64| vec![Scalar::from(a), Scalar::from(b), Scalar::from(c)];
        assert!(l.contains(&v(2, 3, 5)));
        assert!(!l.contains(&v(1, 0, 1)));
        assert!(!l.contains(&v(2, 3, 4)));
    }

    #[test]
    fn subquotient_of_z2() {
        // Z^2 / <(2,0),(0,3)> ≅ Z/6
        let z = BaseRing::Integers;
        let sq = Subquotient::quotient(z, 2, &Matrix::from_i64(z, &[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(sq.normal_form(), &NormalForm::torsion(&[6]));
        let g = sq.reps().column(0);
        // the generator has order exactly 6
        for k in 1..6 {
            let kg: Vec<Scalar> = g.iter().map(|x| x * &Scalar::from(k)).collect();
            assert!(!sq.coords(&kg).unwrap()[0].is_zero());
        }
        let e1 = vec![Scalar::from(1), Scalar::from(0)];
        let c = sq.coords(&e1).unwrap();
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn subquotient_rejects_non_sublattice() {
        let z = BaseRing::Integers;
        let l = Matrix::from_i64(z, &[&[2], &[0]]);
        let l0 = Matrix::from_i64(z, &[&[1], &[0]]);
        assert!(Subquotient::new(&l, &l0).is_err());
    }

    #[test]
    fn merging() {
        let f = merge_factors(vec![Scalar::from(2), Scalar::from(3), Scalar::from(4)]);
        assert_eq!(f, vec![Scalar::from(2), Scalar::from(12)]);
        assert_eq!(NormalForm::torsion(&[2]).direct_sum(&NormalForm::free(1)).to_string(), "Z/2 + R");
    }
}
