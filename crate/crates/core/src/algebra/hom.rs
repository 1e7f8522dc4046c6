use super::finite::Alg;
use super::module::{same_algebra, Module, ModuleMap};
use crate::error::{Error, Result};
use crate::linear::{kernel, BaseRing, Matrix, NormalForm, Scalar, Subquotient};

/// `Hom_A(M, N)` as a finitely generated `R`-module.
///
/// Elements are parametrised by an ambient coordinate vector: `vec(F)` (column-major) in
/// general, or the images of the standard generators when `M = A^k`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Module,
    target: Module,
    sq: Subquotient,
    free: Option<usize>,
}

impl HomSpace {
    pub fn new(source: &Module, target: &Module) -> Result<HomSpace> {
        if !source.same_alg(target) {
            return Err(Error::AlgebraMismatch(format!(
                "Hom between modules over {} and {}",
                source.alg().name(),
                target.alg().name()
            )));
        }
        let base = source.base();
        let g = target.dim();
        if let Some(k) = source.free_rank() {
            let rel = target.relations();
            let mut l0 = Matrix::zeros(base, g * k, rel.cols() * k);
            for j in 0..k {
                l0.set_block(j * g, j * rel.cols(), &rel);
            }
            let sq = Subquotient::quotient(base, g * k, &l0)?;
            return Ok(HomSpace { source: source.clone(), target: target.clone(), sq, free: Some(k) });
        }
        let lattice = hom_lattice(source, target)?;
        let m = source.dim();
        let tn = target.normal_form().torsion.len();
        let mut l0 = Matrix::zeros(base, g * m, tn * m);
        for (r, d) in target.normal_form().torsion.iter().enumerate() {
            for c in 0..m {
                l0.set(r + g * c, r * m + c, d.clone());
            }
        }
        let sq = Subquotient::new(&lattice.hstack(&l0), &l0)?;
        Ok(HomSpace { source: source.clone(), target: target.clone(), sq, free: None })
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn normal_form(&self) -> &NormalForm {
        self.sq.normal_form()
    }

    /// Number of canonical generators.
    pub fn dim(&self) -> usize {
        self.sq.generators()
    }

    pub fn is_zero(&self) -> bool {
        self.sq.normal_form().is_zero()
    }

    pub fn base(&self) -> BaseRing {
        self.source.base()
    }

    /// Matrix of the map with ambient parameters `v`.
    fn matrix_of(&self, v: &[Scalar]) -> Matrix {
        let g = self.target.dim();
        match self.free {
            None => Matrix::from_vectorized(self.base(), g, self.source.dim(), v),
            Some(k) => {
                let n = self.source.alg().rank();
                let mut f = Matrix::zeros(self.base(), g, n * k);
                for j in 0..k {
                    let p = &v[j * g..(j + 1) * g];
                    for i in 0..n {
                        let col = self.target.act(i).mul_vec(p);
                        for (r, x) in col.into_iter().enumerate() {
                            f.set(r, j * n + i, x);
                        }
                    }
                }
                f
            }
        }
    }

    fn ambient_of(&self, f: &Matrix) -> Vec<Scalar> {
        match self.free {
            None => f.vectorize(),
            Some(k) => {
                let base = self.base();
                let n = self.source.alg().rank();
                let unit = self.source.alg().unit();
                let g = self.target.dim();
                let mut v = vec![Scalar::zero(); g * k];
                for j in 0..k {
                    for (i, u) in unit.iter().enumerate() {
                        if u.is_zero() {
                            continue;
                        }
                        for r in 0..g {
                            let x = base.mul(u, f.get(r, j * n + i));
                            v[j * g + r] = base.add(&v[j * g + r], &x);
                        }
                    }
                }
                v
            }
        }
    }

    /// The homomorphism with canonical coordinates `c`.
    pub fn map(&self, c: &[Scalar]) -> ModuleMap {
        let f = self.matrix_of(&self.sq.element(c));
        ModuleMap::new(&self.source, &self.target, f).expect("Hom element is A-linear")
    }

    pub fn basis(&self) -> Vec<ModuleMap> {
        (0..self.dim())
            .map(|i| self.map(&crate::linear::unit_vector(self.dim(), i)))
            .collect()
    }

    /// Canonical coordinates of an `A`-linear matrix `M → N`.
    pub fn coords_of(&self, f: &Matrix) -> Result<Vec<Scalar>> {
        self.sq
            .coords(&self.ambient_of(f))
            .ok_or_else(|| Error::Precondition("matrix is not an element of this Hom space".into()))
    }

    /// Matrix of the `R`-linear map `Hom(M,N) → other` induced by an operation on matrices.
    pub fn induced<F>(&self, other: &HomSpace, op: F) -> Result<Matrix>
    where
        F: Fn(&Matrix) -> Matrix,
    {
        self.sq.induced(&other.sq, |v| other.ambient_of(&op(&self.matrix_of(v))))
    }

    /// Precomposition `f ↦ f∘h` for `h: M' → M`.
    pub fn precompose(&self, other: &HomSpace, h: &Matrix) -> Result<Matrix> {
        self.induced(other, |f| f.mul(h))
    }

    /// Postcomposition `f ↦ h∘f` for `h: N → N'`.
    pub fn postcompose(&self, other: &HomSpace, h: &Matrix) -> Result<Matrix> {
        self.induced(other, |f| h.mul(f))
    }

    /// The module structure over `alg` given by `a_i·f = f∘h_i` (from a right action on the
    /// source commuting with `A`).
    pub fn module_by_precompose(&self, alg: &Alg, endos: &[Matrix]) -> Result<Module> {
        let acts = endos
            .iter()
            .map(|h| self.induced(self, |f| f.mul(h)))
            .collect::<Result<Vec<_>>>()?;
        Module::new(alg.clone(), self.normal_form().clone(), acts)
    }

    /// The module structure over `alg` given by `a_i·f = h_i∘f`.
    pub fn module_by_postcompose(&self, alg: &Alg, endos: &[Matrix]) -> Result<Module> {
        let acts = endos
            .iter()
            .map(|h| self.induced(self, |f| h.mul(f)))
            .collect::<Result<Vec<_>>>()?;
        Module::new(alg.clone(), self.normal_form().clone(), acts)
    }
}

/// The `R`-lattice of matrices `F` (as `vec(F)`) with `F·Λ_M(a) ≡ Λ_N(a)·F` for the algebra
/// generators and `F·Rel_M ≡ 0`, modulo nothing (relations of `N` are added by the caller).
fn hom_lattice(source: &Module, target: &Module) -> Result<Matrix> {
    let base = source.base();
    let (g, m) = (target.dim(), source.dim());
    let nvar = g * m;
    let tnf = target.normal_form();
    let snf = source.normal_form();
    let tn = tnf.torsion.len();
    let gens = source.alg().generators();
    let slack_per_gen = tn * m;
    let nslack = gens.len() * slack_per_gen + tn * snf.torsion.len();
    let ncons = gens.len() * g * m + g * snf.torsion.len();
    let mut c = Matrix::zeros(base, ncons, nvar + nslack);
    let mut row = 0;
    let mut slack = nvar;
    for a in gens {
        let lm = source.act_elem(a);
        let ln = target.act_elem(a);
        for r in 0..g {
            for col in 0..m {
                for s in 0..m {
                    let x = lm.get(s, col);
                    if !x.is_zero() {
                        let idx = r + g * s;
                        let cur = c.get(row, idx).clone();
                        c.set(row, idx, base.add(&cur, x));
                    }
                }
                for s in 0..g {
                    let x = ln.get(r, s);
                    if !x.is_zero() {
                        let idx = s + g * col;
                        let cur = c.get(row, idx).clone();
                        c.set(row, idx, base.sub(&cur, x));
                    }
                }
                if r < tn {
                    c.set(row, slack, tnf.torsion[r].clone());
                    slack += 1;
                }
                row += 1;
            }
        }
    }
    for (col, dm) in snf.torsion.iter().enumerate() {
        for r in 0..g {
            c.set(row, r + g * col, dm.clone());
            if r < tn {
                c.set(row, slack, tnf.torsion[r].clone());
                slack += 1;
            }
            row += 1;
        }
    }
    debug_assert_eq!(row, ncons);
    debug_assert_eq!(slack, nvar + nslack);
    let k = if ncons == 0 { Matrix::identity(base, nvar + nslack) } else { kernel(&c) };
    let rows: Vec<usize> = (0..nvar).collect();
    Ok(k.select_rows(&rows))
}

/// `Hom_A(M, N)`.
pub fn hom_module(m: &Module, n: &Module) -> Result<HomSpace> {
    HomSpace::new(m, n)
}

/// `Hom_B(M, B)` for a left `B`-module `M`, as a left `B^op`-module via `(c·f)(x) = f(x)·c`.
pub fn dual_over_algebra(m: &Module) -> Result<(HomSpace, Module)> {
    let b = m.alg();
    let reg = Module::regular(b);
    let h = HomSpace::new(m, &reg)?;
    let endos: Vec<Matrix> = (0..b.rank()).map(|i| b.right_mult(&b.basis_element(i))).collect();
    let module = h.module_by_postcompose(&b.opposite(), &endos)?;
    Ok((h, module.with_side(m.side().flip())))
}

/// `B ⊗_A M` for a left `A^op`-module `B` (a right `A`-module) and a left `A`-module `M`.
#[derive(Clone, Debug)]
pub struct TensorSpace {
    left: Module,
    right: Module,
    sq: Subquotient,
}

impl TensorSpace {
    pub fn new(b: &Module, m: &Module) -> Result<TensorSpace> {
        if !same_algebra(b.alg(), &m.alg().opposite()) {
            return Err(Error::AlgebraMismatch(
                "tensor product needs a right module over the algebra of the left module".into(),
            ));
        }
        let base = m.base();
        let (gb, gm) = (b.dim(), m.dim());
        let amb = gb * gm;
        let mut cols: Vec<Vec<Scalar>> = Vec::new();
        for (i, d) in b.normal_form().torsion.iter().enumerate() {
            for j in 0..gm {
                let mut v = vec![Scalar::zero(); amb];
                v[i * gm + j] = d.clone();
                cols.push(v);
            }
        }
        for (j, d) in m.normal_form().torsion.iter().enumerate() {
            for i in 0..gb {
                let mut v = vec![Scalar::zero(); amb];
                v[i * gm + j] = d.clone();
                cols.push(v);
            }
        }
        for a in m.alg().generators() {
            let rb = b.act_elem(a);
            let lm = m.act_elem(a);
            // (x·a) ⊗ y − x ⊗ (a·y), as a matrix acting on e_i ⊗ e_j
            let rel = rb.kron(&Matrix::identity(base, gm)).sub(&Matrix::identity(base, gb).kron(&lm));
            for c in 0..amb {
                let v = rel.column(c);
                if !v.iter().all(Scalar::is_zero) {
                    cols.push(v);
                }
            }
        }
        let l0 = if cols.is_empty() { Matrix::zeros(base, amb, 0) } else { Matrix::from_columns(base, amb, &cols) };
        let sq = Subquotient::quotient(base, amb, &l0)?;
        Ok(TensorSpace { left: b.clone(), right: m.clone(), sq })
    }

    pub fn normal_form(&self) -> &NormalForm {
        self.sq.normal_form()
    }

    pub fn dim(&self) -> usize {
        self.sq.generators()
    }

    pub fn left(&self) -> &Module {
        &self.left
    }

    pub fn right(&self) -> &Module {
        &self.right
    }

    /// Canonical coordinates of the class of `x ⊗ y`.
    pub fn pure(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let v = super::finite::pure_tensor(self.left.base(), x, y);
        self.sq.coords(&v).expect("full lattice")
    }

    /// An ambient representative (index `i·dim(M) + j` for `e_i ⊗ e_j`) of canonical
    /// coordinates `c`.
    pub fn element(&self, c: &[Scalar]) -> Vec<Scalar> {
        self.sq.element(c)
    }

    /// Matrix of `f ⊗ g: self → other`.
    pub fn induced_map(&self, other: &TensorSpace, f: &Matrix, g: &Matrix) -> Result<Matrix> {
        let k = f.kron(g);
        self.sq.induced(&other.sq, |v| k.mul_vec(v))
    }

    /// Residual module structure from endomorphisms of the left factor (a left action on `B`
    /// commuting with the right `A`-action).
    pub fn module_by_left(&self, alg: &Alg, endos: &[Matrix]) -> Result<Module> {
        let id = Matrix::identity(self.left.base(), self.right.dim());
        let acts = endos
            .iter()
            .map(|h| self.induced_map(self, h, &id))
            .collect::<Result<Vec<_>>>()?;
        Module::new(alg.clone(), self.normal_form().clone(), acts)
    }

    /// Residual module structure from endomorphisms of the right factor.
    pub fn module_by_right(&self, alg: &Alg, endos: &[Matrix]) -> Result<Module> {
        let id = Matrix::identity(self.left.base(), self.left.dim());
        let acts = endos
            .iter()
            .map(|h| self.induced_map(self, &id, h))
            .collect::<Result<Vec<_>>>()?;
        Module::new(alg.clone(), self.normal_form().clone(), acts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presets::{cyclic_group_algebra, truncated_poly};
    use crate::algebra::Bimodule;

    fn simple_k(a: &Alg) -> Module {
        let mut chi = vec![Scalar::zero(); a.rank()];
        chi[0] = Scalar::one();
        Module::from_character(a, &chi).unwrap()
    }

    #[test]
    fn hom_over_dual_numbers() {
        let a = truncated_poly(2, BaseRing::Rationals).unwrap();
        let k = simple_k(&a);
        let reg = Module::regular(&a);
        assert_eq!(HomSpace::new(&reg, &reg).unwrap().dim(), 2);
        assert_eq!(HomSpace::new(&k, &reg).unwrap().dim(), 1);
        assert_eq!(HomSpace::new(&reg, &k).unwrap().dim(), 1);
        assert_eq!(HomSpace::new(&k, &k).unwrap().dim(), 1);
        let two = Module::direct_sum(&[k.clone(), k.clone()]).unwrap().module;
        assert_eq!(HomSpace::new(&two, &reg).unwrap().dim(), 2);
    }

    #[test]
    fn hom_with_torsion() {
        let z = BaseRing::Integers;
        let a = cyclic_group_algebra(2, z).unwrap();
        let triv = Module::from_character(&a, &[Scalar::one(), Scalar::one()]).unwrap();
        let z2 = Module::from_presentation(&a, 1, &Matrix::from_i64(z, &[&[2]]), &[
            Matrix::from_i64(z, &[&[1]]),
            Matrix::from_i64(z, &[&[1]]),
        ])
        .unwrap()
        .module;
        assert_eq!(*z2.normal_form(), NormalForm::torsion(&[2]));
        assert_eq!(*HomSpace::new(&triv, &z2).unwrap().normal_form(), NormalForm::torsion(&[2]));
        assert!(HomSpace::new(&z2, &triv).unwrap().is_zero());
        assert_eq!(*HomSpace::new(&Module::regular(&a), &z2).unwrap().normal_form(), NormalForm::torsion(&[2]));
        assert_eq!(*HomSpace::new(&triv, &Module::regular(&a)).unwrap().normal_form(), NormalForm::free(1));
    }

    #[test]
    fn tensor_with_regular_is_identity() {
        let a = truncated_poly(3, BaseRing::Rationals).unwrap();
        let k = simple_k(&a);
        let t = TensorSpace::new(&Module::regular(&a.opposite()), &k).unwrap();
        assert_eq!(t.dim(), 1);
        let w = Bimodule::dualizing(&a).unwrap();
        let t = TensorSpace::new(&w.right_module().unwrap(), &k).unwrap();
        assert_eq!(t.dim(), 1);
    }

    #[test]
    fn algebra_dual_of_regular() {
        let a = truncated_poly(3, BaseRing::Rationals).unwrap();
        let (_, d) = dual_over_algebra(&Module::regular(&a)).unwrap();
        assert_eq!(d.dim(), 3);
        assert!(std::sync::Arc::ptr_eq(d.alg(), &a.opposite()));
    }
}
