use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::finite::{combine, Alg};
use crate::error::{Error, Result};
use crate::linear::{kernel, BaseRing, Matrix, NormalForm, Scalar, Subquotient};

/// Which side the algebra acts on, from the user's point of view. Internally every module is
/// a left module; a right `A`-module is stored as a left `A^op`-module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

struct ModuleData {
    alg: Alg,
    nf: NormalForm,
    act: Vec<Matrix>,
    free: Option<usize>,
    side: Side,
}

/// A finitely generated left module over a [`FiniteAlgebra`](super::FiniteAlgebra).
///
/// The underlying `R`-module is in canonical form (see [`NormalForm`]); `act[i]` is the
/// matrix of `e_i` on the canonical generators. Cheap to clone.
#[derive(Clone)]
pub struct Module(Arc<ModuleData>);

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module[{} over {}]", self.0.nf, self.0.alg.name())
    }
}

pub(crate) fn same_algebra(a: &Alg, b: &Alg) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Module {
    /// A module from a canonical presentation and action matrices for every basis element.
    pub fn new(alg: Alg, nf: NormalForm, act: Vec<Matrix>) -> Result<Module> {
        Self::build(alg, nf, act, None, Side::Left)
    }

    fn build(alg: Alg, nf: NormalForm, act: Vec<Matrix>, free: Option<usize>, side: Side) -> Result<Module> {
        let g = nf.generators();
        if act.len() != alg.rank() {
            return Err(Error::Shape(format!(
                "{} action matrices for an algebra of rank {}",
                act.len(),
                alg.rank()
            )));
        }
        if act.iter().any(|m| m.rows() != g || m.cols() != g) {
            return Err(Error::Shape(format!("action matrices must be {g}×{g}")));
        }
        if !nf.is_free() && alg.base() != BaseRing::Integers {
            return Err(Error::BaseMismatch("torsion presentation over a field".into()));
        }
        let act = act
            .into_iter()
            .map(|m| {
                let mut m = m.change_base(alg.base());
                reduce_rows(&nf, &mut m);
                m
            })
            .collect();
        let m = Module(Arc::new(ModuleData { alg, nf, act, free, side }));
        if cfg!(debug_assertions) {
            m.check()?;
        }
        Ok(m)
    }

    /// Verify the module axioms: relations preserved, multiplicativity, unit.
    pub fn check(&self) -> Result<()> {
        let alg = &self.0.alg;
        let nf = &self.0.nf;
        let rel = nf.relation_matrix(alg.base());
        for (i, a) in self.0.act.iter().enumerate() {
            if !nf.is_zero_matrix(&a.mul(&rel)) {
                return Err(Error::InvalidInput(format!("e{i} does not preserve the relations")));
            }
        }
        let g = self.dim();
        let unit = self.act_elem(alg.unit());
        if !nf.is_zero_matrix(&unit.sub(&Matrix::identity(alg.base(), g))) {
            return Err(Error::InvalidInput("the unit does not act as the identity".into()));
        }
        for gen in alg.generators() {
            let ag = self.act_elem(gen);
            for j in 0..alg.rank() {
                let prod = alg.mul(gen, &alg.basis_element(j));
                let lhs = ag.mul(&self.0.act[j]);
                let rhs = self.act_elem(&prod);
                if !nf.is_zero_matrix(&lhs.sub(&rhs)) {
                    return Err(Error::InvalidInput(format!(
                        "action is not multiplicative on a generator times e{j}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The free module `A^k`; the `R`-basis element `e_i ε_j` has index `j·n + i`.
    pub fn free(alg: &Alg, k: usize) -> Module {
        let n = alg.rank();
        let act = (0..n)
            .map(|i| {
                let l = alg.left_regular(i);
                let mut m = Matrix::zeros(alg.base(), n * k, n * k);
                for j in 0..k {
                    m.set_block(j * n, j * n, l);
                }
                m
            })
            .collect();
        Module(Arc::new(ModuleData {
            alg: alg.clone(),
            nf: NormalForm::free(n * k),
            act,
            free: Some(k),
            side: Side::Left,
        }))
    }

    pub fn regular(alg: &Alg) -> Module {
        Self::free(alg, 1)
    }

    pub fn zero(alg: &Alg) -> Module {
        Self::free(alg, 0)
    }

    /// A one-dimensional (rank one) module given by an algebra homomorphism `A → R`.
    pub fn from_character(alg: &Alg, chi: &[Scalar]) -> Result<Module> {
        let act = chi.iter().map(|c| Matrix::from_rows(alg.base(), vec![vec![c.clone()]])).collect();
        let m = Self::build(alg.clone(), NormalForm::free(1), act, None, Side::Left)?;
        m.check()?;
        Ok(m)
    }

    /// A module from an arbitrary presentation `R^g / span(relations)`; the result is put in
    /// canonical form. `act` are `g×g` matrices preserving the relation span.
    pub fn from_presentation(alg: &Alg, g: usize, relations: &Matrix, act: &[Matrix]) -> Result<Presented> {
        let sq = Subquotient::quotient(alg.base(), g, relations)?;
        let module = Self::from_subquotient(alg, &sq, act)?;
        let to_canonical = sq
            .coords_matrix(&Matrix::identity(alg.base(), g))
            .expect("full lattice");
        Ok(Presented { module, to_canonical, from_canonical: sq.reps().clone() })
    }

    /// The module `L/L0` of a subquotient of a module whose ambient actions are `act`.
    pub fn from_subquotient(alg: &Alg, sq: &Subquotient, act: &[Matrix]) -> Result<Module> {
        let mats = act
            .iter()
            .map(|a| sq.induced(sq, |v| a.mul_vec(v)))
            .collect::<Result<Vec<_>>>()?;
        Self::build(alg.clone(), sq.normal_form().clone(), mats, None, Side::Left)
    }

    pub fn alg(&self) -> &Alg {
        &self.0.alg
    }

    pub fn base(&self) -> BaseRing {
        self.0.alg.base()
    }

    pub fn normal_form(&self) -> &NormalForm {
        &self.0.nf
    }

    /// Number of canonical generators (the dimension over a field).
    pub fn dim(&self) -> usize {
        self.0.nf.generators()
    }

    pub fn is_zero(&self) -> bool {
        self.0.nf.is_zero()
    }

    pub fn is_lattice(&self) -> bool {
        self.0.nf.is_free()
    }

    pub fn act(&self, i: usize) -> &Matrix {
        &self.0.act[i]
    }

    pub fn acts(&self) -> &[Matrix] {
        &self.0.act
    }

    pub fn act_elem(&self, a: &[Scalar]) -> Matrix {
        let g = self.dim();
        let mut m = combine(self.base(), &self.0.act, a, g);
        if self.0.act.is_empty() {
            m = Matrix::zeros(self.base(), g, g);
        }
        m
    }

    /// `Some(k)` when this is the standard free module `A^k`.
    pub fn free_rank(&self) -> Option<usize> {
        self.0.free
    }

    pub fn side(&self) -> Side {
        self.0.side
    }

    pub fn with_side(&self, side: Side) -> Module {
        Module(Arc::new(ModuleData {
            alg: self.0.alg.clone(),
            nf: self.0.nf.clone(),
            act: self.0.act.clone(),
            free: self.0.free,
            side,
        }))
    }

    pub fn relations(&self) -> Matrix {
        self.0.nf.relation_matrix(self.base())
    }

    /// Reduce a vector to canonical representatives.
    pub fn reduce(&self, v: &mut [Scalar]) {
        self.0.nf.reduce(v)
    }

    pub fn same_alg(&self, other: &Module) -> bool {
        same_algebra(&self.0.alg, &other.0.alg)
    }

    /// Re-attach the module to an equal algebra value (e.g. `(A^op)^op` versus `A`).
    pub fn over(&self, alg: &Alg) -> Result<Module> {
        if !same_algebra(&self.0.alg, alg) {
            return Err(Error::AlgebraMismatch(format!(
                "{} and {} differ",
                self.0.alg.name(),
                alg.name()
            )));
        }
        Ok(Module(Arc::new(ModuleData {
            alg: alg.clone(),
            nf: self.0.nf.clone(),
            act: self.0.act.clone(),
            free: self.0.free,
            side: self.0.side,
        })))
    }

    /// Restriction of scalars along an algebra map `B → A` given by the images of the basis
    /// of `B` (as elements of `A`).
    pub fn restrict(&self, b: &Alg, images: &[Vec<Scalar>]) -> Result<Module> {
        if images.len() != b.rank() {
            return Err(Error::Shape("one image per basis element is required".into()));
        }
        let act = images.iter().map(|x| self.act_elem(x)).collect();
        Self::build(b.clone(), self.0.nf.clone(), act, None, self.0.side)
    }

    /// Submodule generated (over `A`) by the columns of `gens`.
    pub fn submodule(&self, gens: &Matrix) -> Result<(Module, ModuleMap)> {
        let span = self.a_span(gens);
        let sq = Subquotient::new(&span.hstack(&self.relations()), &self.relations())?;
        let sub = Self::from_subquotient(self.alg(), &sq, self.acts())?;
        let incl = ModuleMap::new(&sub, self, sq.reps().clone())?;
        Ok((sub, incl))
    }

    /// Quotient by the submodule generated by the columns of `gens`.
    pub fn quotient(&self, gens: &Matrix) -> Result<(Module, ModuleMap)> {
        let span = self.a_span(gens);
        let rel = span.hstack(&self.relations());
        let sq = Subquotient::quotient(self.base(), self.dim(), &rel)?;
        let q = Self::from_subquotient(self.alg(), &sq, self.acts())?;
        let proj = sq.coords_matrix(&Matrix::identity(self.base(), self.dim())).expect("full");
        let pi = ModuleMap::new(self, &q, proj)?;
        Ok((q, pi))
    }

    /// `R`-span of `{e_i · v}` for the columns `v` of `gens`.
    pub fn a_span(&self, gens: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.base(), self.dim(), 0);
        for a in &self.0.act {
            out = out.hstack(&a.mul(gens));
        }
        out
    }

    /// Direct sum with the canonical injections and projections.
    pub fn direct_sum(parts: &[Module]) -> Result<DirectSum> {
        let alg = parts
            .first()
            .map(|m| m.alg().clone())
            .ok_or_else(|| Error::InvalidInput("empty direct sum".into()))?;
        for p in parts {
            if !same_algebra(p.alg(), &alg) {
                return Err(Error::AlgebraMismatch("direct sum of modules over different algebras".into()));
            }
        }
        let base = alg.base();
        let g: usize = parts.iter().map(Module::dim).sum();
        let offsets: Vec<usize> = parts
            .iter()
            .scan(0, |s, m| {
                let o = *s;
                *s += m.dim();
                Some(o)
            })
            .collect();
        let act: Vec<Matrix> = (0..alg.rank())
            .map(|i| {
                let mut m = Matrix::zeros(base, g, g);
                for (p, &o) in parts.iter().zip(&offsets) {
                    m.set_block(o, o, p.act(i));
                }
                m
            })
            .collect();
        let mut rel = Matrix::zeros(base, g, 0);
        for (p, &o) in parts.iter().zip(&offsets) {
            let r = p.relations();
            let mut big = Matrix::zeros(base, g, r.cols());
            big.set_block(o, 0, &r);
            rel = rel.hstack(&big);
        }
        let all_free = parts.iter().all(Module::is_lattice);
        let (module, to_can, from_can) = if all_free {
            let free = if parts.iter().all(|p| p.free_rank().is_some()) {
                Some(parts.iter().map(|p| p.free_rank().unwrap_or(0)).sum())
            } else {
                None
            };
            let m = Self::build(alg.clone(), NormalForm::free(g), act, free, Side::Left)?;
            (m, Matrix::identity(base, g), Matrix::identity(base, g))
        } else {
            let pr = Self::from_presentation(&alg, g, &rel, &act)?;
            (pr.module, pr.to_canonical, pr.from_canonical)
        };
        let mut injections = Vec::new();
        let mut projections = Vec::new();
        for (p, &o) in parts.iter().zip(&offsets) {
            let mut inj = Matrix::zeros(base, g, p.dim());
            inj.set_block(o, 0, &Matrix::identity(base, p.dim()));
            injections.push(ModuleMap::new(p, &module, to_can.mul(&inj))?);
            let mut proj = Matrix::zeros(base, p.dim(), g);
            proj.set_block(0, o, &Matrix::identity(base, p.dim()));
            projections.push(ModuleMap::new(&module, p, proj.mul(&from_can))?);
        }
        Ok(DirectSum { module, injections, projections })
    }

    /// `M^{⊕k}`.
    pub fn power(&self, k: usize) -> Result<Module> {
        if k == 0 {
            return Ok(Module::zero(self.alg()));
        }
        Ok(Self::direct_sum(&vec![self.clone(); k])?.module)
    }

    /// `Hom_R(M, R)` as a left module over `A^op` (a right `A`-module), lattices only.
    pub fn dual_over_base(&self) -> Result<Module> {
        if !self.is_lattice() {
            return Err(Error::TorsionNotAllowed(
                "Hom over the base kills torsion; a lattice is required".into(),
            ));
        }
        let op = self.alg().opposite();
        let act = self.0.act.iter().map(Matrix::transpose).collect();
        Self::build(op, self.0.nf.clone(), act, None, self.0.side.flip())
    }

    /// The biduality map `M → M**` (identity on canonical generators), checked to be an
    /// isomorphism of modules.
    pub fn biduality(&self) -> Result<ModuleMap> {
        let dd = self.dual_over_base()?.dual_over_base()?.over(self.alg())?;
        ModuleMap::new(self, &dd, Matrix::identity(self.base(), self.dim()))
    }
}

/// Result of [`Module::from_presentation`].
pub struct Presented {
    pub module: Module,
    /// Columns: canonical coordinates of the original generators.
    pub to_canonical: Matrix,
    /// Columns: original coordinates of the canonical generators.
    pub from_canonical: Matrix,
}

pub struct DirectSum {
    pub module: Module,
    pub injections: Vec<ModuleMap>,
    pub projections: Vec<ModuleMap>,
}

fn reduce_rows(nf: &NormalForm, m: &mut Matrix) {
    for (i, d) in nf.torsion.iter().enumerate() {
        for j in 0..m.cols() {
            let v = m.get(i, j).mod_floor(d);
            m.set(i, j, v);
        }
    }
}

/// An `A`-linear map, as a matrix on canonical generators.
#[derive(Clone)]
pub struct ModuleMap {
    source: Module,
    target: Module,
    matrix: Matrix,
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleMap({:?} → {:?})", self.source, self.target)
    }
}

impl ModuleMap {
    pub fn new(source: &Module, target: &Module, matrix: Matrix) -> Result<ModuleMap> {
        if !source.same_alg(target) {
            return Err(Error::AlgebraMismatch("map between modules over different algebras".into()));
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Shape(format!(
                "map matrix is {}×{}, expected {}×{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        let mut matrix = matrix.change_base(source.base());
        reduce_rows(target.normal_form(), &mut matrix);
        let f = ModuleMap { source: source.clone(), target: target.clone(), matrix };
        if cfg!(debug_assertions) {
            f.check()?;
        }
        Ok(f)
    }

    /// Check well-definedness and `A`-linearity on algebra generators.
    pub fn check(&self) -> Result<()> {
        let tnf = self.target.normal_form();
        if !tnf.is_zero_matrix(&self.matrix.mul(&self.source.relations())) {
            return Err(Error::InvalidInput("map does not respect relations".into()));
        }
        for g in self.source.alg().generators() {
            let lhs = self.matrix.mul(&self.source.act_elem(g));
            let rhs = self.target.act_elem(g).mul(&self.matrix);
            if !tnf.is_zero_matrix(&lhs.sub(&rhs)) {
                return Err(Error::InvalidInput("map is not A-linear".into()));
            }
        }
        Ok(())
    }

    pub fn identity(m: &Module) -> ModuleMap {
        ModuleMap { source: m.clone(), target: m.clone(), matrix: Matrix::identity(m.base(), m.dim()) }
    }

    pub fn zero(source: &Module, target: &Module) -> ModuleMap {
        ModuleMap {
            source: source.clone(),
            target: target.clone(),
            matrix: Matrix::zeros(source.base(), target.dim(), source.dim()),
        }
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &ModuleMap) -> Result<ModuleMap> {
        if first.target.dim() != self.source.dim() || !first.target.same_alg(&self.source) {
            return Err(Error::Shape("maps are not composable".into()));
        }
        let mut m = self.matrix.mul(&first.matrix);
        reduce_rows(self.target.normal_form(), &mut m);
        Ok(ModuleMap { source: first.source.clone(), target: self.target.clone(), matrix: m })
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        let mut m = self.matrix.add(&other.matrix);
        reduce_rows(self.target.normal_form(), &mut m);
        ModuleMap { source: self.source.clone(), target: self.target.clone(), matrix: m }
    }

    pub fn sub(&self, other: &ModuleMap) -> ModuleMap {
        self.add(&other.scale(&Scalar::from(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> ModuleMap {
        let mut m = self.matrix.scale(c);
        reduce_rows(self.target.normal_form(), &mut m);
        ModuleMap { source: self.source.clone(), target: self.target.clone(), matrix: m }
    }

    pub fn is_zero(&self) -> bool {
        self.target.normal_form().is_zero_matrix(&self.matrix)
    }

    pub fn same_as(&self, other: &ModuleMap) -> bool {
        self.matrix.rows() == other.matrix.rows()
            && self.matrix.cols() == other.matrix.cols()
            && self.target.normal_form().is_zero_matrix(&self.matrix.sub(&other.matrix))
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = self.matrix.mul_vec(v);
        self.target.reduce(&mut w);
        w
    }

    /// The map `A^k → N` sending the `j`-th standard generator to column `j` of `images`.
    pub fn from_free_images(source: &Module, target: &Module, images: &Matrix) -> Result<ModuleMap> {
        let k = source
            .free_rank()
            .ok_or_else(|| Error::Precondition("source must be a standard free module".into()))?;
        if images.cols() != k || images.rows() != target.dim() {
            return Err(Error::Shape("one image per free generator is required".into()));
        }
        let n = source.alg().rank();
        let mut f = Matrix::zeros(source.base(), target.dim(), n * k);
        for j in 0..k {
            let p = images.column(j);
            for i in 0..n {
                for (r, x) in target.act(i).mul_vec(&p).into_iter().enumerate() {
                    f.set(r, j * n + i, x);
                }
            }
        }
        ModuleMap::new(source, target, f)
    }

    /// Some `x` with `f(x) = y`.
    pub fn preimage(&self, y: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        let gs = self.source.dim();
        let rel = self.target.relations();
        let x = if rel.cols() == 0 {
            crate::linear::solve(&self.matrix, y)?
        } else {
            crate::linear::solve(&self.matrix.hstack(&rel), y)?
        };
        Ok(x.map(|mut x| {
            x.truncate(gs);
            self.source.reduce(&mut x);
            x
        }))
    }

    /// The map `ψ: Y → Z` with `ψ∘self = phi`, for `self: X ↠ Y` surjective and
    /// `ker(self) ⊆ ker(phi)`.
    pub fn factor(&self, phi: &ModuleMap) -> Result<ModuleMap> {
        let gy = self.target.dim();
        let mut m = Matrix::zeros(self.source.base(), phi.target.dim(), gy);
        for j in 0..gy {
            let x = self
                .preimage(&crate::linear::unit_vector(gy, j))?
                .ok_or_else(|| Error::Precondition("factor: map is not surjective".into()))?;
            for (i, v) in phi.apply(&x).into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        ModuleMap::new(&self.target, &phi.target, m)
    }

    /// `Hom_R(f, R)` between already constructed duals `D(target) → D(source)`.
    pub fn dual_between(&self, dual_target: &Module, dual_source: &Module) -> Result<ModuleMap> {
        ModuleMap::new(dual_target, dual_source, self.matrix.transpose())
    }

    /// Kernel with its inclusion into the source.
    pub fn kernel(&self) -> Result<(Module, ModuleMap)> {
        let gs = self.source.dim();
        let rel_t = self.target.relations();
        let lattice = if rel_t.cols() == 0 {
            kernel(&self.matrix)
        } else {
            let big = self.matrix.hstack(&rel_t.neg());
            let k = kernel(&big);
            let rows: Vec<usize> = (0..gs).collect();
            k.select_rows(&rows)
        };
        let rel_s = self.source.relations();
        let sq = Subquotient::new(&lattice.hstack(&rel_s), &rel_s)?;
        let k = Module::from_subquotient(self.source.alg(), &sq, self.source.acts())?;
        let incl = ModuleMap::new(&k, &self.source, sq.reps().clone())?;
        Ok((k, incl))
    }

    /// Cokernel with the projection from the target.
    pub fn cokernel(&self) -> Result<(Module, ModuleMap)> {
        let rel = self.matrix.hstack(&self.target.relations());
        let sq = Subquotient::quotient(self.source.base(), self.target.dim(), &rel)?;
        let c = Module::from_subquotient(self.target.alg(), &sq, self.target.acts())?;
        let proj = sq
            .coords_matrix(&Matrix::identity(self.source.base(), self.target.dim()))
            .expect("full lattice");
        let p = ModuleMap::new(&self.target, &c, proj)?;
        Ok((c, p))
    }

    /// Image with the corestriction `source → image` and the inclusion `image → target`.
    pub fn image(&self) -> Result<(Module, ModuleMap, ModuleMap)> {
        let rel_t = self.target.relations();
        let sq = Subquotient::new(&self.matrix.hstack(&rel_t), &rel_t)?;
        let im = Module::from_subquotient(self.target.alg(), &sq, self.target.acts())?;
        let incl = ModuleMap::new(&im, &self.target, sq.reps().clone())?;
        let co = sq.coords_matrix(&self.matrix).expect("columns lie in the image");
        let corestr = ModuleMap::new(&self.source, &im, co)?;
        Ok((im, corestr, incl))
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.kernel()?.0.is_zero())
    }

    pub fn is_surjective(&self) -> Result<bool> {
        Ok(self.cokernel()?.0.is_zero())
    }

    /// Two-sided inverse when the map is bijective.
    pub fn inverse(&self) -> Result<Option<ModuleMap>> {
        if self.source.normal_form() != self.target.normal_form() {
            return Ok(None);
        }
        if !self.is_injective()? || !self.is_surjective()? {
            return Ok(None);
        }
        let base = self.source.base();
        let rel_t = self.target.relations();
        let big = self.matrix.hstack(&rel_t);
        let gs = self.source.dim();
        let mut inv = Matrix::zeros(base, gs, self.target.dim());
        for j in 0..self.target.dim() {
            let e = crate::linear::unit_vector(self.target.dim(), j);
            let x = crate::linear::solve(&big, &e)?
                .ok_or_else(|| Error::Precondition("surjective map without preimage".into()))?;
            for i in 0..gs {
                inv.set(i, j, x[i].clone());
            }
        }
        let g = ModuleMap::new(&self.target, &self.source, inv)?;
        debug_assert!(g.after(self)?.same_as(&ModuleMap::identity(&self.source)));
        Ok(Some(g))
    }

    pub fn is_iso(&self) -> Result<bool> {
        Ok(self.inverse()?.is_some())
    }
}
