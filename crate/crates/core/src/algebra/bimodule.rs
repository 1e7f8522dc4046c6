use super::finite::{enveloping, tensor_algebra, Alg};
use super::module::{same_algebra, Module, Side};
use crate::error::{Error, Result};
use crate::linear::{Matrix, NormalForm, Scalar};

/// An `A`-`B`-bimodule, stored as a left module over `A ⊗ B^op` together with the two
/// one-sided action families.
#[derive(Clone, Debug)]
pub struct Bimodule {
    left: Alg,
    right: Alg,
    module: Module,
    lact: Vec<Matrix>,
    ract: Vec<Matrix>,
}

impl Bimodule {
    /// `lact[i]` is the matrix of `x ↦ e_i·x`, `ract[j]` the matrix of `x ↦ x·f_j`.
    pub fn new(left: &Alg, right: &Alg, nf: NormalForm, lact: Vec<Matrix>, ract: Vec<Matrix>) -> Result<Bimodule> {
        if left.base() != right.base() {
            return Err(Error::BaseMismatch("bimodule over algebras with different bases".into()));
        }
        if lact.len() != left.rank() || ract.len() != right.rank() {
            return Err(Error::Shape("one action matrix per basis element is required".into()));
        }
        let env = env_of(left, right)?;
        let mut act = Vec::with_capacity(left.rank() * right.rank());
        for l in &lact {
            for r in &ract {
                act.push(l.mul(r));
            }
        }
        let module = Module::new(env, nf, act)?;
        let b = Bimodule { left: left.clone(), right: right.clone(), module, lact, ract };
        b.check_commuting()?;
        Ok(b)
    }

    fn check_commuting(&self) -> Result<()> {
        let nf = self.module.normal_form();
        for l in &self.lact {
            for r in &self.ract {
                if !nf.is_zero_matrix(&l.mul(r).sub(&r.mul(l))) {
                    return Err(Error::InvalidInput("left and right actions do not commute".into()));
                }
            }
        }
        Ok(())
    }

    /// Reinterpret a left `A ⊗ B^op`-module as a bimodule.
    pub fn from_env_module(left: &Alg, right: &Alg, module: Module) -> Result<Bimodule> {
        let env = env_of(left, right)?;
        if !same_algebra(module.alg(), &env) {
            return Err(Error::AlgebraMismatch("module is not over A ⊗ B^op".into()));
        }
        let module = module.over(&env)?;
        let (na, nb) = (left.rank(), right.rank());
        let lact = (0..na)
            .map(|i| {
                let x = super::finite::pure_tensor(left.base(), &left.basis_element(i), right.unit());
                module.act_elem(&x)
            })
            .collect();
        let ract = (0..nb)
            .map(|j| {
                let x = super::finite::pure_tensor(left.base(), left.unit(), &right.basis_element(j));
                module.act_elem(&x)
            })
            .collect();
        Ok(Bimodule { left: left.clone(), right: right.clone(), module, lact, ract })
    }

    /// `A` as an `A`-`A`-bimodule.
    pub fn regular(a: &Alg) -> Result<Bimodule> {
        let n = a.rank();
        let lact = (0..n).map(|i| a.left_regular(i).clone()).collect();
        let ract = (0..n).map(|j| a.right_mult(&a.basis_element(j))).collect();
        Bimodule::new(a, a, NormalForm::free(n), lact, ract)
    }

    /// `Hom_R(A, R)` with `(a·f·b)(x) = f(b·x·a)`, in the dual basis `e_j^*`.
    pub fn dualizing(a: &Alg) -> Result<Bimodule> {
        let n = a.rank();
        let base = a.base();
        let mut lact = Vec::with_capacity(n);
        let mut ract = Vec::with_capacity(n);
        for i in 0..n {
            let mut l = Matrix::zeros(base, n, n);
            let mut r = Matrix::zeros(base, n, n);
            for j in 0..n {
                for k in 0..n {
                    l.set(j, k, a.coeff(j, i, k).clone());
                    r.set(j, k, a.coeff(i, j, k).clone());
                }
            }
            lact.push(l);
            ract.push(r);
        }
        Bimodule::new(a, a, NormalForm::free(n), lact, ract)
    }

    pub fn left_alg(&self) -> &Alg {
        &self.left
    }

    pub fn right_alg(&self) -> &Alg {
        &self.right
    }

    /// The underlying left module over `A ⊗ B^op`.
    pub fn env_module(&self) -> &Module {
        &self.module
    }

    pub fn normal_form(&self) -> &NormalForm {
        self.module.normal_form()
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn lact(&self, i: usize) -> &Matrix {
        &self.lact[i]
    }

    pub fn ract(&self, j: usize) -> &Matrix {
        &self.ract[j]
    }

    pub fn lacts(&self) -> &[Matrix] {
        &self.lact
    }

    pub fn racts(&self) -> &[Matrix] {
        &self.ract
    }

    /// Matrix of `x ↦ x·b` for an element `b` of the right algebra.
    pub fn ract_elem(&self, b: &[Scalar]) -> Matrix {
        super::finite::combine(self.left.base(), &self.ract, b, self.dim())
    }

    pub fn lact_elem(&self, a: &[Scalar]) -> Matrix {
        super::finite::combine(self.left.base(), &self.lact, a, self.dim())
    }

    /// Forget the right action.
    pub fn left_module(&self) -> Result<Module> {
        Module::new(self.left.clone(), self.normal_form().clone(), self.lact.clone())
    }

    /// Forget the left action: a left `B^op`-module, tagged as a right module.
    pub fn right_module(&self) -> Result<Module> {
        Ok(Module::new(self.right.opposite(), self.normal_form().clone(), self.ract.clone())?.with_side(Side::Right))
    }
}

fn env_of(left: &Alg, right: &Alg) -> Result<Alg> {
    if std::sync::Arc::ptr_eq(left, right) {
        enveloping(left)
    } else {
        tensor_algebra(left, &right.opposite())
    }
}
