use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linear::{BaseRing, EchelonBasis, Matrix, Scalar, Subquotient};

pub type Alg = Arc<FiniteAlgebra>;

/// A finite `R`-algebra, free of rank `n` over `R`, given by structure constants.
pub struct FiniteAlgebra {
    name: String,
    base: BaseRing,
    n: usize,
    /// `c[(i*n + j)*n + k]` is the coefficient of `e_k` in `e_i·e_j`.
    c: Vec<Scalar>,
    unit: Vec<Scalar>,
    left_reg: Vec<Matrix>,
    fingerprint: u64,
    generators: OnceLock<Vec<Vec<Scalar>>>,
    radical: OnceLock<Matrix>,
    opposite: OnceLock<Alg>,
    enveloping: OnceLock<Alg>,
}

impl fmt::Debug for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteAlgebra({}, rank {} over {})", self.name, self.n, self.base)
    }
}

impl PartialEq for FiniteAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
            && self.base == other.base
            && self.n == other.n
            && self.c == other.c
            && self.unit == other.unit
    }
}

impl Eq for FiniteAlgebra {}

/// A failed algebra axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomFailure {
    Associativity { i: usize, j: usize, k: usize },
    LeftUnit { i: usize },
    RightUnit { i: usize },
    Coefficient { i: usize, j: usize, k: usize },
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomFailure::Associativity { i, j, k } => {
                write!(f, "associativity fails on (e{i}·e{j})·e{k}")
            }
            AxiomFailure::LeftUnit { i } => write!(f, "1·e{i} ≠ e{i}"),
            AxiomFailure::RightUnit { i } => write!(f, "e{i}·1 ≠ e{i}"),
            AxiomFailure::Coefficient { i, j, k } => {
                write!(f, "coefficient c[{i}][{j}][{k}] is not in the base ring")
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub failures: Vec<AxiomFailure>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

impl FiniteAlgebra {
    /// Build from a flat structure-constant table. Shapes are checked; axioms are not (see
    /// [`FiniteAlgebra::validate`]).
    pub fn from_flat(
        name: impl Into<String>,
        base: BaseRing,
        n: usize,
        c: Vec<Scalar>,
        unit: Vec<Scalar>,
    ) -> Result<Alg> {
        if c.len() != n * n * n || unit.len() != n {
            return Err(Error::Shape(format!(
                "structure constants must have {} entries and the unit {n}",
                n * n * n
            )));
        }
        let c: Vec<Scalar> = c.iter().map(|x| base.normalize(x)).collect();
        let unit: Vec<Scalar> = unit.iter().map(|x| base.normalize(x)).collect();
        let mut left_reg = Vec::with_capacity(n);
        for i in 0..n {
            let mut m = Matrix::zeros(base, n, n);
            for j in 0..n {
                for k in 0..n {
                    let v = &c[(i * n + j) * n + k];
                    if !v.is_zero() {
                        m.set(k, j, v.clone());
                    }
                }
            }
            left_reg.push(m);
        }
        let mut h = DefaultHasher::new();
        base.hash(&mut h);
        n.hash(&mut h);
        c.hash(&mut h);
        unit.hash(&mut h);
        Ok(Arc::new(FiniteAlgebra {
            name: name.into(),
            base,
            n,
            c,
            unit,
            left_reg,
            fingerprint: h.finish(),
            generators: OnceLock::new(),
            radical: OnceLock::new(),
            opposite: OnceLock::new(),
            enveloping: OnceLock::new(),
        }))
    }

    /// Build from `mult[i][j]` = coordinates of `e_i·e_j`.
    pub fn new(
        name: impl Into<String>,
        base: BaseRing,
        mult: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
    ) -> Result<Alg> {
        let n = unit.len();
        if mult.len() != n || mult.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(Error::Shape("multiplication table must be n×n×n".into()));
        }
        let flat = mult.into_iter().flatten().flatten().collect();
        Self::from_flat(name, base, n, flat, unit)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> BaseRing {
        self.base
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i * self.n + j) * self.n + k]
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis_element(&self, i: usize) -> Vec<Scalar> {
        crate::linear::unit_vector(self.n, i)
    }

    /// Matrix of left multiplication by `e_i`.
    pub fn left_regular(&self, i: usize) -> &Matrix {
        &self.left_reg[i]
    }

    /// Matrix of left multiplication by an element.
    pub fn left_mult(&self, a: &[Scalar]) -> Matrix {
        combine(self.base, &self.left_reg, a, self.n)
    }

    /// Matrix of right multiplication by an element.
    pub fn right_mult(&self, a: &[Scalar]) -> Matrix {
        let n = self.n;
        let mut m = Matrix::zeros(self.base, n, n);
        for (j, aj) in a.iter().enumerate() {
            if aj.is_zero() {
                continue;
            }
            for i in 0..n {
                for k in 0..n {
                    let v = self.coeff(i, j, k);
                    if !v.is_zero() {
                        let cur = m.get(k, i).clone();
                        m.set(k, i, self.base.add(&cur, &self.base.mul(v, aj)));
                    }
                }
            }
        }
        m
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.left_mult(a).mul_vec(b)
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.n;
        let base = self.base;
        let mut failures = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !base.contains(self.coeff(i, j, k)) {
                        failures.push(AxiomFailure::Coefficient { i, j, k });
                    }
                }
            }
        }
        let right: Vec<Matrix> = (0..n).map(|k| self.right_mult(&self.basis_element(k))).collect();
        for i in 0..n {
            for j in 0..n {
                let eij: Vec<Scalar> = (0..n).map(|k| self.coeff(i, j, k).clone()).collect();
                for k in 0..n {
                    let lhs = right[k].mul_vec(&eij);
                    let ejk: Vec<Scalar> = (0..n).map(|l| self.coeff(j, k, l).clone()).collect();
                    let rhs = self.left_reg[i].mul_vec(&ejk);
                    if lhs != rhs {
                        failures.push(AxiomFailure::Associativity { i, j, k });
                    }
                }
            }
        }
        let lu = self.left_mult(&self.unit);
        let ru = self.right_mult(&self.unit);
        for i in 0..n {
            let e = self.basis_element(i);
            if lu.mul_vec(&e) != e {
                failures.push(AxiomFailure::LeftUnit { i });
            }
            if ru.mul_vec(&e) != e {
                failures.push(AxiomFailure::RightUnit { i });
            }
        }
        ValidationReport { failures }
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.coeff(i, j, k) == self.coeff(j, i, k))))
    }

    /// The opposite algebra (cached).
    pub fn opposite(self: &Arc<Self>) -> Alg {
        self.opposite
            .get_or_init(|| {
                let n = self.n;
                let mut c = vec![Scalar::zero(); n * n * n];
                for i in 0..n {
                    for j in 0..n {
                        for k in 0..n {
                            c[(i * n + j) * n + k] = self.coeff(j, i, k).clone();
                        }
                    }
                }
                let name = match self.name.strip_suffix("^op") {
                    Some(s) => s.to_string(),
                    None => format!("{}^op", self.name),
                };
                let op = FiniteAlgebra::from_flat(name, self.base, n, c, self.unit.clone()).expect("shape");
                if let Some(g) = self.generators.get() {
                    let _ = op.generators.set(g.clone());
                }
                // (A^op)^op is A itself, pointer-equal
                let _ = op.opposite.set(self.clone());
                op
            })
            .clone()
    }

    pub fn is_opposite_of(&self, other: &FiniteAlgebra) -> bool {
        let n = self.n;
        self.base == other.base
            && n == other.n
            && self.unit == other.unit
            && (0..n).all(|i| {
                (0..n).all(|j| (0..n).all(|k| self.coeff(i, j, k) == other.coeff(j, i, k)))
            })
    }

    /// Reduce an integral algebra modulo `p`, or re-read a field algebra over another field.
    pub fn base_change(self: &Arc<Self>, base: BaseRing) -> Result<Alg> {
        if base == self.base {
            return Ok(self.clone());
        }
        let ok = match (self.base, base) {
            (BaseRing::Integers, _) => true,
            (BaseRing::Rationals, BaseRing::PrimeField(_)) => {
                self.c.iter().chain(&self.unit).all(|x| x.is_integer())
            }
            _ => false,
        };
        if !ok {
            return Err(Error::BaseMismatch(format!("cannot change base {} → {base}", self.base)));
        }
        FiniteAlgebra::from_flat(
            format!("{}⊗{}", self.name, base),
            base,
            self.n,
            self.c.clone(),
            self.unit.clone(),
        )
    }

    /// Matrix of the trace form `(e_i, e_j) ↦ Tr(L_{e_i e_j})`.
    pub fn trace_form(&self) -> Matrix {
        let n = self.n;
        let traces: Vec<Scalar> = self.left_reg.iter().map(Matrix::trace).collect();
        let mut t = Matrix::zeros(self.base, n, n);
        for i in 0..n {
            for j in 0..n {
                let mut s = Scalar::zero();
                for (k, tr) in traces.iter().enumerate() {
                    let c = self.coeff(i, j, k);
                    if !c.is_zero() {
                        s = self.base.add(&s, &self.base.mul(c, tr));
                    }
                }
                t.set(i, j, s);
            }
        }
        t
    }

    /// A set of algebra generators: the `R`-span of all words in them is `A` (cached).
    pub fn generators(&self) -> &[Vec<Scalar>] {
        self.generators.get_or_init(|| self.compute_generators())
    }

    fn subalgebra_span(&self, gens: &[Vec<Scalar>]) -> EchelonBasis {
        let mats: Vec<Matrix> = gens.iter().map(|g| self.left_mult(g)).collect();
        let mut span = EchelonBasis::span(&Matrix::column_vector(self.base, &self.unit));
        loop {
            let mut next = span.basis().clone();
            for m in &mats {
                next = next.hstack(&m.mul(span.basis()));
            }
            let new_span = EchelonBasis::span(&next);
            if new_span.rank() == span.rank() && new_span.basis() == span.basis() {
                return span;
            }
            span = new_span;
        }
    }

    fn spans_everything(&self, span: &EchelonBasis) -> bool {
        if span.rank() < self.n {
            return false;
        }
        let sq = Subquotient::quotient(self.base, self.n, span.basis()).expect("quotient");
        sq.normal_form().is_zero()
    }

    fn compute_generators(&self) -> Vec<Vec<Scalar>> {
        let candidates: Vec<Vec<Scalar>> = (0..self.n)
            .map(|i| self.basis_element(i))
            .filter(|e| *e != self.unit)
            .collect();
        let mut chosen: Vec<Vec<Scalar>> = Vec::new();
        let mut span = self.subalgebra_span(&chosen);
        while !self.spans_everything(&span) {
            let mut best: Option<(usize, usize)> = None;
            for (idx, cand) in candidates.iter().enumerate() {
                if chosen.contains(cand) {
                    continue;
                }
                let mut trial = chosen.clone();
                trial.push(cand.clone());
                let r = self.subalgebra_span(&trial).rank();
                if best.map_or(true, |(_, b)| r > b) {
                    best = Some((idx, r));
                }
            }
            let Some((idx, _)) = best else { break };
            chosen.push(candidates[idx].clone());
            span = self.subalgebra_span(&chosen);
        }
        // drop redundant generators, last first
        let mut i = chosen.len();
        while i > 0 {
            i -= 1;
            let mut trial = chosen.clone();
            trial.remove(i);
            if self.spans_everything(&self.subalgebra_span(&trial)) {
                chosen = trial;
            }
        }
        chosen
    }

    /// Jacobson radical as a basis of columns (field base only; cached).
    pub fn radical(&self) -> Result<&Matrix> {
        if !self.base.is_field() {
            return Err(Error::BaseMismatch("the radical is computed over fields only".into()));
        }
        Ok(self.radical.get_or_init(|| super::radical::compute(self)))
    }

    pub fn is_semisimple(&self) -> Result<bool> {
        Ok(self.radical()?.cols() == 0)
    }
}

/// `Σ a_i m_i` over a base ring.
pub(crate) fn combine(base: BaseRing, mats: &[Matrix], a: &[Scalar], n: usize) -> Matrix {
    let mut m = Matrix::zeros(base, mats.first().map_or(n, Matrix::rows), mats.first().map_or(n, Matrix::cols));
    for (ai, mi) in a.iter().zip(mats) {
        if ai.is_zero() {
            continue;
        }
        if ai.is_one() {
            m = m.add(mi);
        } else {
            m = m.add(&mi.scale(ai));
        }
    }
    m
}

/// Tensor product `A ⊗_R B` with basis index `i*rank(B) + j`.
pub fn tensor_algebra(a: &Alg, b: &Alg) -> Result<Alg> {
    if a.base() != b.base() {
        return Err(Error::BaseMismatch("tensor product of algebras over different bases".into()));
    }
    let (na, nb) = (a.rank(), b.rank());
    let n = na * nb;
    let mut c = vec![Scalar::zero(); n * n * n];
    let base = a.base();
    for i in 0..na {
        for i2 in 0..na {
            for k in 0..na {
                let x = a.coeff(i, i2, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..nb {
                    for j2 in 0..nb {
                        for l in 0..nb {
                            let y = b.coeff(j, j2, l);
                            if y.is_zero() {
                                continue;
                            }
                            let (p, q, r) = (i * nb + j, i2 * nb + j2, k * nb + l);
                            c[(p * n + q) * n + r] = base.mul(x, y);
                        }
                    }
                }
            }
        }
    }
    let mut unit = vec![Scalar::zero(); n];
    for (i, ui) in a.unit().iter().enumerate() {
        for (j, uj) in b.unit().iter().enumerate() {
            unit[i * nb + j] = base.mul(ui, uj);
        }
    }
    let t = FiniteAlgebra::from_flat(format!("{}⊗{}", a.name(), b.name()), base, n, c, unit)?;
    // x⊗1 and 1⊗y for generators x of A and y of B generate A ⊗ B
    let gens = a
        .generators()
        .iter()
        .map(|x| pure_tensor(base, x, b.unit()))
        .chain(b.generators().iter().map(|y| pure_tensor(base, a.unit(), y)))
        .collect();
    let _ = t.generators.set(gens);
    Ok(t)
}

/// The enveloping algebra `A ⊗_R A^op`; bimodules over `A` are left modules over it.
pub fn enveloping(a: &Alg) -> Result<Alg> {
    if let Some(e) = a.enveloping.get() {
        return Ok(e.clone());
    }
    let e = tensor_algebra(a, &a.opposite())?;
    Ok(a.enveloping.get_or_init(|| e).clone())
}

/// Coordinates of `x ⊗ y` in `A ⊗ B`.
pub fn pure_tensor(base: BaseRing, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); x.len() * y.len()];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            v[i * y.len() + j] = base.mul(xi, yj);
        }
    }
    v
}
