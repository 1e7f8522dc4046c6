use crate::algebra::{HomSpace, Module, ModuleMap};
use crate::error::{Error, Result};
use crate::linear::{solve_congruences, EchelonBasis, Matrix, Scalar, Subquotient};

/// A surjection from a projective module.
#[derive(Clone, Debug)]
pub struct Cover {
    pub projective: Module,
    pub map: ModuleMap,
}

/// `R`-basis (columns) of `rad(A)·M`; field base only.
pub fn radical_span(m: &Module) -> Result<Matrix> {
    let rad = m.alg().radical()?;
    let mut out = Matrix::zeros(m.base(), m.dim(), 0);
    for j in 0..rad.cols() {
        out = out.hstack(&m.act_elem(&rad.column(j)));
    }
    Ok(crate::linear::span_basis(&out))
}

/// `M / rad(A)·M` with the projection.
pub fn top(m: &Module) -> Result<(Module, ModuleMap)> {
    m.quotient(&radical_span(m)?)
}

/// Projective cover: minimal over a field, a free module on a small generating set over `Z`.
pub fn projective_cover(m: &Module) -> Result<Cover> {
    if m.is_zero() {
        let z = Module::zero(m.alg());
        return Ok(Cover { map: ModuleMap::zero(&z, m), projective: z });
    }
    if m.base().is_field() {
        minimal_cover(m)
    } else {
        free_cover(m)
    }
}

fn minimal_cover(m: &Module) -> Result<Cover> {
    let alg = m.alg();
    let base = m.base();
    let (t, q) = top(m)?;
    let g = t.dim();
    let mut lifts = Matrix::zeros(base, m.dim(), g);
    for j in 0..g {
        let x = q
            .preimage(&crate::linear::unit_vector(g, j))?
            .ok_or_else(|| Error::Precondition("top projection is not surjective".into()))?;
        for (i, v) in x.into_iter().enumerate() {
            lifts.set(i, j, v);
        }
    }
    let free = Module::free(alg, g);
    let pi = ModuleMap::from_free_images(&free, m, &lifts)?;
    if free.dim() == m.dim() {
        return Ok(Cover { projective: free, map: pi });
    }
    // rho: A^g → (A/rad)^g, pibar: (A/rad)^g → top
    let rad = alg.radical()?.clone();
    let mut rad_g = Matrix::zeros(base, free.dim(), 0);
    for j in 0..g {
        let mut block = Matrix::zeros(base, free.dim(), rad.cols());
        block.set_block(j * alg.rank(), 0, &rad);
        rad_g = rad_g.hstack(&block);
    }
    let (qg, rho) = free.quotient(&rad_g)?;
    let pibar = rho.factor(&q.after(&pi)?)?;
    // an A-linear section of pibar
    let hs = HomSpace::new(&t, &qg)?;
    let basis = hs.basis();
    let cols: Vec<Vec<Scalar>> = basis.iter().map(|h| pibar.after(h).expect("composable").matrix().vectorize()).collect();
    let rhs = Matrix::identity(base, g).vectorize();
    let c = solve_congruences(base, g * g, &cols, &rhs, &vec![None; g * g])?
        .ok_or_else(|| Error::Precondition("the top has no section; algebra radical is wrong".into()))?;
    let sigma = basis
        .iter()
        .zip(&c)
        .fold(ModuleMap::zero(&t, &qg), |acc, (h, ci)| acc.add(&h.scale(ci)));
    let e = sigma.after(&pibar)?;
    // lift e to an endomorphism of A^g and purify it into an idempotent
    let mut imgs = Matrix::zeros(base, free.dim(), g);
    let n = alg.rank();
    for l in 0..g {
        let eps = unit_in_block(free.dim(), alg.unit(), l * n);
        let y = e.apply(&rho.apply(&eps));
        let x = rho.preimage(&y)?.expect("rho is surjective");
        for (i, v) in x.into_iter().enumerate() {
            imgs.set(i, l, v);
        }
    }
    let mut idem = ModuleMap::from_free_images(&free, &free, &imgs)?;
    for _ in 0..64 {
        let sq = idem.after(&idem)?;
        if sq.same_as(&idem) {
            break;
        }
        let cube = sq.after(&idem)?;
        idem = sq.scale(&Scalar::from(3)).sub(&cube.scale(&Scalar::from(2)));
    }
    if !idem.after(&idem)?.same_as(&idem) {
        return Err(Error::Precondition("idempotent lifting did not converge".into()));
    }
    let (p, _, incl) = idem.image()?;
    let map = pi.after(&incl)?;
    debug_assert_eq!(top(&p)?.0.dim(), g);
    Ok(Cover { projective: p, map })
}

/// The standard generator `1·ε` of `A^g` whose block starts at `off`.
fn unit_in_block(len: usize, unit: &[Scalar], off: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); len];
    for (i, u) in unit.iter().enumerate() {
        v[off + i] = u.clone();
    }
    v
}

fn spans(m: &Module, gens: &[usize]) -> Result<(bool, usize)> {
    let g = m.dim();
    let mut cols = Matrix::zeros(m.base(), g, 0);
    for &j in gens {
        cols = cols.hstack(&Matrix::column_vector(m.base(), &crate::linear::unit_vector(g, j)));
    }
    let span = m.a_span(&cols).hstack(&m.relations());
    let sq = Subquotient::with_lattice(EchelonBasis::full(m.base(), g), &span, m.base())?;
    Ok((sq.normal_form().is_zero(), sq.generators()))
}

fn free_cover(m: &Module) -> Result<Cover> {
    let g = m.dim();
    let mut chosen: Vec<usize> = Vec::new();
    loop {
        let (done, _) = spans(m, &chosen)?;
        if done {
            break;
        }
        let mut best: Option<(usize, usize)> = None;
        for j in (0..g).filter(|j| !chosen.contains(j)) {
            let mut trial = chosen.clone();
            trial.push(j);
            let (_, left) = spans(m, &trial)?;
            if best.map_or(true, |(_, b)| left < b) {
                best = Some((j, left));
            }
        }
        let (j, _) = best.ok_or_else(|| Error::Precondition("module is not finitely generated".into()))?;
        chosen.push(j);
    }
    let mut i = chosen.len();
    while i > 0 {
        i -= 1;
        let mut trial = chosen.clone();
        trial.remove(i);
        if spans(m, &trial)?.0 {
            chosen = trial;
        }
    }
    let mut imgs = Matrix::zeros(m.base(), g, chosen.len());
    for (k, &j) in chosen.iter().enumerate() {
        imgs.set(j, k, Scalar::one());
    }
    let free = Module::free(m.alg(), chosen.len());
    let map = ModuleMap::from_free_images(&free, m, &imgs)?;
    Ok(Cover { projective: free, map })
}

/// Whether `M` is projective. Over a field: the minimal cover is an isomorphism. Over `Z`:
/// `M` is a lattice and its free cover splits.
pub fn is_projective(m: &Module) -> Result<bool> {
    Ok(splitting(m)?.is_some())
}

/// A section of the cover when `M` is projective.
pub fn splitting(m: &Module) -> Result<Option<(Cover, ModuleMap)>> {
    if m.is_zero() {
        let c = projective_cover(m)?;
        let s = ModuleMap::zero(m, &c.projective);
        return Ok(Some((c, s)));
    }
    if !m.is_lattice() {
        return Ok(None);
    }
    let c = projective_cover(m)?;
    if m.base().is_field() {
        if c.projective.dim() != m.dim() {
            return Ok(None);
        }
        let inv = c.map.inverse()?.ok_or_else(|| Error::Precondition("cover of equal dimension is not bijective".into()))?;
        return Ok(Some((c, inv)));
    }
    let hs = HomSpace::new(m, &c.projective)?;
    let basis = hs.basis();
    let g = m.dim();
    let cols: Vec<Vec<Scalar>> = basis.iter().map(|h| c.map.after(h).expect("composable").matrix().vectorize()).collect();
    let rhs = Matrix::identity(m.base(), g).vectorize();
    let sol = solve_congruences(m.base(), g * g, &cols, &rhs, &m.normal_form().vec_moduli(g))?;
    Ok(sol.map(|coef| {
        let s = basis
            .iter()
            .zip(&coef)
            .fold(ModuleMap::zero(m, &c.projective), |acc, (h, x)| acc.add(&h.scale(x)));
        (c, s)
    }))
}
