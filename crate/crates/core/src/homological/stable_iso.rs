use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::cover::{is_projective, projective_cover};
use crate::algebra::{module_iso, HomSpace, Module, ModuleMap};
use crate::error::Result;
use crate::linear::{solve_congruences, Matrix, Scalar};

/// Random candidates tried after the basis pass.
pub const STABLE_TRIALS: usize = 24;

/// Matrices `X → Y` spanning the maps that factor through a projective module.
pub fn phom_generators(x: &Module, y: &Module) -> Result<Vec<Matrix>> {
    let cover = projective_cover(y)?;
    let hs = HomSpace::new(x, &cover.projective)?;
    hs.basis()
        .iter()
        .map(|h| Ok(cover.map.after(h)?.matrix().clone()))
        .collect()
}

pub fn factors_through_projective(f: &ModuleMap) -> Result<bool> {
    let gens = phom_generators(f.source(), f.target())?;
    let (gt, gs) = (f.target().dim(), f.source().dim());
    let cols: Vec<Vec<Scalar>> = gens.iter().map(Matrix::vectorize).collect();
    let sol = solve_congruences(
        f.source().base(),
        gt * gs,
        &cols,
        &f.matrix().vectorize(),
        &f.target().normal_form().vec_moduli(gs),
    )?;
    Ok(sol.is_some())
}

/// A pair `f: M → N`, `g: N → M` inverse to each other modulo maps factoring through
/// projectives.
#[derive(Clone, Debug)]
pub struct StableIso {
    pub forward: ModuleMap,
    pub backward: ModuleMap,
}

/// Search for an isomorphism in the stable category. `None` means none was found.
pub fn stable_iso(m: &Module, n: &Module, seed: u64) -> Result<Option<StableIso>> {
    let (pm, pn) = (is_projective(m)?, is_projective(n)?);
    if pm || pn {
        return Ok((pm && pn).then(|| StableIso { forward: ModuleMap::zero(m, n), backward: ModuleMap::zero(n, m) }));
    }
    if m.normal_form() == n.normal_form() {
        if let crate::algebra::IsoOutcome::Iso { forward, backward } = module_iso(m, n)? {
            return Ok(Some(StableIso { forward, backward }));
        }
    }
    let hmn = HomSpace::new(m, n)?;
    if hmn.is_zero() {
        return Ok(None);
    }
    let hnm = HomSpace::new(n, m)?;
    let back = hnm.basis();
    let pm_gens = phom_generators(m, m)?;
    let pn_gens = phom_generators(n, n)?;
    let mut candidates = hmn.basis();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..STABLE_TRIALS {
        let c: Vec<Scalar> = (0..hmn.dim()).map(|_| Scalar::from(rng.gen_range(-3i64..=3))).collect();
        candidates.push(hmn.map(&c));
    }
    for f in candidates {
        if let Some(g) = stable_inverse(&f, &back, &pm_gens, &pn_gens)? {
            return Ok(Some(StableIso { forward: f, backward: g }));
        }
    }
    Ok(None)
}

/// Solve `g∘f − 1 ∈ PHom(M,M)`, `f∘g − 1 ∈ PHom(N,N)` for `g` in the span of `back`.
fn stable_inverse(f: &ModuleMap, back: &[ModuleMap], pm: &[Matrix], pn: &[Matrix]) -> Result<Option<ModuleMap>> {
    let (m, n) = (f.source(), f.target());
    let (gm, gn) = (m.dim(), n.dim());
    let rows = gm * gm + gn * gn;
    let stack = |top: Option<Vec<Scalar>>, bottom: Option<Vec<Scalar>>| -> Vec<Scalar> {
        let mut v = top.unwrap_or_else(|| vec![Scalar::zero(); gm * gm]);
        v.extend(bottom.unwrap_or_else(|| vec![Scalar::zero(); gn * gn]));
        v
    };
    let mut cols = Vec::new();
    for h in back {
        cols.push(stack(Some(h.after(f)?.matrix().vectorize()), Some(f.after(h)?.matrix().vectorize())));
    }
    for p in pm {
        cols.push(stack(Some(p.neg().vectorize()), None));
    }
    for q in pn {
        cols.push(stack(None, Some(q.neg().vectorize())));
    }
    let rhs = stack(
        Some(Matrix::identity(m.base(), gm).vectorize()),
        Some(Matrix::identity(m.base(), gn).vectorize()),
    );
    let mut moduli = m.normal_form().vec_moduli(gm);
    moduli.extend(n.normal_form().vec_moduli(gn));
    let Some(c) = solve_congruences(m.base(), rows, &cols, &rhs, &moduli)? else {
        return Ok(None);
    };
    let g = back
        .iter()
        .zip(&c)
        .fold(ModuleMap::zero(n, m), |acc, (h, x)| acc.add(&h.scale(x)));
    Ok(Some(g))
}
