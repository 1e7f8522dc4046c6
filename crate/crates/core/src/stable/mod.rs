//! G-projective modules, complete resolutions, Tate cohomology and the stable category.

mod complete;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

pub use complete::{biduality, total_acyclicity_probe, AcyclicityReport, Biduality, CompleteResolution};

use crate::algebra::{Alg, HomSpace, Module, ModuleMap};
use crate::error::{Error, Result};
use crate::gorenstein::{gorenstein_check, GorensteinStatus};
use crate::homological::{ext, homology, is_projective, phom_generators, proj_dim, FinitenessVerdict, GradedGroups};
use crate::linear::{solve_congruences, Matrix, NormalForm, Scalar, Subquotient};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GpCertificate {
    /// The argument that makes `Ext^i(M, A) = 0` for all `i ≥ 1` follow from the checked range.
    pub closure: String,
    /// `Ext^i(M, A) = 0` was computed for `1 ≤ i ≤ ext_checked`.
    pub ext_checked: usize,
    pub biduality: bool,
    /// `Ext^i_{A^op}(M*, A) = 0` was computed for `1 ≤ i ≤ dual_ext_checked`.
    pub dual_ext_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum GpVerdict {
    Yes { certificate: GpCertificate },
    /// `witness` is a degree `i ≥ 1` with `Ext^i(M, A) ≠ 0` when there is one.
    No { witness: Option<usize>, reason: String },
    Inconclusive { reason: String },
}

impl GpVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, GpVerdict::Yes { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, GpVerdict::No { .. })
    }
}

type BoundKey = (u64, String, usize);

fn bound_cache() -> &'static Mutex<HashMap<BoundKey, Option<usize>>> {
    static CACHE: OnceLock<Mutex<HashMap<BoundKey, Option<usize>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Largest injective dimension of `A` over all sites, when `A` is certified Gorenstein.
/// Memoised per algebra and depth.
pub fn gorenstein_bound(a: &Alg, depth: usize) -> Result<Option<usize>> {
    let key = (a.fingerprint(), a.name().to_string(), depth);
    if let Some(b) = bound_cache().lock().expect("cache").get(&key) {
        return Ok(*b);
    }
    let b = match gorenstein_check(a, depth)?.status {
        GorensteinStatus::Gorenstein { sites } => sites.values().map(|d| d.d_left.max(d.d_right)).max(),
        _ => None,
    };
    bound_cache().lock().expect("cache").insert(key, b);
    Ok(b)
}

fn first_nonzero(g: &GradedGroups, from: i64) -> Option<usize> {
    g.groups.iter().find(|(i, nf)| **i >= from && !nf.is_zero()).map(|(i, _)| *i as usize)
}

enum Closure {
    Projective,
    FinitePd(usize),
    Range(String, usize),
    Unknown,
}

/// A degree `k` such that `Ext^i(M, A) = 0` for `1 ≤ i ≤ k` forces it for all `i ≥ 1`: the
/// injective dimension of a Gorenstein algebra when known, else (field base) a syzygy
/// recurrence.
fn closure(m: &Module, depth: usize, bound: &mut dyn FnMut() -> Result<Option<usize>>) -> Result<Closure> {
    if is_projective(m)? {
        return Ok(Closure::Projective);
    }
    if let Some(g) = bound()? {
        return Ok(Closure::Range(format!("injective dimension of A is at most {g} at every site"), g + 1));
    }
    if !m.base().is_field() {
        return Ok(Closure::Unknown);
    }
    // Ext^i(-, A) is a stable invariant for i ≥ 1, so a recurrence Ω^b ≅ (Ω^a)^m folds every
    // degree above b back into 1..=b.
    Ok(match proj_dim(m, depth)? {
        FinitenessVerdict::Finite { d, .. } => Closure::FinitePd(d),
        FinitenessVerdict::InfiniteCertified { certificate: c } => Closure::Range(
            format!("syzygy recurrence Ω^{} ≅ (Ω^{})^{} stably", c.b, c.a, c.multiplicity),
            c.b.max(1),
        ),
        FinitenessVerdict::AtLeast { .. } => Closure::Unknown,
    })
}

/// Decide whether `M` is G-projective: `Ext^i(M, A) = 0` and `Ext^i(M*, A) = 0` for `i ≥ 1`
/// and `M → M**` bijective. The infinite range is closed by a syzygy recurrence (field base)
/// or by the injective dimension of a Gorenstein algebra.
pub fn is_gprojective(m: &Module, depth: usize) -> Result<GpVerdict> {
    is_gprojective_with(m, depth, None)
}

/// As [`is_gprojective`], with a known bound on the injective dimension of `A` at all sites.
pub fn is_gprojective_with(m: &Module, depth: usize, gorenstein_dim: Option<usize>) -> Result<GpVerdict> {
    if !m.is_lattice() {
        return Ok(GpVerdict::No {
            witness: None,
            reason: "M has torsion over the base, but G-projectives embed in free modules".into(),
        });
    }
    let a = m.alg().clone();
    let mut cached: Option<Option<usize>> = gorenstein_dim.map(Some);
    let mut bound = || -> Result<Option<usize>> {
        if cached.is_none() {
            cached = Some(gorenstein_bound(&a, depth)?);
        }
        Ok(cached.unwrap())
    };
    let (note, k) = match closure(m, depth, &mut bound)? {
        Closure::Projective => {
            return Ok(GpVerdict::Yes {
                certificate: GpCertificate {
                    closure: "M is projective".into(),
                    ext_checked: 0,
                    biduality: true,
                    dual_ext_checked: 0,
                },
            })
        }
        Closure::FinitePd(d) => {
            return Ok(GpVerdict::No {
                witness: Some(d),
                reason: format!("pd M = {d} is finite and positive, so Ext^{d}(M, A) ≠ 0"),
            })
        }
        Closure::Range(note, k) => (note, k),
        Closure::Unknown => {
            return Ok(GpVerdict::Inconclusive {
                reason: format!("no syzygy recurrence within depth {depth} and no Gorenstein bound"),
            })
        }
    };
    let e = ext(m, &Module::regular(&a), k)?;
    if let Some(i) = first_nonzero(&e, 1) {
        return Ok(GpVerdict::No { witness: Some(i), reason: format!("Ext^{i}(M, A) = {}", e.groups[&(i as i64)]) });
    }
    let bid = biduality(m)?;
    if !bid.bijective {
        return Ok(GpVerdict::No { witness: None, reason: "M → M** is not bijective".into() });
    }
    let dk = match closure(&bid.dual, depth, &mut bound)? {
        Closure::Projective => 0,
        Closure::FinitePd(d) => {
            return Ok(GpVerdict::No { witness: None, reason: format!("pd M* = {d} is finite and positive") })
        }
        Closure::Range(_, k) => k,
        Closure::Unknown => {
            return Ok(GpVerdict::Inconclusive {
                reason: "Ext^i(M, A) vanishes but no closure is known for M*".into(),
            })
        }
    };
    if dk > 0 {
        let de = ext(&bid.dual, &Module::regular(bid.dual.alg()), dk)?;
        if let Some(i) = first_nonzero(&de, 1) {
            return Ok(GpVerdict::No { witness: None, reason: format!("Ext^{i}(M*, A) ≠ 0 over A^op") });
        }
    }
    Ok(GpVerdict::Yes {
        certificate: GpCertificate { closure: note, ext_checked: k, biduality: true, dual_ext_checked: dk },
    })
}

/// A complete resolution of a certified G-projective `M`, built out to `window`.
pub fn complete_resolution(m: &Module, window: (i64, i64), depth: usize) -> Result<CompleteResolution> {
    let v = is_gprojective(m, depth)?;
    if !v.is_yes() {
        return Err(Error::Precondition(format!("M is not certified G-projective: {v:?}")));
    }
    let mut c = CompleteResolution::new(m)?;
    c.ensure(window.0, window.1)?;
    Ok(c)
}

/// `H^i(Hom_A(X, N))` for `i` in `range`.
pub fn tate_from(x: &mut CompleteResolution, n: &Module, range: (i64, i64)) -> Result<GradedGroups> {
    let (a, b) = range;
    x.ensure(-b - 1, -a + 1)?;
    let base = n.base();
    let space = |i: i64| HomSpace::new(x.term(-i), n);
    let mut out = GradedGroups::new(a, b);
    let mut prev = space(a - 1)?;
    let mut cur = space(a)?;
    for i in a..=b {
        let next = space(i + 1)?;
        // Hom(X^{-i}, N) → Hom(X^{-i-1}, N), precomposition with d^{-i-1}
        let incoming = prev.precompose(&cur, x.differential(-i).matrix())?;
        let outgoing = cur.precompose(&next, x.differential(-i - 1).matrix())?;
        let h = homology(
            base,
            &incoming,
            &cur.normal_form().relation_matrix(base),
            &outgoing,
            &next.normal_form().relation_matrix(base),
        )?;
        out.insert(i, h.normal_form().clone());
        prev = cur;
        cur = next;
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct TateExt {
    pub groups: GradedGroups,
    pub verdict: GpVerdict,
    /// Set when `M` was replaced by its G-projective approximation.
    pub substitution: Option<String>,
}

/// Tate cohomology `Ext-hat^i(M, N)` over `range`. A module that is not G-projective is first
/// replaced by `X_M` from its G-projective approximation.
pub fn tate_ext(m: &Module, n: &Module, range: (i64, i64), depth: usize) -> Result<TateExt> {
    let verdict = is_gprojective(m, depth)?;
    let (source, substitution) = if verdict.is_yes() {
        (m.clone(), None)
    } else {
        let t = crate::approximation::gprojective_approximation(m, depth)?;
        (t.gprojective_part.clone(), Some(format!("M replaced by X_M (syzygy walk n = {})", t.steps)))
    };
    let mut x = CompleteResolution::new(&source)?;
    let groups = tate_from(&mut x, n, range)?;
    Ok(TateExt { groups, verdict, substitution })
}

/// `Hom_A(M, N)` modulo maps factoring through a projective.
#[derive(Clone, Debug)]
pub struct StableHom {
    pub hom: HomSpace,
    quotient: Subquotient,
}

impl StableHom {
    pub fn normal_form(&self) -> &NormalForm {
        self.quotient.normal_form()
    }

    pub fn dim(&self) -> usize {
        self.quotient.generators()
    }

    pub fn is_zero(&self) -> bool {
        self.normal_form().is_zero()
    }

    /// Class of an `A`-linear map `M → N`.
    pub fn class_of(&self, f: &Matrix) -> Result<Vec<Scalar>> {
        let c = self.hom.coords_of(f)?;
        self.quotient
            .coords(&c)
            .ok_or_else(|| Error::Precondition("map is not in the Hom space".into()))
    }

    /// Representative maps of the canonical generators.
    pub fn basis(&self) -> Vec<ModuleMap> {
        let reps = self.quotient.reps();
        (0..reps.cols()).map(|j| self.hom.map(&reps.column(j))).collect()
    }
}

pub fn stable_hom(m: &Module, n: &Module) -> Result<StableHom> {
    let hom = HomSpace::new(m, n)?;
    let base = m.base();
    let mut cols = Vec::new();
    for g in phom_generators(m, n)? {
        cols.push(hom.coords_of(&g)?);
    }
    let l0 = Matrix::from_columns(base, hom.dim(), &cols).hstack(&hom.normal_form().relation_matrix(base));
    let quotient = Subquotient::quotient(base, hom.dim(), &l0)?;
    Ok(StableHom { hom, quotient })
}

/// `Ω^i M` for a certified G-projective `M` and any integer `i`.
pub fn stable_syzygy(m: &Module, i: i64, depth: usize) -> Result<Module> {
    let mut c = complete_resolution(m, (0, 0), depth)?;
    c.syzygy(i)
}

/// Some `f: X → Y` with `f∘h = g`, for `h: W → X` and `g: W → Y`.
pub fn extend_along(h: &ModuleMap, g: &ModuleMap) -> Result<Option<ModuleMap>> {
    let hs = HomSpace::new(h.target(), g.target())?;
    let basis = hs.basis();
    let gw = h.source().dim();
    let gy = g.target().dim();
    let cols: Vec<Vec<Scalar>> = basis.iter().map(|b| b.after(h).expect("composable").matrix().vectorize()).collect();
    let sol = solve_congruences(
        h.source().base(),
        gy * gw,
        &cols,
        &g.matrix().vectorize(),
        &g.target().normal_form().vec_moduli(gw),
    )?;
    Ok(sol.map(|c| {
        basis
            .iter()
            .zip(&c)
            .fold(ModuleMap::zero(h.target(), g.target()), |acc, (b, ci)| acc.add(&b.scale(ci)))
    }))
}

#[cfg(test)]
mod tests;
