//! G-projective and G-injective approximations, the Serre operator and the Nakayama square.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Module, ModuleMap};
use crate::error::{Error, Result};
use crate::gorenstein::{conakayama, nakayama};
use crate::homological::{
    ext, homology, is_projective, proj_dim, stable_iso, syzygy, FinitenessVerdict, Resolution,
};
use crate::stable::{extend_along, gorenstein_bound, is_gprojective_with, CompleteResolution, GpVerdict};

const SQUARE_SEED: u64 = 0x5e77_e0ca;

/// Cooperative cancellation, checked between syzygy steps.
#[derive(Clone, Debug, Default)]
pub struct Cancel(Arc<AtomicBool>);

impl Cancel {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }

    fn check(&self) -> Result<()> {
        if self.is_cancelled() {
            Err(Error::Cancelled)
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ApproximationCertificate {
    /// `0 → Y → X → M → 0` is exact.
    pub exact: bool,
    pub gprojective: GpVerdict,
    pub finite_pd: FinitenessVerdict,
}

impl ApproximationCertificate {
    pub fn passed(&self) -> bool {
        self.exact && self.gprojective.is_yes() && self.finite_pd.finite().is_some()
    }
}

/// `0 → Y_M → X_M → M → 0` with `X_M` G-projective and `pd Y_M < ∞`.
#[derive(Clone, Debug)]
pub struct ApproximationTriple {
    pub target: Module,
    pub gprojective_part: Module,
    pub finite_part: Module,
    pub epi: ModuleMap,
    pub mono: ModuleMap,
    /// Least `n` with `Ω^n M` G-projective.
    pub steps: usize,
    /// Whether `P_0` had to be added to `X_M` to make the comparison map onto.
    pub padded: bool,
    pub certificate: ApproximationCertificate,
}

impl ApproximationTriple {
    /// `Ext^i(G, Y_M) = 0` for `1 ≤ i ≤ max`.
    pub fn orthogonal_to(&self, g: &Module, max: usize) -> Result<bool> {
        let e = ext(g, &self.finite_part, max)?;
        Ok((1..=max as i64).all(|i| e.get(i).is_some_and(|nf| nf.is_zero())))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "target": self.target.normal_form().to_string(),
            "gprojective_part": self.gprojective_part.normal_form().to_string(),
            "finite_part": self.finite_part.normal_form().to_string(),
            "steps": self.steps,
            "padded": self.padded,
            "certificate": serde_json::to_value(&self.certificate).unwrap_or(Value::Null),
            "passed": self.certificate.passed(),
        })
    }
}

fn short_exact(mono: &ModuleMap, epi: &ModuleMap) -> Result<bool> {
    if !mono.is_injective()? || !epi.is_surjective()? {
        return Ok(false);
    }
    let x = epi.source();
    let h = homology(x.base(), mono.matrix(), &x.relations(), epi.matrix(), &epi.target().relations())?;
    Ok(h.normal_form().is_zero())
}

fn order_bound(m: &Module, depth: usize) -> Result<Option<usize>> {
    gorenstein_bound(m.alg(), depth)
}

/// Last syzygy worth testing. Over a Gorenstein algebra `Ω^g M` is G-projective; a recurrence
/// `Ω^b ≅ (Ω^a)^m` means no later syzygy is G-projective unless one of `Ω^0..=Ω^b` is.
fn walk_limit(m: &Module, depth: usize, bound: Option<usize>) -> Result<(usize, Option<String>)> {
    if let Some(g) = bound {
        return Ok((g.min(depth), None));
    }
    if !m.base().is_field() {
        return Ok((depth, None));
    }
    Ok(match proj_dim(m, depth)? {
        FinitenessVerdict::Finite { d, .. } => (d.min(depth), None),
        FinitenessVerdict::InfiniteCertified { certificate: c } => (
            c.b.min(depth),
            Some(format!("syzygy recurrence Ω^{} ≅ (Ω^{})^{} stably", c.b, c.a, c.multiplicity)),
        ),
        FinitenessVerdict::AtLeast { .. } => (depth, None),
    })
}

pub fn gprojective_approximation(m: &Module, depth: usize) -> Result<ApproximationTriple> {
    gprojective_approximation_with(m, depth, &Cancel::new())
}

/// Syzygy walk: find the least `n` with `Ω^n M` G-projective, build its complete resolution
/// and lift the inclusion `Ω^n M ↪ P_{n-1}` to a chain map from `X^{≥1}` to the resolution
/// of `M`. `X_M` is the cokernel of `X^{n-1} → X^n`.
pub fn gprojective_approximation_with(m: &Module, depth: usize, cancel: &Cancel) -> Result<ApproximationTriple> {
    let bound = order_bound(m, depth)?;
    let mut res = Resolution::new(m);
    let mut failures = Vec::new();
    let mut found = None;
    let (limit, recurrence) = walk_limit(m, depth, bound)?;
    for k in 0..=limit {
        cancel.check()?;
        if k > 0 {
            res.extend_to(k - 1)?;
        }
        let v = is_gprojective_with(res.syzygy(k), depth, bound)?;
        if v.is_yes() {
            found = Some(k);
            break;
        }
        failures.push(format!("Ω^{k}: {v:?}"));
    }
    let n = found.ok_or_else(|| match &recurrence {
        Some(r) => Error::Precondition(format!("no syzygy is G-projective ({r}): {}", failures.join("; "))),
        None => Error::NotCertified { depth, reason: format!("no G-projective syzygy found: {}", failures.join("; ")) },
    })?;
    let alg = m.alg();
    if n == 0 {
        let zero = Module::zero(alg);
        let epi = ModuleMap::identity(m);
        let mono = ModuleMap::zero(&zero, m);
        let gp = is_gprojective_with(m, depth, bound)?;
        let certificate =
            ApproximationCertificate { exact: short_exact(&mono, &epi)?, gprojective: gp, finite_pd: proj_dim(&zero, 1)? };
        return Ok(ApproximationTriple {
            target: m.clone(),
            gprojective_part: m.clone(),
            finite_part: zero,
            epi,
            mono,
            steps: 0,
            padded: false,
            certificate,
        });
    }
    let g = res.syzygy(n).clone();
    let mut x = CompleteResolution::new(&g)?;
    x.ensure(0, n as i64)?;
    // f_k: X^k → P_{n-k}
    let start = res.syzygy_inclusion(n).after(x.augmentation())?;
    let mut f = extend_along(&x.differential(0), &start)?
        .ok_or_else(|| Error::Precondition("Ω^n M ↪ P_{n-1} does not extend over X^1".into()))?;
    for k in 2..=n {
        cancel.check()?;
        let dp = res.differential(n - k + 1);
        let target = dp.after(&f)?;
        f = extend_along(&x.differential(k as i64 - 1), &target)?
            .ok_or_else(|| Error::Precondition(format!("chain map does not extend to X^{k}")))?;
    }
    let phi = res.augmentation().after(&f)?;
    let (xm, q) = x.differential(n as i64 - 1).cokernel()?;
    let comparison = q.factor(&phi)?;
    let (gpart, epi, padded) = if comparison.is_surjective()? {
        (xm, comparison, false)
    } else {
        let ds = Module::direct_sum(&[xm.clone(), res.term(0).clone()])?;
        let e = comparison
            .after(&ds.projections[0])?
            .add(&res.augmentation().after(&ds.projections[1])?);
        (ds.module, e, true)
    };
    let (y, mono) = epi.kernel()?;
    let certificate = ApproximationCertificate {
        exact: short_exact(&mono, &epi)?,
        gprojective: is_gprojective_with(&gpart, depth, bound)?,
        finite_pd: proj_dim(&y, depth.max(n + 1))?,
    };
    Ok(ApproximationTriple {
        target: m.clone(),
        gprojective_part: gpart,
        finite_part: y,
        epi,
        mono,
        steps: n,
        padded,
        certificate,
    })
}

/// `0 → M → Y^M → X^M → 0` with `Y^M` G-injective and `X^M` of finite injective dimension,
/// obtained by dualising the approximation of `DM` over `A^op`. Field base only.
#[derive(Clone, Debug)]
pub struct CoapproximationTriple {
    pub target: Module,
    pub ginjective_part: Module,
    pub finite_part: Module,
    pub mono: ModuleMap,
    pub epi: ModuleMap,
    pub exact: bool,
    /// The approximation of `DM` over `A^op` that was dualised.
    pub dual: ApproximationTriple,
}

impl CoapproximationTriple {
    pub fn passed(&self) -> bool {
        self.exact && self.dual.certificate.passed()
    }
}

pub fn ginjective_approximation_artin(m: &Module, depth: usize) -> Result<CoapproximationTriple> {
    if !m.base().is_field() {
        return Err(Error::ArtinBaseRequired("G-injective approximations need a field base".into()));
    }
    let alg = m.alg();
    let dm = m.dual_over_base()?;
    let t = gprojective_approximation(&dm, depth)?;
    let yi = t.gprojective_part.dual_over_base()?.over(alg)?;
    let xf = t.finite_part.dual_over_base()?.over(alg)?;
    // D(DM) = M on canonical coordinates.
    let mono = ModuleMap::new(m, &yi, t.epi.matrix().transpose())?;
    let epi = ModuleMap::new(&yi, &xf, t.mono.matrix().transpose())?;
    let exact = short_exact(&mono, &epi)?;
    Ok(CoapproximationTriple { target: m.clone(), ginjective_part: yi, finite_part: xf, mono, epi, exact, dual: t })
}

#[derive(Clone, Debug)]
pub struct SerreImage {
    pub module: Module,
    pub d: usize,
    pub approximation: ApproximationTriple,
    pub verdict: GpVerdict,
}

/// `S(M) = Ω^{1-d} GP(ω ⊗_A M)`, where `d` is the Krull dimension of the base at the site.
pub fn serre_operator(m: &Module, d: usize, depth: usize) -> Result<SerreImage> {
    if d > 1 {
        return Err(Error::InvalidInput(format!("site dimension {d} is not 0 or 1")));
    }
    let bound = order_bound(m, depth)?;
    let v = is_gprojective_with(m, depth, bound)?;
    if !v.is_yes() {
        return Err(Error::Precondition(format!("S is defined on G-projectives: {v:?}")));
    }
    let t = gprojective_approximation(&conakayama(m)?, depth)?;
    let module = if d == 0 {
        syzygy(&t.gprojective_part, 1)?
    } else {
        t.gprojective_part.clone()
    };
    let verdict = is_gprojective_with(&module, depth, bound)?;
    Ok(SerreImage { module, d, approximation: t, verdict })
}

#[derive(Clone, Debug, Serialize)]
pub struct NakayamaSquare {
    /// The finite part of the approximation of `ω ⊗ M` is projective.
    pub finite_part_projective: bool,
    /// `GP(Hom(ω, GP(ω ⊗ M)))` is stably isomorphic to `M`.
    pub round_trip: bool,
    pub passed: bool,
}

pub fn verify_nakayama_square(m: &Module, depth: usize) -> Result<NakayamaSquare> {
    let t = gprojective_approximation(&conakayama(m)?, depth)?;
    let finite_part_projective = is_projective(&t.finite_part)?;
    let back = gprojective_approximation(&nakayama(&t.gprojective_part)?, depth)?;
    let round_trip = stable_iso(&back.gprojective_part, m, SQUARE_SEED)?.is_some();
    Ok(NakayamaSquare { finite_part_projective, round_trip, passed: finite_part_projective && round_trip })
}

#[cfg(test)]
mod tests;
