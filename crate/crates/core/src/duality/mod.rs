//! Serre duality over a field, local duality over `Z` at a prime, the composition pairing on
//! stable Homs, and run reports.

mod report;

use serde::Serialize;

pub use report::{report, ReportConfig, RunReport};

use crate::algebra::Module;
use crate::approximation::{gprojective_approximation, serre_operator};
use crate::error::{Error, Result};
use crate::gorenstein::{conakayama, gorenstein_check};
use crate::homological::GradedGroups;
use crate::linear::{rank, Matrix, NormalForm};
use crate::stable::{stable_hom, tate_ext};
use crate::support::{local_cohomology_graded, matlis_dual_finite, PrimeSite};

pub const SCHEMA: &str = "gorlab/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Inconclusive,
    Fail,
}

impl Verdict {
    /// `0` pass, `1` fail, `2` inconclusive.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Inconclusive => 2,
        }
    }

    /// Combine: any failure fails, otherwise anything inconclusive is inconclusive.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::Inconclusive, _) | (_, Verdict::Inconclusive) => Verdict::Inconclusive,
            _ => Verdict::Pass,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Match,
    Mismatch,
    /// An infinite group appeared; the finite shadow says nothing here.
    NotComparable,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeRow {
    pub degree: i64,
    /// Degree of the right-hand group.
    pub dual_degree: i64,
    pub lhs: NormalForm,
    pub rhs: NormalForm,
    pub status: RowStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub schema: String,
    pub kind: String,
    pub algebra: String,
    pub modules: Vec<String>,
    pub site: PrimeSite,
    /// `d(p) = dim R_p - 1`.
    pub shift: i64,
    pub rows: Vec<DegreeRow>,
    /// Second right-hand column from the other form of the statement, when computed.
    pub alternative: Option<Vec<DegreeRow>>,
    pub notes: Vec<String>,
    pub verdict: Verdict,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn with_labels(mut self, m: &str, n: &str) -> Self {
        self.modules = vec![m.to_string(), n.to_string()];
        self
    }
}

fn label(m: &Module) -> String {
    m.normal_form().to_string()
}

fn require_gorenstein(m: &Module, depth: usize) -> Result<()> {
    let v = gorenstein_check(m.alg(), depth)?;
    if v.is_gorenstein() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{} is not certified Gorenstein: {:?}", m.alg().name(), v.status)))
    }
}

fn group(g: &GradedGroups, i: i64) -> Result<NormalForm> {
    g.get(i).cloned().ok_or_else(|| Error::Precondition(format!("degree {i} was not computed")))
}

fn compare_dims(lhs: &NormalForm, rhs: &NormalForm) -> RowStatus {
    if lhs.generators() == rhs.generators() {
        RowStatus::Match
    } else {
        RowStatus::Mismatch
    }
}

fn rows_verdict(rows: &[DegreeRow]) -> Verdict {
    rows.iter().fold(Verdict::Pass, |v, r| {
        v.and(match r.status {
            RowStatus::Match => Verdict::Pass,
            RowStatus::Mismatch => Verdict::Fail,
            RowStatus::NotComparable => Verdict::Inconclusive,
        })
    })
}

/// `dim Ext-hat^i(M, N) = dim Ext-hat^{-1-i}(N, GP(ω ⊗ M))` over a field, with the
/// alternative column `dim Ext-hat^{-i}(N, Ω GP(ω ⊗ M))` from the Serre functor form.
pub fn verify_serre_duality_field(m: &Module, n: &Module, range: (i64, i64), depth: usize) -> Result<DualityReport> {
    if !m.base().is_field() {
        return Err(Error::ArtinBaseRequired("Serre duality is checked over a field base".into()));
    }
    require_gorenstein(m, depth)?;
    let (a, b) = range;
    let site = PrimeSite::Field;
    let shift = site.duality_shift();
    let mut notes = Vec::new();

    let lhs = tate_ext(m, n, range, depth)?;
    if let Some(s) = &lhs.substitution {
        notes.push(format!("left side: {s}"));
    }
    let gm = gprojective_approximation(m, depth)?.gprojective_part;
    let g = gprojective_approximation(&conakayama(&gm)?, depth)?.gprojective_part;
    let rhs = tate_ext(n, &g, (shift - b, shift - a), depth)?;
    if let Some(s) = &rhs.substitution {
        notes.push(format!("right side: {s}"));
    }
    let sm = serre_operator(&gm, 0, depth)?;
    let alt = tate_ext(n, &sm.module, (-b, -a), depth)?;

    let mut rows = Vec::new();
    let mut alternative = Vec::new();
    for i in a..=b {
        let l = group(&lhs.groups, i)?;
        let r = group(&rhs.groups, shift - i)?;
        let s = group(&alt.groups, -i)?;
        rows.push(DegreeRow { degree: i, dual_degree: shift - i, status: compare_dims(&l, &r), lhs: l.clone(), rhs: r });
        alternative.push(DegreeRow { degree: i, dual_degree: -i, status: compare_dims(&l, &s), lhs: l, rhs: s });
    }
    let same = rows.iter().zip(&alternative).all(|(x, y)| x.rhs == y.rhs);
    if !same {
        notes.push("the two forms of the right-hand side disagree".into());
    }
    let verdict = rows_verdict(&rows).and(rows_verdict(&alternative)).and(if same { Verdict::Pass } else { Verdict::Fail });
    Ok(DualityReport {
        schema: SCHEMA.into(),
        kind: "serre".into(),
        algebra: m.alg().name().to_string(),
        modules: vec![label(m), label(n)],
        site,
        shift,
        rows,
        alternative: Some(alternative),
        notes,
        verdict,
    })
}

/// `Hom_Z(Ext-hat^i(M, N), I(p)) ≅ Ext-hat^{-i}(N, Γ_p S M)` with `S = GP(ω ⊗ -)`, compared on
/// invariant factors of the finite groups.
pub fn verify_local_duality_integer(
    m: &Module,
    n: &Module,
    p: u64,
    range: (i64, i64),
    depth: usize,
) -> Result<DualityReport> {
    if m.base() != crate::linear::BaseRing::Integers {
        return Err(Error::InvalidInput("local duality at a prime needs base Z".into()));
    }
    require_gorenstein(m, depth)?;
    let site = PrimeSite::Prime(p);
    let shift = site.duality_shift();
    let (a, b) = range;
    let mut notes = Vec::new();

    let lhs = tate_ext(m, n, range, depth)?;
    let sm = serre_operator(&gprojective_approximation(m, depth)?.gprojective_part, site.krull_dim(), depth)?;
    let rhs = tate_ext(n, &sm.module, (shift - b, shift - a), depth)?;
    let local = local_cohomology_graded(&rhs.groups, p)?;
    notes.extend(local.notes.iter().cloned());

    let mut rows = Vec::new();
    for i in a..=b {
        let l = group(&lhs.groups, i)?;
        let r_full = group(&rhs.groups, shift - i)?;
        let (lhs_dual, status) = if l.free_rank > 0 || r_full.free_rank > 0 {
            notes.push(format!("degree {i}: infinite group, not comparable at this shadow level"));
            (l.clone(), RowStatus::NotComparable)
        } else {
            let d = matlis_dual_finite(&l, site, m.base())?;
            let r = group(&local.groups, shift - i)?;
            let st = if d == r { RowStatus::Match } else { RowStatus::Mismatch };
            (d, st)
        };
        let rhs_local = group(&local.groups, shift - i)?;
        rows.push(DegreeRow { degree: i, dual_degree: shift - i, lhs: lhs_dual, rhs: rhs_local, status });
    }
    let verdict = rows_verdict(&rows);
    Ok(DualityReport {
        schema: SCHEMA.into(),
        kind: "local".into(),
        algebra: m.alg().name().to_string(),
        modules: vec![label(m), label(n)],
        site,
        shift,
        rows,
        alternative: None,
        notes,
        verdict,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PairingReport {
    pub schema: String,
    /// Dimensions of `Hom(M, N)`, `Hom(N, S M)` and `Hom(M, S M)` in the stable category.
    pub dims: [usize; 3],
    pub left_kernel: usize,
    pub right_kernel: usize,
    pub verdict: Verdict,
}

/// The composition pairing `Hom(N, S M) × Hom(M, N) → Hom(M, S M)` in the stable category has
/// zero left and right kernels.
pub fn trace_pairing_probe(m: &Module, n: &Module, depth: usize) -> Result<PairingReport> {
    if !m.base().is_field() {
        return Err(Error::ArtinBaseRequired("the pairing probe runs over a field".into()));
    }
    let sm = serre_operator(m, 0, depth)?.module;
    let hmn = stable_hom(m, n)?;
    let hns = stable_hom(n, &sm)?;
    let hms = stable_hom(m, &sm)?;
    let (df, dg, dt) = (hmn.dim(), hns.dim(), hms.dim());
    let base = m.base();
    // value[b][a] = class of g_b ∘ f_a
    let fs = hmn.basis();
    let gs = hns.basis();
    let mut values = vec![vec![Vec::new(); df]; dg];
    for (bi, g) in gs.iter().enumerate() {
        for (ai, f) in fs.iter().enumerate() {
            values[bi][ai] = hms.class_of(g.after(f)?.matrix())?;
        }
    }
    // f-side: rows (b, t), columns a
    let mut kf = Matrix::zeros(base, dg * dt, df);
    let mut kg = Matrix::zeros(base, df * dt, dg);
    for bi in 0..dg {
        for ai in 0..df {
            for (t, v) in values[bi][ai].iter().enumerate() {
                kf.set(bi * dt + t, ai, v.clone());
                kg.set(ai * dt + t, bi, v.clone());
            }
        }
    }
    let left_kernel = df - rank(&kf);
    let right_kernel = dg - rank(&kg);
    let verdict = if left_kernel == 0 && right_kernel == 0 && df == dg { Verdict::Pass } else { Verdict::Fail };
    Ok(PairingReport { schema: SCHEMA.into(), dims: [df, dg, dt], left_kernel, right_kernel, verdict })
}

#[cfg(test)]
mod tests;
