//! Prime sites of the base ring, `p`-local and `p`-torsion data, and the singular locus.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{Alg, Module};
use crate::error::{Error, Result};
use crate::homological::{proj_dim, top, FinitenessVerdict, GradedGroups};
use crate::linear::{cokernel_invariants, determinant, merge_factors, prime_factors, BaseRing, Matrix, NormalForm, Scalar};

/// A point of `Spec R` relevant to a computation: the single point of a field, or a prime of `Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimeSite {
    Field,
    Prime(u64),
}

impl PrimeSite {
    pub fn prime(&self) -> Option<u64> {
        match self {
            PrimeSite::Prime(p) => Some(*p),
            PrimeSite::Field => None,
        }
    }

    /// Krull dimension of the local ring `R_p`.
    pub fn krull_dim(&self) -> usize {
        match self {
            PrimeSite::Field => 0,
            PrimeSite::Prime(_) => 1,
        }
    }

    /// The shift `d(p) = dim R_p − 1` of the local duality statement.
    pub fn duality_shift(&self) -> i64 {
        self.krull_dim() as i64 - 1
    }

    pub fn key(&self) -> String {
        match self {
            PrimeSite::Field => "0".into(),
            PrimeSite::Prime(p) => p.to_string(),
        }
    }
}

impl fmt::Display for PrimeSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeSite::Field => write!(f, "(0)"),
            PrimeSite::Prime(p) => write!(f, "({p})"),
        }
    }
}

fn require_prime(p: u64) -> Result<()> {
    if crate::linear::is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("{p} is not prime")))
    }
}

/// `(p^v, d / p^v)` with `p ∤ d / p^v`.
fn split_p(d: &Scalar, p: u64) -> (Scalar, Scalar) {
    let bp = BigInt::from(p);
    let mut rest = d.numer();
    let mut pp = BigInt::one();
    while !rest.is_zero() && rest.is_multiple_of(&bp) {
        rest /= &bp;
        pp *= &bp;
    }
    (Scalar::from_bigint(pp), Scalar::from_bigint(rest))
}

/// `p`-primary part of a normal form; the free part is dropped.
pub fn p_primary(nf: &NormalForm, p: u64) -> NormalForm {
    let torsion = nf.torsion.iter().map(|d| split_p(d, p).0).filter(|q| !q.is_one()).collect();
    NormalForm { free_rank: 0, torsion: merge_factors(torsion) }
}

/// Candidate primes: over `Z`, the primes dividing the discriminant of the trace form, which
/// contain every prime where `A/pA` is not semisimple. A field has its single site.
pub fn prime_sites(a: &Alg) -> Result<Vec<PrimeSite>> {
    if a.base().is_field() {
        return Ok(vec![PrimeSite::Field]);
    }
    let t = a.trace_form();
    let coker = cokernel_invariants(&t);
    if coker.free_rank > 0 {
        return Err(Error::Precondition(format!(
            "the trace form of {} is degenerate over Q (discriminant {}); prime sites are not finite data",
            a.name(),
            determinant(&t)
        )));
    }
    let mut primes: Vec<u64> = coker.torsion.iter().flat_map(|d| prime_factors(&d.numer())).collect();
    primes.sort_unstable();
    primes.dedup();
    Ok(primes.into_iter().map(PrimeSite::Prime).collect())
}

/// `M_p` over `Z_(p)`: the free rank, the `p`-primary invariant factors, and an integral
/// representative `M / T_{p'}` whose localisation at `p` is `M_p`.
#[derive(Clone, Debug)]
pub struct Localized {
    pub site: PrimeSite,
    pub free_rank: usize,
    pub p_torsion: Vec<Scalar>,
    pub representative: Module,
}

impl Localized {
    pub fn normal_form(&self) -> NormalForm {
        NormalForm { free_rank: self.free_rank, torsion: self.p_torsion.clone() }
    }
}

/// Localise at `p` by killing the torsion prime to `p`. Over a field this is the identity.
pub fn localize(m: &Module, site: PrimeSite) -> Result<Localized> {
    let nf = m.normal_form().clone();
    let p = match site.prime() {
        Some(p) if m.base() == BaseRing::Integers => p,
        _ => {
            return Ok(Localized { site, free_rank: nf.free_rank, p_torsion: Vec::new(), representative: m.clone() });
        }
    };
    require_prime(p)?;
    let base = m.base();
    let g = nf.generators();
    let gens: Vec<Vec<Scalar>> = nf
        .torsion
        .iter()
        .enumerate()
        .filter_map(|(r, d)| {
            let (pp, rest) = split_p(d, p);
            (!rest.is_one()).then_some((r, pp))
        })
        .map(|(r, pp)| {
            let mut v = vec![Scalar::zero(); g];
            v[r] = pp;
            v
        })
        .collect();
    let prime_to_p = Matrix::from_columns(base, g, &gens);
    let rep = if prime_to_p.cols() == 0 { m.clone() } else { m.quotient(&prime_to_p)?.0 };
    let p_torsion = p_primary(&nf, p).torsion;
    Ok(Localized { site, free_rank: nf.free_rank, p_torsion, representative: rep })
}

/// The `p`-power torsion submodule `Γ_{V(p)} M` with its inclusion.
pub fn torsion_submodule(m: &Module, p: u64) -> Result<(Module, crate::algebra::ModuleMap)> {
    require_prime(p)?;
    let nf = m.normal_form();
    let g = nf.generators();
    let gens: Vec<Vec<Scalar>> = nf
        .torsion
        .iter()
        .enumerate()
        .filter_map(|(r, d)| {
            let (pp, rest) = split_p(d, p);
            (!pp.is_one()).then(|| {
                let mut v = vec![Scalar::zero(); g];
                v[r] = rest;
                v
            })
        })
        .collect();
    m.submodule(&Matrix::from_columns(m.base(), g, &gens))
}

/// Degreewise `p`-primary parts, with a note for every degree whose free part was dropped.
#[derive(Clone, Debug, Serialize)]
pub struct GradedWithSupport {
    pub prime: u64,
    pub groups: GradedGroups,
    pub notes: Vec<String>,
}

pub fn local_cohomology_graded(g: &GradedGroups, p: u64) -> Result<GradedWithSupport> {
    require_prime(p)?;
    let mut out = GradedGroups::new(g.lo, g.hi);
    let mut notes = Vec::new();
    for (i, nf) in &g.groups {
        if nf.free_rank > 0 {
            notes.push(format!("degree {i}: free rank {} dropped (Γ of a lattice is 0)", nf.free_rank));
        }
        out.insert(*i, p_primary(nf, p));
    }
    Ok(GradedWithSupport { prime: p, groups: out, notes })
}

/// Matlis dual of a finite module at a site: the `p`-primary part with the same invariant
/// factors over `Z`, the dual space of equal dimension over a field.
pub fn matlis_dual_finite(nf: &NormalForm, site: PrimeSite, base: BaseRing) -> Result<NormalForm> {
    if base.is_field() {
        return Ok(NormalForm::free(nf.generators()));
    }
    if nf.free_rank > 0 {
        return Err(Error::InvalidInput(format!(
            "Matlis dual of the infinite group {nf} is not a finitely generated object"
        )));
    }
    let p = site
        .prime()
        .ok_or_else(|| Error::InvalidInput("Matlis duality over Z needs a prime site".into()))?;
    require_prime(p)?;
    Ok(p_primary(nf, p))
}

/// Per-site regularity verdict.
#[derive(Clone, Debug, Serialize)]
pub struct SiteRegularity {
    pub site: PrimeSite,
    /// Projective dimension of `A/rad` over the fibre algebra (`A` itself over a field, `A/pA`
    /// at a prime); `A_p` is regular iff this is finite.
    pub fibre_verdict: FinitenessVerdict,
    /// Over `Z`: `pd_{A_p}` of the simples is one more than over `A/pA`.
    pub lifted_pd: Option<usize>,
    pub status: SiteStatus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SiteStatus {
    Regular,
    Singular,
    ProbablySingular,
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularLocus {
    pub algebra: String,
    pub depth: usize,
    pub candidates: Vec<PrimeSite>,
    pub sites: Vec<SiteRegularity>,
}

impl SingularLocus {
    /// Sites certified singular.
    pub fn singular(&self) -> Vec<PrimeSite> {
        self.sites.iter().filter(|s| s.status == SiteStatus::Singular).map(|s| s.site).collect()
    }

    pub fn probably_singular(&self) -> Vec<PrimeSite> {
        self.sites.iter().filter(|s| s.status == SiteStatus::ProbablySingular).map(|s| s.site).collect()
    }

    pub fn is_certified(&self) -> bool {
        self.probably_singular().is_empty()
    }
}

fn regularity(fibre: &Alg, site: PrimeSite, depth: usize) -> Result<SiteRegularity> {
    let (s, _) = top(&Module::regular(fibre))?;
    let v = proj_dim(&s, depth)?;
    let status = match &v {
        FinitenessVerdict::Finite { .. } => SiteStatus::Regular,
        FinitenessVerdict::InfiniteCertified { .. } => SiteStatus::Singular,
        FinitenessVerdict::AtLeast { .. } => SiteStatus::ProbablySingular,
    };
    let lifted_pd = v.finite().map(|d| d + site.krull_dim());
    Ok(SiteRegularity { site, fibre_verdict: v, lifted_pd, status })
}

/// Primes `p` where `A_p` is not regular. Over `Z` the simples of `A_p` are the simples of
/// `A/pA`, and `p` is a nonzerodivisor, so their projective dimension over `A_p` is finite
/// iff it is over `A/pA`. The generic point is included when `A ⊗ Q` is not semisimple.
pub fn singular_locus(a: &Alg, depth: usize) -> Result<SingularLocus> {
    let candidates = prime_sites(a)?;
    let mut sites = Vec::new();
    if a.base().is_field() {
        sites.push(regularity(a, PrimeSite::Field, depth)?);
    } else {
        let generic = a.base_change(BaseRing::Rationals)?;
        if !generic.is_semisimple()? {
            let mut r = regularity(&generic, PrimeSite::Field, depth)?;
            r.lifted_pd = r.fibre_verdict.finite();
            sites.push(r);
        }
        for site in &candidates {
            let p = site.prime().expect("prime site");
            sites.push(regularity(&a.base_change(BaseRing::PrimeField(p))?, *site, depth)?);
        }
    }
    Ok(SingularLocus { algebra: a.name().to_string(), depth, candidates, sites })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::named::{torsion_trivial, trivial};
    use crate::algebra::presets::{cyclic_group_algebra, truncated_poly, upper_triangular};

    fn z() -> BaseRing {
        BaseRing::Integers
    }

    #[test]
    fn sites_of_group_rings() {
        let a = cyclic_group_algebra(6, z()).unwrap();
        assert_eq!(prime_sites(&a).unwrap(), vec![PrimeSite::Prime(2), PrimeSite::Prime(3)]);
        let q = truncated_poly(2, BaseRing::Rationals).unwrap();
        assert_eq!(prime_sites(&q).unwrap(), vec![PrimeSite::Field]);
        let zz = cyclic_group_algebra(1, z()).unwrap();
        assert!(prime_sites(&zz).unwrap().is_empty());
    }

    #[test]
    fn localisation_and_torsion() {
        let zz = cyclic_group_algebra(1, z()).unwrap();
        let m = torsion_trivial(&zz, 12).unwrap();
        let l = localize(&m, PrimeSite::Prime(2)).unwrap();
        assert_eq!(l.normal_form(), NormalForm::torsion(&[4]));
        assert_eq!(l.representative.normal_form(), &NormalForm::torsion(&[4]));
        let (g, incl) = torsion_submodule(&m, 2).unwrap();
        assert_eq!(g.normal_form(), &NormalForm::torsion(&[4]));
        assert!(incl.is_injective().unwrap());
        let (gg, _) = torsion_submodule(&g, 2).unwrap();
        assert_eq!(gg.normal_form(), g.normal_form());
        let c3 = cyclic_group_algebra(3, z()).unwrap();
        let t3 = torsion_trivial(&c3, 3).unwrap();
        let l3 = localize(&t3, PrimeSite::Prime(2)).unwrap();
        assert!(l3.normal_form().is_zero() && l3.representative.is_zero());
        let lat = trivial(&c3).unwrap();
        assert!(torsion_submodule(&lat, 3).unwrap().0.is_zero());
        assert_eq!(localize(&lat, PrimeSite::Prime(5)).unwrap().normal_form(), NormalForm::free(1));
    }

    #[test]
    fn graded_shadows() {
        let mut g = GradedGroups::new(0, 1);
        g.insert(0, NormalForm::torsion(&[6]));
        g.insert(1, NormalForm { free_rank: 1, torsion: vec![Scalar::from(4)] });
        let two = local_cohomology_graded(&g, 2).unwrap();
        assert_eq!(two.groups.get(0), Some(&NormalForm::torsion(&[2])));
        assert_eq!(two.groups.get(1), Some(&NormalForm::torsion(&[4])));
        assert_eq!(two.notes.len(), 1);
        let five = local_cohomology_graded(&g, 5).unwrap();
        assert!(five.groups.groups.values().all(NormalForm::is_zero));
        let d = matlis_dual_finite(&NormalForm::torsion(&[2, 4]), PrimeSite::Prime(2), z()).unwrap();
        assert_eq!(d, NormalForm::torsion(&[2, 4]));
        assert_eq!(matlis_dual_finite(&d, PrimeSite::Prime(2), z()).unwrap(), d);
        assert!(matlis_dual_finite(&NormalForm::free(1), PrimeSite::Prime(2), z()).is_err());
    }

    #[test]
    fn singular_loci() {
        let ut = upper_triangular(2, BaseRing::Rationals).unwrap();
        assert!(singular_locus(&ut, 8).unwrap().singular().is_empty());
        let tp = truncated_poly(2, BaseRing::Rationals).unwrap();
        assert_eq!(singular_locus(&tp, 8).unwrap().singular(), vec![PrimeSite::Field]);
        let c6 = cyclic_group_algebra(6, z()).unwrap();
        let loc = singular_locus(&c6, 8).unwrap();
        assert_eq!(loc.singular(), vec![PrimeSite::Prime(2), PrimeSite::Prime(3)]);
        assert!(loc.is_certified());
    }
}
