use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Alg, Bimodule, Module};
use crate::error::Result;
use crate::homological::{ext_degree, is_perfect_both_sides, top, FinitenessVerdict, Resolution};
use crate::linear::BaseRing;
use crate::support::PrimeSite;

/// Injective dimensions of `A` on the left and right at one site (`"0"` is the generic point
/// `A ⊗ Q`; a prime `p` stands for the localisation at `p`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SiteDims {
    pub d_left: usize,
    pub d_right: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum GorensteinStatus {
    Gorenstein { sites: BTreeMap<String, SiteDims> },
    NotGorenstein { site: String, side: String, certificate: FinitenessVerdict },
    Inconclusive { depth: usize, reason: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub name: String,
    pub site: String,
    pub outcome: String,
    pub details: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct GorensteinVerdict {
    pub algebra: String,
    pub base: String,
    pub depth: usize,
    pub status: GorensteinStatus,
    pub evidence: Vec<Criterion>,
}

impl GorensteinVerdict {
    pub fn is_gorenstein(&self) -> bool {
        matches!(self.status, GorensteinStatus::Gorenstein { .. })
    }

    pub fn is_not_gorenstein(&self) -> bool {
        matches!(self.status, GorensteinStatus::NotGorenstein { .. })
    }

    /// Dimensions at the site `"0"` or at a prime.
    pub fn site(&self, key: &str) -> Option<SiteDims> {
        match &self.status {
            GorensteinStatus::Gorenstein { sites } => sites.get(key).copied(),
            _ => None,
        }
    }
}

/// Largest `i ≤ window` with `Ext^i(A/rad, A) ≠ 0`, plus the computed dimensions.
fn top_ext_of_semisimple_quotient(a: &Alg, window: usize) -> Result<(Option<usize>, Vec<usize>)> {
    let (s, _) = top(&Module::regular(a))?;
    let reg = Module::regular(a);
    let mut res = Resolution::new(&s);
    let mut dims = Vec::new();
    for i in 0..=window {
        dims.push(ext_degree(&mut res, &reg, i)?.generators());
    }
    Ok((dims.iter().rposition(|&d| d > 0), dims))
}

enum FieldOutcome {
    Gorenstein(SiteDims),
    Not(String, FinitenessVerdict),
    Inconclusive(String),
}

/// Both criteria over a field: finite projective dimension of `ω` on each side, and the top
/// nonvanishing `Ext^i(A/rad, A)` on each side.
fn field_check(a: &Alg, depth: usize, site: &str, evidence: &mut Vec<Criterion>) -> Result<FieldOutcome> {
    let w = Bimodule::dualizing(a)?;
    let (vl, vr) = is_perfect_both_sides(&w, depth)?;
    evidence.push(Criterion {
        name: "omega_perfect_both_sides".into(),
        site: site.into(),
        outcome: format!("left {vl}, right {vr}"),
        details: json!({"left": vl, "right": vr}),
    });
    match (vl.finite(), vr.finite()) {
        (Some(dl), Some(dr)) => {
            let (tl, el) = top_ext_of_semisimple_quotient(a, dl + 2)?;
            let (tr, er) = top_ext_of_semisimple_quotient(&a.opposite(), dr + 2)?;
            let agree = tl == Some(dl) && tr == Some(dr);
            evidence.push(Criterion {
                name: "top_ext_simples_into_A".into(),
                site: site.into(),
                outcome: if agree { "agrees".into() } else { "disagrees".into() },
                details: json!({"left_dims": el, "right_dims": er, "left_top": tl, "right_top": tr}),
            });
            if agree {
                Ok(FieldOutcome::Gorenstein(SiteDims { d_left: dl, d_right: dr }))
            } else {
                Ok(FieldOutcome::Inconclusive(format!(
                    "criteria disagree at site {site}: pd ω = ({dl}, {dr}), top Ext = ({tl:?}, {tr:?})"
                )))
            }
        }
        _ => {
            let (side, bad) = if vl.is_infinite() {
                ("left", vl.clone())
            } else if vr.is_infinite() {
                ("right", vr.clone())
            } else {
                return Ok(FieldOutcome::Inconclusive(format!(
                    "ω not resolved within depth {depth} at site {site}: left {vl}, right {vr}"
                )));
            };
            let window = depth.min(4);
            let (tl, el) = top_ext_of_semisimple_quotient(a, window)?;
            evidence.push(Criterion {
                name: "top_ext_simples_into_A".into(),
                site: site.into(),
                outcome: if tl == Some(window) { "nonvanishing at window edge".into() } else { "vanishes before window edge".into() },
                details: json!({"left_dims": el}),
            });
            Ok(FieldOutcome::Not(side.into(), bad))
        }
    }
}

/// Decide whether `A` is Gorenstein.
pub fn gorenstein_check(a: &Alg, depth: usize) -> Result<GorensteinVerdict> {
    let mut evidence = Vec::new();
    let status = if a.base().is_field() {
        match field_check(a, depth, "0", &mut evidence)? {
            FieldOutcome::Gorenstein(d) => GorensteinStatus::Gorenstein { sites: BTreeMap::from([("0".to_string(), d)]) },
            FieldOutcome::Not(side, c) => GorensteinStatus::NotGorenstein { site: "0".into(), side, certificate: c },
            FieldOutcome::Inconclusive(reason) => GorensteinStatus::Inconclusive { depth, reason },
        }
    } else {
        integer_check(a, depth, &mut evidence)?
    };
    Ok(GorensteinVerdict {
        algebra: a.name().to_string(),
        base: a.base().short_name(),
        depth,
        status,
        evidence,
    })
}

fn integer_check(a: &Alg, depth: usize, evidence: &mut Vec<Criterion>) -> Result<GorensteinStatus> {
    let w = Bimodule::dualizing(a)?;
    let (vl, vr) = is_perfect_both_sides(&w, depth)?;
    evidence.push(Criterion {
        name: "omega_perfect_both_sides".into(),
        site: "Z".into(),
        outcome: format!("left {vl}, right {vr}"),
        details: json!({"left": vl, "right": vr}),
    });
    if vl.is_infinite() || vr.is_infinite() {
        let (side, c) = if vl.is_infinite() { ("left", vl) } else { ("right", vr) };
        return Ok(GorensteinStatus::NotGorenstein { site: "Z".into(), side: side.into(), certificate: c });
    }
    if vl.finite().is_none() || vr.finite().is_none() {
        return Ok(GorensteinStatus::Inconclusive {
            depth,
            reason: format!("ω not resolved within depth {depth}: left {vl}, right {vr}"),
        });
    }
    let mut sites = BTreeMap::new();
    let generic = a.base_change(BaseRing::Rationals)?;
    let mut spots: Vec<(String, Alg, usize)> = vec![("0".into(), generic, 0)];
    let primes = crate::support::prime_sites(a)?;
    evidence.push(Criterion {
        name: "prime_sites".into(),
        site: "Z".into(),
        outcome: primes.iter().map(PrimeSite::key).collect::<Vec<_>>().join(","),
        details: json!({"primes": primes}),
    });
    for site in primes {
        if let Some(p) = site.prime() {
            spots.push((site.key(), a.base_change(BaseRing::PrimeField(p))?, 1));
        }
    }
    for (key, alg, shift) in spots {
        match field_check(&alg, depth, &key, evidence)? {
            FieldOutcome::Gorenstein(d) => {
                sites.insert(key, SiteDims { d_left: d.d_left + shift, d_right: d.d_right + shift });
            }
            FieldOutcome::Not(side, c) => {
                return Ok(GorensteinStatus::NotGorenstein { site: key, side, certificate: c });
            }
            FieldOutcome::Inconclusive(reason) => return Ok(GorensteinStatus::Inconclusive { depth, reason }),
        }
    }
    Ok(GorensteinStatus::Gorenstein { sites })
}
