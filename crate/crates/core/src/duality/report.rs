use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{trace_pairing_probe, verify_local_duality_integer, verify_serre_duality_field, Verdict, SCHEMA};
use crate::algebra::named::module_preset;
use crate::algebra::Alg;
use crate::error::{Error, Result};
use crate::gorenstein::{gorenstein_check, GorensteinStatus};
use crate::homological::DEFAULT_DEPTH;
use crate::support::singular_locus;

fn default_depth() -> usize {
    DEFAULT_DEPTH
}

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairSpec {
    pub m: String,
    pub n: String,
    #[serde(default)]
    pub range: Option<(i64, i64)>,
    #[serde(default)]
    pub prime: Option<u64>,
}

/// Which checks to run. Absent fields run nothing except the Gorenstein check.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportConfig {
    #[serde(default = "default_depth")]
    pub depth: usize,
    #[serde(default = "yes")]
    pub gorenstein: bool,
    #[serde(default)]
    pub singular_locus: bool,
    #[serde(default)]
    pub serre: Vec<PairSpec>,
    #[serde(default)]
    pub local: Vec<PairSpec>,
    #[serde(default)]
    pub pairing: Vec<PairSpec>,
}

impl Default for ReportConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("defaults")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub name: String,
    /// `None` when the section was skipped.
    pub verdict: Option<Verdict>,
    pub reason: Option<String>,
    pub detail: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema: String,
    pub algebra: String,
    pub config: ReportConfig,
    pub sections: Vec<Section>,
    pub verdict: Verdict,
}

impl RunReport {
    /// JSON with sorted keys.
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serialises")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} ({})", self.algebra, self.schema);
        for s in &self.sections {
            let v = s.verdict.map_or("skipped".to_string(), |v| format!("{v:?}").to_lowercase());
            let _ = write!(out, "  {}: {v}", s.name);
            if let Some(r) = &s.reason {
                let _ = write!(out, " ({r})");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "overall: {}", format!("{:?}", self.verdict).to_lowercase());
        out
    }
}

fn failed(name: String, e: Error) -> Section {
    let verdict = match e {
        Error::NotCertified { .. } => Verdict::Inconclusive,
        _ => Verdict::Fail,
    };
    Section { name, verdict: Some(verdict), reason: Some(e.to_string()), detail: Value::Null }
}

fn skipped(name: String, reason: &str) -> Section {
    Section { name, verdict: None, reason: Some(reason.to_string()), detail: Value::Null }
}

fn run<T: Serialize>(name: String, f: impl FnOnce() -> Result<(Verdict, T)>) -> Section {
    match f() {
        Ok((v, d)) => Section { name, verdict: Some(v), reason: None, detail: serde_json::to_value(d).unwrap_or(Value::Null) },
        Err(e) => failed(name, e),
    }
}

/// Run the configured checks on `a`. Duality sections are skipped when `a` is not certified
/// Gorenstein.
pub fn report(a: &Alg, config: &ReportConfig) -> Result<RunReport> {
    let depth = config.depth;
    let mut sections = Vec::new();
    let check = gorenstein_check(a, depth)?;
    let gorenstein = check.is_gorenstein();
    if config.gorenstein {
        let v = match check.status {
            GorensteinStatus::Inconclusive { .. } => Verdict::Inconclusive,
            _ => Verdict::Pass,
        };
        let status = match &check.status {
            GorensteinStatus::Gorenstein { .. } => "gorenstein",
            GorensteinStatus::NotGorenstein { .. } => "not_gorenstein",
            GorensteinStatus::Inconclusive { .. } => "inconclusive",
        };
        sections.push(Section {
            name: "gorenstein".into(),
            verdict: Some(v),
            reason: Some(status.into()),
            detail: serde_json::to_value(&check)?,
        });
    }
    if config.singular_locus {
        sections.push(run("singular_locus".into(), || {
            let s = singular_locus(a, depth)?;
            let v = if s.is_certified() { Verdict::Pass } else { Verdict::Inconclusive };
            let sites: Vec<String> = s.singular().iter().map(crate::support::PrimeSite::key).collect();
            Ok((v, json!({"singular": sites, "locus": s})))
        }));
    }
    let not_gor = "algebra is not certified Gorenstein";
    for (i, p) in config.serre.iter().enumerate() {
        let name = format!("serre[{i}] {} {}", p.m, p.n);
        if !gorenstein {
            sections.push(skipped(name, not_gor));
            continue;
        }
        sections.push(run(name, || {
            let (m, n) = (module_preset(a, &p.m)?, module_preset(a, &p.n)?);
            let r = verify_serre_duality_field(&m, &n, p.range.unwrap_or((-3, 3)), depth)?.with_labels(&p.m, &p.n);
            Ok((r.verdict, r))
        }));
    }
    for (i, p) in config.local.iter().enumerate() {
        let name = format!("local[{i}] {} {} at {}", p.m, p.n, p.prime.unwrap_or(0));
        if !gorenstein {
            sections.push(skipped(name, not_gor));
            continue;
        }
        sections.push(run(name, || {
            let prime = p.prime.ok_or_else(|| Error::InvalidInput("local duality needs a prime".into()))?;
            let (m, n) = (module_preset(a, &p.m)?, module_preset(a, &p.n)?);
            let r = verify_local_duality_integer(&m, &n, prime, p.range.unwrap_or((-2, 2)), depth)?
                .with_labels(&p.m, &p.n);
            Ok((r.verdict, r))
        }));
    }
    for (i, p) in config.pairing.iter().enumerate() {
        let name = format!("pairing[{i}] {} {}", p.m, p.n);
        if !gorenstein {
            sections.push(skipped(name, not_gor));
            continue;
        }
        sections.push(run(name, || {
            let (m, n) = (module_preset(a, &p.m)?, module_preset(a, &p.n)?);
            let r = trace_pairing_probe(&m, &n, depth)?;
            Ok((r.verdict, r))
        }));
    }
    let verdict = sections.iter().filter_map(|s| s.verdict).fold(Verdict::Pass, Verdict::and);
    Ok(RunReport {
        schema: SCHEMA.into(),
        algebra: a.name().to_string(),
        config: config.clone(),
        sections,
        verdict,
    })
}
