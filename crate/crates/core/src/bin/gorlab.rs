use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use gorlab::algebra::io::{load_algebra, load_module, ModuleFile};
use gorlab::algebra::{Alg, Module};
use gorlab::approximation::{gprojective_approximation, serre_operator};
use gorlab::duality::{report, verify_local_duality_integer, verify_serre_duality_field, ReportConfig, Verdict, SCHEMA};
use gorlab::gorenstein::{dualizing_bimodule, gorenstein_check, omega_hat, GorensteinStatus};
use gorlab::homological::DEFAULT_DEPTH;
use gorlab::stable::tate_ext;
use gorlab::support::singular_locus;
use gorlab::Error;

/// Exact Gorenstein duality computations.
///
/// Algebras are preset specs (`truncated_poly:3`, `cyclic:6:Z`, `quantum_exterior:2:F5`,
/// `upper_triangular:2`, `symmetric3`, `fat_point`) or JSON files. Modules are named specs
/// (`residue`, `trivial`, `regular`, `cyclic_quotient:j`, `torsion_trivial:m`, sums with `+`)
/// or JSON files.
#[derive(Parser)]
#[command(name = "gorlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Depth {
    /// Resolution depth bound.
    #[arg(long, default_value_t = DEFAULT_DEPTH)]
    depth: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the algebra is Gorenstein.
    Gorenstein {
        alg: String,
        #[command(flatten)]
        depth: Depth,
    },
    /// The dualizing bimodule, or with --hat its bimodule resolution.
    Omega {
        alg: String,
        #[arg(long)]
        hat: bool,
        #[command(flatten)]
        depth: Depth,
    },
    /// Tate cohomology groups.
    Tate {
        alg: String,
        m: String,
        n: String,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        range: (i64, i64),
        #[command(flatten)]
        depth: Depth,
    },
    /// G-projective approximation.
    Approx {
        alg: String,
        m: String,
        #[command(flatten)]
        depth: Depth,
    },
    /// The Serre operator at a site of dimension d.
    SerreOp {
        alg: String,
        m: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        d: u8,
        #[command(flatten)]
        depth: Depth,
    },
    /// Sites where the algebra has infinite global dimension.
    SingularLocus {
        alg: String,
        #[command(flatten)]
        depth: Depth,
    },
    /// Check a duality statement degree by degree.
    Verify {
        #[command(subcommand)]
        which: Verify,
    },
    /// Run the checks listed in a config file.
    Report {
        alg: String,
        #[arg(long)]
        config: PathBuf,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// Serre duality over a field.
    Serre {
        alg: String,
        m: String,
        n: String,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        range: (i64, i64),
        #[command(flatten)]
        depth: Depth,
    },
    /// Local duality over Z at a prime.
    Local {
        alg: String,
        m: String,
        n: String,
        #[arg(long)]
        prime: u64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        range: (i64, i64),
        #[command(flatten)]
        depth: Depth,
    },
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s}"))?;
    let a: i64 = a.trim().parse().map_err(|_| format!("bad lower bound in {s}"))?;
    let b: i64 = b.trim().parse().map_err(|_| format!("bad upper bound in {s}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

struct Outcome {
    body: Value,
    verdict: Verdict,
}

fn out(body: impl serde::Serialize, verdict: Verdict) -> gorlab::Result<Outcome> {
    Ok(Outcome { body: serde_json::to_value(body)?, verdict })
}

fn modules(a: &Alg, specs: &[&str]) -> gorlab::Result<Vec<Module>> {
    specs.iter().map(|s| load_module(a, s)).collect()
}

fn run(cmd: Command) -> gorlab::Result<Outcome> {
    match cmd {
        Command::Gorenstein { alg, depth } => {
            let a = load_algebra(&alg)?;
            let v = gorenstein_check(&a, depth.depth)?;
            let verdict = match v.status {
                GorensteinStatus::Gorenstein { .. } => Verdict::Pass,
                GorensteinStatus::NotGorenstein { .. } => Verdict::Fail,
                GorensteinStatus::Inconclusive { .. } => Verdict::Inconclusive,
            };
            out(v, verdict)
        }
        Command::Omega { alg, hat, depth } => {
            let a = load_algebra(&alg)?;
            let env = format!("enveloping({alg})");
            if hat {
                let h = omega_hat(&a, depth.depth)?;
                let verified = h.verify()?;
                let degrees: serde_json::Map<String, Value> = h
                    .terms
                    .iter()
                    .enumerate()
                    .map(|(j, t)| Ok((format!("{}", -(j as i64)), serde_json::to_value(ModuleFile::of(t.env_module(), &env))?)))
                    .collect::<gorlab::Result<_>>()?;
                let diffs: Vec<Value> = h.diffs.iter().map(|d| json!(d.matrix().columns())).collect();
                let body = json!({"length": h.length(), "degrees": degrees, "differentials": diffs, "verified": verified});
                out(body, if verified { Verdict::Pass } else { Verdict::Fail })
            } else {
                let w = dualizing_bimodule(&a)?;
                let body = json!({
                    "omega": ModuleFile::of(w.bimodule.env_module(), &env),
                    "biduality_verified": w.biduality_verified,
                });
                out(body, if w.biduality_verified { Verdict::Pass } else { Verdict::Fail })
            }
        }
        Command::Tate { alg, m, n, range, depth } => {
            let a = load_algebra(&alg)?;
            let ms = modules(&a, &[&m, &n])?;
            let t = tate_ext(&ms[0], &ms[1], range, depth.depth)?;
            let verdict = if t.verdict.is_yes() || t.substitution.is_some() { Verdict::Pass } else { Verdict::Inconclusive };
            out(t, verdict)
        }
        Command::Approx { alg, m, depth } => {
            let a = load_algebra(&alg)?;
            let t = gprojective_approximation(&load_module(&a, &m)?, depth.depth)?;
            let verdict = if t.certificate.passed() { Verdict::Pass } else { Verdict::Fail };
            Ok(Outcome { body: t.to_json(), verdict })
        }
        Command::SerreOp { alg, m, d, depth } => {
            let a = load_algebra(&alg)?;
            let s = serre_operator(&load_module(&a, &m)?, d.into(), depth.depth)?;
            let verdict = if s.verdict.is_yes() { Verdict::Pass } else { Verdict::Inconclusive };
            let body = json!({
                "d": s.d,
                "module": ModuleFile::of(&s.module, &alg),
                "normal_form": s.module.normal_form().to_string(),
                "gprojective": s.verdict,
                "approximation": s.approximation.to_json(),
            });
            out(body, verdict)
        }
        Command::SingularLocus { alg, depth } => {
            let a = load_algebra(&alg)?;
            let s = singular_locus(&a, depth.depth)?;
            let verdict = if s.is_certified() { Verdict::Pass } else { Verdict::Inconclusive };
            out(s, verdict)
        }
        Command::Verify { which: Verify::Serre { alg, m, n, range, depth } } => {
            let a = load_algebra(&alg)?;
            let ms = modules(&a, &[&m, &n])?;
            let r = verify_serre_duality_field(&ms[0], &ms[1], range, depth.depth)?.with_labels(&m, &n);
            let v = r.verdict;
            out(r, v)
        }
        Command::Verify { which: Verify::Local { alg, m, n, prime, range, depth } } => {
            let a = load_algebra(&alg)?;
            let ms = modules(&a, &[&m, &n])?;
            let r = verify_local_duality_integer(&ms[0], &ms[1], prime, range, depth.depth)?.with_labels(&m, &n);
            let v = r.verdict;
            out(r, v)
        }
        Command::Report { alg, config, text, .. } => {
            let a = load_algebra(&alg)?;
            let cfg: ReportConfig = serde_json::from_str(&std::fs::read_to_string(&config)?)?;
            let r = report(&a, &cfg)?;
            if text {
                let _ = write!(std::io::stdout(), "{}", r.to_text());
                return Ok(Outcome { body: Value::Null, verdict: r.verdict });
            }
            Ok(Outcome { body: r.to_json(), verdict: r.verdict })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome { body, verdict }) => {
            if !body.is_null() {
                let body = match body {
                    Value::Object(mut map) => {
                        map.insert("schema".into(), json!(SCHEMA));
                        map.entry("verdict").or_insert(json!(verdict));
                        Value::Object(map)
                    }
                    other => json!({"schema": SCHEMA, "result": other, "verdict": verdict}),
                };
                // a closed pipe is not an error for a report
                let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(&body).expect("json"));
            }
            ExitCode::from(verdict.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("gorlab: {e}");
            let code = match e {
                Error::NotCertified { .. } => Verdict::Inconclusive,
                _ => Verdict::Fail,
            };
            ExitCode::from(code.exit_code() as u8)
        }
    }
}
