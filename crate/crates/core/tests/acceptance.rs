//! Acceptance run: one line per criterion, nonzero exit on any failure.
//!
//! Criteria run sequentially so the runtime limits measure one computation at a time.

mod oracles;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use gorlab::algebra::io::load_algebra;
use gorlab::algebra::named::{module_preset, residue, trivial};
use gorlab::algebra::{Alg, Module};
use gorlab::approximation::gprojective_approximation;
use gorlab::duality::{trace_pairing_probe, verify_local_duality_integer, verify_serre_duality_field, RowStatus, Verdict};
use gorlab::gorenstein::{adjunction_check, gorenstein_check, verify_tilting, GorensteinStatus};
use gorlab::homological::FinitenessVerdict;
use gorlab::linear::{determinant, smith_normal_form, BaseRing, Matrix, NormalForm, Scalar};
use gorlab::stable::{is_gprojective, stable_syzygy, tate_ext};
use gorlab::support::{local_cohomology_graded, matlis_dual_finite, p_primary, singular_locus, torsion_submodule, PrimeSite};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

const DEPTH: usize = 12;
const LIMIT_TATE_PER_N: Duration = Duration::from_secs(5);
const LIMIT_LOCAL: Duration = Duration::from_secs(30);
const LIMIT_SERRE: Duration = Duration::from_secs(30);
const LIMIT_GORENSTEIN: Duration = Duration::from_secs(60);
const LIMIT_SINGULAR: Duration = Duration::from_secs(30);
const PROPERTY_CASES: u32 = 64;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn alg(spec: &str) -> Result<Alg, String> {
    load_algebra(spec).map_err(err)
}

fn module(a: &Alg, spec: &str) -> Result<Module, String> {
    module_preset(a, spec).map_err(err)
}

fn sum(a: &Module, b: &Module) -> Result<Module, String> {
    Ok(Module::direct_sum(&[a.clone(), b.clone()]).map_err(err)?.module)
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure!(t < limit, "{what} took {t:.2?}, limit {limit:?}");
    Ok(())
}

/// Fixture pairs for the field-case duality checks, with `(n, j, l)` for the closed form when
/// the algebra is `k[x]/(x^n)` and the modules are `A/x^j`, `A/x^l`.
fn serre_fixtures() -> Vec<(&'static str, &'static str, &'static str, (usize, usize, usize))> {
    vec![
        ("truncated_poly:2", "residue", "residue", (2, 1, 1)),
        ("truncated_poly:3", "residue", "residue", (3, 1, 1)),
        ("truncated_poly:3", "residue", "cyclic_quotient:2", (3, 1, 2)),
        ("truncated_poly:3", "cyclic_quotient:2", "residue", (3, 2, 1)),
        ("truncated_poly:3", "cyclic_quotient:2", "cyclic_quotient:2", (3, 2, 2)),
    ]
}

fn c1_tate_cyclic() -> Outcome {
    let mut times = Vec::new();
    for n in [2usize, 3, 4, 6] {
        let start = Instant::now();
        let a = alg(&format!("cyclic:{n}:Z"))?;
        let z = trivial(&a).map_err(err)?;
        let t = tate_ext(&z, &z, (-4, 4), DEPTH).map_err(err)?;
        within(start, LIMIT_TATE_PER_N, &format!("n = {n}"))?;
        times.push(format!("{n}:{:.2?}", start.elapsed()));
        ensure!(t.verdict.is_yes() && t.substitution.is_none(), "n = {n}: Z was not used directly: {:?}", t.verdict);
        let periodic = oracles::cyclic_tate_periodic(n, (-4, 4));
        for i in -4..=4 {
            let want = oracles::cyclic_tate(n as i64, i);
            ensure!(periodic[&i] == want, "oracle pipelines disagree at n = {n}, i = {i}");
            ensure!(t.groups.get(i) == Some(&want), "n = {n}, i = {i}: got {:?}, want {want}", t.groups.get(i));
        }
    }
    Ok(times.join(" "))
}

fn c2_local_duality() -> Outcome {
    let start = Instant::now();
    let mut rows = 0;
    for (n, p) in [(2i64, 2u64), (6, 2), (6, 3), (6, 5)] {
        let a = alg(&format!("cyclic:{n}:Z"))?;
        let z = trivial(&a).map_err(err)?;
        let r = verify_local_duality_integer(&z, &z, p, (-2, 2), DEPTH).map_err(err)?;
        ensure!(r.shift == 0, "shift {} at a prime", r.shift);
        ensure!(r.rows.len() == 5, "Z[C{n}] at {p}: {} rows", r.rows.len());
        for row in &r.rows {
            let want = oracles::cyclic_local(n, p as i64, row.dual_degree);
            ensure!(row.status == RowStatus::Match, "Z[C{n}] at {p}, degree {}: {:?}", row.degree, row.status);
            ensure!(row.rhs == want && row.lhs == want, "Z[C{n}] at {p}, degree {}: {} / {} vs {want}", row.degree, row.lhs, row.rhs);
            rows += 1;
        }
        ensure!(r.verdict == Verdict::Pass, "Z[C{n}] at {p}: {:?}", r.verdict);
    }
    within(start, LIMIT_LOCAL, "local duality")?;
    Ok(format!("{rows} rows, {:.2?}", start.elapsed()))
}

fn c3_serre_duality() -> Outcome {
    let start = Instant::now();
    let mut rows = 0;
    for (a, m, n, (deg, j, l)) in serre_fixtures() {
        let alg = alg(a)?;
        let (x, y) = (module(&alg, m)?, module(&alg, n)?);
        let r = verify_serre_duality_field(&x, &y, (-3, 3), DEPTH).map_err(err)?;
        ensure!(r.verdict == Verdict::Pass, "{a} {m} {n}: {:?} {:?}", r.verdict, r.notes);
        let want = oracles::truncated_tate_dim(deg, j, l);
        for row in &r.rows {
            ensure!(row.lhs.generators() == row.rhs.generators(), "{a} {m} {n} degree {}", row.degree);
            ensure!(row.lhs.generators() == want, "{a} {m} {n} degree {}: dim {} vs {want}", row.degree, row.lhs);
            rows += 1;
        }
    }
    // unequal dimensions across degrees, so a wrong shift cannot pass
    for spec in ["quantum_exterior:2", "quantum_exterior:2:F5"] {
        let a = alg(spec)?;
        let k = residue(&a).map_err(err)?;
        let r = verify_serre_duality_field(&k, &k, (-2, 2), DEPTH).map_err(err)?;
        ensure!(r.verdict == Verdict::Pass, "{spec}: {:?}", r.verdict);
        for row in &r.rows {
            ensure!(row.lhs.generators() == oracles::quantum_exterior_tate_dim(row.degree), "{spec} degree {}", row.degree);
            rows += 1;
        }
    }
    within(start, LIMIT_SERRE, "Serre duality")?;
    Ok(format!("{rows} rows, {:.2?}", start.elapsed()))
}

fn c4_pairing() -> Outcome {
    let mut done = Vec::new();
    for (a, m, n, _) in serre_fixtures() {
        let alg = alg(a)?;
        let r = trace_pairing_probe(&module(&alg, m)?, &module(&alg, n)?, DEPTH).map_err(err)?;
        ensure!(r.left_kernel == 0 && r.right_kernel == 0, "{a} {m} {n}: kernels {} {}", r.left_kernel, r.right_kernel);
        ensure!(r.verdict == Verdict::Pass, "{a} {m} {n}: {:?}", r.verdict);
        done.push(format!("{:?}", r.dims));
    }
    Ok(format!("dims {}", done.join(" ")))
}

fn c5_gorenstein() -> Outcome {
    let start = Instant::now();
    let wanted = [
        "truncated_poly:1",
        "truncated_poly:2",
        "truncated_poly:3",
        "truncated_poly:4",
        "upper_triangular:2",
        "quantum_exterior:2",
        "quantum_exterior:3",
        "quantum_exterior:2:F5",
        "cyclic:1:Z",
        "cyclic:2:Z",
        "cyclic:3:Z",
        "cyclic:4:Z",
        "cyclic:5:Z",
        "cyclic:6:Z",
    ];
    for spec in wanted {
        let (_, sites) = oracles::GORENSTEIN.iter().find(|(s, _)| *s == spec).ok_or("missing oracle")?;
        let v = gorenstein_check(&alg(spec)?, DEPTH).map_err(err)?;
        let GorensteinStatus::Gorenstein { sites: got } = &v.status else {
            return Err(format!("{spec}: {:?}", v.status));
        };
        ensure!(got.len() == sites.len(), "{spec}: sites {:?}", got.keys().collect::<Vec<_>>());
        for (key, d) in *sites {
            let s = v.site(key).ok_or(format!("{spec}: no site {key}"))?;
            ensure!(s.d_left == *d && s.d_right == *d, "{spec} at {key}: {s:?}, want {d}");
        }
    }
    let v = gorenstein_check(&alg("fat_point")?, DEPTH).map_err(err)?;
    let GorensteinStatus::NotGorenstein { certificate, .. } = &v.status else {
        return Err(format!("fat point: {:?}", v.status));
    };
    ensure!(matches!(certificate, FinitenessVerdict::InfiniteCertified { .. }), "fat point: {certificate:?}");
    within(start, LIMIT_GORENSTEIN, "Gorenstein detection")?;
    Ok(format!("{} Gorenstein, fat point refuted, {:.2?}", wanted.len(), start.elapsed()))
}

fn c6_singular_locus() -> Outcome {
    let start = Instant::now();
    for (spec, want) in oracles::SINGULAR {
        let s = singular_locus(&alg(spec)?, DEPTH).map_err(err)?;
        ensure!(s.is_certified(), "{spec}: uncertified sites {:?}", s.probably_singular());
        let got: Vec<String> = s.singular().iter().map(PrimeSite::key).collect();
        ensure!(got == *want, "{spec}: {got:?}, want {want:?}");
    }
    within(start, LIMIT_SINGULAR, "singular locus")?;
    Ok(format!("{:.2?}", start.elapsed()))
}

fn c7_tilting() -> Outcome {
    for (a, m) in [("upper_triangular:2", "simple:0"), ("upper_triangular:2", "simple:1"), ("truncated_poly:3", "cyclic_quotient:2")] {
        let alg = alg(a)?;
        let r = verify_tilting(&module(&alg, m)?, (-3, 3), DEPTH).map_err(err)?;
        ensure!(r.passed, "{a} {m}: {r:?}");
    }
    Ok("3 modules, window [-3, 3]".into())
}

fn c8_approximation() -> Outcome {
    let fixtures: &[(&str, &[&str])] = &[
        ("truncated_poly:2", &["residue"]),
        ("truncated_poly:3", &["residue", "cyclic_quotient:2", "residue+regular"]),
        ("quantum_exterior:2", &["residue"]),
        ("upper_triangular:2", &["simple:0", "simple:1"]),
        ("cyclic:2:Z", &["trivial", "torsion_trivial:2"]),
        ("cyclic:3:Z", &["trivial", "torsion_trivial:3"]),
        ("cyclic:6:Z", &["trivial", "torsion_trivial:6"]),
    ];
    let mut count = 0;
    for (a, specs) in fixtures {
        let alg = alg(a)?;
        let mods: Vec<Module> = specs.iter().map(|s| module(&alg, s)).collect::<Result<_, _>>()?;
        let mut gps = vec![Module::regular(&alg)];
        for m in &mods {
            if is_gprojective(m, DEPTH).map_err(err)?.is_yes() {
                gps.push(m.clone());
            }
        }
        for (m, spec) in mods.iter().zip(specs.iter()) {
            let t = gprojective_approximation(m, DEPTH).map_err(err)?;
            let c = &t.certificate;
            ensure!(c.exact, "{a} {spec}: sequence not exact");
            ensure!(c.gprojective.is_yes(), "{a} {spec}: X_M not certified: {:?}", c.gprojective);
            ensure!(c.finite_pd.finite().is_some(), "{a} {spec}: pd Y_M = {:?}", c.finite_pd);
            for (gi, g) in gps.iter().enumerate() {
                ensure!(t.orthogonal_to(g, 3).map_err(err)?, "{a} {spec}: Ext^i(G{gi}, Y_M) ≠ 0 for some 1 ≤ i ≤ 3");
            }
            count += 1;
        }
    }
    Ok(format!("{count} fixtures"))
}

fn runner() -> TestRunner {
    TestRunner::new_with_rng(Config::with_cases(PROPERTY_CASES), TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn snf_unimodular() -> Result<(), String> {
    let entries = prop::collection::vec(prop::collection::vec(-30i64..30, 1..5), 1..5).prop_filter("rectangular", |rows| {
        rows.iter().all(|r| r.len() == rows[0].len())
    });
    runner()
        .run(&entries, |rows| {
            let z = BaseRing::Integers;
            let m = Matrix::from_rows(z, rows.iter().map(|r| r.iter().map(|&x| Scalar::from(x)).collect()).collect());
            let s = smith_normal_form(&m).unwrap();
            prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
            prop_assert!(s.u.mul(&s.u_inv).is_identity() && s.v.mul(&s.v_inv).is_identity());
            prop_assert!(determinant(&s.u).abs().is_one() && determinant(&s.v).abs().is_one());
            for w in s.diagonal.windows(2) {
                prop_assert!(w[1].mod_floor(&w[0]).is_zero());
            }
            Ok(())
        })
        .map_err(err)
}

fn matlis_involution() -> Result<(), String> {
    let groups = (prop::collection::vec(2i64..40, 0..4), prop::sample::select(vec![2u64, 3, 5, 7]));
    runner()
        .run(&groups, |(factors, p)| {
            let z = BaseRing::Integers;
            let site = PrimeSite::Prime(p);
            let g = gorlab::linear::NormalForm::torsion(&factors);
            let once = matlis_dual_finite(&g, site, z).unwrap();
            let twice = matlis_dual_finite(&once, site, z).unwrap();
            prop_assert_eq!(&twice, &p_primary(&g, p));
            prop_assert_eq!(once.order(), p_primary(&g, p).order());
            let v = NormalForm::free(factors.len());
            prop_assert_eq!(matlis_dual_finite(&v, PrimeSite::Field, BaseRing::Rationals).unwrap(), v);
            Ok(())
        })
        .map_err(err)
}

fn gamma_idempotent() -> Result<(), String> {
    for (a, spec, p) in [("cyclic:2:Z", "torsion_trivial:6", 2u64), ("cyclic:2:Z", "trivial+torsion_trivial:6", 3), ("cyclic:6:Z", "torsion_trivial:4+trivial", 2)] {
        let alg = alg(a)?;
        let m = module(&alg, spec)?;
        let (g1, _) = torsion_submodule(&m, p).map_err(err)?;
        let (g2, _) = torsion_submodule(&g1, p).map_err(err)?;
        ensure!(g1.normal_form() == g2.normal_form(), "{a} {spec} at {p}: {} vs {}", g1.normal_form(), g2.normal_form());
        ensure!(g1.normal_form() == &p_primary(m.normal_form(), p), "{a} {spec} at {p}: Γ is not the p-part");
    }
    let groups = prop::collection::vec((0usize..2, prop::collection::vec(2i64..50, 0..3)), 1..6);
    runner()
        .run(&groups, |degs| {
            let mut g = gorlab::homological::GradedGroups::new(0, degs.len() as i64 - 1);
            for (i, (free, tors)) in degs.iter().enumerate() {
                let nf = NormalForm::free(*free).direct_sum(&NormalForm::torsion(tors));
                g.insert(i as i64, nf);
            }
            let once = local_cohomology_graded(&g, 2).unwrap().groups;
            let twice = local_cohomology_graded(&once, 2).unwrap().groups;
            prop_assert_eq!(once, twice);
            Ok(())
        })
        .map_err(err)
}

fn adjunction() -> Result<usize, String> {
    let pairs: &[(&str, &str, &str)] = &[
        ("truncated_poly:3", "residue", "cyclic_quotient:2"),
        ("truncated_poly:3", "cyclic_quotient:2", "regular"),
        ("upper_triangular:2", "simple:0", "simple:1"),
        ("upper_triangular:2", "regular", "simple:0"),
        ("quantum_exterior:2", "residue", "regular"),
        ("cyclic:2:Z", "trivial", "torsion_trivial:2"),
        ("cyclic:3:Z", "regular", "trivial"),
    ];
    for (a, m, n) in pairs {
        let alg = alg(a)?;
        let r = adjunction_check(&module(&alg, m)?, &module(&alg, n)?).map_err(err)?;
        ensure!(r.natural_iso && r.lhs == r.rhs, "{a} {m} {n}: {r:?}");
    }
    Ok(pairs.len())
}

fn dimension_shift_and_summands() -> Result<usize, String> {
    let pairs: &[(&str, &str, &str)] = &[
        ("truncated_poly:2", "residue", "residue"),
        ("truncated_poly:3", "residue", "cyclic_quotient:2"),
        ("truncated_poly:3", "cyclic_quotient:2", "cyclic_quotient:2"),
        ("quantum_exterior:2", "residue", "residue"),
        ("cyclic:2:Z", "trivial", "trivial"),
        ("cyclic:3:Z", "trivial", "torsion_trivial:3"),
    ];
    for (a, m, n) in pairs {
        let alg = alg(a)?;
        let (x, y) = (module(&alg, m)?, module(&alg, n)?);
        let base = tate_ext(&x, &y, (-3, 3), DEPTH).map_err(err)?.groups;
        let up = tate_ext(&stable_syzygy(&x, 1, DEPTH).map_err(err)?, &y, (-3, 3), DEPTH).map_err(err)?.groups;
        let down = tate_ext(&stable_syzygy(&x, -1, DEPTH).map_err(err)?, &y, (-3, 3), DEPTH).map_err(err)?.groups;
        for i in -2..=2 {
            // Ext-hat^i(M, N) ≅ Ext-hat^{i-1}(ΩM, N) ≅ Ext-hat^{i+1}(Ω^{-1}M, N)
            ensure!(base.get(i) == up.get(i - 1), "{a} {m} {n}: Ω shift at {i}");
            ensure!(base.get(i) == down.get(i + 1), "{a} {m} {n}: Ω^-1 shift at {i}");
        }
        let padded = tate_ext(&sum(&x, &Module::regular(&alg))?, &y, (-3, 3), DEPTH).map_err(err)?.groups;
        ensure!(padded.groups == base.groups, "{a} {m} {n}: free summand changed Tate groups");
    }
    Ok(pairs.len())
}

fn c9_properties() -> Outcome {
    let shifts = dimension_shift_and_summands()?;
    snf_unimodular().map_err(|e| format!("SNF: {e}"))?;
    let adj = adjunction()?;
    gamma_idempotent().map_err(|e| format!("Γ: {e}"))?;
    matlis_involution().map_err(|e| format!("Matlis: {e}"))?;
    Ok(format!("shift/summand {shifts} pairs, adjunction {adj} pairs, {PROPERTY_CASES} cases per random suite"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("tate regression on Z[C_n]", c1_tate_cyclic),
        ("local duality over Z", c2_local_duality),
        ("Serre duality over a field", c3_serre_duality),
        ("trace pairing", c4_pairing),
        ("Gorenstein detection", c5_gorenstein),
        ("singular locus", c6_singular_locus),
        ("tilting", c7_tilting),
        ("approximation invariants", c8_approximation),
        ("property suites", c9_properties),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let id = format!("criterion {}", i + 1);
        if !filter.is_empty() && !filter.iter().any(|w| id.ends_with(w.as_str()) || name.contains(w.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        match outcome {
            Ok(detail) => println!("{id} [{name}]: PASS ({detail}) in {:.2?}", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("{id} [{name}]: FAIL ({why}) in {:.2?}", start.elapsed());
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
