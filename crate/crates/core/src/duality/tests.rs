use super::*;
use crate::algebra::named::{cyclic_quotient, residue, trivial};
use crate::algebra::presets::{cyclic_group_algebra, fat_point, truncated_poly, upper_triangular};
use crate::linear::BaseRing;

const Q: BaseRing = BaseRing::Rationals;

#[test]
fn serre_duality_on_truncated_polynomials() {
    let a = truncated_poly(2, Q).unwrap();
    let k = residue(&a).unwrap();
    let r = verify_serre_duality_field(&k, &k, (-3, 3), 12).unwrap();
    assert!(r.passed(), "{r:#?}");
    assert!(r.rows.iter().all(|row| row.lhs.generators() == 1));
    assert_eq!(r.shift, -1);

    let a = truncated_poly(3, Q).unwrap();
    let k = residue(&a).unwrap();
    let n = cyclic_quotient(&a, 2).unwrap();
    for (x, y) in [(&k, &n), (&n, &k), (&n, &n)] {
        let r = verify_serre_duality_field(x, y, (-3, 3), 12).unwrap();
        assert!(r.passed(), "{r:#?}");
    }
}

#[test]
fn serre_duality_detects_the_shift() {
    // dims of Ext-hat(k, k) grow away from degree -1, so a wrong shift cannot pass
    for base in [Q, BaseRing::PrimeField(5)] {
        let a = crate::algebra::presets::quantum_exterior(&crate::linear::Scalar::from(2), base).unwrap();
        let k = residue(&a).unwrap();
        let r = verify_serre_duality_field(&k, &k, (-2, 2), 12).unwrap();
        assert!(r.passed(), "{r:#?}");
        let dims: Vec<usize> = r.rows.iter().map(|row| row.lhs.generators()).collect();
        assert_eq!(dims, [2, 1, 1, 2, 3]);
    }
}

#[test]
fn regular_algebra_passes_vacuously() {
    let a = upper_triangular(2, Q).unwrap();
    let s = crate::algebra::named::upper_triangular_simple(&a, 0).unwrap();
    let t = crate::algebra::named::upper_triangular_simple(&a, 1).unwrap();
    let r = verify_serre_duality_field(&s, &t, (-2, 2), 12).unwrap();
    assert!(r.passed());
    assert!(r.rows.iter().all(|row| row.lhs.is_zero() && row.rhs.is_zero()));
}

#[test]
fn local_duality_on_cyclic_groups() {
    for (n, p) in [(2, 2), (6, 2), (6, 3), (6, 5)] {
        let a = cyclic_group_algebra(n, BaseRing::Integers).unwrap();
        let z = trivial(&a).unwrap();
        let r = verify_local_duality_integer(&z, &z, p, (-2, 2), 12).unwrap();
        assert!(r.passed(), "{n} at {p}: {r:#?}");
        assert_eq!(r.shift, 0);
        for row in &r.rows {
            let want = if row.degree % 2 == 0 && n % p as usize == 0 {
                NormalForm::torsion(&[p as i64])
            } else {
                NormalForm::zero()
            };
            assert_eq!(row.lhs, want, "{n} at {p}, degree {}", row.degree);
        }
    }
}

#[test]
fn pairing_is_nondegenerate() {
    let a = truncated_poly(2, Q).unwrap();
    let k = residue(&a).unwrap();
    let r = trace_pairing_probe(&k, &k, 12).unwrap();
    assert_eq!(r.dims, [1, 1, 1]);
    assert_eq!(r.verdict, Verdict::Pass);

    let a = truncated_poly(3, Q).unwrap();
    let k = residue(&a).unwrap();
    let n = cyclic_quotient(&a, 2).unwrap();
    let r = trace_pairing_probe(&k, &n, 12).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "{r:?}");

    let p = crate::algebra::Module::regular(&a);
    let r = trace_pairing_probe(&p, &k, 12).unwrap();
    assert_eq!(r.dims, [0, 0, 0]);
    assert_eq!(r.verdict, Verdict::Pass);
}

#[test]
fn reports() {
    let a = truncated_poly(2, Q).unwrap();
    let r = report(&a, &ReportConfig::default()).unwrap();
    assert_eq!(r.sections.len(), 1);
    assert_eq!(r.verdict, Verdict::Pass);

    let a = cyclic_group_algebra(2, BaseRing::Integers).unwrap();
    let cfg: ReportConfig = serde_json::from_str(
        r#"{"singular_locus": true, "local": [{"m": "trivial", "n": "trivial", "prime": 2, "range": [-2, 2]}]}"#,
    )
    .unwrap();
    let r = report(&a, &cfg).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "{}", r.to_text());
    assert_eq!(r.sections[1].detail["singular"], serde_json::json!(["2"]));
    let again = report(&a, &cfg).unwrap();
    assert_eq!(r.to_json().to_string(), again.to_json().to_string());

    let a = fat_point(Q).unwrap();
    let cfg: ReportConfig = serde_json::from_str(r#"{"serre": [{"m": "k", "n": "k"}]}"#).unwrap();
    let r = report(&a, &cfg).unwrap();
    assert_eq!(r.sections[0].reason.as_deref(), Some("not_gorenstein"));
    assert!(r.sections[1].verdict.is_none());
    assert_eq!(r.verdict, Verdict::Pass);
}
