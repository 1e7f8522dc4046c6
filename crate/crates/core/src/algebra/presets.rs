//! Named fixture algebras.

use super::finite::{Alg, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::linear::{BaseRing, Scalar};

fn build(name: String, base: BaseRing, n: usize, mut f: impl FnMut(usize, usize) -> Vec<(usize, Scalar)>, unit: usize) -> Result<Alg> {
    let mut c = vec![Scalar::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            for (k, v) in f(i, j) {
                c[(i * n + j) * n + k] = v;
            }
        }
    }
    let alg = FiniteAlgebra::from_flat(name, base, n, c, crate::linear::unit_vector(n, unit))?;
    let report = alg.validate();
    if let Some(f) = report.failures.first() {
        return Err(Error::InvalidInput(format!("preset {} is not an algebra: {f}", alg.name())));
    }
    Ok(alg)
}

/// `R[x]/(x^n)` with basis `1, x, …, x^{n-1}`.
pub fn truncated_poly(n: usize, base: BaseRing) -> Result<Alg> {
    if n == 0 {
        return Err(Error::InvalidInput("truncated_poly needs n ≥ 1".into()));
    }
    build(format!("truncated_poly({n})/{base}"), base, n, |i, j| {
        if i + j < n {
            vec![(i + j, Scalar::one())]
        } else {
            vec![]
        }
    }, 0)
}

/// Group algebra `R[C_n]` with basis `g^0, …, g^{n-1}`.
pub fn cyclic_group_algebra(n: usize, base: BaseRing) -> Result<Alg> {
    if n == 0 {
        return Err(Error::InvalidInput("cyclic group order must be ≥ 1".into()));
    }
    build(format!("cyclic({n})/{base}"), base, n, |i, j| vec![((i + j) % n, Scalar::one())], 0)
}

/// Elements of `S_3` as permutations of `{0,1,2}`, identity first.
pub fn symmetric3_elements() -> Vec<[usize; 3]> {
    vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]]
}

/// Group algebra `R[S_3]`; the product of basis elements is `(στ)(k) = σ(τ(k))`.
pub fn symmetric3_group_algebra(base: BaseRing) -> Result<Alg> {
    let els = symmetric3_elements();
    let index = |p: [usize; 3]| els.iter().position(|q| *q == p).expect("closed");
    build(format!("symmetric3/{base}"), base, 6, |i, j| {
        let (s, t) = (els[i], els[j]);
        vec![(index([s[t[0]], s[t[1]], s[t[2]]]), Scalar::one())]
    }, 0)
}

/// Upper triangular `n×n` matrices, basis `e_ij` (`i ≤ j`) in row-major order.
pub fn upper_triangular(n: usize, base: BaseRing) -> Result<Alg> {
    if n == 0 {
        return Err(Error::InvalidInput("upper_triangular needs n ≥ 1".into()));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let dim = pairs.len();
    let mut c = vec![Scalar::zero(); dim * dim * dim];
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate() {
            if j == k {
                let t = pairs.iter().position(|&p| p == (i, l)).expect("upper");
                c[(a * dim + b) * dim + t] = Scalar::one();
            }
        }
    }
    let mut unit = vec![Scalar::zero(); dim];
    for i in 0..n {
        unit[pairs.iter().position(|&p| p == (i, i)).expect("diag")] = Scalar::one();
    }
    let alg = FiniteAlgebra::from_flat(format!("upper_triangular({n})/{base}"), base, dim, c, unit)?;
    debug_assert!(alg.validate().is_valid());
    Ok(alg)
}

/// `k⟨x,y⟩/(x², xy + q·yx, y²)` with basis `1, x, y, xy`.
pub fn quantum_exterior(q: &Scalar, base: BaseRing) -> Result<Alg> {
    if !base.is_field() {
        return Err(Error::InvalidInput("quantum_exterior is defined over a field".into()));
    }
    let q = base.normalize(q);
    if q.is_zero() {
        return Err(Error::InvalidInput("quantum_exterior requires q ≠ 0".into()));
    }
    // y·x = -q^{-1}·xy
    let yx = base.neg(&base.inv(&q));
    build(format!("quantum_exterior({q})/{base}"), base, 4, |i, j| match (i, j) {
        (0, j) => vec![(j, Scalar::one())],
        (i, 0) => vec![(i, Scalar::one())],
        (1, 2) => vec![(3, Scalar::one())],
        (2, 1) => vec![(3, yx.clone())],
        _ => vec![],
    }, 0)
}

/// The commutative local algebra `k[x,y]/(x², xy, y²)` with basis `1, x, y`.
pub fn fat_point(base: BaseRing) -> Result<Alg> {
    build(format!("fat_point/{base}"), base, 3, |i, j| match (i, j) {
        (0, j) => vec![(j, Scalar::one())],
        (i, 0) => vec![(i, Scalar::one())],
        _ => vec![],
    }, 0)
}

/// Parse a preset spec such as `truncated_poly:3`, `cyclic:6:Z`, `quantum_exterior:2:F5`,
/// `upper_triangular:2`, `symmetric3:Q`, `fat_point`. The base defaults to `Q`.
pub fn preset(spec: &str) -> Result<Alg> {
    let parts: Vec<&str> = spec.split(':').collect();
    let base_at = |i: usize| -> Result<BaseRing> {
        parts.get(i).map_or(Ok(BaseRing::Rationals), |s| BaseRing::from_short_name(s))
    };
    let num_at = |i: usize| -> Result<usize> {
        parts
            .get(i)
            .ok_or_else(|| Error::InvalidInput(format!("preset {spec} needs a size parameter")))?
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad size in preset {spec}")))
    };
    match parts[0] {
        "truncated_poly" => truncated_poly(num_at(1)?, base_at(2)?),
        "cyclic" | "group_algebra" => {
            let off = usize::from(parts.get(1) == Some(&"cyclic"));
            cyclic_group_algebra(num_at(1 + off)?, base_at(2 + off)?)
        }
        "symmetric3" => symmetric3_group_algebra(base_at(1)?),
        "upper_triangular" => upper_triangular(num_at(1)?, base_at(2)?),
        "quantum_exterior" => {
            let base = base_at(2)?;
            let q = base.parse_scalar(parts.get(1).ok_or_else(|| {
                Error::InvalidInput("quantum_exterior needs a parameter q".into())
            })?)?;
            quantum_exterior(&q, base)
        }
        "fat_point" | "commutative_fat_point" => fat_point(base_at(1)?),
        other => Err(Error::InvalidInput(format!("unknown preset {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_validate() {
        for spec in [
            "truncated_poly:2",
            "truncated_poly:4:F3",
            "cyclic:6:Z",
            "symmetric3:Q",
            "upper_triangular:2",
            "upper_triangular:3",
            "quantum_exterior:2",
            "quantum_exterior:2:F5",
            "fat_point",
        ] {
            let a = preset(spec).unwrap();
            assert!(a.validate().is_valid(), "{spec}");
        }
        assert!(preset("quantum_exterior:0").is_err());
        assert!(preset("quantum_exterior:5:F5").is_err());
        assert!(preset("nonsense").is_err());
    }

    #[test]
    fn truncated_poly_basis() {
        let a = truncated_poly(2, BaseRing::Rationals).unwrap();
        assert_eq!(a.rank(), 2);
        let x = a.basis_element(1);
        assert!(a.mul(&x, &x).iter().all(Scalar::is_zero));
    }

    #[test]
    fn quantum_relation() {
        let q = Scalar::from(2);
        let a = quantum_exterior(&q, BaseRing::Rationals).unwrap();
        let (x, y) = (a.basis_element(1), a.basis_element(2));
        let xy = a.mul(&x, &y);
        let yx = a.mul(&y, &x);
        // xy = -q·yx
        let rhs: Vec<Scalar> = yx.iter().map(|v| -(v * &q)).collect();
        assert_eq!(xy, rhs);
        assert_eq!(a.rank(), 4);
    }

    #[test]
    fn cyclic_two_over_z() {
        let a = cyclic_group_algebra(2, BaseRing::Integers).unwrap();
        let g = a.basis_element(1);
        assert_eq!(a.mul(&g, &g), a.unit().to_vec());
    }
}
