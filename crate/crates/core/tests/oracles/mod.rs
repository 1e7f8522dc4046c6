//! Frozen reference values, each with the independent computation that produced it.
//!
//! The library computes Tate groups from a dualized and spliced complete resolution. The
//! pipelines here avoid that machinery: periodic resolutions written down by hand, closed
//! rank formulas, and Koszul duality.

use std::collections::BTreeMap;

use gorlab::algebra::named::trivial;
use gorlab::algebra::presets::cyclic_group_algebra;
use gorlab::algebra::{HomSpace, Module};
use gorlab::homological::homology;
use gorlab::linear::{BaseRing, Matrix, NormalForm, Scalar};

/// `Ext-hat^i_{Z[C_n]}(Z, Z)` for `-4 ≤ i ≤ 4`: `Z/n` in even degrees, `0` in odd ones.
pub fn cyclic_tate(n: i64, i: i64) -> NormalForm {
    if i % 2 == 0 {
        NormalForm::torsion(&[n])
    } else {
        NormalForm::zero()
    }
}

/// Second pipeline for [`cyclic_tate`]: the 2-periodic complete resolution
/// `… → A --(g-1)--> A --N--> A --(g-1)--> A → …`, with `Hom_A(-, Z)` taken by the library's
/// Hom spaces and cohomology by plain lattice arithmetic.
pub fn cyclic_tate_periodic(n: usize, range: (i64, i64)) -> BTreeMap<i64, NormalForm> {
    let z = BaseRing::Integers;
    let a = cyclic_group_algebra(n, z).unwrap();
    let reg = Module::regular(&a);
    let triv = trivial(&a).unwrap();
    let h = HomSpace::new(&reg, &triv).unwrap();
    let mut g_minus_1 = a.basis_element(1 % n);
    g_minus_1[0] = &g_minus_1[0] - &Scalar::one();
    let norm = vec![Scalar::one(); n];
    // left-module maps A → A are right multiplications
    let t = h.precompose(&h, &a.right_mult(&g_minus_1)).unwrap();
    let nm = h.precompose(&h, &a.right_mult(&norm)).unwrap();
    // d^i : C^i → C^{i+1} is precomposition with g-1 for even i, with N for odd i
    let d = |i: i64| if i.rem_euclid(2) == 0 { t.clone() } else { nm.clone() };
    let rel = Matrix::zeros(z, h.dim(), 0);
    (range.0..=range.1)
        .map(|i| (i, homology(z, &d(i - 1), &rel, &d(i), &rel).unwrap().normal_form().clone()))
        .collect()
}

/// `p`-primary part of `Ext-hat^i(Z, Z)` over `Z[C_n]`.
pub fn cyclic_local(n: i64, p: i64, i: i64) -> NormalForm {
    let mut q = 1;
    let mut r = n;
    while r % p == 0 {
        r /= p;
        q *= p;
    }
    if i % 2 != 0 || q == 1 {
        NormalForm::zero()
    } else {
        NormalForm::torsion(&[q])
    }
}

/// `dim Ext-hat^i(A/x^j, A/x^l)` over `k[x]/(x^n)`: the complete resolution of `A/x^j` is
/// 2-periodic with differentials `x^j` and `x^{n-j}`, and `x^s` has rank `max(0, l-s)` on `A/x^l`.
pub fn truncated_tate_dim(n: usize, j: usize, l: usize) -> usize {
    let r = |s: usize| l.saturating_sub(s);
    l - r(j) - r(n - j)
}

/// `dim Ext-hat^i(k, k)` over the quantum exterior algebra in two variables. Its Koszul dual is
/// a quantum plane, whose Hilbert series `1/(1-t)^2` gives `i + 1` for `i ≥ 0`; the negative side
/// follows from Tate duality for Frobenius algebras, `Ext-hat^{-i} ≅ D Ext-hat^{i-1}`.
pub fn quantum_exterior_tate_dim(i: i64) -> usize {
    if i >= 0 {
        (i + 1) as usize
    } else {
        (-i) as usize
    }
}

/// Injective dimensions `(site, d)` of every certified Gorenstein fixture.
pub const GORENSTEIN: &[(&str, &[(&str, usize)])] = &[
    ("truncated_poly:1", &[("0", 0)]),
    ("truncated_poly:2", &[("0", 0)]),
    ("truncated_poly:3", &[("0", 0)]),
    ("truncated_poly:4", &[("0", 0)]),
    ("upper_triangular:2", &[("0", 1)]),
    ("quantum_exterior:2", &[("0", 0)]),
    ("quantum_exterior:3", &[("0", 0)]),
    ("quantum_exterior:2:F5", &[("0", 0)]),
    ("cyclic:1:Z", &[("0", 0)]),
    ("cyclic:2:Z", &[("0", 0), ("2", 1)]),
    ("cyclic:3:Z", &[("0", 0), ("3", 1)]),
    ("cyclic:4:Z", &[("0", 0), ("2", 1)]),
    ("cyclic:5:Z", &[("0", 0), ("5", 1)]),
    ("cyclic:6:Z", &[("0", 0), ("2", 1), ("3", 1)]),
];

/// Certified singular sites.
pub const SINGULAR: &[(&str, &[&str])] = &[("cyclic:6:Z", &["2", "3"]), ("upper_triangular:2", &[]), ("truncated_poly:2", &["0"])];
