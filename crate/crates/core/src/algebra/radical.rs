//! Jacobson radical of an algebra over a field.
//!
//! In characteristic 0 (or `p > dim A`) the radical is the kernel of the trace form. For
//! small `p` the iterated functionals `g_i(a) = Tr(ã^{p^i})/p^i mod p` on integer lifts are
//! used: `I_{-1} = A`, `I_i = {a ∈ I_{i-1} : g_i(ab) = 0 ∀b}`, and `rad A = I_l` with
//! `l = ⌊log_p dim A⌋`.

use super::finite::FiniteAlgebra;
use crate::linear::{field_kernel, BaseRing, Matrix, Scalar};

pub(super) fn compute(a: &FiniteAlgebra) -> Matrix {
    let n = a.rank();
    let base = a.base();
    match base {
        BaseRing::PrimeField(p) if (p as usize) <= n => iterated(a, p),
        _ => {
            let t = a.trace_form().transpose();
            field_kernel(&t).expect("field base")
        }
    }
}

fn iterated(a: &FiniteAlgebra, p: u64) -> Matrix {
    let n = a.rank();
    let base = a.base();
    let mut l = 0u32;
    while (p as usize).pow(l + 1) <= n {
        l += 1;
    }
    let mut basis = Matrix::identity(base, n);
    for i in 0..=l {
        let cols = basis.cols();
        if cols == 0 {
            break;
        }
        let mut g = Matrix::zeros(base, n, cols);
        for k in 0..cols {
            let ak = basis.column(k);
            for j in 0..n {
                let x = a.mul(&ak, &a.basis_element(j));
                g.set(j, k, Scalar::from_i64(trace_functional(a, &x, p, i) as i64));
            }
        }
        let kern = field_kernel(&g).expect("field base");
        basis = basis.mul(&kern);
    }
    basis
}

/// `g_i(x) = Tr(L_x^{p^i}) / p^i mod p` for an integer lift of the regular matrix of `x`.
fn trace_functional(a: &FiniteAlgebra, x: &[Scalar], p: u64, i: u32) -> u64 {
    let n = a.rank();
    let modulus = (p as i128).pow(i + 1);
    let lm = a.left_mult(x);
    let mut m = vec![vec![0i128; n]; n];
    for r in 0..n {
        for c in 0..n {
            m[r][c] = lm.get(r, c).to_i64().expect("residue") as i128;
        }
    }
    let e = (p as u128).pow(i);
    let pw = mat_pow_mod(&m, e, modulus);
    let tr = (0..n).fold(0i128, |s, r| (s + pw[r][r]).rem_euclid(modulus));
    let scale = (p as i128).pow(i);
    debug_assert_eq!(tr % scale, 0, "trace not divisible by p^i on I_(i-1)");
    ((tr / scale) % p as i128) as u64
}

fn mat_mul_mod(x: &[Vec<i128>], y: &[Vec<i128>], m: i128) -> Vec<Vec<i128>> {
    let n = x.len();
    let mut out = vec![vec![0i128; n]; n];
    for i in 0..n {
        for k in 0..n {
            let a = x[i][k];
            if a == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] = (out[i][j] + a * y[k][j]) % m;
            }
        }
    }
    out
}

fn mat_pow_mod(x: &[Vec<i128>], mut e: u128, m: i128) -> Vec<Vec<i128>> {
    let n = x.len();
    let mut result: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    let mut b = x.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = mat_mul_mod(&result, &b, m);
        }
        b = mat_mul_mod(&b, &b, m);
        e >>= 1;
    }
    result
}
