//! LLL reduction of integer lattice bases, exact over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{BaseRing, Matrix, Scalar};

/// A reduced basis `basis·t` of the lattice spanned by the (independent) columns of `basis`,
/// with `t` unimodular and its inverse.
pub struct Reduced {
    pub basis: Matrix,
    pub t: Matrix,
    pub t_inv: Matrix,
}

fn ratio(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// LLL with `δ = 3/4`. Columns must be linearly independent over `Q`.
pub fn lll_reduce(basis: &Matrix) -> Reduced {
    let n = basis.cols();
    let m = basis.rows();
    let mut b: Vec<Vec<BigInt>> = (0..n).map(|j| basis.column(j).iter().map(Scalar::numer).collect()).collect();
    // t[j] is column j of T; t_inv[i] is row i of T^{-1}
    let unit = |j: usize| (0..n).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }).collect::<Vec<_>>();
    let mut t: Vec<Vec<BigInt>> = (0..n).map(unit).collect();
    let mut t_inv: Vec<Vec<BigInt>> = (0..n).map(unit).collect();

    // Gram-Schmidt coefficients and squared norms
    let mut mu = vec![vec![BigRational::zero(); n]; n];
    let mut bn = vec![BigRational::zero(); n];
    let mut star: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut s: Vec<BigRational> = b[i].iter().map(ratio).collect();
        for j in 0..i {
            let d: BigRational = b[i].iter().zip(&star[j]).map(|(x, y)| ratio(x) * y).sum();
            mu[i][j] = d / &bn[j];
            for (sk, yk) in s.iter_mut().zip(&star[j]) {
                *sk -= &mu[i][j] * yk;
            }
        }
        bn[i] = s.iter().map(|x| x * x).sum();
        star.push(s);
    }
    drop(star);

    let delta = BigRational::new(3.into(), 4.into());
    let reduce = |k: usize, j: usize, b: &mut Vec<Vec<BigInt>>, t: &mut Vec<Vec<BigInt>>, t_inv: &mut Vec<Vec<BigInt>>, mu: &mut Vec<Vec<BigRational>>| {
        let q = mu[k][j].round().to_integer();
        if q.is_zero() {
            return;
        }
        for r in 0..m {
            let v = &b[j][r] * &q;
            b[k][r] -= v;
        }
        for r in 0..n {
            let v = &t[j][r] * &q;
            t[k][r] -= v;
            // T ← T·E with E = I - q e_j e_k^T, so T^{-1} ← E^{-1}·T^{-1}: row j += q·row k
            let w = &t_inv[k][r] * &q;
            t_inv[j][r] += w;
        }
        let qr = ratio(&q);
        mu[k][j] -= &qr;
        for l in 0..j {
            let v = &qr * &mu[j][l];
            mu[k][l] -= v;
        }
    };

    let mut k = 1;
    while k < n {
        reduce(k, k - 1, &mut b, &mut t, &mut t_inv, &mut mu);
        let lhs = &bn[k];
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &bn[k - 1];
        if *lhs >= rhs {
            for j in (0..k - 1).rev() {
                reduce(k, j, &mut b, &mut t, &mut t_inv, &mut mu);
            }
            k += 1;
            continue;
        }
        b.swap(k, k - 1);
        t.swap(k, k - 1);
        t_inv.swap(k, k - 1);
        let u = mu[k][k - 1].clone();
        let big = &bn[k] + &u * &u * &bn[k - 1];
        mu[k][k - 1] = &u * &bn[k - 1] / &big;
        bn[k] = &bn[k - 1] * &bn[k] / &big;
        bn[k - 1] = big;
        for j in 0..k - 1 {
            let tmp = mu[k - 1][j].clone();
            mu[k - 1][j] = mu[k][j].clone();
            mu[k][j] = tmp;
        }
        for i in k + 1..n {
            let s = mu[i][k].clone();
            mu[i][k] = &mu[i][k - 1] - &u * &s;
            mu[i][k - 1] = s + &mu[k][k - 1] * &mu[i][k];
        }
        k = (k - 1).max(1);
    }

    let z = BaseRing::Integers;
    let cols = |v: &Vec<Vec<BigInt>>, rows: usize| {
        Matrix::from_columns(z, rows, &v.iter().map(|c| c.iter().cloned().map(Scalar::from_bigint).collect()).collect::<Vec<_>>())
    };
    let t_inv = Matrix::from_rows(z, t_inv.iter().map(|r| r.iter().cloned().map(Scalar::from_bigint).collect()).collect());
    Reduced { basis: cols(&b, m), t: cols(&t, n), t_inv }
}

/// Largest absolute entry, as a size measure.
pub(crate) fn height(m: &Matrix) -> BigInt {
    let mut h = BigInt::zero();
    for i in 0..m.rows() {
        for x in m.row(i) {
            let a = x.numer().abs();
            if a > h {
                h = a;
            }
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_a_skewed_basis() {
        let z = BaseRing::Integers;
        let b = Matrix::from_i64(z, &[&[1, 0, 0], &[0, 1, 0], &[1000, 2001, 1]]);
        let r = lll_reduce(&b);
        assert_eq!(b.mul(&r.t), r.basis);
        assert!(r.t.mul(&r.t_inv).is_identity());
        assert!(height(&r.basis) < BigInt::from(3));
    }

    #[test]
    fn keeps_the_lattice() {
        let z = BaseRing::Integers;
        let b = Matrix::from_i64(z, &[&[201, 37], &[1648, 297], &[3, 5], &[0, 11]]);
        let r = lll_reduce(&b);
        assert_eq!(b.mul(&r.t), r.basis);
        assert!(r.t_inv.mul(&r.t).is_identity());
        assert!(super::super::determinant(&r.t).abs().is_one());
        assert!(height(&r.basis) <= height(&b));
    }
}
