//! Smith normal form with transform tracking.
//!
//! The same elimination runs over fields, where it degenerates to a rank normal form
//! `U·m·V = diag(1, …, 1, 0, …)`; callers that need invariant factors only use the
//! integer case.

use super::{BaseRing, Matrix, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Row transform, `U·m·V = D`.
    pub u: Matrix,
    pub u_inv: Matrix,
    pub d: Matrix,
    /// Column transform.
    pub v: Matrix,
    pub v_inv: Matrix,
    /// Diagonal entries `d_1 | d_2 | … | d_rank` (nonzero, positive over `Z`, `1` over fields).
    pub diagonal: Vec<Scalar>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Nonzero, non-unit diagonal entries.
    pub fn invariant_factors(&self) -> Vec<Scalar> {
        let base = self.d.base();
        self.diagonal.iter().filter(|d| !base.is_unit(d)).cloned().collect()
    }
}

/// Smith normal form of an integer matrix: unimodular `U`, `V` with `U·m·V = D` diagonal and
/// `d_1 | d_2 | …`.
pub fn smith_normal_form(m: &Matrix) -> Result<SmithForm> {
    if m.base() != BaseRing::Integers {
        return Err(Error::BaseMismatch(format!(
            "smith_normal_form needs Z, got {}",
            m.base()
        )));
    }
    Ok(smith_decompose(m))
}

struct Tracker {
    d: Matrix,
    u: Matrix,
    u_inv: Matrix,
    v: Matrix,
    v_inv: Matrix,
}

impl Tracker {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row[t] += f * row[s]
    fn row_axpy(&mut self, t: usize, s: usize, f: &Scalar) {
        self.d.row_axpy(t, s, f);
        self.u.row_axpy(t, s, f);
        // inverse: col[s] -= f * col[t]
        self.u_inv.col_axpy(s, t, &-f);
    }

    /// col[t] += f * col[s]
    fn col_axpy(&mut self, t: usize, s: usize, f: &Scalar) {
        self.d.col_axpy(t, s, f);
        self.v.col_axpy(t, s, f);
        self.v_inv.row_axpy(s, t, &-f);
    }

    fn scale_row(&mut self, i: usize, c: &Scalar, c_inv: &Scalar) {
        self.d.scale_row(i, c);
        self.u.scale_row(i, c);
        self.u_inv.scale_col(i, c_inv);
    }
}

fn quotient(base: BaseRing, a: &Scalar, p: &Scalar) -> Scalar {
    if base.is_field() {
        base.mul(a, &base.inv(p))
    } else {
        a.div_floor(p)
    }
}

/// Works over any supported base ring.
pub(crate) fn smith_decompose(m: &Matrix) -> SmithForm {
    let base = m.base();
    let (r, c) = (m.rows(), m.cols());
    let mut t = Tracker {
        d: m.clone(),
        u: Matrix::identity(base, r),
        u_inv: Matrix::identity(base, r),
        v: Matrix::identity(base, c),
        v_inv: Matrix::identity(base, c),
    };
    let mut diagonal = Vec::new();
    let mut k = 0;
    while k < r.min(c) {
        // pivot of least absolute value, ties: lowest row, then column
        let mut best: Option<(usize, usize, Scalar)> = None;
        for i in k..r {
            for j in k..c {
                let x = t.d.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let a = x.abs();
                if best.as_ref().map_or(true, |(_, _, b)| a < *b) {
                    best = Some((i, j, a));
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        t.swap_rows(k, pi);
        t.swap_cols(k, pj);
        loop {
            let p = t.d.get(k, k).clone();
            let mut clean = true;
            for i in k + 1..r {
                let x = t.d.get(i, k).clone();
                if x.is_zero() {
                    continue;
                }
                let q = quotient(base, &x, &p);
                t.row_axpy(i, k, &base.neg(&q));
                if !t.d.get(i, k).is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..c {
                let x = t.d.get(k, j).clone();
                if x.is_zero() {
                    continue;
                }
                let q = quotient(base, &x, &p);
                t.col_axpy(j, k, &base.neg(&q));
                if !t.d.get(k, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // move the smallest remainder in row/column k into the pivot
                let mut best = (k, k, t.d.get(k, k).abs());
                for i in k + 1..r {
                    let x = t.d.get(i, k);
                    if !x.is_zero() && x.abs() < best.2 {
                        best = (i, k, x.abs());
                    }
                }
                for j in k + 1..c {
                    let x = t.d.get(k, j);
                    if !x.is_zero() && x.abs() < best.2 {
                        best = (k, j, x.abs());
                    }
                }
                t.swap_rows(k, best.0);
                t.swap_cols(k, best.1);
                continue;
            }
            if base.is_field() {
                break;
            }
            // divisibility: every remaining entry must be a multiple of the pivot
            let mut bad = None;
            'outer: for i in k + 1..r {
                for j in k + 1..c {
                    if !t.d.get(i, j).mod_floor(&p).is_zero() {
                        bad = Some(i);
                        break 'outer;
                    }
                }
            }
            match bad {
                Some(i) => t.row_axpy(k, i, &Scalar::one()),
                None => break,
            }
        }
        let p = t.d.get(k, k).clone();
        if base.is_field() {
            let inv = base.inv(&p);
            t.scale_row(k, &inv, &p);
        } else if p.is_negative() {
            let m1 = Scalar::from_i64(-1);
            t.scale_row(k, &m1, &m1);
        }
        diagonal.push(t.d.get(k, k).clone());
        k += 1;
    }
    SmithForm { u: t.u, u_inv: t.u_inv, d: t.d, v: t.v, v_inv: t.v_inv, diagonal }
}

/// Determinant by Gaussian elimination over the fraction field.
pub fn determinant(m: &Matrix) -> Scalar {
    assert!(m.is_square(), "determinant of non-square matrix");
    let base = m.base();
    let n = m.rows();
    let work_base = if base == BaseRing::Integers { BaseRing::Rationals } else { base };
    let mut a = m.change_base(work_base);
    let mut det = Scalar::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
            return Scalar::zero();
        };
        if p != k {
            a.swap_rows(p, k);
            det = work_base.neg(&det);
        }
        let piv = a.get(k, k).clone();
        det = work_base.mul(&det, &piv);
        let inv = work_base.inv(&piv);
        for i in k + 1..n {
            let f = work_base.mul(a.get(i, k), &inv);
            a.row_axpy(i, k, &work_base.neg(&f));
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &Matrix) -> SmithForm {
        let s = smith_decompose(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert!(s.u.mul(&s.u_inv).is_identity());
        assert!(s.v.mul(&s.v_inv).is_identity());
        for w in s.diagonal.windows(2) {
            assert!(w[1].mod_floor(&w[0]).is_zero());
        }
        s
    }

    #[test]
    fn hand_reduced_example() {
        // [[2,4],[6,8]]: row2 -= 3 row1 -> [[2,4],[0,-4]] -> diag(2,4)
        let z = BaseRing::Integers;
        let s = check(&Matrix::from_i64(z, &[&[2, 4], &[6, 8]]));
        assert_eq!(s.invariant_factors(), vec![Scalar::from(2), Scalar::from(4)]);
    }

    #[test]
    fn identity_and_zero() {
        let z = BaseRing::Integers;
        assert!(check(&Matrix::identity(z, 3)).invariant_factors().is_empty());
        let s = check(&Matrix::zeros(z, 2, 3));
        assert_eq!(s.rank(), 0);
        assert!(s.d.is_zero());
    }

    #[test]
    fn coprime_diagonal_merges() {
        let z = BaseRing::Integers;
        let s = check(&Matrix::from_i64(z, &[&[2, 0], &[0, 3]]));
        assert_eq!(s.diagonal, vec![Scalar::from(1), Scalar::from(6)]);
    }

    #[test]
    fn field_rank_form() {
        let q = BaseRing::Rationals;
        let s = check(&Matrix::from_i64(q, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]));
        assert_eq!(s.rank(), 2);
        assert!(s.diagonal.iter().all(Scalar::is_one));
    }

    #[test]
    fn determinant_values() {
        let z = BaseRing::Integers;
        assert_eq!(determinant(&Matrix::from_i64(z, &[&[2, 3], &[1, 4]])), Scalar::from(5));
        let f = BaseRing::PrimeField(5);
        assert_eq!(determinant(&Matrix::from_i64(f, &[&[2, 3], &[1, 4]])), Scalar::zero());
    }
}
