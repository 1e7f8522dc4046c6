//! Kernels, column spans and linear solving over fields and over `Z`.

use super::smith::smith_decompose;
use super::{BaseRing, Matrix, Scalar};
use crate::error::{Error, Result};

/// Reduced row echelon form over a field; returns the matrix and its pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let base = m.base();
    assert!(base.is_field(), "rref over a non-field");
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols() {
        if row == a.rows() {
            break;
        }
        let Some(p) = (row..a.rows()).find(|&i| !a.get(i, col).is_zero()) else {
            continue;
        };
        a.swap_rows(row, p);
        let inv = base.inv(a.get(row, col));
        a.scale_row(row, &inv);
        for i in 0..a.rows() {
            if i != row && !a.get(i, col).is_zero() {
                let f = base.neg(a.get(i, col));
                a.row_axpy(i, row, &f);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    if m.base().is_field() {
        rref(m).1.len()
    } else {
        rref(&m.change_base(BaseRing::Rationals)).1.len()
    }
}

/// Basis of the kernel of `m` over a field, as the columns of the returned matrix.
pub fn field_kernel(m: &Matrix) -> Result<Matrix> {
    let base = m.base();
    if !base.is_field() {
        return Err(Error::BaseMismatch(format!("field_kernel over {base}")));
    }
    let (r, pivots) = rref(m);
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    let mut k = Matrix::zeros(base, n, free.len());
    for (c, &f) in free.iter().enumerate() {
        k.set(f, c, Scalar::one());
        for (i, &p) in pivots.iter().enumerate() {
            k.set(p, c, base.neg(r.get(i, f)));
        }
    }
    Ok(k)
}

/// Column Hermite form: returns `(H, T, pivot_rows)` with `H = m·T`, `T` unimodular, the
/// first `pivot_rows.len()` columns of `H` in lower echelon form (column `k` starts at row
/// `pivot_rows[k]` with a positive entry) and the remaining columns zero.
pub fn column_hermite(m: &Matrix) -> (Matrix, Matrix, Vec<usize>) {
    assert_eq!(m.base(), BaseRing::Integers);
    let mut h = m.clone();
    let c = m.cols();
    let mut t = Matrix::identity(BaseRing::Integers, c);
    let mut k = 0;
    let mut pivots = Vec::new();
    for i in 0..m.rows() {
        if k == c {
            break;
        }
        loop {
            let mut best: Option<(usize, Scalar)> = None;
            for j in k..c {
                let x = h.get(i, j);
                if !x.is_zero() && best.as_ref().map_or(true, |(_, b)| x.abs() < *b) {
                    best = Some((j, x.abs()));
                }
            }
            let Some((j0, _)) = best else { break };
            h.swap_cols(k, j0);
            t.swap_cols(k, j0);
            let p = h.get(i, k).clone();
            let mut done = true;
            for j in k + 1..c {
                let x = h.get(i, j).clone();
                if x.is_zero() {
                    continue;
                }
                let q = x.div_round(&p);
                h.col_axpy(j, k, &-&q);
                t.col_axpy(j, k, &-&q);
                if !h.get(i, j).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if k < c && !h.get(i, k).is_zero() {
            if h.get(i, k).is_negative() {
                let m1 = Scalar::from_i64(-1);
                h.scale_col(k, &m1);
                t.scale_col(k, &m1);
            }
            let p = h.get(i, k).clone();
            for j in 0..k {
                let q = h.get(i, j).div_floor(&p);
                if !q.is_zero() {
                    h.col_axpy(j, k, &-&q);
                    t.col_axpy(j, k, &-&q);
                }
            }
            pivots.push(i);
            k += 1;
        }
    }
    (h, t, pivots)
}

/// Basis of `{x : m·x = 0}`. Over `Z` this is a basis of the (saturated) kernel lattice.
pub fn kernel(m: &Matrix) -> Matrix {
    if m.base().is_field() {
        return field_kernel(m).expect("field");
    }
    let (_, t, piv) = column_hermite(m);
    let idx: Vec<usize> = (piv.len()..m.cols()).collect();
    let k = t.select_columns(&idx);
    span_basis(&k)
}

/// A basis (independent columns) of the column span of `m`, in column echelon form.
pub fn span_basis(m: &Matrix) -> Matrix {
    if m.base().is_field() {
        let (r, pivots) = rref(&m.transpose());
        let rows: Vec<usize> = (0..pivots.len()).collect();
        return r.select_rows(&rows).transpose();
    }
    let (h, _, piv) = column_hermite(m);
    let idx: Vec<usize> = (0..piv.len()).collect();
    h.select_columns(&idx)
}

/// Solve `m·x = b`. `Ok(None)` means no solution exists over the base ring.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    if b.len() != m.rows() {
        return Err(Error::Shape(format!(
            "solve: matrix has {} rows, right-hand side has {}",
            m.rows(),
            b.len()
        )));
    }
    let base = m.base();
    if base.is_field() {
        let aug = m.hstack(&Matrix::column_vector(base, b));
        let (r, pivots) = rref(&aug);
        if pivots.last() == Some(&m.cols()) {
            return Ok(None);
        }
        let mut x = vec![Scalar::zero(); m.cols()];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, m.cols()).clone();
        }
        return Ok(Some(x));
    }
    let s = smith_decompose(m);
    let ub = s.u.mul_vec(b);
    let mut y = vec![Scalar::zero(); m.cols()];
    for (i, ubi) in ub.iter().enumerate() {
        if i < s.rank() {
            let d = &s.diagonal[i];
            if !ubi.mod_floor(d).is_zero() {
                return Ok(None);
            }
            y[i] = ubi.div_floor(d);
        } else if !ubi.is_zero() {
            return Ok(None);
        }
    }
    Ok(Some(s.v.mul_vec(&y)))
}

/// Solve `m·X = B` column by column.
pub fn solve_matrix(m: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if m.base().is_field() {
        // one elimination for all right-hand sides
        let base = m.base();
        if b.rows() != m.rows() {
            return Err(Error::Shape("solve_matrix".into()));
        }
        let aug = m.hstack(b);
        let (r, pivots) = rref(&aug);
        if pivots.iter().any(|&p| p >= m.cols()) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(base, m.cols(), b.cols());
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols() {
                x.set(p, j, r.get(i, m.cols() + j).clone());
            }
        }
        return Ok(Some(x));
    }
    if b.rows() != m.rows() {
        return Err(Error::Shape("solve_matrix".into()));
    }
    let s = smith_decompose(m);
    let ub = s.u.mul(b);
    let mut y = Matrix::zeros(m.base(), m.cols(), b.cols());
    for j in 0..b.cols() {
        for i in 0..ub.rows() {
            let v = ub.get(i, j);
            if i < s.rank() {
                let d = &s.diagonal[i];
                if !v.mod_floor(d).is_zero() {
                    return Ok(None);
                }
                y.set(i, j, v.div_floor(d));
            } else if !v.is_zero() {
                return Ok(None);
            }
        }
    }
    Ok(Some(s.v.mul(&y)))
}

/// Solve `Σ x_l·cols[l] ≡ rhs`, where row `r` is taken modulo `moduli[r]` when present.
/// Returns the coefficients `x_l` only.
pub fn solve_congruences(
    base: super::BaseRing,
    rows: usize,
    cols: &[Vec<Scalar>],
    rhs: &[Scalar],
    moduli: &[Option<Scalar>],
) -> Result<Option<Vec<Scalar>>> {
    let slack: Vec<(usize, &Scalar)> =
        moduli.iter().enumerate().filter_map(|(r, m)| m.as_ref().map(|d| (r, d))).collect();
    let mut m = Matrix::zeros(base, rows, cols.len() + slack.len());
    for (j, c) in cols.iter().enumerate() {
        for (i, v) in c.iter().enumerate() {
            if !v.is_zero() {
                m.set(i, j, v.clone());
            }
        }
    }
    for (k, (r, d)) in slack.iter().enumerate() {
        m.set(*r, cols.len() + k, (*d).clone());
    }
    Ok(solve(&m, rhs)?.map(|x| x[..cols.len()].to_vec()))
}

/// Inverse of a square matrix over the base ring, if it exists.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    if !m.is_square() {
        return None;
    }
    solve_matrix(m, &Matrix::identity(m.base(), m.rows())).ok().flatten()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::lattice::{cokernel_invariants, NormalForm};

    #[test]
    fn field_kernels() {
        let q = BaseRing::Rationals;
        assert_eq!(field_kernel(&Matrix::identity(q, 3)).unwrap().cols(), 0);
        let k = field_kernel(&Matrix::zeros(q, 2, 2)).unwrap();
        assert!(k.is_identity());
        let f2 = BaseRing::PrimeField(2);
        let m = Matrix::from_i64(f2, &[&[1, 1], &[1, 1]]);
        let k = field_kernel(&m).unwrap();
        assert_eq!(k, Matrix::from_i64(f2, &[&[1], &[1]]));
        assert!(field_kernel(&Matrix::identity(BaseRing::Integers, 1)).is_err());
    }

    #[test]
    fn integer_kernel_is_saturated() {
        let z = BaseRing::Integers;
        let m = Matrix::from_i64(z, &[&[2, 4, 6]]);
        let k = kernel(&m);
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
        // (1,1,-1) is in the kernel and must be an integer combination of the basis
        let x = solve(&k, &[Scalar::from(1), Scalar::from(1), Scalar::from(-1)]).unwrap();
        assert!(x.is_some());
    }

    #[test]
    fn integer_solving() {
        let z = BaseRing::Integers;
        assert!(solve(&Matrix::from_i64(z, &[&[2]]), &[Scalar::from(3)]).unwrap().is_none());
        let m = Matrix::from_i64(z, &[&[2, 3]]);
        let x = solve(&m, &[Scalar::from(1)]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x), vec![Scalar::from(1)]);
        assert!(matches!(solve(&m, &[]), Err(Error::Shape(_))));
    }

    #[test]
    fn cokernels() {
        let z = BaseRing::Integers;
        assert!(cokernel_invariants(&Matrix::identity(z, 2)).is_zero());
        let nf = cokernel_invariants(&Matrix::from_i64(z, &[&[2, 0], &[0, 3]]));
        assert_eq!(nf, NormalForm::torsion(&[6]));
        assert_eq!(cokernel_invariants(&Matrix::zeros(z, 2, 2)), NormalForm::free(2));
    }

    #[test]
    fn spans() {
        let z = BaseRing::Integers;
        let m = Matrix::from_i64(z, &[&[2, 3, 5], &[0, 0, 0]]);
        let b = span_basis(&m);
        assert_eq!(b, Matrix::from_i64(z, &[&[1], &[0]]));
        let q = BaseRing::Rationals;
        let m = Matrix::from_i64(q, &[&[1, 2], &[2, 4]]);
        assert_eq!(span_basis(&m).cols(), 1);
    }
}
