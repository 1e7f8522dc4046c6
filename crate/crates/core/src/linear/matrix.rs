use std::fmt;

use super::{BaseRing, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact scalars over a fixed base ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    base: BaseRing,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix<{}> {}x{}", self.base, self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(base: BaseRing, rows: usize, cols: usize) -> Self {
        Matrix { base, rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(base: BaseRing, n: usize) -> Self {
        let mut m = Self::zeros(base, n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    /// Builds from rows; entries are normalized into `base`.
    pub fn from_rows(base: BaseRing, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|x| base.normalize(x)));
        }
        Matrix { base, rows: r, cols: c, data }
    }

    pub fn from_i64(base: BaseRing, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            base,
            rows.iter().map(|r| r.iter().map(|&x| Scalar::from_i64(x)).collect()).collect(),
        )
    }

    /// Columns given as vectors of equal length `rows`.
    pub fn from_columns(base: BaseRing, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(base, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, base.normalize(x));
            }
        }
        m
    }

    pub fn column_vector(base: BaseRing, v: &[Scalar]) -> Self {
        Self::from_columns(base, v.len(), &[v.to_vec()])
    }

    pub fn base(&self) -> BaseRing {
        self.base
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.base, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    fn check_base(&self, other: &Matrix) -> Result<()> {
        if self.base != other.base {
            return Err(Error::BaseMismatch(format!("{} vs {}", self.base, other.base)));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_base(other)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.base, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        if let BaseRing::PrimeField(_) = self.base {
            for x in out.data.iter_mut() {
                *x = self.base.normalize(x);
            }
        }
        Ok(out)
    }

    /// Matrix product; panics on shape or base mismatch.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).expect("matrix product")
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                self.base.normalize(&acc)
            })
            .collect()
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape");
        assert_eq!(self.base, other.base, "base");
        Matrix {
            base: self.base,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        let b = self.base;
        self.zip_with(other, |x, y| b.add(x, y))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        let b = self.base;
        self.zip_with(other, |x, y| b.sub(x, y))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let b = self.base;
        Matrix {
            base: b,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| b.mul(x, c)).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&Scalar::from_i64(-1))
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack rows");
        let mut m = Matrix::zeros(self.base, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack cols");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { base: self.base, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.base, self.rows + other.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, other);
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(self.base, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, self.get(r0 + i, c0 + j).clone());
            }
        }
        m
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.base, self.rows, idx.len());
        for (jj, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                m.set(i, jj, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.base, idx.len(), self.cols);
        for (ii, &i) in idx.iter().enumerate() {
            for j in 0..self.cols {
                m.set(ii, j, self.get(i, j).clone());
            }
        }
        m
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.base, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        m.set(i * other.rows + k, j * other.cols + l, self.base.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        m
    }

    /// Reinterpret the entries over another ring (reducing modulo `p` for prime fields).
    pub fn change_base(&self, base: BaseRing) -> Matrix {
        Matrix {
            base,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| base.normalize(x)).collect(),
        }
    }

    /// Column-major flattening (entry `(i, j)` at `i + rows * j`).
    pub fn vectorize(&self) -> Vec<Scalar> {
        let mut v = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                v.push(self.get(i, j).clone());
            }
        }
        v
    }

    pub fn from_vectorized(base: BaseRing, rows: usize, cols: usize, v: &[Scalar]) -> Matrix {
        assert_eq!(v.len(), rows * cols);
        let mut m = Matrix::zeros(base, rows, cols);
        for j in 0..cols {
            for i in 0..rows {
                m.set(i, j, base.normalize(&v[i + rows * j]));
            }
        }
        m
    }

    pub fn pow(&self, e: u32) -> Matrix {
        let mut acc = Matrix::identity(self.base, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> Scalar {
        let mut t = Scalar::zero();
        for i in 0..self.rows.min(self.cols) {
            t = self.base.add(&t, self.get(i, i));
        }
        t
    }

    // Elementary operations, kept ring-reduced.

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += factor * row[src]`
    pub fn row_axpy(&mut self, target: usize, src: usize, factor: &Scalar) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = self.get(src, j);
            if s.is_zero() {
                continue;
            }
            let v = self.base.add(self.get(target, j), &self.base.mul(factor, s));
            self.set(target, j, v);
        }
    }

    /// `col[target] += factor * col[src]`
    pub fn col_axpy(&mut self, target: usize, src: usize, factor: &Scalar) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = self.get(i, src);
            if s.is_zero() {
                continue;
            }
            let v = self.base.add(self.get(i, target), &self.base.mul(factor, s));
            self.set(i, target, v);
        }
    }

    pub fn scale_row(&mut self, i: usize, c: &Scalar) {
        for j in 0..self.cols {
            let v = self.base.mul(self.get(i, j), c);
            self.set(i, j, v);
        }
    }

    pub fn scale_col(&mut self, j: usize, c: &Scalar) {
        for i in 0..self.rows {
            let v = self.base.mul(self.get(i, j), c);
            self.set(i, j, v);
        }
    }

    pub fn max_abs_entry(&self) -> Scalar {
        self.data.iter().map(Scalar::abs).max().unwrap_or_else(Scalar::zero)
    }
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_kron() {
        let z = BaseRing::Integers;
        let a = Matrix::from_i64(z, &[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64(z, &[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), Matrix::from_i64(z, &[&[2, 1], &[4, 3]]));
        let k = Matrix::identity(z, 2).kron(&a);
        assert_eq!(k.block(2, 2, 2, 2), a);
        assert!(k.block(0, 2, 2, 2).is_zero());
    }

    #[test]
    fn prime_field_entries_reduce() {
        let f = BaseRing::PrimeField(3);
        let a = Matrix::from_i64(f, &[&[2, 2]]);
        let p = a.transpose().mul(&a);
        assert_eq!(p, Matrix::from_i64(f, &[&[1, 1], &[1, 1]]));
    }

    #[test]
    fn vectorize_roundtrip() {
        let z = BaseRing::Integers;
        let a = Matrix::from_i64(z, &[&[1, 2, 3], &[4, 5, 6]]);
        let v = a.vectorize();
        assert_eq!(v[1], Scalar::from_i64(4));
        assert_eq!(Matrix::from_vectorized(z, 2, 3, &v), a);
    }
}
