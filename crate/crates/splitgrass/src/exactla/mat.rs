//! Dense exact matrices with deterministic elimination.
//!
//! Rank over the rationals goes through fraction-free (Bareiss-style)
//! elimination on a denominator-cleared integer copy, which keeps
//! intermediate entries as minors of the input instead of letting fractions
//! explode. Rank over F_p uses ordinary Gaussian elimination. Pivot choice is
//! always the first nonzero entry scanning columns left to right and rows top
//! to bottom, so every elimination here is deterministic.

use num::{BigInt, BigRational, Integer, One, Zero};

use super::scalar::{FieldSpec, Scalar};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl Mat {
    /// Builds a matrix, validating shape and that every entry lives in `field`.
    pub fn new(rows: usize, cols: usize, field: FieldSpec, data: Vec<Scalar>) -> Result<Mat> {
        if data.len() != rows * cols {
            return Err(Error::InvalidInput(format!(
                "matrix data length {} does not match {rows}x{cols}",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|s| s.field() != field) {
            return Err(Error::InvalidInput(format!(
                "mixed-field entries: expected {field}, found {}",
                bad.field()
            )));
        }
        Ok(Mat { rows, cols, field, data })
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Mat> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidInput("non-rectangular input".into()));
        }
        Mat::new(r, c, field, rows.into_iter().flatten().collect())
    }

    pub fn from_int_rows(field: FieldSpec, rows: &[Vec<i64>]) -> Result<Mat> {
        Mat::from_rows(
            field,
            rows.iter()
                .map(|row| row.iter().map(|&v| Scalar::from_int(v, field)).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize, field: FieldSpec) -> Mat {
        Mat {
            rows,
            cols,
            field,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Mat {
        let mut m = Mat::zeros(n, n, field);
        for i in 0..n {
            *m.get_mut(i, i) = Scalar::one(field);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut m = Mat::zeros(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *m.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        m
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.cols || self.field != other.field {
            return Err(Error::InvalidInput(
                "vstack requires equal column count and field".into(),
            ));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat::new(self.rows + other.rows, self.cols, self.field, data)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero(self.field);
                for j in 0..self.cols {
                    let e = self.get(i, j);
                    if !e.is_zero() && !v[j].is_zero() {
                        acc = &acc + &(e * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows || self.field != other.field {
            return Err(Error::InvalidInput("matrix product shape mismatch".into()));
        }
        let mut out = Mat::zeros(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        *out.get_mut(i, j) = &*out.get(i, j) + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Exact rank. Rational matrices go through fraction-free elimination on
    /// a denominator-cleared integer copy; prime-field matrices through
    /// ordinary elimination.
    pub fn rank(&self) -> usize {
        match self.field {
            FieldSpec::Rational => bareiss_rank(&self.to_cleared_bigint()),
            FieldSpec::Prime(_) => self.rref().1.len(),
        }
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Scalar::one(self.field);
        }
        match self.field {
            FieldSpec::Rational => {
                let (m, scale) = self.to_cleared_bigint_scaled();
                let d = bareiss_det(m);
                Scalar::Rat(BigRational::new(d, scale))
            }
            FieldSpec::Prime(_) => {
                // track elimination with division; sign flips on swaps
                let mut a = self.clone();
                let mut det = Scalar::one(self.field);
                for col in 0..n {
                    let Some(piv) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                        return Scalar::zero(self.field);
                    };
                    if piv != col {
                        a.swap_rows(piv, col);
                        det = -&det;
                    }
                    let pval = a.get(col, col).clone();
                    det = &det * &pval;
                    let pinv = pval.inv();
                    for r in col + 1..n {
                        let factor = &(&*a.get(r, col) * &pinv);
                        if factor.is_zero() {
                            continue;
                        }
                        for c in col..n {
                            let delta = &(factor * a.get(col, c));
                            *a.get_mut(r, c) = &*a.get(r, c) - delta;
                        }
                    }
                }
                det
            }
        }
    }

    /// Reduced row echelon form plus the pivot column list.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(piv) = (r..a.rows).find(|&i| !a.get(i, col).is_zero()) else {
                continue;
            };
            a.swap_rows(piv, r);
            let inv = a.get(r, col).inv();
            for c in col..a.cols {
                *a.get_mut(r, c) = &*a.get(r, c) * &inv;
            }
            for i in 0..a.rows {
                if i != r && !a.get(i, col).is_zero() {
                    let f = a.get(i, col).clone();
                    for c in col..a.cols {
                        let delta = &(&f * a.get(r, c));
                        *a.get_mut(i, c) = &*a.get(i, c) - delta;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        (a, pivots)
    }

    /// Basis of the right nullspace { x : A x = 0 }.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (rr, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_row_of = vec![None; self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            pivot_row_of[col] = Some(row);
        }
        for free in 0..self.cols {
            if pivot_row_of[free].is_some() {
                continue;
            }
            let mut v = vec![Scalar::zero(self.field); self.cols];
            v[free] = Scalar::one(self.field);
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = -&*rr.get(row, free);
            }
            basis.push(v);
        }
        basis
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Inverse of a square matrix via Gauss-Jordan on [A | I].
    pub fn inverse(&self) -> Result<Mat> {
        if self.rows != self.cols {
            return Err(Error::InvalidInput("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n, self.field);
        for i in 0..n {
            for j in 0..n {
                *aug.get_mut(i, j) = self.get(i, j).clone();
            }
            *aug.get_mut(i, n + i) = Scalar::one(self.field);
        }
        let (rr, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(Error::InvalidInput("matrix is singular".into()));
        }
        let mut inv = Mat::zeros(n, n, self.field);
        for i in 0..n {
            for j in 0..n {
                *inv.get_mut(i, j) = rr.get(i, n + j).clone();
            }
        }
        Ok(inv)
    }

    /// Clears denominators row by row, returning the integer matrix.
    fn to_cleared_bigint(&self) -> Vec<Vec<BigInt>> {
        self.to_cleared_bigint_scaled().0
    }

    /// Clears denominators row by row; also returns the product of the row
    /// scaling factors (needed to undo the scaling in determinants).
    fn to_cleared_bigint_scaled(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        assert_eq!(self.field, FieldSpec::Rational);
        let mut scale = BigInt::one();
        let m = (0..self.rows)
            .map(|i| {
                let mut l = BigInt::one();
                for j in 0..self.cols {
                    l = l.lcm(self.get(i, j).as_rational().denom());
                }
                scale *= &l;
                (0..self.cols)
                    .map(|j| {
                        let r = self.get(i, j).as_rational();
                        r.numer() * (&l / r.denom())
                    })
                    .collect()
            })
            .collect();
        (m, scale)
    }
}

/// Rank of an integer matrix by fraction-free elimination with column
/// pivoting. Intermediate entries stay equal to minors of the input, so the
/// division by the previous pivot is always exact.
fn bareiss_rank(a: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = a.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let num = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                a[i][j] = num / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Determinant of a square integer matrix by the same elimination; the final
/// pivot is the determinant up to the sign of the row swaps.
fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return BigInt::zero();
        };
        if piv != col {
            a.swap(col, piv);
            sign = -sign;
        }
        for i in col + 1..n {
            for j in col + 1..n {
                let num = &a[col][col] * &a[i][j] - &a[i][col] * &a[col][j];
                a[i][j] = num / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[col][col].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}
