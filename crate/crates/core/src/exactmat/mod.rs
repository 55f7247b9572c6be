//! Dense matrices over a Euclidean domain.

use alloc::format;
use alloc::vec::Vec;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::rings::EuclideanDomain;

mod det;
mod hermite;
mod nullspace;

pub use hermite::{
    column_hnf, idempotent_canonical_form, rank_projector, unimodular_complete,
    CanonicalIdempotent, TrackedReduction,
};
pub use nullspace::left_null_row;

/// Row-major dense matrix; every entry belongs to `ring`.
pub struct Matrix<R: EuclideanDomain> {
    ring: R,
    rows: usize,
    cols: usize,
    entries: Vec<R::Elem>,
}

impl<R: EuclideanDomain> Clone for Matrix<R> {
    fn clone(&self) -> Self {
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.clone(),
        }
    }
}

impl<R: EuclideanDomain> PartialEq for Matrix<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.rows == other.rows
            && self.cols == other.cols
            && self.entries == other.entries
    }
}

impl<R: EuclideanDomain> Eq for Matrix<R> {}

impl<R: EuclideanDomain> core::fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let mut list = f.debug_list();
        for i in 0..self.rows {
            list.entry(&self.row(i));
        }
        list.finish()
    }
}

impl<R: EuclideanDomain> Matrix<R> {
    pub fn new(ring: R, rows: usize, cols: usize, entries: Vec<R::Elem>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidParameter(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix {
            ring,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(ring: R, rows: Vec<Vec<R::Elem>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidParameter("ragged rows".into()));
        }
        Matrix::new(ring, n, m, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from small integers.
    pub fn from_i64<Row: AsRef<[i64]>>(ring: R, rows: &[Row]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| ring.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(ring, rows)
    }

    pub fn zero(ring: R, rows: usize, cols: usize) -> Self {
        let entries = (0..rows * cols).map(|_| ring.zero()).collect();
        Matrix {
            ring,
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(ring: R, n: usize) -> Self {
        let mut m = Matrix::zero(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = m.ring.one();
        }
        m
    }

    /// `diag(values)`.
    pub fn diagonal(ring: R, values: Vec<R::Elem>) -> Self {
        let n = values.len();
        let mut m = Matrix::zero(ring, n, n);
        for (i, v) in values.into_iter().enumerate() {
            m.entries[i * n + i] = v;
        }
        m
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn entries(&self) -> &[R::Elem] {
        &self.entries
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R::Elem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R::Elem) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R::Elem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<R::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<R::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        self.ring.is_one(e)
                    } else {
                        self.ring.is_zero(e)
                    }
                })
            })
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn mul(&self, other: &Matrix<R>) -> Result<Matrix<R>> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let r = &self.ring;
        let mut out = Matrix::zero(r.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if r.is_zero(b) {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.entries[idx] = r.add(&out.entries[idx], &r.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    /// Ordered product of a non-empty list.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Matrix<R>>) -> Result<Matrix<R>>
    where
        R: 'a,
    {
        let mut iter = factors.into_iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::InvalidParameter("empty product".into()))?
            .clone();
        iter.try_fold(first, |acc, f| acc.mul(f))
    }

    pub fn add(&self, other: &Matrix<R>) -> Result<Matrix<R>> {
        self.zip_with(other, |r, a, b| r.add(a, b))
    }

    pub fn sub(&self, other: &Matrix<R>) -> Result<Matrix<R>> {
        self.zip_with(other, |r, a, b| r.sub(a, b))
    }

    fn zip_with(
        &self,
        other: &Matrix<R>,
        f: impl Fn(&R, &R::Elem, &R::Elem) -> R::Elem,
    ) -> Result<Matrix<R>> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| f(&self.ring, a, b))
            .collect();
        Ok(Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn transpose(&self) -> Matrix<R> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn submatrix(&self, rows: Range<usize>, cols: Range<usize>) -> Matrix<R> {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for i in rows.clone() {
            for j in cols.clone() {
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix {
            ring: self.ring.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    /// Block-diagonal `diag(self, other)`.
    pub fn direct_sum(&self, other: &Matrix<R>) -> Matrix<R> {
        let mut out = Matrix::zero(
            self.ring.clone(),
            self.rows + other.rows,
            self.cols + other.cols,
        );
        out.paste(0, 0, self);
        out.paste(self.rows, self.cols, other);
        out
    }

    /// Overwrites the block starting at `(row, col)` with `block`.
    pub fn paste(&mut self, row: usize, col: usize, block: &Matrix<R>) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(row + i, col + j, block.get(i, j).clone());
            }
        }
    }

    pub fn trace(&self) -> R::Elem {
        let n = self.rows.min(self.cols);
        (0..n).fold(self.ring.zero(), |acc, i| {
            self.ring.add(&acc, self.get(i, i))
        })
    }

    /// True iff `F * F = F`.
    pub fn is_idempotent(&self) -> Result<bool> {
        self.require_square()?;
        Ok(self.mul(self)? == *self)
    }

    /// `P^-1 * self * P`, given both `P` and its inverse.
    pub fn conjugate(&self, p: &Matrix<R>, p_inv: &Matrix<R>) -> Result<Matrix<R>> {
        p_inv.mul(self)?.mul(p)
    }

    /// Inverse over the ring; fails unless the determinant is a unit.
    pub fn inverse(&self) -> Result<Matrix<R>> {
        nullspace::inverse(self)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[target] += c * row[source]`.
    pub fn add_row_multiple(&mut self, target: usize, source: usize, c: &R::Elem) {
        for j in 0..self.cols {
            let v = self
                .ring
                .add(self.get(target, j), &self.ring.mul(c, self.get(source, j)));
            self.set(target, j, v);
        }
    }

    /// `col[target] += c * col[source]`.
    pub fn add_col_multiple(&mut self, target: usize, source: usize, c: &R::Elem) {
        for i in 0..self.rows {
            let v = self
                .ring
                .add(self.get(i, target), &self.ring.mul(c, self.get(i, source)));
            self.set(i, target, v);
        }
    }

    pub fn scale_row(&mut self, i: usize, c: &R::Elem) {
        for j in 0..self.cols {
            let v = self.ring.mul(c, self.get(i, j));
            self.set(i, j, v);
        }
    }

    pub fn scale_col(&mut self, j: usize, c: &R::Elem) {
        for i in 0..self.rows {
            let v = self.ring.mul(self.get(i, j), c);
            self.set(i, j, v);
        }
    }
}
