//! Dense integer matrices and vectors over `BigInt`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer vector in the basis of simple roots.
pub type Vector = Vec<BigInt>;

pub fn vector(entries: &[i64]) -> Vector {
    entries.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}

pub fn negated(v: &[BigInt]) -> Vector {
    v.iter().map(|x| -x).collect()
}

pub fn is_zero(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `v - k * w`
pub fn sub_scaled(v: &[BigInt], k: &BigInt, w: &[BigInt]) -> Vector {
    v.iter().zip(w).map(|(a, b)| a - k * b).collect()
}

/// Row-major dense matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Ragged {
                    row: r,
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: nrows,
            cols,
            data,
        })
    }

    /// Convenience constructor for small literal matrices. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| vector(r)).collect()).expect("ragged literal matrix")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vector]) -> Result<Self> {
        let rows = columns.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: c.len(),
                });
            }
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
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

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &BigInt> {
        self.data.iter()
    }

    /// Rows `start..end` as a new matrix.
    pub fn row_block(&self, start: usize, end: usize) -> Self {
        Self {
            rows: end - start,
            cols: self.cols,
            data: self.data[start * self.cols..end * self.cols].to_vec(),
        }
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "column count mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vector {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `x^T M y`
    pub fn bilinear(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        let my = self.mul_vec(y);
        x.iter().zip(&my).map(|(a, b)| a * b).sum()
    }

    /// Simultaneous row and column reindexing: entry `(a, b)` of the result is
    /// entry `(perm[a], perm[b])` of `self`.
    pub fn reindexed(&self, perm: &[usize]) -> Self {
        assert!(self.is_square() && perm.len() == self.rows);
        let n = self.rows;
        let mut out = Self::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                out[(a, b)] = self[(perm[a], perm[b])].clone();
            }
        }
        out
    }

    /// Width of the widest rendered entry.
    pub fn entry_width(&self) -> usize {
        self.data
            .iter()
            .map(|x| {
                let mut w = if x.is_negative() { 1 } else { 0 };
                w += x.magnitude().to_str_radix(10).len();
                w
            })
            .max()
            .unwrap_or(1)
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i)))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let a = IntMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let b = IntMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), IntMatrix::from_i64(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), IntMatrix::from_i64(&[&[1, 3], &[2, 4]]));
        assert_eq!(a.mul_vec(&vector(&[1, -1])), vector(&[-1, -1]));
    }

    #[test]
    fn ragged_rows_rejected() {
        let err = IntMatrix::from_rows(alloc::vec![vector(&[1, 2]), vector(&[1])]).unwrap_err();
        assert!(matches!(err, Error::Ragged { row: 1, .. }));
    }

    #[test]
    fn reindex_swaps_labels() {
        let a = IntMatrix::from_i64(&[&[0, 1], &[-2, 0]]);
        assert_eq!(
            a.reindexed(&[1, 0]),
            IntMatrix::from_i64(&[&[0, -2], &[1, 0]])
        );
    }

    #[test]
    fn widths() {
        assert_eq!(IntMatrix::from_i64(&[&[0, -12], &[3, 0]]).entry_width(), 3);
    }
}
