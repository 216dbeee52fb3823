//! Dense matrices over `Z_p` with exact Gauss-Jordan inversion.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::PrimeField;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<Vec<u64>>", try_from = "Vec<Vec<u64>>")]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl From<Matrix> for Vec<Vec<u64>> {
    fn from(m: Matrix) -> Self {
        m.to_rows()
    }
}

impl TryFrom<Vec<Vec<u64>>> for Matrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<u64>>) -> Result<Self> {
        Matrix::from_rows(&rows)
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::RaggedInput {
                    row: i,
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix, field: PrimeField) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0;
                for k in 0..self.cols {
                    acc = field.add(acc, field.mul(self.get(i, k), other.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: `(v^t M)_k = sum_j v_j M[j][k]`.
    pub fn left_mul_vec(&self, v: &[u64], field: PrimeField) -> Result<Vec<u64>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: v.len(),
            });
        }
        let mut out = vec![0; self.cols];
        for (j, &vj) in v.iter().enumerate() {
            if vj == 0 {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o = field.add(*o, field.mul(vj, self.get(j, k)));
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u64::from(i == j)))
    }

    /// Exact inverse by Gauss-Jordan elimination. The pivot in each column is
    /// the first row (from the top of the unreduced part) with a nonzero entry.
    pub fn inverse(&self, field: PrimeField) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| a.get(r, col) != 0)
                .ok_or(Error::Singular)?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let s = field.inv(a.get(col, col))?;
            a.scale_row(col, s, field);
            inv.scale_row(col, s, field);
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col);
                if factor == 0 {
                    continue;
                }
                a.sub_row_multiple(r, col, factor, field);
                inv.sub_row_multiple(r, col, factor, field);
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, s: u64, field: PrimeField) {
        for j in 0..self.cols {
            let v = self.get(r, j);
            if v != 0 {
                self.set(r, j, field.mul(v, s));
            }
        }
    }

    /// `row[target] -= factor * row[source]`
    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: u64, field: PrimeField) {
        for j in 0..self.cols {
            let s = self.get(source, j);
            if s != 0 {
                let v = field.sub(self.get(target, j), field.mul(factor, s));
                self.set(target, j, v);
            }
        }
    }

    pub fn rank(&self, field: PrimeField) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| a.get(r, col) != 0) else {
                continue;
            };
            a.swap_rows(p, rank);
            let s = field.inv(a.get(rank, col)).expect("nonzero pivot");
            a.scale_row(rank, s, field);
            for r in rank + 1..self.rows {
                let factor = a.get(r, col);
                if factor != 0 {
                    a.sub_row_multiple(r, rank, factor, field);
                }
            }
            rank += 1;
        }
        rank
    }
}
