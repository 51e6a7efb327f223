use super::field::{Fe, Field};
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`Field`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Fe>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            field: field.clone(),
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = f.add(out[(i, j)], f.mul(a, other[(k, j)]));
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: `x M`.
    pub fn left_mul_vec(&self, x: &[Fe]) -> Result<Vec<Fe>> {
        if x.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} times {} rows",
                x.len(),
                self.rows
            )));
        }
        let f = &self.field;
        Ok((0..self.cols)
            .map(|j| (0..self.rows).fold(f.zero(), |acc, i| f.add(acc, f.mul(x[i], self[(i, j)]))))
            .collect())
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Result<Fe> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let f = &self.field;
        let n = self.rows;
        let mut a = self.clone();
        let mut det = f.one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Ok(f.zero());
            };
            if piv != col {
                a.swap_rows(piv, col);
                det = f.neg(det);
            }
            let p = a[(col, col)];
            det = f.mul(det, p);
            let p_inv = f.inv(p)?;
            for r in col + 1..n {
                let factor = f.mul(a[(r, col)], p_inv);
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    a[(r, c)] = f.sub(a[(r, c)], f.mul(factor, a[(col, c)]));
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    ///
    /// The pivot of each column is the first row at or below the current one
    /// holding a nonzero entry.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(piv) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(piv, row);
            let inv = f.inv(self[(row, col)]).expect("pivot is nonzero");
            for c in 0..self.cols {
                self[(row, c)] = f.mul(self[(row, c)], inv);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self[(r, col)];
                if factor.is_zero() {
                    continue;
                }
                for c in 0..self.cols {
                    self[(r, c)] = f.sub(self[(r, c)], f.mul(factor, self[(row, c)]));
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the left nullspace `{x : x M = 0}`, returned in reduced echelon form.
    pub fn left_nullspace(&self) -> Vec<Vec<Fe>> {
        let f = &self.field;
        // x M = 0  <=>  M^T x^T = 0
        let mut t = self.transpose();
        let pivots = t.rref();
        let n = self.rows;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            return Vec::new();
        }
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![f.zero(); n];
            v[fc] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(t[(r, fc)]);
            }
            basis.push(v);
        }
        let mut stacked = Matrix::from_rows(f, basis).expect("uniform rows");
        stacked.rref();
        (0..stacked.rows).map(|i| stacked.row(i).to_vec()).collect()
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Fe;

    fn index(&self, (r, c): (usize, usize)) -> &Fe {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Fe {
        &mut self.data[r * self.cols + c]
    }
}
