use std::fmt;

use malachite_base::num::basic::traits::{One, Zero};

use super::{echelon::kernel_from_rref, LinalgError, Rational, Subspace};

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Result of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::ONE;
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::Shape {
                rows,
                cols,
                found: entries.len(),
            });
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Builds a matrix from row vectors that must all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(LinalgError::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self::from_rows_unchecked(cols, rows))
    }

    pub(crate) fn from_rows_unchecked(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n_rows = rows.len();
        let entries = rows.into_iter().flatten().collect();
        Matrix {
            rows: n_rows,
            cols,
            entries,
        }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, super::int_rows(rows)).expect("ragged integer literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        super::is_zero_vec(&self.entries)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self.row_vectors().map(|r| super::dot(r, v)).collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if *a == 0u32 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if *b != 0u32 {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Gauss-Jordan elimination, column by column. Zero rows of the result
    /// sit at the bottom, so `reduced` has the same shape as `self`.
    pub fn rref(&self) -> Rref {
        let (rows, cols) = (self.rows, self.cols);
        let mut grid: Vec<Vec<Rational>> = self.row_vectors().map(|r| r.to_vec()).collect();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..cols {
            if next == rows {
                break;
            }
            let Some(found) = (next..rows).find(|&r| grid[r][col] != 0u32) else {
                continue;
            };
            grid.swap(next, found);
            let inv = Rational::ONE / &grid[next][col];
            for x in grid[next][col..].iter_mut() {
                if *x != 0u32 {
                    *x *= &inv;
                }
            }
            let pivot_row = std::mem::take(&mut grid[next]);
            for (r, row) in grid.iter_mut().enumerate() {
                if r == next || row[col] == 0u32 {
                    continue;
                }
                let f = row[col].clone();
                for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    if *y != 0u32 {
                        *x -= &f * y;
                    }
                }
            }
            grid[next] = pivot_row;
            pivots.push(col);
            next += 1;
        }
        let rank = pivots.len();
        Rref {
            reduced: Matrix::from_rows_unchecked(cols, grid),
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// `{v : self * v = 0}` as a canonical subspace of dimension `cols - rank`.
    pub fn kernel(&self) -> Subspace {
        let r = self.rref();
        let rows: Vec<Vec<Rational>> = (0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect();
        kernel_from_rref(self.cols, &r.pivots, &rows)
    }

    /// Some exact solution of `self * x = b`, or `None` if the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let augmented: Vec<Vec<Rational>> = self
            .row_vectors()
            .zip(b)
            .map(|(r, bi)| {
                let mut row = r.to_vec();
                row.push(bi.clone());
                row
            })
            .collect();
        let r = Matrix::from_rows_unchecked(self.cols + 1, augmented).rref();
        if r.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = super::zero_vec(self.cols);
        for (i, &p) in r.pivots.iter().enumerate() {
            x[p] = r.reduced.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int_vec, rat};

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(2);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);

        let z = Matrix::zeros(2, 2);
        let r = z.rref();
        assert_eq!(r.reduced, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rref_rank_one() {
        let r = Matrix::from_ints(&[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r.reduced, Matrix::from_ints(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(3).kernel().dim(), 0);
        let k = Matrix::zeros(2, 3).kernel();
        assert_eq!(k.dim(), 3);
        assert_eq!(k, Subspace::full(3));

        let k = Matrix::from_ints(&[&[1, 1, 0]]).kernel();
        let expected = Subspace::span(&[int_vec(&[1, -1, 0]), int_vec(&[0, 0, 1])], 3).unwrap();
        assert_eq!(k, expected);
    }

    #[test]
    fn solve_examples() {
        let b = int_vec(&[3, -1]);
        assert_eq!(Matrix::identity(2).solve(&b).unwrap(), Some(b.clone()));
        assert_eq!(Matrix::zeros(2, 2).solve(&b).unwrap(), None);

        let m = Matrix::from_ints(&[&[1, 1]]);
        let x = m.solve(&[rat(3)]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), vec![rat(3)]);
        assert!(m.solve(&[rat(1), rat(2)]).is_err());
    }

    #[test]
    fn shape_errors() {
        assert!(Matrix::from_entries(2, 2, int_vec(&[1, 2, 3])).is_err());
        assert!(Matrix::from_rows(2, vec![int_vec(&[1])]).is_err());
        assert!(Matrix::identity(2).mul_vec(&int_vec(&[1])).is_err());
    }

    #[test]
    fn product_and_transpose() {
        let a = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), Matrix::from_ints(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), Matrix::from_ints(&[&[1, 3], &[2, 4]]));
    }
}
