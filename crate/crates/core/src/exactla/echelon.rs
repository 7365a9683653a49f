use malachite_base::num::basic::traits::One;

use super::{LinalgError, Matrix, Rational, Subspace};

/// Row-at-a-time reduction to reduced row echelon form.
///
/// Rows are kept fully reduced after every insertion, so the builder can be
/// fed very tall, sparse constraint systems without materializing them. Zero
/// entries are skipped in every update, which keeps the structure-constant
/// systems cheap.
#[derive(Debug, Clone)]
pub struct EchelonBuilder {
    cols: usize,
    // (pivot column, row) with row[pivot] == 1 and zeros at every other pivot.
    rows: Vec<(usize, Vec<Rational>)>,
}

impl EchelonBuilder {
    pub fn new(cols: usize) -> Self {
        EchelonBuilder {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the current basis in place. Afterwards `row` is
    /// zero at every existing pivot column.
    pub fn reduce(&self, row: &mut [Rational]) {
        for (p, basis_row) in &self.rows {
            if row[*p] != 0u32 {
                let f = row[*p].clone();
                for (x, y) in row.iter_mut().zip(basis_row) {
                    if *y != 0u32 {
                        *x -= &f * y;
                    }
                }
            }
        }
    }

    /// Inserts a row; returns `true` if it increased the rank.
    pub fn push(&mut self, mut row: Vec<Rational>) -> Result<bool, LinalgError> {
        if row.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: row.len(),
            });
        }
        if self.rows.len() == self.cols {
            return Ok(false);
        }
        self.reduce(&mut row);
        let Some(p) = row.iter().position(|x| *x != 0u32) else {
            return Ok(false);
        };
        if row[p] != 1u32 {
            let inv = Rational::ONE / &row[p];
            for x in row.iter_mut().skip(p) {
                if *x != 0u32 {
                    *x *= &inv;
                }
            }
        }
        for (_, basis_row) in self.rows.iter_mut() {
            if basis_row[p] != 0u32 {
                let f = basis_row[p].clone();
                for (x, y) in basis_row.iter_mut().zip(&row).skip(p) {
                    if *y != 0u32 {
                        *x -= &f * y;
                    }
                }
            }
        }
        self.rows.push((p, row));
        Ok(true)
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        p.sort_unstable();
        p
    }

    /// Basis rows sorted by pivot, i.e. the nonzero part of the RREF.
    pub fn into_sorted_rows(mut self) -> Vec<Vec<Rational>> {
        self.rows.sort_by_key(|(p, _)| *p);
        self.rows.into_iter().map(|(_, r)| r).collect()
    }

    /// The row space spanned by everything pushed so far.
    pub fn row_space(self) -> Subspace {
        let cols = self.cols;
        let rows = self.into_sorted_rows();
        Subspace::from_rref_rows(cols, rows)
    }

    /// Solution space of the homogeneous system whose rows were pushed.
    pub fn kernel(self) -> Subspace {
        let cols = self.cols;
        let pivots = self.pivots();
        let rows = self.into_sorted_rows();
        kernel_from_rref(cols, &pivots, &rows)
    }
}

/// Builds the canonical kernel from the nonzero rows of an RREF.
pub(crate) fn kernel_from_rref(cols: usize, pivots: &[usize], rows: &[Vec<Rational>]) -> Subspace {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut vectors = Vec::with_capacity(cols - pivots.len());
    for f in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = super::zero_vec(cols);
        v[f] = Rational::ONE;
        for (p, r) in pivots.iter().zip(rows) {
            if r[f] != 0u32 {
                v[*p] = -r[f].clone();
            }
        }
        vectors.push(v);
    }
    let m = Matrix::from_rows_unchecked(cols, vectors);
    Subspace::from_matrix_rows(&m)
}
