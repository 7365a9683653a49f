use super::{EchelonBuilder, LinalgError, Matrix, Rational};

/// A subspace of `Q^ambient_dim`, stored as the unique reduced row echelon
/// basis. Two subspaces are equal exactly when their bases are entry-wise
/// equal, so the derived `PartialEq` is subspace equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Smallest subspace containing every vector.
    pub fn span(vectors: &[Vec<Rational>], ambient_dim: usize) -> Result<Self, LinalgError> {
        let mut b = EchelonBuilder::new(ambient_dim);
        for v in vectors {
            b.push(v.clone())?;
        }
        Ok(b.row_space())
    }

    /// Row space of a matrix.
    pub fn from_matrix_rows(m: &Matrix) -> Self {
        let r = m.rref();
        let rows = (0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect();
        Self::from_rref_rows(m.cols(), rows)
    }

    /// Caller guarantees `rows` are the nonzero rows of an RREF, in order.
    pub(crate) fn from_rref_rows(ambient_dim: usize, rows: Vec<Vec<Rational>>) -> Self {
        let pivots = rows
            .iter()
            .map(|r| r.iter().position(|x| *x != 0u32).expect("zero row in echelon basis"))
            .collect();
        Subspace {
            ambient_dim,
            basis: Matrix::from_rows_unchecked(ambient_dim, rows),
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rational]> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// Subtracts the basis components at pivot positions; the remainder is
    /// zero iff `v` lies in the subspace.
    pub fn residual(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        let mut r = v.to_vec();
        for (p, row) in self.pivots.iter().zip(self.basis.row_vectors()) {
            if r[*p] != 0u32 {
                let f = r[*p].clone();
                for (x, y) in r.iter_mut().zip(row) {
                    if *y != 0u32 {
                        *x -= &f * y;
                    }
                }
            }
        }
        Ok(r)
    }

    pub fn contains_vector(&self, v: &[Rational]) -> Result<bool, LinalgError> {
        Ok(super::is_zero_vec(&self.residual(v)?))
    }

    /// `inner ⊆ self`.
    pub fn contains(&self, inner: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(inner)?;
        for v in inner.basis_vectors() {
            if !self.contains_vector(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(self == other)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let mut b = EchelonBuilder::new(self.ambient_dim);
        for v in self.basis_vectors().chain(other.basis_vectors()) {
            b.push(v.to_vec())?;
        }
        Ok(b.row_space())
    }

    /// Vectors orthogonal to the subspace under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        self.basis.kernel()
    }

    /// Computed as the annihilator of the sum of annihilators.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let dual = self.annihilator().sum(&other.annihilator())?;
        Ok(dual.annihilator())
    }

    /// Image of the subspace under a linear map given by its matrix.
    pub fn image_under(&self, map: &Matrix) -> Result<Subspace, LinalgError> {
        if map.cols() != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: map.cols(),
            });
        }
        let mut b = EchelonBuilder::new(map.rows());
        for v in self.basis_vectors() {
            b.push(map.mul_vec(v)?)?;
        }
        Ok(b.row_space())
    }
}
