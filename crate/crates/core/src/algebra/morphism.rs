use super::{Algebra, AlgebraError};
use crate::exactla::{self, LinalgError, Matrix, Rational, Subspace};

/// Linear map between algebras, applied to coordinate vectors. The matrix is
/// `target.dim × source.dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    source: Algebra,
    target: Algebra,
    matrix: Matrix,
}

impl Morphism {
    pub fn new(source: Algebra, target: Algebra, matrix: Matrix) -> Result<Self, AlgebraError> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(AlgebraError::MorphismShape {
                rows: matrix.rows(),
                cols: matrix.cols(),
                expected_rows: target.dim(),
                expected_cols: source.dim(),
            });
        }
        Ok(Morphism { source, target, matrix })
    }

    pub fn identity(a: &Algebra) -> Self {
        Morphism {
            source: a.clone(),
            target: a.clone(),
            matrix: Matrix::identity(a.dim()),
        }
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Rational]) -> Result<Vec<Rational>, AlgebraError> {
        Ok(self.matrix.mul_vec(x)?)
    }

    /// `φ(e_i e_j) = φ(e_i) φ(e_j)` on all basis pairs.
    pub fn is_homomorphism(&self) -> bool {
        let n = self.source.dim();
        let images: Vec<Vec<Rational>> = (0..n).map(|i| self.matrix.column(i)).collect();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.apply(self.source.basis_product(i, j)).expect("source length");
                let rhs = self.target.multiply(&images[i], &images[j]).expect("target length");
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Onto; in finite dimension this is the dense-range condition.
    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim()
    }

    /// The transpose `A₂* → A₁*` is onto, i.e. `φ` is injective.
    pub fn dual_composition_full(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism, AlgebraError> {
        if !inner.target.same_table(&self.source) {
            return Err(LinalgError::DimensionMismatch {
                expected: self.source.dim(),
                found: inner.target.dim(),
            }
            .into());
        }
        Morphism::new(inner.source.clone(), self.target.clone(), self.matrix.mul(&inner.matrix)?)
    }

    /// `φ ∘ self` for a functional `φ` on the target.
    pub fn pull_back(&self, phi: &[Rational]) -> Result<Vec<Rational>, AlgebraError> {
        self.target.check_len(phi)?;
        let n = self.source.dim();
        Ok((0..n).map(|j| exactla::dot(&self.matrix.column(j), phi)).collect())
    }

    /// `φ : A₁ → A₂` is a retraction with section `ψ : A₂ → A₁` when both are
    /// homomorphisms and `φ ∘ ψ` is the identity of `A₂`.
    pub fn is_retraction(phi: &Morphism, psi: &Morphism) -> Result<bool, AlgebraError> {
        if phi.source.dim() != psi.target.dim() || phi.target.dim() != psi.source.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: phi.source.dim(),
                found: psi.target.dim(),
            }
            .into());
        }
        if !phi.is_homomorphism() || !psi.is_homomorphism() {
            return Ok(false);
        }
        let composite = phi.matrix.mul(&psi.matrix)?;
        Ok(composite == Matrix::identity(phi.target.dim()))
    }
}
