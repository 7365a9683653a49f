//! Finite-dimensional associative algebras given by structure constants.
//!
//! An algebra of dimension `n` with basis `e_0..e_{n-1}` is stored as the
//! tensor `c[i][j][k]` with `e_i e_j = Σ_k c[i][j][k] e_k`, flattened as
//! `table[(i * n + j) * n + k]`.

mod constructions;
mod ideal;
mod morphism;

pub use ideal::IdealSubspace;
pub use morphism::Morphism;

use malachite_base::num::basic::traits::Zero;
use thiserror::Error;

use crate::exactla::{self, LinalgError, Matrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("structure table has {found} entries, expected {expected} for the declared dimension")]
    Shape { expected: usize, found: usize },
    #[error("vector has length {found}, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("theta is not a character (nor zero) of the second factor")]
    NotACharacter,
    #[error("subspace is not a two-sided ideal: {0}")]
    NotAnIdeal(String),
    #[error("morphism matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    MorphismShape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("algebra {0} has no unit")]
    NotUnital(String),
    #[error("permutation is not a bijection of 0..{0}")]
    BadPermutation(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Characters a file author asserts, with a flag saying whether the list is
/// known to be exhaustive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeclaredCharacters {
    pub values: Vec<Vec<Rational>>,
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Algebra {
    label: String,
    dim: usize,
    table: Vec<Rational>,
    unit: Option<Vec<Rational>>,
    declared: Option<DeclaredCharacters>,
}

/// Outcome of [`Algebra::validate`]; the first violated axiom is reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validation {
    Valid,
    /// `(e_i e_j) e_k` and `e_i (e_j e_k)` differ in coordinate `l`.
    Associativity {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        left: Rational,
        right: Rational,
    },
    /// `u e_i != e_i` (`left == true`) or `e_i u != e_i`.
    Unit { index: usize, left: bool },
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validation::Valid)
    }

    pub fn describe(&self) -> String {
        match self {
            Validation::Valid => "valid".to_string(),
            Validation::Associativity { i, j, k, l, left, right } => format!(
                "associativity fails at (i,j,k,l) = ({i},{j},{k},{l}): ((e_{i} e_{j}) e_{k})[{l}] = {left} but (e_{i} (e_{j} e_{k}))[{l}] = {right}"
            ),
            Validation::Unit { index, left: true } => {
                format!("unit axiom fails: u * e_{index} != e_{index}")
            }
            Validation::Unit { index, left: false } => {
                format!("unit axiom fails: e_{index} * u != e_{index}")
            }
        }
    }
}

impl Algebra {
    pub fn new(label: impl Into<String>, dim: usize, table: Vec<Rational>) -> Result<Self, AlgebraError> {
        let expected = dim * dim * dim;
        if table.len() != expected {
            return Err(AlgebraError::Shape {
                expected,
                found: table.len(),
            });
        }
        Ok(Algebra {
            label: label.into(),
            dim,
            table,
            unit: None,
            declared: None,
        })
    }

    /// Builds the table from a closure giving the coordinates of `e_i e_j`.
    pub fn from_products<F>(label: impl Into<String>, dim: usize, mut product: F) -> Self
    where
        F: FnMut(usize, usize) -> Vec<Rational>,
    {
        let mut table = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = product(i, j);
                assert_eq!(p.len(), dim, "product e_{i} e_{j} has wrong length");
                table.extend(p);
            }
        }
        Algebra {
            label: label.into(),
            dim,
            table,
            unit: None,
            declared: None,
        }
    }

    pub fn with_unit(mut self, unit: Vec<Rational>) -> Result<Self, AlgebraError> {
        self.check_len(&unit)?;
        self.unit = Some(unit);
        Ok(self)
    }

    /// Records the unit if one exists.
    pub fn with_detected_unit(mut self) -> Self {
        self.unit = self.find_unit();
        self
    }

    pub fn with_declared_characters(mut self, declared: DeclaredCharacters) -> Self {
        self.declared = Some(declared);
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn table(&self) -> &[Rational] {
        &self.table
    }

    pub fn unit(&self) -> Option<&[Rational]> {
        self.unit.as_deref()
    }

    pub fn declared_characters(&self) -> Option<&DeclaredCharacters> {
        self.declared.as_ref()
    }

    /// Same dimension and identical structure constants.
    pub fn same_table(&self, other: &Algebra) -> bool {
        self.dim == other.dim && self.table == other.table
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        let n = self.dim;
        &self.table[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub(crate) fn check_len(&self, v: &[Rational]) -> Result<(), AlgebraError> {
        if v.len() != self.dim {
            return Err(AlgebraError::Length {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the structure table.
    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, AlgebraError> {
        self.check_len(x)?;
        self.check_len(y)?;
        let n = self.dim;
        let mut out = exactla::zero_vec(n);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| **v != 0u32) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| **v != 0u32) {
                let coeff = xi * yj;
                for (o, c) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if *c != 0u32 {
                        *o += &coeff * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `y ↦ x y`; column `j` holds `x e_j`.
    pub fn left_mul_matrix(&self, x: &[Rational]) -> Result<Matrix, AlgebraError> {
        self.check_len(x)?;
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let col = self.multiply(x, &exactla::unit_vec(n, j))?;
            for (k, v) in col.into_iter().enumerate() {
                m.set(k, j, v);
            }
        }
        Ok(m)
    }

    /// Checks associativity on all basis quadruples, then the unit axioms
    /// if a unit is recorded.
    pub fn validate(&self) -> Validation {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let jk = self.basis_product(j, k);
                    for l in 0..n {
                        let mut left = Rational::ZERO;
                        let mut right = Rational::ZERO;
                        for m in 0..n {
                            if ij[m] != 0u32 {
                                let c = self.c(m, k, l);
                                if *c != 0u32 {
                                    left += &ij[m] * c;
                                }
                            }
                            if jk[m] != 0u32 {
                                let c = self.c(i, m, l);
                                if *c != 0u32 {
                                    right += &jk[m] * c;
                                }
                            }
                        }
                        if left != right {
                            return Validation::Associativity { i, j, k, l, left, right };
                        }
                    }
                }
            }
        }
        if let Some(u) = &self.unit {
            for index in 0..n {
                let e = exactla::unit_vec(n, index);
                if self.multiply(u, &e).expect("unit length checked") != e {
                    return Validation::Unit { index, left: true };
                }
                if self.multiply(&e, u).expect("unit length checked") != e {
                    return Validation::Unit { index, left: false };
                }
            }
        }
        Validation::Valid
    }

    /// The two-sided identity, if the algebra has one. Solves the linear
    /// system `u e_j = e_j = e_j u`.
    pub fn find_unit(&self) -> Option<Vec<Rational>> {
        let n = self.dim;
        let mut rows = Vec::with_capacity(2 * n * n);
        let mut rhs = Vec::with_capacity(2 * n * n);
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.c(i, j, k).clone()).collect::<Vec<_>>());
                rhs.push(if j == k { exactla::one() } else { exactla::zero() });
                rows.push((0..n).map(|i| self.c(j, i, k).clone()).collect::<Vec<_>>());
                rhs.push(if j == k { exactla::one() } else { exactla::zero() });
            }
        }
        let m = Matrix::from_rows(n, rows).expect("rows have length n");
        m.solve(&rhs).expect("rhs length matches")
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some() || self.find_unit().is_some()
    }

    /// `φ(e_i e_j) = φ(e_i) φ(e_j)` for all basis pairs. The zero functional
    /// passes.
    pub fn is_multiplicative(&self, phi: &[Rational]) -> Result<bool, AlgebraError> {
        self.check_len(phi)?;
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let lhs = exactla::dot(self.basis_product(i, j), phi);
                if lhs != &phi[i] * &phi[j] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (i + 1..n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int_vec, rat};

    pub(crate) fn scalars() -> Algebra {
        Algebra::new("Q", 1, vec![rat(1)]).unwrap()
    }

    /// Q[x]/(x^2) with basis {1, x}.
    pub(crate) fn dual_numbers() -> Algebra {
        Algebra::from_products("Q[x]/(x^2)", 2, |i, j| match (i, j) {
            (0, 0) => int_vec(&[1, 0]),
            (0, 1) | (1, 0) => int_vec(&[0, 1]),
            _ => int_vec(&[0, 0]),
        })
    }

    #[test]
    fn validate_examples() {
        assert!(scalars().validate().is_valid());
        let bad_unit = scalars().with_unit(vec![rat(2)]).unwrap();
        assert_eq!(bad_unit.validate(), Validation::Unit { index: 0, left: true });

        // (e0 e0) e0 = e0 + 2 e1 but e0 (e0 e0) = e0 + e1.
        let table = Algebra::from_products("bad", 2, |i, j| match (i, j) {
            (0, 0) => int_vec(&[1, 1]),
            (1, 0) => int_vec(&[0, 1]),
            _ => int_vec(&[0, 0]),
        });
        match table.validate() {
            Validation::Associativity { i, j, k, l, left, right } => {
                // Recompute both association orders for the reported indices.
                let n = 2;
                let ei = crate::exactla::unit_vec(n, i);
                let ej = crate::exactla::unit_vec(n, j);
                let ek = crate::exactla::unit_vec(n, k);
                let lhs = table.multiply(&table.multiply(&ei, &ej).unwrap(), &ek).unwrap();
                let rhs = table.multiply(&ei, &table.multiply(&ej, &ek).unwrap()).unwrap();
                assert_eq!(lhs[l], left);
                assert_eq!(rhs[l], right);
                assert_ne!(left, right);
            }
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn shape_is_checked() {
        assert!(matches!(
            Algebra::new("x", 2, int_vec(&[1, 2, 3])),
            Err(AlgebraError::Shape { expected: 8, found: 3 })
        ));
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(scalars().multiply(&[rat(3)], &[rat(5)]).unwrap(), vec![rat(15)]);
        let d = dual_numbers();
        assert_eq!(d.multiply(&int_vec(&[0, 0]), &int_vec(&[4, 7])).unwrap(), int_vec(&[0, 0]));
        assert_eq!(d.multiply(&int_vec(&[0, 1]), &int_vec(&[0, 1])).unwrap(), int_vec(&[0, 0]));
        assert!(d.multiply(&int_vec(&[1]), &int_vec(&[0, 1])).is_err());
    }

    #[test]
    fn unit_detection() {
        assert_eq!(dual_numbers().find_unit(), Some(int_vec(&[1, 0])));
        let z = Algebra::new("Z1", 1, vec![rat(0)]).unwrap();
        assert_eq!(z.find_unit(), None);
        assert!(Algebra::new("0", 0, vec![]).unwrap().is_unital());
    }
}
