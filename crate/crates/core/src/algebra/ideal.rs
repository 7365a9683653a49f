use malachite_base::num::basic::traits::Zero;

use super::{Algebra, AlgebraError, Morphism};
use crate::exactla::{self, EchelonBuilder, Matrix, Rational, Subspace};

/// A subspace verified to be a two-sided ideal of its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSubspace {
    parent: Algebra,
    space: Subspace,
}

impl IdealSubspace {
    /// Checks `e_i v ∈ I` and `v e_i ∈ I` for every basis vector `v` of `I`.
    pub fn new(parent: &Algebra, space: Subspace) -> Result<Self, AlgebraError> {
        let n = parent.dim();
        if space.ambient_dim() != n {
            return Err(AlgebraError::Length {
                expected: n,
                found: space.ambient_dim(),
            });
        }
        for v in space.basis_vectors() {
            for i in 0..n {
                let e = exactla::unit_vec(n, i);
                if !space.contains_vector(&parent.multiply(&e, v)?)? {
                    return Err(AlgebraError::NotAnIdeal(format!("e_{i} * v leaves the subspace")));
                }
                if !space.contains_vector(&parent.multiply(v, &e)?)? {
                    return Err(AlgebraError::NotAnIdeal(format!("v * e_{i} leaves the subspace")));
                }
            }
        }
        Ok(IdealSubspace {
            parent: parent.clone(),
            space,
        })
    }

    pub fn parent(&self) -> &Algebra {
        &self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn into_space(self) -> Subspace {
        self.space
    }
}

impl Algebra {
    /// `A² = span{e_i e_j}`.
    pub fn square(&self) -> Subspace {
        let n = self.dim;
        let mut b = EchelonBuilder::new(n);
        for i in 0..n {
            for j in 0..n {
                b.push(self.basis_product(i, j).to_vec()).expect("length n");
            }
        }
        b.row_space()
    }

    /// `A² = A`.
    pub fn is_essential(&self) -> bool {
        self.square().dim() == self.dim
    }

    /// Smallest two-sided ideal containing `seeds`: the span is closed under
    /// left and right multiplication by basis vectors until it stabilizes.
    pub fn ideal_generated_by(&self, seeds: &[Vec<Rational>]) -> Result<IdealSubspace, AlgebraError> {
        let n = self.dim;
        let mut b = EchelonBuilder::new(n);
        let mut queue = Vec::new();
        for s in seeds {
            self.check_len(s)?;
            if b.push(s.clone())? {
                queue.push(s.clone());
            }
        }
        while let Some(v) = queue.pop() {
            if b.rank() == n {
                break;
            }
            for i in 0..n {
                let e = exactla::unit_vec(n, i);
                for w in [self.multiply(&e, &v)?, self.multiply(&v, &e)?] {
                    if b.push(w.clone())? {
                        queue.push(w);
                    }
                }
            }
        }
        IdealSubspace::new(self, b.row_space())
    }

    /// Ideal generated by all commutators `e_i e_j - e_j e_i`.
    pub fn commutator_ideal(&self) -> IdealSubspace {
        let n = self.dim;
        let mut seeds = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let d: Vec<Rational> = self
                    .basis_product(i, j)
                    .iter()
                    .zip(self.basis_product(j, i))
                    .map(|(x, y)| x - y)
                    .collect();
                if !exactla::is_zero_vec(&d) {
                    seeds.push(d);
                }
            }
        }
        self.ideal_generated_by(&seeds).expect("commutators have length n")
    }

    /// `A / I` together with the quotient map. The quotient basis is the set
    /// of non-pivot coordinates of the ideal's canonical basis, in increasing
    /// order; a vector is projected by reducing it modulo `I` and reading off
    /// those coordinates.
    pub fn quotient(&self, ideal: &IdealSubspace) -> Result<(Algebra, Morphism), AlgebraError> {
        if !ideal.parent().same_table(self) {
            return Err(AlgebraError::NotAnIdeal("ideal belongs to a different algebra".into()));
        }
        let n = self.dim;
        let space = ideal.space();
        let mut is_pivot = vec![false; n];
        for &p in space.pivots() {
            is_pivot[p] = true;
        }
        let complement: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let q = complement.len();
        let project = |v: &[Rational]| -> Vec<Rational> {
            let r = space.residual(v).expect("length n");
            complement.iter().map(|&c| r[c].clone()).collect()
        };
        let mut proj = Matrix::zeros(q, n);
        for j in 0..n {
            for (a, x) in project(&exactla::unit_vec(n, j)).into_iter().enumerate() {
                if x != 0u32 {
                    proj.set(a, j, x);
                }
            }
        }
        let quotient = Algebra::from_products(format!("quot({})", self.label), q, |a, b| {
            project(self.basis_product(complement[a], complement[b]))
        })
        .with_detected_unit();
        let pi = Morphism::new(self.clone(), quotient.clone(), proj)?;
        Ok((quotient, pi))
    }

    /// Jacobson radical by the trace criterion in the unitization:
    /// `J(A) = {v ∈ A : tr L_{v x} = 0 for all x ∈ A♯}`, valid in
    /// characteristic zero.
    pub fn radical(&self) -> Subspace {
        let n = self.dim;
        let u = self.unitize();
        let m = n + 1;
        // tr L_{e_s} in the unitization
        let traces: Vec<Rational> = (0..m)
            .map(|s| {
                let mut t = Rational::ZERO;
                for k in 0..m {
                    t += u.c(s, k, k);
                }
                t
            })
            .collect();
        let mut rows = Vec::with_capacity(m);
        for x in 0..m {
            rows.push(
                (0..n)
                    .map(|i| exactla::dot(u.basis_product(i, x), &traces))
                    .collect::<Vec<_>>(),
            );
        }
        Matrix::from_rows(n, rows).expect("rows have length n").kernel()
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical().is_zero()
    }
}
