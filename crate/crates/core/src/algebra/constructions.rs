use malachite_base::num::basic::traits::Zero;

use super::{Algebra, AlgebraError, Morphism};
use crate::exactla::{self, Matrix, Rational};

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

impl Algebra {
    /// The θ-Lau product `A ×_θ B` on `A × B` with
    /// `(a1, a2)(x1, x2) = (a1 x1 + θ(x2) a1 + θ(a2) x1, a2 x2)`.
    ///
    /// Basis: the `A` block first, then the `B` block. `theta` must be a
    /// character of `b` or zero.
    pub fn lau_product(&self, b: &Algebra, theta: &[Rational]) -> Result<Algebra, AlgebraError> {
        if !b.is_multiplicative(theta)? {
            return Err(AlgebraError::NotACharacter);
        }
        let (na, nb) = (self.dim, b.dim);
        let n = na + nb;
        let out = Algebra::from_products(
            format!("lau({},{},theta={})", self.label, b.label, fmt_vec(theta)),
            n,
            |i, j| {
                let mut v = exactla::zero_vec(n);
                match (i < na, j < na) {
                    (true, true) => v[..na].clone_from_slice(self.basis_product(i, j)),
                    (true, false) => v[i] = theta[j - na].clone(),
                    (false, true) => v[j] = theta[i - na].clone(),
                    (false, false) => v[na..].clone_from_slice(b.basis_product(i - na, j - na)),
                }
                v
            },
        );
        Ok(out.with_detected_unit())
    }

    /// Block-diagonal direct product `A ⊕ B`.
    pub fn direct_sum(&self, b: &Algebra) -> Algebra {
        let (na, nb) = (self.dim, b.dim);
        let n = na + nb;
        let mut table = vec![Rational::ZERO; n * n * n];
        for i in 0..na {
            for j in 0..na {
                for k in 0..na {
                    table[(i * n + j) * n + k] = self.c(i, j, k).clone();
                }
            }
        }
        for i in 0..nb {
            for j in 0..nb {
                for k in 0..nb {
                    table[((na + i) * n + na + j) * n + na + k] = b.c(i, j, k).clone();
                }
            }
        }
        Algebra::new(format!("sum({},{})", self.label, b.label), n, table)
            .expect("table sized for n")
            .with_detected_unit()
    }

    /// `A♯`, the Lau product with the scalars under the identity character.
    /// The adjoined unit is the last basis vector.
    pub fn unitize(&self) -> Algebra {
        let scalars = Algebra::new("Q", 1, vec![exactla::one()]).expect("1x1x1 table");
        self.lau_product(&scalars, &[exactla::one()])
            .expect("identity is a character of Q")
            .with_label(format!("unitize({})", self.label))
    }

    /// Algebraic tensor product with basis `e_i ⊗ f_j` at index `i * dim(b) + j`.
    pub fn tensor(&self, b: &Algebra) -> Algebra {
        let (na, nb) = (self.dim, b.dim);
        let n = na * nb;
        let mut table = vec![Rational::ZERO; n * n * n];
        for i in 0..na {
            for k in 0..na {
                for m in 0..na {
                    let ca = self.c(i, k, m);
                    if *ca == 0u32 {
                        continue;
                    }
                    for j in 0..nb {
                        for l in 0..nb {
                            for p in 0..nb {
                                let cb = b.c(j, l, p);
                                if *cb != 0u32 {
                                    let (r, s, t) = (i * nb + j, k * nb + l, m * nb + p);
                                    table[(r * n + s) * n + t] = ca * cb;
                                }
                            }
                        }
                    }
                }
            }
        }
        Algebra::new(format!("tensor({},{})", self.label, b.label), n, table)
            .expect("table sized for n")
            .with_detected_unit()
    }

    /// Reversed multiplication `a • b = b a`.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim;
        let label = match self.label.strip_prefix("op(").and_then(|s| s.strip_suffix(')')) {
            Some(inner) => inner.to_string(),
            None => format!("op({})", self.label),
        };
        let mut out = Algebra::from_products(label, n, |i, j| self.basis_product(j, i).to_vec());
        out.unit = self.unit.clone();
        out.declared = self.declared.clone();
        out
    }

    /// Relabels the basis: new basis vector `s` is old `e_{perm[s]}`.
    /// Returns the algebra together with the isomorphism from `self`.
    pub fn permute_basis(&self, perm: &[usize]) -> Result<(Algebra, Morphism), AlgebraError> {
        let n = self.dim;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(AlgebraError::BadPermutation(n));
        }
        let out = Algebra::from_products(format!("perm({})", self.label), n, |s, t| {
            let old = self.basis_product(perm[s], perm[t]);
            perm.iter().map(|&u| old[u].clone()).collect()
        })
        .with_detected_unit();
        let mut m = Matrix::zeros(n, n);
        for (s, &p) in perm.iter().enumerate() {
            m.set(s, p, exactla::one());
        }
        let iso = Morphism::new(self.clone(), out.clone(), m)?;
        Ok((out, iso))
    }
}

impl Algebra {
    /// `π₂ : A ×_θ B → B`, always a homomorphism.
    pub fn lau_projection_second(&self, b: &Algebra, theta: &[Rational]) -> Result<Morphism, AlgebraError> {
        let lau = self.lau_product(b, theta)?;
        let (na, nb) = (self.dim, b.dim);
        let mut m = Matrix::zeros(nb, na + nb);
        for q in 0..nb {
            m.set(q, na + q, exactla::one());
        }
        Morphism::new(lau, b.clone(), m)
    }

    /// `ι₂ : B → A ×_θ B`, `x ↦ (0, x)`.
    pub fn lau_injection_second(&self, b: &Algebra, theta: &[Rational]) -> Result<Morphism, AlgebraError> {
        let lau = self.lau_product(b, theta)?;
        let (na, nb) = (self.dim, b.dim);
        let mut m = Matrix::zeros(na + nb, nb);
        for q in 0..nb {
            m.set(na + q, q, exactla::one());
        }
        Morphism::new(b.clone(), lau, m)
    }

    /// `π₁ : A ×_θ B → A`; multiplicative only in degenerate cases when θ ≠ 0.
    pub fn lau_projection_first(&self, b: &Algebra, theta: &[Rational]) -> Result<Morphism, AlgebraError> {
        let lau = self.lau_product(b, theta)?;
        let (na, nb) = (self.dim, b.dim);
        let mut m = Matrix::zeros(na, na + nb);
        for p in 0..na {
            m.set(p, p, exactla::one());
        }
        Morphism::new(lau, self.clone(), m)
    }

    /// `ι₁ : A → A ×_θ B`, `a ↦ (a, 0)`.
    pub fn lau_injection_first(&self, b: &Algebra, theta: &[Rational]) -> Result<Morphism, AlgebraError> {
        let lau = self.lau_product(b, theta)?;
        let (na, nb) = (self.dim, b.dim);
        let mut m = Matrix::zeros(na + nb, na);
        for p in 0..na {
            m.set(p, p, exactla::one());
        }
        Morphism::new(self.clone(), lau, m)
    }

    /// The pair `(Λ, Γ)` with `Λ(a ⊗ b) = φ(b) a` and `Γ(a) = a ⊗ 1`, for a
    /// character `phi` of the unital algebra `b`. `Λ ∘ Γ` is the identity.
    pub fn tensor_retraction(&self, b: &Algebra, phi: &[Rational]) -> Result<(Morphism, Morphism), AlgebraError> {
        b.check_len(phi)?;
        let unit = b.find_unit().ok_or_else(|| AlgebraError::NotUnital(b.label.clone()))?;
        let t = self.tensor(b);
        let (na, nb) = (self.dim, b.dim);
        let mut lambda = Matrix::zeros(na, na * nb);
        let mut gamma = Matrix::zeros(na * nb, na);
        for i in 0..na {
            for j in 0..nb {
                lambda.set(i, i * nb + j, phi[j].clone());
                gamma.set(i * nb + j, i, unit[j].clone());
            }
        }
        let lambda = Morphism::new(t.clone(), self.clone(), lambda)?;
        let gamma = Morphism::new(self.clone(), t, gamma)?;
        Ok((lambda, gamma))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int_vec, rat};

    fn scalars() -> Algebra {
        Algebra::new("Q", 1, vec![rat(1)]).unwrap()
    }

    fn zero_algebra(n: usize) -> Algebra {
        Algebra::new(format!("Z{n}"), n, exactla::zero_vec(n * n * n)).unwrap()
    }

    /// Upper triangular 2x2 matrices, basis e11, e12, e22.
    fn t2() -> Algebra {
        Algebra::from_products("T2", 3, |i, j| match (i, j) {
            (0, 0) => int_vec(&[1, 0, 0]),
            (0, 1) => int_vec(&[0, 1, 0]),
            (1, 2) => int_vec(&[0, 1, 0]),
            (2, 2) => int_vec(&[0, 0, 1]),
            _ => int_vec(&[0, 0, 0]),
        })
    }

    #[test]
    fn lau_with_zero_theta_is_direct_sum() {
        let a = t2();
        let b = scalars().direct_sum(&scalars());
        let lau = a.lau_product(&b, &int_vec(&[0, 0])).unwrap();
        assert!(lau.same_table(&a.direct_sum(&b)));
        assert!(lau.validate().is_valid());
    }

    #[test]
    fn unitization_of_zero_algebra_is_dual_numbers_up_to_order() {
        let u = zero_algebra(1).unitize();
        // basis (x, 1): x x = 0, x 1 = 1 x = x, 1 1 = 1
        assert_eq!(u.table(), &int_vec(&[0, 0, 1, 0, 1, 0, 0, 1])[..]);
        assert_eq!(u.unit(), Some(&int_vec(&[0, 1])[..]));
        assert!(zero_algebra(0).unitize().same_table(&scalars()));
    }

    #[test]
    fn lau_rejects_non_character() {
        assert_eq!(
            zero_algebra(1).lau_product(&scalars(), &[rat(2)]),
            Err(AlgebraError::NotACharacter)
        );
    }

    #[test]
    fn tensor_examples() {
        let b = t2();
        assert!(scalars().tensor(&b).same_table(&b));
        assert!(zero_algebra(1).tensor(&zero_algebra(1)).same_table(&zero_algebra(1)));
        let q2 = scalars().direct_sum(&scalars());
        let t = q2.tensor(&q2);
        assert_eq!(t.dim(), 4);
        assert!(t.validate().is_valid());
        assert_eq!(t.unit(), Some(&int_vec(&[1, 1, 1, 1])[..]));
    }

    #[test]
    fn opposite_examples() {
        let a = t2();
        let op = a.opposite();
        assert!(op.validate().is_valid());
        assert!(!op.same_table(&a));
        // e12 e22 = e12 in T2 becomes e22 • e12 = e12.
        assert_eq!(op.basis_product(2, 1), &int_vec(&[0, 1, 0])[..]);
        assert!(op.opposite().same_table(&a));
        let q2 = scalars().direct_sum(&scalars());
        assert!(q2.opposite().same_table(&q2));
    }

    #[test]
    fn permutation_isomorphism() {
        let (p, iso) = t2().permute_basis(&[2, 0, 1]).unwrap();
        assert!(p.validate().is_valid());
        assert!(iso.is_homomorphism());
        assert!(iso.is_surjective());
        assert!(t2().permute_basis(&[0, 0, 1]).is_err());
    }

    #[test]
    fn canonical_lau_maps() {
        let a = zero_algebra(1);
        let b = scalars();
        let theta = [rat(1)];
        let pi2 = a.lau_projection_second(&b, &theta).unwrap();
        let iota2 = a.lau_injection_second(&b, &theta).unwrap();
        assert!(pi2.is_homomorphism());
        assert!(Morphism::is_retraction(&pi2, &iota2).unwrap());
        // (x, 0)(0, 1) = (x, 0) but π₁ sends it to x · 0 = 0.
        let pi1 = a.lau_projection_first(&b, &theta).unwrap();
        assert!(!pi1.is_homomorphism());
        let pi1_sum = a.lau_projection_first(&b, &[rat(0)]).unwrap();
        assert!(pi1_sum.is_homomorphism());
    }

    #[test]
    fn tensor_retraction_composes_to_identity() {
        let q2 = scalars().direct_sum(&scalars());
        let (lambda, gamma) = t2().tensor_retraction(&q2, &int_vec(&[1, 0])).unwrap();
        assert!(Morphism::is_retraction(&lambda, &gamma).unwrap());
        assert!(t2().tensor_retraction(&zero_algebra(1), &[rat(0)]).is_err());
    }
}
