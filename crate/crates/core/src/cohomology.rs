//! Spaces of derivations `A → A*`, quasi-additive functionals and point
//! derivations, and the amenability classification built on them.
//!
//! A linear map `D : A → A*` is stored as the `n × n` matrix
//! `M[i][j] = ⟨D(e_i), e_j⟩`, flattened row-major to a vector of length `n²`.
//! The dual module actions are `⟨F·a, x⟩ = F(ax)` and `⟨a·F, x⟩ = F(xa)`.
//! Pairing `D(ab) = D(a)·b + a·D(b)` with `e_k` for `a = e_i`, `b = e_j`
//! gives, for every `(i, j, k)`,
//!
//! ```text
//! Σ_m c[i][j][m] M[m][k] - Σ_m c[j][k][m] M[i][m] - Σ_m c[k][i][m] M[j][m] = 0.
//! ```
//!
//! A bilinear functional `p` is stored as `P[i][j] = p(e_i ⊗ e_j)`; the
//! quasi-additive identity `p(ax ⊗ b) = p(a ⊗ xb) + p(x ⊗ ba)` yields the same
//! system, but it is assembled here by evaluating `p` on products of vectors
//! and solved with the dense eliminator, so the two sides check each other.

use std::fmt;

use malachite_base::num::basic::traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::characters::{Character, CharacterSet};
use crate::exactla::{self, EchelonBuilder, Matrix, Rational, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("functional is neither a character nor zero")]
    NotACharacter,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Three-valued verdict. `Conditional` marks a statement quantified over the
/// character space when that space is not known to be fully listed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Conditional,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn is_true(self) -> bool {
        self == Verdict::True
    }

    pub fn is_false(self) -> bool {
        self == Verdict::False
    }

    /// Kleene conjunction.
    pub fn and(self, other: Verdict) -> Self {
        match (self, other) {
            (Verdict::False, _) | (_, Verdict::False) => Verdict::False,
            (Verdict::True, Verdict::True) => Verdict::True,
            _ => Verdict::Conditional,
        }
    }

    pub fn or(self, other: Verdict) -> Self {
        !(!self).and(!other)
    }

    /// Kleene biconditional.
    pub fn iff(self, other: Verdict) -> Self {
        match (self, other) {
            (Verdict::Conditional, _) | (_, Verdict::Conditional) => Verdict::Conditional,
            (a, b) => Verdict::from_bool(a == b),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Conditional => "conditional",
        }
    }
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        Verdict::from_bool(b)
    }
}

impl std::ops::Not for Verdict {
    type Output = Verdict;

    fn not(self) -> Verdict {
        match self {
            Verdict::True => Verdict::False,
            Verdict::False => Verdict::True,
            Verdict::Conditional => Verdict::Conditional,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Flattened index of `M[i][j]`.
fn at(n: usize, i: usize, j: usize) -> usize {
    i * n + j
}

fn push_row(b: &mut EchelonBuilder, row: Vec<Rational>) {
    if !exactla::is_zero_vec(&row) {
        b.push(row).expect("row length n²");
    }
}

fn derivation_rows(a: &Algebra, b: &mut EchelonBuilder) {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = exactla::zero_vec(n * n);
                for m in 0..n {
                    let c = a.c(i, j, m);
                    if *c != 0u32 {
                        row[at(n, m, k)] += c;
                    }
                    let c = a.c(j, k, m);
                    if *c != 0u32 {
                        row[at(n, i, m)] -= c;
                    }
                    let c = a.c(k, i, m);
                    if *c != 0u32 {
                        row[at(n, j, m)] -= c;
                    }
                }
                push_row(b, row);
            }
        }
    }
}

/// All derivations `A → A*`, as flattened `n × n` matrices.
pub fn derivation_space(a: &Algebra) -> Subspace {
    let n = a.dim();
    let mut b = EchelonBuilder::new(n * n);
    derivation_rows(a, &mut b);
    b.kernel()
}

/// Inner derivations `ad_F`, `⟨ad_F(e_i), e_j⟩ = F(e_i e_j - e_j e_i)`.
pub fn inner_space(a: &Algebra) -> Subspace {
    let n = a.dim();
    let mut b = EchelonBuilder::new(n * n);
    for k in 0..n {
        let mut m = exactla::zero_vec(n * n);
        for i in 0..n {
            for j in 0..n {
                m[at(n, i, j)] = a.c(i, j, k) - a.c(j, i, k);
            }
        }
        push_row(&mut b, m);
    }
    b.row_space()
}

/// Cyclic derivations: derivations with `M + Mᵀ = 0`.
pub fn cyclic_derivation_space(a: &Algebra) -> Subspace {
    let n = a.dim();
    let mut b = EchelonBuilder::new(n * n);
    for i in 0..n {
        for j in i..n {
            let mut row = exactla::zero_vec(n * n);
            row[at(n, i, j)] += Rational::ONE;
            row[at(n, j, i)] += Rational::ONE;
            push_row(&mut b, row);
        }
    }
    derivation_rows(a, &mut b);
    b.kernel()
}

/// Antisymmetric `n × n` matrices, flattened.
pub fn antisymmetric(n: usize) -> Subspace {
    let mut vectors = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let mut v = exactla::zero_vec(n * n);
            v[at(n, i, j)] = Rational::ONE;
            v[at(n, j, i)] = -Rational::ONE;
            vectors.push(v);
        }
    }
    Subspace::span(&vectors, n * n).expect("length n²")
}

/// `true` iff every matrix in the space satisfies `M + Mᵀ = 0`.
pub fn is_antisymmetric_space(s: &Subspace, n: usize) -> bool {
    s.basis_vectors().all(|v| {
        (0..n).all(|i| (i..n).all(|j| &v[at(n, i, j)] + &v[at(n, j, i)] == 0u32))
    })
}

/// Coefficients of `p(u ⊗ v)` in the unknowns `P[s][t]`.
fn bilinear_coefficients(u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    let n = u.len();
    let mut out = exactla::zero_vec(n * n);
    for (s, us) in u.iter().enumerate().filter(|(_, x)| **x != 0u32) {
        for (t, vt) in v.iter().enumerate().filter(|(_, x)| **x != 0u32) {
            out[s * n + t] = us * vt;
        }
    }
    out
}

/// Quasi-additive functionals `p(ax ⊗ b) = p(a ⊗ xb) + p(x ⊗ ba)`.
pub fn quasi_additive_space(a: &Algebra) -> Subspace {
    let n = a.dim();
    let basis: Vec<Vec<Rational>> = (0..n).map(|i| exactla::unit_vec(n, i)).collect();
    let mut rows = Vec::with_capacity(n * n * n);
    for ea in &basis {
        for ex in &basis {
            let ax = a.multiply(ea, ex).expect("length n");
            for eb in &basis {
                let xb = a.multiply(ex, eb).expect("length n");
                let ba = a.multiply(eb, ea).expect("length n");
                let lhs = bilinear_coefficients(&ax, eb);
                let r1 = bilinear_coefficients(ea, &xb);
                let r2 = bilinear_coefficients(ex, &ba);
                let row: Vec<Rational> = lhs
                    .iter()
                    .zip(&r1)
                    .zip(&r2)
                    .map(|((l, x), y)| l - x - y)
                    .collect();
                if !exactla::is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
    }
    Matrix::from_rows(n * n, rows).expect("rows of length n²").kernel()
}

/// Inner quasi-additive functionals `p(a ⊗ b) = F(ab - ba)`.
pub fn inner_qa_space(a: &Algebra) -> Subspace {
    let n = a.dim();
    let mut images = Vec::with_capacity(n);
    for k in 0..n {
        let f = exactla::unit_vec(n, k);
        let mut p = exactla::zero_vec(n * n);
        for i in 0..n {
            for j in 0..n {
                let ei = exactla::unit_vec(n, i);
                let ej = exactla::unit_vec(n, j);
                let ab = a.multiply(&ei, &ej).expect("length n");
                let ba = a.multiply(&ej, &ei).expect("length n");
                p[i * n + j] = exactla::dot(&f, &ab) - exactla::dot(&f, &ba);
            }
        }
        images.push(p);
    }
    Subspace::from_matrix_rows(&Matrix::from_rows(n * n, images).expect("rows of length n²"))
}

/// Cyclic quasi-additive functionals, `p(a ⊗ a) = 0`.
pub fn cyclic_qa_space(a: &Algebra) -> Subspace {
    cyclic_part(&quasi_additive_space(a), a.dim())
}

fn cyclic_part(qa: &Subspace, n: usize) -> Subspace {
    qa.intersect(&antisymmetric(n)).expect("same ambient dimension")
}

/// Point derivations at `phi ∈ Δ₀(A)`: `d(ab) = d(a)φ(b) + φ(a)d(b)`.
pub fn point_derivation_space(a: &Algebra, phi: &[Rational]) -> Result<Subspace, CohomologyError> {
    if !a.is_multiplicative(phi)? {
        return Err(CohomologyError::NotACharacter);
    }
    let n = a.dim();
    let mut b = EchelonBuilder::new(n);
    for i in 0..n {
        for j in 0..n {
            let mut row = a.basis_product(i, j).to_vec();
            row[i] -= &phi[j];
            row[j] -= &phi[i];
            push_row(&mut b, row);
        }
    }
    Ok(b.kernel())
}

/// All six derivation-type spaces of one algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationSpaces {
    pub derivations: Subspace,
    pub inner: Subspace,
    pub cyclic: Subspace,
    pub quasi_additive: Subspace,
    pub inner_qa: Subspace,
    pub cyclic_qa: Subspace,
}

impl DerivationSpaces {
    pub fn compute(a: &Algebra) -> Self {
        let quasi_additive = quasi_additive_space(a);
        DerivationSpaces {
            derivations: derivation_space(a),
            inner: inner_space(a),
            cyclic: cyclic_derivation_space(a),
            cyclic_qa: cyclic_part(&quasi_additive, a.dim()),
            quasi_additive,
            inner_qa: inner_qa_space(a),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointDerivationDim {
    pub character: Character,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmenabilityReport {
    pub label: String,
    pub field: &'static str,
    pub dim: usize,
    pub derivation_dim: usize,
    pub inner_dim: usize,
    pub cyclic_dim: usize,
    pub quasi_additive_dim: usize,
    pub inner_qa_dim: usize,
    pub cyclic_qa_dim: usize,
    pub point_derivations: Vec<PointDerivationDim>,
    pub zero_point_derivation_dim: usize,
    pub square_dim: usize,
    pub weakly_amenable: bool,
    pub cyclically_amenable: bool,
    pub cyclically_weakly_amenable: bool,
    pub point_amenable: Verdict,
    pub zero_point_amenable: Verdict,
    pub essential: bool,
    pub semisimple: bool,
    pub commutative: bool,
    pub unital: bool,
    pub characters_nonempty: Verdict,
    pub character_set_complete: bool,
    /// Weak amenability decided on the quasi-additive side.
    pub qa_weakly_amenable: bool,
    /// Cyclic amenability decided on the quasi-additive side.
    pub qa_cyclically_amenable: bool,
    /// Internal consistency problems; empty on a healthy run.
    pub findings: Vec<String>,
}

impl AmenabilityReport {
    /// `(WA, CA, CWA, PA, 0-PA)`.
    pub fn verdicts(&self) -> (bool, bool, bool, Verdict, Verdict) {
        (
            self.weakly_amenable,
            self.cyclically_amenable,
            self.cyclically_weakly_amenable,
            self.point_amenable,
            self.zero_point_amenable,
        )
    }

    pub fn wa(&self) -> Verdict {
        self.weakly_amenable.into()
    }

    pub fn ca(&self) -> Verdict {
        self.cyclically_amenable.into()
    }

    pub fn cwa(&self) -> Verdict {
        self.cyclically_weakly_amenable.into()
    }
}

/// Fills an [`AmenabilityReport`] from exact kernel and image computations.
pub fn classify(a: &Algebra, chars: &CharacterSet) -> AmenabilityReport {
    let n = a.dim();
    let spaces = DerivationSpaces::compute(a);
    let mut findings = Vec::new();

    let weakly_amenable = spaces.derivations == spaces.inner;
    let cyclically_amenable = spaces.inner.contains(&spaces.cyclic).expect("same ambient");
    let cyclically_weakly_amenable = is_antisymmetric_space(&spaces.derivations, n);
    let qa_weakly_amenable = spaces.quasi_additive == spaces.inner_qa;
    let qa_cyclically_amenable = spaces.inner_qa.contains(&spaces.cyclic_qa).expect("same ambient");

    if qa_weakly_amenable != weakly_amenable {
        findings.push("weak amenability differs between derivation and quasi-additive sides".into());
    }
    if qa_cyclically_amenable != cyclically_amenable {
        findings.push("cyclic amenability differs between derivation and quasi-additive sides".into());
    }

    let point_derivations: Vec<PointDerivationDim> = chars
        .characters
        .iter()
        .map(|c| PointDerivationDim {
            character: c.clone(),
            dim: point_derivation_space(a, c.values())
                .expect("character set members are multiplicative")
                .dim(),
        })
        .collect();
    let zero_point_derivation_dim = point_derivation_space(a, &exactla::zero_vec(n))
        .expect("zero is in Δ₀")
        .dim();
    let square_dim = a.square().dim();
    if zero_point_derivation_dim + square_dim != n {
        findings.push("point derivations at 0 do not annihilate exactly A²".into());
    }

    let point_amenable = if point_derivations.iter().any(|p| p.dim > 0) {
        Verdict::False
    } else {
        if chars.complete { Verdict::True } else { Verdict::Conditional }
    };
    let zero_point_amenable = if zero_point_derivation_dim > 0 {
        Verdict::False
    } else {
        point_amenable
    };
    let characters_nonempty = if !chars.is_empty() {
        Verdict::True
    } else if chars.complete {
        Verdict::False
    } else {
        Verdict::Conditional
    };
    let essential = square_dim == n;

    if characters_nonempty.is_true() && chars.complete {
        let cwa = Verdict::from_bool(cyclically_weakly_amenable);
        let pa_ess = point_amenable.and(essential.into());
        if !(cwa.iff(zero_point_amenable).is_true() && zero_point_amenable.iff(pa_ess).is_true()) {
            findings.push(format!(
                "CWA = {cwa}, 0-PA = {zero_point_amenable}, PA and essential = {pa_ess} disagree although the character space is nonempty and complete"
            ));
        }
    }

    AmenabilityReport {
        label: a.label().to_string(),
        field: "Q",
        dim: n,
        derivation_dim: spaces.derivations.dim(),
        inner_dim: spaces.inner.dim(),
        cyclic_dim: spaces.cyclic.dim(),
        quasi_additive_dim: spaces.quasi_additive.dim(),
        inner_qa_dim: spaces.inner_qa.dim(),
        cyclic_qa_dim: spaces.cyclic_qa.dim(),
        point_derivations,
        zero_point_derivation_dim,
        square_dim,
        weakly_amenable,
        cyclically_amenable,
        cyclically_weakly_amenable,
        point_amenable,
        zero_point_amenable,
        essential,
        semisimple: a.is_semisimple(),
        commutative: a.is_commutative(),
        unital: a.is_unital(),
        characters_nonempty,
        character_set_complete: chars.complete,
        qa_weakly_amenable,
        qa_cyclically_amenable,
        findings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::find_rational_characters;
    use crate::exactla::{int_vec, rat};

    fn q() -> Algebra {
        Algebra::new("Q", 1, vec![rat(1)]).unwrap()
    }

    fn dual_numbers() -> Algebra {
        Algebra::from_products("D", 2, |i, j| match (i, j) {
            (0, 0) => int_vec(&[1, 0]),
            (0, 1) | (1, 0) => int_vec(&[0, 1]),
            _ => int_vec(&[0, 0]),
        })
    }

    fn zero_algebra(n: usize) -> Algebra {
        Algebra::new("Z", n, exactla::zero_vec(n * n * n)).unwrap()
    }

    fn m2() -> Algebra {
        let idx = [(0, 0), (0, 1), (1, 0), (1, 1)];
        Algebra::from_products("M2", 4, |i, j| {
            let (a, b) = idx[i];
            let (c, d) = idx[j];
            let mut v = exactla::zero_vec(4);
            if b == c {
                v[idx.iter().position(|&p| p == (a, d)).unwrap()] = rat(1);
            }
            v
        })
    }

    #[test]
    fn verdict_logic() {
        use Verdict::*;
        assert_eq!(True.and(Conditional), Conditional);
        assert_eq!(False.and(Conditional), False);
        assert_eq!(True.or(Conditional), True);
        assert_eq!(Conditional.iff(True), Conditional);
        assert_eq!(False.iff(False), True);
        assert_eq!(serde_json::to_string(&Conditional).unwrap(), "\"conditional\"");
    }

    #[test]
    fn derivation_examples() {
        assert_eq!(derivation_space(&q()).dim(), 0);
        assert_eq!(derivation_space(&zero_algebra(3)).dim(), 9);
        let d = derivation_space(&dual_numbers());
        // Only ⟨D(x), 1⟩ is free: M = [[0,0],[1,0]].
        assert_eq!(d, Subspace::span(&[int_vec(&[0, 0, 1, 0])], 4).unwrap());
    }

    #[test]
    fn inner_examples() {
        assert!(inner_space(&dual_numbers()).is_zero());
        assert!(inner_space(&zero_algebra(2)).is_zero());
        assert_eq!(inner_space(&m2()).dim(), 3);
    }

    #[test]
    fn cyclic_examples() {
        assert_eq!(cyclic_derivation_space(&zero_algebra(3)).dim(), 3);
        assert_eq!(cyclic_derivation_space(&zero_algebra(3)), antisymmetric(3));
        assert!(cyclic_derivation_space(&dual_numbers()).is_zero());
        let m = m2();
        assert!(cyclic_derivation_space(&m).contains(&inner_space(&m)).unwrap());
    }

    #[test]
    fn quasi_additive_examples() {
        let z2 = zero_algebra(2);
        assert_eq!(quasi_additive_space(&z2).dim(), 4);
        assert_eq!(inner_qa_space(&z2).dim(), 0);
        assert_eq!(cyclic_qa_space(&z2).dim(), 1);
        for a in [q(), dual_numbers(), m2(), zero_algebra(3)] {
            assert_eq!(quasi_additive_space(&a), derivation_space(&a));
            assert_eq!(inner_qa_space(&a), inner_space(&a));
        }
    }

    #[test]
    fn point_derivation_examples() {
        assert_eq!(point_derivation_space(&q(), &[rat(1)]).unwrap().dim(), 0);
        assert_eq!(point_derivation_space(&dual_numbers(), &int_vec(&[1, 0])).unwrap().dim(), 1);
        assert_eq!(point_derivation_space(&zero_algebra(4), &exactla::zero_vec(4)).unwrap().dim(), 4);
        assert_eq!(
            point_derivation_space(&dual_numbers(), &int_vec(&[1, 1])),
            Err(CohomologyError::NotACharacter)
        );
    }

    #[test]
    fn classify_dual_numbers() {
        let a = dual_numbers();
        let r = classify(&a, &find_rational_characters(&a).unwrap());
        assert_eq!((r.derivation_dim, r.inner_dim, r.cyclic_dim), (1, 0, 0));
        assert_eq!(r.verdicts(), (false, true, false, Verdict::False, Verdict::False));
        assert!(r.essential && r.commutative && r.unital && !r.semisimple);
        assert_eq!(r.point_derivations[0].dim, 1);
        assert!(r.findings.is_empty());
    }

    #[test]
    fn classify_m2() {
        let a = m2();
        let chars = find_rational_characters(&a).unwrap();
        assert!(chars.is_empty() && chars.complete);
        let r = classify(&a, &chars);
        assert_eq!((r.derivation_dim, r.inner_dim), (3, 3));
        assert_eq!(r.verdicts(), (true, true, true, Verdict::True, Verdict::True));
        assert!(r.semisimple);
    }

    #[test]
    fn classify_z2() {
        let a = zero_algebra(2);
        let r = classify(&a, &find_rational_characters(&a).unwrap());
        assert_eq!((r.derivation_dim, r.inner_dim, r.cyclic_dim), (4, 0, 1));
        assert_eq!(r.verdicts(), (false, false, false, Verdict::True, Verdict::False));
        assert!(!r.essential);
    }

    #[test]
    fn incomplete_characters_make_point_verdicts_conditional() {
        let a = q();
        let r = classify(&a, &CharacterSet::empty(false));
        assert_eq!(r.point_amenable, Verdict::Conditional);
        assert_eq!(r.zero_point_amenable, Verdict::Conditional);
        assert_eq!(r.characters_nonempty, Verdict::Conditional);
    }
}
