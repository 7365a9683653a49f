//! Characters (nonzero multiplicative functionals) of an algebra: exact
//! verification and discovery of all rational-valued ones.
//!
//! Discovery works on the commutative quotient `A / [A, A]`, since every
//! character kills commutators. There, the value of a character on a basis
//! vector `e` is an eigenvalue of left multiplication by `e`, so candidates
//! are the rational roots of the characteristic polynomials of the `L_e`.
//! When every one of those polynomials splits into rational linear factors,
//! every character over any extension field has rational values, and the
//! returned set is provably complete.

use std::collections::BTreeSet;

use malachite_base::num::arithmetic::traits::{Abs, Lcm};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_q::Rational as Q;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::exactla::{self, Matrix, Rational};

/// Default cap on the number of candidate tuples examined.
pub const DEFAULT_TUPLE_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("character search needs {count} candidate tuples, over the cap of {cap}")]
    Overflow { cap: u128, count: u128 },
    #[error("declared character #{index} is not multiplicative")]
    BadDeclared { index: usize },
    #[error("characteristic polynomial coefficient too large for rational-root search: {0}")]
    CoefficientTooLarge(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A multiplicative functional given by its values on the basis. The zero
/// functional is admitted as the extra point of `Δ₀`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character {
    values: Vec<Rational>,
}

impl Character {
    /// Verifies multiplicativity against `a`.
    pub fn new(a: &Algebra, values: Vec<Rational>) -> Result<Self, CharacterError> {
        if !is_character(a, &values)? {
            return Err(CharacterError::BadDeclared { index: 0 });
        }
        Ok(Character { values })
    }

    pub fn zero(parent_dim: usize) -> Self {
        Character {
            values: exactla::zero_vec(parent_dim),
        }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn parent_dim(&self) -> usize {
        self.values.len()
    }

    pub fn is_zero(&self) -> bool {
        exactla::is_zero_vec(&self.values)
    }

    pub(crate) fn from_values_unchecked(values: Vec<Rational>) -> Self {
        Character { values }
    }
}

/// Characters found or declared, sorted and distinct, never containing zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterSet {
    pub characters: Vec<Character>,
    /// Every character of the algebra, over any extension of Q, is listed.
    pub complete: bool,
}

impl CharacterSet {
    pub fn empty(complete: bool) -> Self {
        CharacterSet {
            characters: Vec::new(),
            complete,
        }
    }

    fn from_values(values: impl IntoIterator<Item = Vec<Rational>>, complete: bool) -> Self {
        let set: BTreeSet<Vec<Rational>> = values
            .into_iter()
            .filter(|v| !exactla::is_zero_vec(v))
            .collect();
        CharacterSet {
            characters: set.into_iter().map(Character::from_values_unchecked).collect(),
            complete,
        }
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }
}

/// Δ₀ membership: the quadratic system `Σ_k c[i][j][k] φ_k = φ_i φ_j`.
pub fn is_character(a: &Algebra, phi: &[Rational]) -> Result<bool, CharacterError> {
    Ok(a.is_multiplicative(phi)?)
}

/// Characteristic polynomial `det(λI - m)`, coefficients from the constant
/// term upwards, by the Faddeev–LeVerrier recursion (exact in characteristic 0).
pub fn characteristic_polynomial(m: &Matrix) -> Vec<Rational> {
    let n = m.rows();
    let mut coeffs = vec![Q::ZERO; n + 1];
    coeffs[n] = Q::ONE;
    let mut acc = Matrix::zeros(n, n);
    for k in 1..=n {
        // acc_k = m * acc_{k-1} + c_{n-k+1} I
        let mut next = m.mul(&acc).expect("square");
        for i in 0..n {
            let v = next.get(i, i) + &coeffs[n - k + 1];
            next.set(i, i, v);
        }
        let prod = m.mul(&next).expect("square");
        let mut trace = Q::ZERO;
        for i in 0..n {
            trace += prod.get(i, i);
        }
        coeffs[n - k] = -trace / Q::from(k as u64);
        acc = next;
    }
    coeffs
}

fn eval(poly: &[Rational], x: &Rational) -> Rational {
    let mut acc = Q::ZERO;
    for c in poly.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Divides by `(λ - r)`; `r` must be a root.
fn deflate(poly: &[Rational], r: &Rational) -> Vec<Rational> {
    let d = poly.len() - 1;
    let mut out = vec![Q::ZERO; d];
    let mut carry = Q::ZERO;
    for i in (0..d).rev() {
        carry = &poly[i + 1] + &carry * r;
        out[i] = carry.clone();
    }
    out
}

// Keeps divisor enumeration below ~10^7 trial divisions.
const MAX_TRIAL_DIVISION: u64 = 100_000_000_000_000;

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Distinct rational roots (ascending) and whether the polynomial splits
/// into rational linear factors.
pub fn rational_roots(poly: &[Rational]) -> Result<(Vec<Rational>, bool), CharacterError> {
    let mut p: Vec<Rational> = poly.to_vec();
    while p.len() > 1 && *p.last().unwrap() == 0u32 {
        p.pop();
    }
    let mut roots = BTreeSet::new();
    while p.len() > 1 && p[0] == 0u32 {
        roots.insert(Q::ZERO);
        p.remove(0);
    }
    if p.len() > 1 {
        // Clear denominators to get integer coefficients.
        let mut l = malachite_nz::natural::Natural::ONE;
        for c in &p {
            l = l.lcm(c.denominator_ref());
        }
        let scale = Q::from(l);
        let ints: Vec<Rational> = p.iter().map(|c| c * &scale).collect();
        let to_u64 = |x: &Rational| -> Result<u64, CharacterError> {
            u64::try_from(x.numerator_ref())
                .ok()
                .filter(|&v| v <= MAX_TRIAL_DIVISION)
                .ok_or_else(|| CharacterError::CoefficientTooLarge(x.to_string()))
        };
        let a0 = to_u64(&ints[0].clone().abs())?;
        let ad = to_u64(&ints.last().unwrap().clone().abs())?;
        let mut candidates = BTreeSet::new();
        for num in divisors(a0) {
            for den in divisors(ad) {
                let r = Q::from_unsigneds(num, den);
                candidates.insert(r.clone());
                candidates.insert(-r);
            }
        }
        for r in candidates {
            if eval(&p, &r) == 0u32 {
                roots.insert(r.clone());
                while p.len() > 1 && eval(&p, &r) == 0u32 {
                    p = deflate(&p, &r);
                }
            }
        }
    }
    Ok((roots.into_iter().collect(), p.len() == 1))
}

/// All characters with rational values, sorted lexicographically.
pub fn find_rational_characters(a: &Algebra) -> Result<CharacterSet, CharacterError> {
    find_rational_characters_capped(a, DEFAULT_TUPLE_CAP)
}

pub fn find_rational_characters_capped(a: &Algebra, cap: u128) -> Result<CharacterSet, CharacterError> {
    let comm = a.commutator_ideal();
    let (q, pi) = a.quotient(&comm)?;
    let d = q.dim();
    if d == 0 {
        return Ok(CharacterSet::empty(true));
    }
    let mut candidates = Vec::with_capacity(d);
    let mut splits = true;
    for i in 0..d {
        let l = q.left_mul_matrix(&exactla::unit_vec(d, i))?;
        let (roots, split) = rational_roots(&characteristic_polynomial(&l))?;
        splits &= split;
        candidates.push(roots);
    }
    let count = candidates
        .iter()
        .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
    if count > cap {
        return Err(CharacterError::Overflow { cap, count });
    }
    // Constraint (i, j) becomes decidable once every index it touches is set.
    let mut ready: Vec<Vec<(usize, usize)>> = vec![Vec::new(); d];
    for i in 0..d {
        for j in i..d {
            let support_max = q
                .basis_product(i, j)
                .iter()
                .rposition(|x| *x != 0u32)
                .unwrap_or(0);
            ready[j.max(support_max)].push((i, j));
        }
    }
    let mut found = Vec::new();
    let mut current = Vec::with_capacity(d);
    search(&q, &candidates, &ready, &mut current, &mut found);
    let pulled: Vec<Vec<Rational>> = found
        .into_iter()
        .map(|phi| pi.pull_back(&phi).expect("quotient length"))
        .collect();
    Ok(CharacterSet::from_values(pulled, splits))
}

fn search(
    q: &Algebra,
    candidates: &[Vec<Rational>],
    ready: &[Vec<(usize, usize)>],
    current: &mut Vec<Rational>,
    found: &mut Vec<Vec<Rational>>,
) {
    let t = current.len();
    if t == candidates.len() {
        if !exactla::is_zero_vec(current) {
            found.push(current.clone());
        }
        return;
    }
    for value in &candidates[t] {
        current.push(value.clone());
        let consistent = ready[t].iter().all(|&(i, j)| {
            let lhs = exactla::dot(&q.basis_product(i, j)[..=t], &current[..=t]);
            lhs == &current[i] * &current[j]
        });
        if consistent {
            search(q, candidates, ready, current, found);
        }
        current.pop();
    }
}

/// Adds the algebra's declared characters to a discovered set. Each declared
/// character must be multiplicative.
pub fn merge_declared(a: &Algebra, found: CharacterSet) -> Result<CharacterSet, CharacterError> {
    let Some(declared) = a.declared_characters() else {
        return Ok(found);
    };
    for (index, v) in declared.values.iter().enumerate() {
        if v.len() != a.dim() || !a.is_multiplicative(v)? {
            return Err(CharacterError::BadDeclared { index });
        }
    }
    let complete = found.complete || declared.complete;
    let values = found
        .characters
        .into_iter()
        .map(|c| c.values)
        .chain(declared.values.iter().cloned());
    Ok(CharacterSet::from_values(values, complete))
}

/// Only the declared characters (verified); incomplete when none are declared.
pub fn declared_only(a: &Algebra) -> Result<CharacterSet, CharacterError> {
    merge_declared(a, CharacterSet::empty(false))
}

/// Discovery merged with declarations.
pub fn characters_auto(a: &Algebra) -> Result<CharacterSet, CharacterError> {
    merge_declared(a, find_rational_characters(a)?)
}
