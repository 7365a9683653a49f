//! Exact rational linear algebra: matrices, echelon forms, kernels and a
//! lattice of canonically represented subspaces.
//!
//! Every value here is immutable once built and every operation is exact.

mod echelon;
mod matrix;
mod subspace;

pub use echelon::EchelonBuilder;
pub use matrix::{Matrix, Rref};
pub use subspace::Subspace;

use std::str::FromStr;

use malachite_base::num::basic::traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = malachite_q::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix data has {found} entries, expected {rows}x{cols}")]
    Shape { rows: usize, cols: usize, found: usize },
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}

/// Parses `"p/q"` or `"p"`. The result is reduced to lowest terms; a zero
/// denominator is rejected.
pub fn parse_rational(s: &str) -> Result<Rational, LinalgError> {
    let t = s.trim();
    let bad = || LinalgError::ParseRational(s.to_string());
    match t.split_once('/') {
        None => Rational::from_str(t).map_err(|_| bad()),
        Some((p, q)) => {
            let num = Rational::from_str(p.trim()).map_err(|_| bad())?;
            let den = Rational::from_str(q.trim()).map_err(|_| bad())?;
            if den == 0u32 || !is_integer(&num) || !is_integer(&den) {
                return Err(bad());
            }
            Ok(num / den)
        }
    }
}

/// Canonical text form: `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

pub fn is_integer(x: &Rational) -> bool {
    *x.denominator_ref() == 1u32
}

pub fn rat(n: i64) -> Rational {
    Rational::from(n)
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::from_signeds(n, d)
}

pub fn zero() -> Rational {
    Rational::ZERO
}

pub fn one() -> Rational {
    Rational::ONE
}

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::ZERO; n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(n);
    v[i] = Rational::ONE;
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(|x| *x == 0u32)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::ZERO;
    for (x, y) in a.iter().zip(b) {
        if *x != 0u32 && *y != 0u32 {
            acc += x * y;
        }
    }
    acc
}

/// Converts small integer rows into rationals; convenient for literals.
pub fn int_rows(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
}

pub fn int_vec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7));
        assert_eq!(parse_rational(" 3 / -9 ").unwrap(), ratio(-1, 3));
        assert_eq!(format_rational(&ratio(-2, 4)), "-1/2");
        assert_eq!(format_rational(&rat(5)), "5");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1/2/3").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn sums_stay_reduced() {
        let s = ratio(1, 6) + ratio(1, 3);
        assert_eq!(format_rational(&s), "1/2");
        assert_eq!(*s.denominator_ref(), 2u32);
    }
}
