use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::corpus::{corpus, lookup};
use crate::algebra::{Algebra, AlgebraError};
use crate::characters::{characters_auto, CharacterSet};
use crate::exactla::{self, rat, Rational};

/// Largest factor dimension used under a tensor node.
pub const TENSOR_FACTOR_CAP: usize = 4;

/// Expression tree over corpus leaves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Recipe {
    Leaf(String),
    /// `theta` is `None` for the zero character, otherwise an index into the
    /// sorted rational characters of the second factor.
    Lau {
        first: Box<Recipe>,
        second: Box<Recipe>,
        theta: Option<usize>,
    },
    Tensor(Box<Recipe>, Box<Recipe>),
    Sum(Box<Recipe>, Box<Recipe>),
    Unitize(Box<Recipe>),
    Opposite(Box<Recipe>),
    /// Quotient by the ideal generated by one integer vector.
    Quotient { base: Box<Recipe>, seed: Vec<i64> },
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Leaf(name) => f.write_str(name),
            Recipe::Lau { first, second, theta } => match theta {
                Some(k) => write!(f, "lau({first},{second},theta=#{k})"),
                None => write!(f, "lau({first},{second},theta=zero)"),
            },
            Recipe::Tensor(a, b) => write!(f, "tensor({a},{b})"),
            Recipe::Sum(a, b) => write!(f, "sum({a},{b})"),
            Recipe::Unitize(a) => write!(f, "unitize({a})"),
            Recipe::Opposite(a) => write!(f, "op({a})"),
            Recipe::Quotient { base, seed } => {
                let s: Vec<String> = seed.iter().map(|x| x.to_string()).collect();
                write!(f, "quot({base},[{}])", s.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RecipeError {
    #[error("unknown corpus algebra {0:?}")]
    UnknownLeaf(String),
    #[error("character index {index} out of range ({available} available)")]
    ThetaIndex { index: usize, available: usize },
    #[error("character search failed: {0}")]
    Characters(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Characters for θ selection; discovery failures leave the choice to zero.
pub fn theta_candidates(b: &Algebra) -> CharacterSet {
    characters_auto(b).unwrap_or_else(|_| CharacterSet::empty(false))
}

/// Resolves a θ choice against the characters of `b`.
pub fn theta_values(b: &Algebra, theta: Option<usize>) -> Result<Vec<Rational>, RecipeError> {
    match theta {
        None => Ok(exactla::zero_vec(b.dim())),
        Some(index) => {
            let chars = characters_auto(b).map_err(|e| RecipeError::Characters(e.to_string()))?;
            chars
                .characters
                .get(index)
                .map(|c| c.values().to_vec())
                .ok_or(RecipeError::ThetaIndex {
                    index,
                    available: chars.len(),
                })
        }
    }
}

impl Recipe {
    pub fn evaluate(&self) -> Result<Algebra, RecipeError> {
        Ok(match self {
            Recipe::Leaf(name) => lookup(name)
                .ok_or_else(|| RecipeError::UnknownLeaf(name.clone()))?
                .algebra,
            Recipe::Lau { first, second, theta } => {
                let a = first.evaluate()?;
                let b = second.evaluate()?;
                let t = theta_values(&b, *theta)?;
                a.lau_product(&b, &t)?
            }
            Recipe::Tensor(a, b) => a.evaluate()?.tensor(&b.evaluate()?),
            Recipe::Sum(a, b) => a.evaluate()?.direct_sum(&b.evaluate()?),
            Recipe::Unitize(a) => a.evaluate()?.unitize(),
            Recipe::Opposite(a) => a.evaluate()?.opposite(),
            Recipe::Quotient { base, seed } => {
                let a = base.evaluate()?;
                let v: Vec<Rational> = seed.iter().map(|&x| rat(x)).collect();
                let ideal = a.ideal_generated_by(&[v])?;
                a.quotient(&ideal)?.0
            }
        }
        .with_label(self.to_string()))
    }
}

/// An algebra with the recipe that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub algebra: Algebra,
    pub recipe: Recipe,
}

const ATTEMPTS: usize = 64;

/// Seeded source of random recipes.
pub struct Generator {
    rng: ChaCha8Rng,
    leaves: Vec<(String, usize)>,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            leaves: corpus()
                .into_iter()
                .map(|e| (e.name.to_string(), e.algebra.dim()))
                .collect(),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn leaf(&mut self, max_dim: usize) -> Generated {
        let fits: Vec<&(String, usize)> = self.leaves.iter().filter(|(_, d)| *d <= max_dim).collect();
        let (name, _) = fits[self.rng.random_range(0..fits.len())].clone();
        let recipe = Recipe::Leaf(name);
        Generated {
            algebra: recipe.evaluate().expect("corpus leaf"),
            recipe,
        }
    }

    /// A random algebra of dimension in `1..=max_dim`, built by at most
    /// `depth` construction steps.
    pub fn algebra(&mut self, depth: usize, max_dim: usize) -> Generated {
        assert!(max_dim >= 1, "max_dim must be at least 1");
        if depth == 0 || self.rng.random_bool(0.25) {
            return self.leaf(max_dim);
        }
        for _ in 0..ATTEMPTS {
            if let Some(g) = self.node(depth, max_dim) {
                if (1..=max_dim).contains(&g.algebra.dim()) {
                    return g;
                }
            }
        }
        self.leaf(max_dim)
    }

    fn node(&mut self, depth: usize, max_dim: usize) -> Option<Generated> {
        let d = depth - 1;
        let recipe = match self.rng.random_range(0..6) {
            0 | 1 if max_dim >= 2 => {
                let a = self.algebra(d, max_dim - 1);
                let b = self.algebra(d, max_dim - a.algebra.dim());
                if self.rng.random_bool(0.5) {
                    let theta = self.pick_theta(&b.algebra);
                    Recipe::Lau {
                        first: Box::new(a.recipe),
                        second: Box::new(b.recipe),
                        theta,
                    }
                } else {
                    Recipe::Sum(Box::new(a.recipe), Box::new(b.recipe))
                }
            }
            2 if max_dim >= 2 => {
                let cap = TENSOR_FACTOR_CAP.min(max_dim / 2).max(1);
                let a = self.algebra(d, cap);
                let cap_b = TENSOR_FACTOR_CAP.min(max_dim / a.algebra.dim());
                let b = self.algebra(d, cap_b.max(1));
                Recipe::Tensor(Box::new(a.recipe), Box::new(b.recipe))
            }
            3 if max_dim >= 2 => Recipe::Unitize(Box::new(self.algebra(d, max_dim - 1).recipe)),
            4 => Recipe::Opposite(Box::new(self.algebra(d, max_dim).recipe)),
            5 => {
                let base = self.algebra(d, max_dim);
                let seed = self.vector(base.algebra.dim());
                Recipe::Quotient {
                    base: Box::new(base.recipe),
                    seed,
                }
            }
            _ => return None,
        };
        let algebra = recipe.evaluate().ok()?;
        Some(Generated { algebra, recipe })
    }

    /// Uniform over the rational characters of `b` and zero.
    pub fn pick_theta(&mut self, b: &Algebra) -> Option<usize> {
        let n = theta_candidates(b).len();
        let k = self.rng.random_range(0..=n);
        (k < n).then_some(k)
    }

    /// Small nonzero integer vector.
    pub fn vector(&mut self, n: usize) -> Vec<i64> {
        loop {
            let v: Vec<i64> = (0..n).map(|_| self.rng.random_range(-1..=1)).collect();
            if v.iter().any(|&x| x != 0) {
                return v;
            }
        }
    }

    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(&mut self.rng);
        p
    }
}

/// `count` algebras of dimension at most `max_dim`, deterministic in `seed`.
pub fn generate(seed: u64, count: usize, max_dim: usize) -> Vec<Generated> {
    let mut g = Generator::new(seed);
    (0..count).map(|_| g.algebra(3, max_dim)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_capped() {
        let a = generate(7, 30, 4);
        let b = generate(7, 30, 4);
        assert_eq!(a, b);
        for g in &a {
            assert!(g.algebra.dim() <= 4 && g.algebra.dim() >= 1);
            assert!(g.algebra.validate().is_valid(), "{}", g.recipe);
            assert_eq!(g.recipe.evaluate().unwrap(), g.algebra);
        }
        assert_ne!(generate(8, 30, 4), a);
    }

    #[test]
    fn unitize_of_z1_is_truncated_square() {
        let r = Recipe::Unitize(Box::new(Recipe::Leaf("Z1".into())));
        let a = r.evaluate().unwrap();
        let (p, _) = a.permute_basis(&[1, 0]).unwrap();
        assert!(p.same_table(&lookup("Qx2").unwrap().algebra));
        assert_eq!(r.to_string(), "unitize(Z1)");
    }

    #[test]
    fn recipe_display_and_errors() {
        let r = Recipe::Lau {
            first: Box::new(Recipe::Leaf("Z1".into())),
            second: Box::new(Recipe::Leaf("Q2".into())),
            theta: Some(1),
        };
        assert_eq!(r.to_string(), "lau(Z1,Q2,theta=#1)");
        assert_eq!(r.evaluate().unwrap().dim(), 3);
        let bad = Recipe::Lau {
            first: Box::new(Recipe::Leaf("Z1".into())),
            second: Box::new(Recipe::Leaf("Q".into())),
            theta: Some(3),
        };
        assert!(matches!(bad.evaluate(), Err(RecipeError::ThetaIndex { .. })));
        assert!(Recipe::Leaf("X".into()).evaluate().is_err());
    }
}
