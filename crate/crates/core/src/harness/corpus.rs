use crate::algebra::Algebra;
use crate::characters::CharacterSet;
use crate::cohomology::{AmenabilityReport, Verdict};
use crate::exactla::{self, rat};

/// Report values a corpus algebra is known to have. `None` means the value
/// is not pinned.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Expected {
    pub derivation_dim: Option<usize>,
    pub inner_dim: Option<usize>,
    pub cyclic_dim: Option<usize>,
    pub weakly_amenable: Option<bool>,
    pub cyclically_amenable: Option<bool>,
    pub cyclically_weakly_amenable: Option<bool>,
    pub point_amenable: Option<Verdict>,
    pub zero_point_amenable: Option<Verdict>,
    pub semisimple: Option<bool>,
    pub essential: Option<bool>,
    pub commutative: Option<bool>,
    pub unital: Option<bool>,
    pub characters: Option<usize>,
    pub complete: Option<bool>,
}

impl Expected {
    /// Human-readable list of fields that disagree with the report.
    pub fn mismatches(&self, r: &AmenabilityReport, chars: &CharacterSet) -> Vec<String> {
        let mut out = Vec::new();
        fn cmp<T: PartialEq + std::fmt::Debug>(out: &mut Vec<String>, name: &str, want: &Option<T>, got: T) {
            if let Some(w) = want {
                if *w != got {
                    out.push(format!("{name}: expected {w:?}, got {got:?}"));
                }
            }
        }
        cmp(&mut out, "derivation_dim", &self.derivation_dim, r.derivation_dim);
        cmp(&mut out, "inner_dim", &self.inner_dim, r.inner_dim);
        cmp(&mut out, "cyclic_dim", &self.cyclic_dim, r.cyclic_dim);
        cmp(&mut out, "weakly_amenable", &self.weakly_amenable, r.weakly_amenable);
        cmp(&mut out, "cyclically_amenable", &self.cyclically_amenable, r.cyclically_amenable);
        cmp(
            &mut out,
            "cyclically_weakly_amenable",
            &self.cyclically_weakly_amenable,
            r.cyclically_weakly_amenable,
        );
        cmp(&mut out, "point_amenable", &self.point_amenable, r.point_amenable);
        cmp(&mut out, "zero_point_amenable", &self.zero_point_amenable, r.zero_point_amenable);
        cmp(&mut out, "semisimple", &self.semisimple, r.semisimple);
        cmp(&mut out, "essential", &self.essential, r.essential);
        cmp(&mut out, "commutative", &self.commutative, r.commutative);
        cmp(&mut out, "unital", &self.unital, r.unital);
        cmp(&mut out, "characters", &self.characters, chars.len());
        cmp(&mut out, "complete", &self.complete, chars.complete);
        out
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    /// Short name accepted by the command line.
    pub name: &'static str,
    pub recipe: &'static str,
    pub algebra: Algebra,
    pub expected: Expected,
}

fn scalars() -> Algebra {
    Algebra::new("Q", 1, vec![rat(1)]).expect("1x1x1 table")
}

/// Q^n with pointwise product.
pub fn pointwise(n: usize) -> Algebra {
    Algebra::from_products(format!("Q{n}"), n, |i, j| {
        let mut v = exactla::zero_vec(n);
        if i == j {
            v[i] = rat(1);
        }
        v
    })
    .with_detected_unit()
}

/// All products zero.
pub fn zero_algebra(n: usize) -> Algebra {
    Algebra::new(format!("Z{n}"), n, exactla::zero_vec(n * n * n)).expect("n^3 table")
}

/// Q[x]/(x^n) on the basis 1, x, ..., x^(n-1).
pub fn truncated_polynomials(n: usize) -> Algebra {
    Algebra::from_products(format!("Q[x]/(x^{n})"), n, |i, j| {
        let mut v = exactla::zero_vec(n);
        if i + j < n {
            v[i + j] = rat(1);
        }
        v
    })
    .with_detected_unit()
}

/// x, x² inside Q[x]/(x³), without the unit.
pub fn nilpotent_pair() -> Algebra {
    Algebra::from_products("N3", 2, |i, j| {
        if (i, j) == (0, 0) {
            exactla::int_vec(&[0, 1])
        } else {
            exactla::zero_vec(2)
        }
    })
}

/// Upper triangular n × n matrices on the basis e_ab (a ≤ b), row by row.
pub fn upper_triangular(n: usize) -> Algebra {
    let idx: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    matrix_units(format!("T{n}"), &idx)
}

/// Full 2 × 2 matrices on e11, e12, e21, e22.
pub fn matrices2() -> Algebra {
    matrix_units("M2".into(), &[(0, 0), (0, 1), (1, 0), (1, 1)])
}

fn matrix_units(label: String, idx: &[(usize, usize)]) -> Algebra {
    let m = idx.len();
    Algebra::from_products(label, m, |i, j| {
        let (a, b) = idx[i];
        let (c, d) = idx[j];
        let mut v = exactla::zero_vec(m);
        if b == c {
            let k = idx.iter().position(|&p| p == (a, d)).expect("closed under products");
            v[k] = rat(1);
        }
        v
    })
    .with_detected_unit()
}

/// Group algebra of the two-element group on the basis 1, g.
pub fn group_algebra_c2() -> Algebra {
    Algebra::from_products("Q[C2]", 2, |i, j| {
        let mut v = exactla::zero_vec(2);
        v[(i + j) % 2] = rat(1);
        v
    })
    .with_detected_unit()
}

fn all_true(chars: usize) -> Expected {
    Expected {
        derivation_dim: Some(0),
        inner_dim: Some(0),
        cyclic_dim: Some(0),
        weakly_amenable: Some(true),
        cyclically_amenable: Some(true),
        cyclically_weakly_amenable: Some(true),
        point_amenable: Some(Verdict::True),
        zero_point_amenable: Some(Verdict::True),
        semisimple: Some(true),
        essential: Some(true),
        commutative: Some(true),
        unital: Some(true),
        characters: Some(chars),
        complete: Some(true),
    }
}

fn zero_expected(n: usize) -> Expected {
    Expected {
        derivation_dim: Some(n * n),
        inner_dim: Some(0),
        cyclic_dim: Some(n * (n - 1) / 2),
        weakly_amenable: Some(false),
        cyclically_amenable: Some(n == 1),
        cyclically_weakly_amenable: Some(false),
        point_amenable: Some(Verdict::True),
        zero_point_amenable: Some(Verdict::False),
        semisimple: Some(false),
        essential: Some(false),
        commutative: Some(true),
        unital: Some(false),
        characters: Some(0),
        complete: Some(true),
    }
}

fn truncated_expected(n: usize) -> Expected {
    Expected {
        derivation_dim: Some(n - 1),
        inner_dim: Some(0),
        cyclic_dim: Some(0),
        weakly_amenable: Some(false),
        cyclically_amenable: Some(true),
        cyclically_weakly_amenable: Some(false),
        point_amenable: Some(Verdict::False),
        zero_point_amenable: Some(Verdict::False),
        semisimple: Some(false),
        essential: Some(true),
        commutative: Some(true),
        unital: Some(true),
        characters: Some(1),
        complete: Some(true),
    }
}

/// The fixed reference algebras.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = vec![
        CorpusEntry {
            name: "Q",
            recipe: "leaf",
            algebra: scalars().with_detected_unit(),
            expected: all_true(1),
        },
        CorpusEntry {
            name: "Q2",
            recipe: "sum(Q,Q)",
            algebra: pointwise(2),
            expected: all_true(2),
        },
        CorpusEntry {
            name: "Q3",
            recipe: "sum(Q,sum(Q,Q))",
            algebra: pointwise(3),
            expected: all_true(3),
        },
    ];
    let zero_names = ["Z1", "Z2", "Z3", "Z4"];
    for (k, name) in zero_names.into_iter().enumerate() {
        out.push(CorpusEntry {
            name,
            recipe: "leaf",
            algebra: zero_algebra(k + 1),
            expected: zero_expected(k + 1),
        });
    }
    let poly = [("Qx2", "unitize(Z1) with basis order (1, x)"), ("Qx3", "leaf"), ("Qx4", "leaf")];
    for (k, (name, recipe)) in poly.into_iter().enumerate() {
        out.push(CorpusEntry {
            name,
            recipe,
            algebra: truncated_polynomials(k + 2),
            expected: truncated_expected(k + 2),
        });
    }
    out.extend([
        CorpusEntry {
            name: "N3",
            recipe: "ideal (x) of Q[x]/(x^3)",
            algebra: nilpotent_pair(),
            expected: Expected {
                weakly_amenable: Some(false),
                cyclically_weakly_amenable: Some(false),
                point_amenable: Some(Verdict::True),
                zero_point_amenable: Some(Verdict::False),
                semisimple: Some(false),
                essential: Some(false),
                commutative: Some(true),
                unital: Some(false),
                characters: Some(0),
                complete: Some(true),
                ..Expected::default()
            },
        },
        CorpusEntry {
            name: "T2",
            recipe: "leaf",
            algebra: upper_triangular(2),
            expected: Expected {
                semisimple: Some(false),
                essential: Some(true),
                commutative: Some(false),
                unital: Some(true),
                characters: Some(2),
                complete: Some(true),
                ..Expected::default()
            },
        },
        CorpusEntry {
            name: "T3",
            recipe: "leaf",
            algebra: upper_triangular(3),
            expected: Expected {
                semisimple: Some(false),
                essential: Some(true),
                commutative: Some(false),
                unital: Some(true),
                characters: Some(3),
                complete: Some(true),
                ..Expected::default()
            },
        },
        CorpusEntry {
            name: "M2",
            recipe: "leaf",
            algebra: matrices2(),
            expected: Expected {
                derivation_dim: Some(3),
                inner_dim: Some(3),
                weakly_amenable: Some(true),
                cyclically_amenable: Some(true),
                cyclically_weakly_amenable: Some(true),
                point_amenable: Some(Verdict::True),
                zero_point_amenable: Some(Verdict::True),
                semisimple: Some(true),
                essential: Some(true),
                commutative: Some(false),
                unital: Some(true),
                characters: Some(0),
                complete: Some(true),
                ..Expected::default()
            },
        },
        CorpusEntry {
            name: "QC2",
            recipe: "leaf",
            algebra: group_algebra_c2(),
            expected: all_true(2),
        },
    ]);
    out
}

/// Looks an entry up by short name or by label.
pub fn lookup(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name || e.algebra.label() == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::find_rational_characters;
    use crate::cohomology::classify;

    #[test]
    fn corpus_is_valid_and_matches_expectations() {
        for e in corpus() {
            assert!(e.algebra.validate().is_valid(), "{}", e.name);
            let chars = find_rational_characters(&e.algebra).unwrap();
            let r = classify(&e.algebra, &chars);
            let bad = e.expected.mismatches(&r, &chars);
            assert!(bad.is_empty(), "{}: {bad:?}", e.name);
            assert!(r.findings.is_empty(), "{}: {:?}", e.name, r.findings);
        }
    }

    #[test]
    fn lookup_by_name_and_label() {
        assert_eq!(lookup("Qx2").unwrap().algebra.dim(), 2);
        assert_eq!(lookup("Q[x]/(x^3)").unwrap().name, "Qx3");
        assert!(lookup("nope").is_none());
    }
}
