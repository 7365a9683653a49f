use amenability::characters::{characters_auto, is_character};
use amenability::cohomology::{
    antisymmetric, classify, cyclic_derivation_space, cyclic_qa_space, derivation_space, inner_qa_space, inner_space,
    point_derivation_space, quasi_additive_space,
};
use amenability::exactla::{self, rat, ratio, Matrix, Rational, Subspace};
use amenability::harness::{corpus, generate, Generated};
use amenability::{IdealSubspace, Verdict};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(small_rational(), r * c).prop_map(move |e| Matrix::from_entries(r, c, e).unwrap())
    })
}

/// Sparse integer rows, so kernels and intersections are often nontrivial.
fn subspace(n: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(prop::collection::vec(prop_oneof![3 => Just(0i64), 1 => -2i64..=2], n), 0..=n)
        .prop_map(move |rows| {
            let rows: Vec<Vec<Rational>> = rows.iter().map(|r| exactla::int_vec(r)).collect();
            Subspace::span(&rows, n).unwrap()
        })
}

fn generated(max_dim: usize) -> impl Strategy<Value = Generated> {
    any::<u64>().prop_map(move |seed| generate(seed, 1, max_dim).remove(0))
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in matrix(5, 6)) {
        let r = m.rref();
        prop_assert_eq!(r.reduced.rref().reduced, r.reduced.clone());
    }

    #[test]
    fn kernel_is_annihilated_and_rank_nullity_holds(m in matrix(5, 6)) {
        let k = m.kernel();
        for v in k.basis_vectors() {
            prop_assert!(exactla::is_zero_vec(&m.mul_vec(v).unwrap()));
        }
        prop_assert_eq!(k.dim() + m.rank(), m.cols());
    }

    #[test]
    fn grassmann_identity(s in subspace(5), t in subspace(5)) {
        let sum = s.sum(&t).unwrap();
        let cap = s.intersect(&t).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), s.dim() + t.dim());
        prop_assert!(sum.contains(&s).unwrap() && cap.contains(&cap).unwrap());
        prop_assert!(s.contains(&cap).unwrap() && t.contains(&cap).unwrap());
    }

    #[test]
    fn equality_agrees_with_mutual_containment(s in subspace(4), t in subspace(4)) {
        let mutual = s.contains(&t).unwrap() && t.contains(&s).unwrap();
        prop_assert_eq!(s.equals(&t).unwrap(), mutual);
        prop_assert_eq!(s == t, mutual);
    }

    #[test]
    fn rational_arithmetic_is_exact(a in small_rational(), b in small_rational(), c in 1i64..50, d in 1i64..50) {
        let x = ratio(c, d);
        prop_assert_eq!((a.clone() + &x) - &x, a.clone());
        prop_assert_eq!(exactla::parse_rational(&exactla::format_rational(&(a.clone() * &b))).unwrap(), a * b);
        prop_assert_eq!(x.to_string(), exactla::format_rational(&ratio(c * 7, d * 7)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_algebras_validate(g in generated(8)) {
        prop_assert!(g.algebra.validate().is_valid(), "{}", g.recipe);
        prop_assert!(g.algebra.dim() >= 1 && g.algebra.dim() <= 8);
    }

    #[test]
    fn constructions_validate_and_dimensions_add(a in generated(4), b in generated(4)) {
        let (a, b) = (&a.algebra, &b.algebra);
        let (n, m) = (a.dim(), b.dim());
        let sum = a.direct_sum(b);
        let lau0 = a.lau_product(b, &exactla::zero_vec(m)).unwrap();
        let tensor = a.tensor(b);
        let unit = a.unitize();
        for x in [&sum, &lau0, &tensor, &unit, &a.opposite()] {
            prop_assert!(x.validate().is_valid(), "{}", x.label());
        }
        prop_assert!(lau0.same_table(&sum));
        prop_assert_eq!((sum.dim(), tensor.dim(), unit.dim()), (n + m, n * m, n + 1));
        prop_assert!(unit.is_unital());
        for phi in characters_auto(b).unwrap().characters {
            let lau = a.lau_product(b, phi.values()).unwrap();
            prop_assert!(lau.validate().is_valid());
        }
    }

    #[test]
    fn unitization_contains_original_as_ideal(g in generated(6)) {
        let a = &g.algebra;
        let n = a.dim();
        let u = a.unitize();
        let first: Vec<Vec<Rational>> = (0..n).map(|i| exactla::unit_vec(n + 1, i)).collect();
        prop_assert!(IdealSubspace::new(&u, Subspace::span(&first, n + 1).unwrap()).is_ok());
    }

    #[test]
    fn opposite_is_an_involution(g in generated(6)) {
        let a = &g.algebra;
        prop_assert!(a.opposite().opposite().same_table(a));
        prop_assert_eq!(a.is_commutative(), a.opposite().same_table(a));
    }

    #[test]
    fn quotient_map_is_surjective_with_ideal_kernel(g in generated(6), seed in prop::collection::vec(-1i64..=1, 6)) {
        let a = &g.algebra;
        let n = a.dim();
        let ideal = a.ideal_generated_by(&[exactla::int_vec(&seed[..n])]).unwrap();
        let (q, pi) = a.quotient(&ideal).unwrap();
        prop_assert!(q.validate().is_valid());
        prop_assert!(pi.is_homomorphism() && pi.is_surjective());
        prop_assert!(pi.kernel().equals(ideal.space()).unwrap());
    }

    #[test]
    fn radical_is_an_ideal(g in generated(6)) {
        let a = &g.algebra;
        prop_assert!(IdealSubspace::new(a, a.radical()).is_ok(), "{}", g.recipe);
    }

    #[test]
    fn characters_are_multiplicative_and_compatible(a in generated(4), b in generated(4)) {
        let (a, b) = (&a.algebra, &b.algebra);
        let (ca, cb) = (characters_auto(a).unwrap(), characters_auto(b).unwrap());
        let sum = characters_auto(&a.direct_sum(b)).unwrap();
        for c in &sum.characters {
            prop_assert!(is_character(&a.direct_sum(b), c.values()).unwrap());
        }
        let (n, m) = (a.dim(), b.dim());
        let mut expected: Vec<Vec<Rational>> = Vec::new();
        for c in &ca.characters {
            let mut v = c.values().to_vec();
            v.extend(exactla::zero_vec(m));
            expected.push(v);
        }
        for c in &cb.characters {
            let mut v = exactla::zero_vec(n);
            v.extend(c.values().iter().cloned());
            expected.push(v);
        }
        expected.sort();
        let mut found: Vec<Vec<Rational>> = sum.characters.iter().map(|c| c.values().to_vec()).collect();
        found.sort();
        if ca.complete && cb.complete {
            prop_assert_eq!(found, expected);
        }
        let tensor = a.tensor(b);
        let ct = characters_auto(&tensor).unwrap();
        for p in &ca.characters {
            for q in &cb.characters {
                let v: Vec<Rational> = p
                    .values()
                    .iter()
                    .flat_map(|x| q.values().iter().map(move |y| x.clone() * y))
                    .collect();
                prop_assert!(ct.characters.iter().any(|c| c.values() == v.as_slice()));
            }
        }
        for theta in &cb.characters {
            let lau = a.lau_product(b, theta.values()).unwrap();
            let cl = characters_auto(&lau).unwrap();
            for phi in &ca.characters {
                let mut v = phi.values().to_vec();
                v.extend(theta.values().iter().cloned());
                prop_assert!(cl.characters.iter().any(|c| c.values() == v.as_slice()));
            }
            let mut v = exactla::zero_vec(n);
            v.extend(theta.values().iter().cloned());
            prop_assert!(cl.characters.iter().any(|c| c.values() == v.as_slice()));
        }
    }

    #[test]
    fn cohomology_engines_agree(g in generated(7)) {
        let a = &g.algebra;
        let n = a.dim();
        let (der, inn, cyc) = (derivation_space(a), inner_space(a), cyclic_derivation_space(a));
        prop_assert!(inn.contains(&Subspace::zero(n * n)).unwrap());
        prop_assert!(cyc.contains(&inn).unwrap() && der.contains(&cyc).unwrap());
        prop_assert_eq!(quasi_additive_space(a).dim(), der.dim());
        prop_assert_eq!(inner_qa_space(a).dim(), inn.dim());
        prop_assert_eq!(cyclic_qa_space(a).dim(), cyc.dim());
        prop_assert!(cyc.equals(&der.intersect(&antisymmetric(n)).unwrap()).unwrap());
        if a.is_commutative() {
            prop_assert!(inn.is_zero());
        }
    }

    #[test]
    fn report_invariants(g in generated(7)) {
        let a = &g.algebra;
        let chars = characters_auto(a).unwrap();
        let r = classify(a, &chars);
        prop_assert!(r.findings.is_empty(), "{}: {:?}", g.recipe, r.findings);
        prop_assert_eq!(r.weakly_amenable, r.cyclically_amenable && r.cyclically_weakly_amenable);
        prop_assert_eq!(r.qa_weakly_amenable, r.weakly_amenable);
        prop_assert_eq!(r.qa_cyclically_amenable, r.cyclically_amenable);
        let zero = point_derivation_space(a, &exactla::zero_vec(a.dim())).unwrap();
        prop_assert_eq!(zero.dim() + r.square_dim, a.dim());
        if !chars.is_empty() && chars.complete {
            prop_assert_eq!(Verdict::from_bool(r.cyclically_weakly_amenable), r.zero_point_amenable);
        }
        let op = a.opposite();
        let rop = classify(&op, &characters_auto(&op).unwrap());
        prop_assert_eq!(rop.verdicts(), r.verdicts());
        prop_assert_eq!(rop.derivation_dim, r.derivation_dim);
    }
}

#[test]
fn radical_of_semisimple_quotient_vanishes_on_corpus() {
    for e in corpus::corpus() {
        let a = &e.algebra;
        let rad = IdealSubspace::new(a, a.radical()).unwrap();
        let (q, _) = a.quotient(&rad).unwrap();
        assert!(q.radical().is_zero(), "{}", e.name);
    }
}

#[test]
fn rational_helpers() {
    assert_eq!(exactla::format_rational(&ratio(6, -4)), "-3/2");
    assert_eq!(exactla::parse_rational("10/4").unwrap(), ratio(5, 2));
    assert!(exactla::parse_rational("1/0").is_err());
    assert_eq!(rat(3) * ratio(1, 3), exactla::one());
}
