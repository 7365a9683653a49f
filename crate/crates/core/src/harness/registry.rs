use super::{Evaluation, Instance, InstanceKind, ReportCache};
use crate::algebra::{Algebra, Morphism};
use crate::cohomology::Verdict;
use crate::exactla::{self, Subspace};

pub struct TheoremCheck {
    pub id: &'static str,
    pub statement: &'static str,
    pub shapes: &'static [InstanceKind],
    /// How analytic hypotheses were discharged at finite dimension.
    pub finite_dim_note: &'static str,
    pub subclaims: &'static [&'static str],
    pub(crate) run: fn(&Instance, &ReportCache) -> Vec<Evaluation>,
}

impl std::fmt::Debug for TheoremCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TheoremCheck").field("id", &self.id).finish()
    }
}

use InstanceKind::{Pair, Single, Tensor};
use Verdict::True;

const MAPS: &[&str] = &["quotient", "permutation", "lau-projection", "sum-projection"];

static REGISTRY: &[TheoremCheck] = &[
    TheoremCheck {
        id: "T2.1.i",
        statement: "a surjective homomorphism carries cyclic weak amenability from its source to its target",
        shapes: &[Single, Pair],
        finite_dim_note: "dense range read as surjective; continuity automatic",
        subclaims: MAPS,
        run: t21_i,
    },
    TheoremCheck {
        id: "T2.1.ii",
        statement: "a surjective homomorphism whose transpose is onto the source dual carries cyclic amenability",
        shapes: &[Single, Pair],
        finite_dim_note: "the transpose condition forces an injective map, so together with surjectivity the map is an isomorphism; the check is weak",
        subclaims: MAPS,
        run: t21_ii,
    },
    TheoremCheck {
        id: "T2.1.iii",
        statement: "a surjective homomorphism whose transpose is onto the source dual carries weak amenability",
        shapes: &[Single, Pair],
        finite_dim_note: "the transpose condition forces an injective map, so together with surjectivity the map is an isomorphism; the check is weak",
        subclaims: MAPS,
        run: t21_iii,
    },
    TheoremCheck {
        id: "T2.1.iv",
        statement: "a surjective homomorphism carries 0-point amenability",
        shapes: &[Single, Pair],
        finite_dim_note: "dense range read as surjective; continuity automatic",
        subclaims: MAPS,
        run: t21_iv,
    },
    TheoremCheck {
        id: "C2.2",
        statement: "quotients of cyclically weakly amenable (point amenable) algebras are cyclically weakly amenable (point amenable)",
        shapes: &[Single],
        finite_dim_note: "every ideal subspace is closed; ideals are generated by one random seed vector",
        subclaims: &["cwa", "pa"],
        run: c22,
    },
    TheoremCheck {
        id: "T2.4",
        statement: "the target of a retraction from a cyclically (weakly) amenable algebra is cyclically (weakly) amenable",
        shapes: &[Pair, Tensor],
        finite_dim_note: "retractions verified exactly as homomorphism pairs with identity composite",
        subclaims: &["lau-ca", "lau-wa", "sum-ca", "sum-wa", "tensor-ca", "tensor-wa"],
        run: t24,
    },
    TheoremCheck {
        id: "T3.1",
        statement: "0-point amenability of Lau products, direct sums and unitizations is equivalent to that of the factors",
        shapes: &[Single, Pair],
        finite_dim_note: "no analytic hypotheses",
        subclaims: &["lau", "sum", "unitize"],
        run: t31,
    },
    TheoremCheck {
        id: "C3.2",
        statement: "for nonzero theta and nonempty character spaces, cyclic weak amenability of the Lau product (of the unitization) is equivalent to that of the factors",
        shapes: &[Single, Pair],
        finite_dim_note: "character spaces taken over Q; incomplete searches make the check inconclusive",
        subclaims: &["lau", "unitize"],
        run: c32,
    },
    TheoremCheck {
        id: "T3.3",
        statement: "point amenability passes from Lau products, sums and unitizations to the factors, and back when the factors are essential",
        shapes: &[Single, Pair],
        finite_dim_note: "no analytic hypotheses",
        subclaims: &["lau", "sum", "unitize", "lau-converse", "sum-converse", "unitize-converse"],
        run: t33,
    },
    TheoremCheck {
        id: "T3.4",
        statement: "cyclic amenability of a Lau product with nonzero theta passes to the second factor; an algebra is cyclically amenable iff its unitization is",
        shapes: &[Single, Pair],
        finite_dim_note: "no analytic hypotheses",
        subclaims: &["lau", "unitize"],
        run: t34,
    },
    TheoremCheck {
        id: "T3.5",
        statement: "for nonzero theta: weak amenability of the Lau product passes to both factors; weakly amenable factors with characters give a cyclically weakly amenable product; for commutative factors with characters weak amenability is equivalent",
        shapes: &[Pair],
        finite_dim_note: "no analytic hypotheses",
        subclaims: &["i", "ii", "iii"],
        run: t35,
    },
    TheoremCheck {
        id: "C3.7",
        statement: "weak amenability passes to the unitization, back again when characters exist, and is equivalent for semisimple algebras",
        shapes: &[Single],
        finite_dim_note: "no analytic hypotheses",
        subclaims: &["forward", "converse", "semisimple"],
        run: c37,
    },
    TheoremCheck {
        id: "T3.6",
        statement: "a direct sum is cyclically weakly amenable, cyclically amenable, weakly amenable iff both summands are",
        shapes: &[Pair],
        finite_dim_note: "no analytic hypotheses; audited, cross-block derivations between non-essential summands are the expected failure mode",
        subclaims: &["cwa", "ca", "wa"],
        run: t36,
    },
    TheoremCheck {
        id: "C3.8/3.9",
        statement: "in a split extension of a weakly amenable algebra, the ideal and the quotient are weakly amenable",
        shapes: &[Pair],
        finite_dim_note: "split sequences realized as a direct sum, its first block as ideal and the second as quotient; splitting verified as a retraction",
        subclaims: &["split"],
        run: c389,
    },
    TheoremCheck {
        id: "T4.1",
        statement: "a tensor product is 0-point amenable iff both factors are",
        shapes: &[Tensor],
        finite_dim_note: "projective tensor product is the algebraic tensor product; factor dimensions capped",
        subclaims: &["iff"],
        run: t41,
    },
    TheoremCheck {
        id: "C4.2",
        statement: "with nonempty character spaces: the tensor product is cyclically weakly amenable iff both factors are iff both unitizations are iff the tensor product of the unitizations is",
        shapes: &[Tensor],
        finite_dim_note: "projective tensor product is the algebraic tensor product; (d1+1)(d2+1) <= 16",
        subclaims: &["a-b", "b-c", "c-d"],
        run: c42,
    },
    TheoremCheck {
        id: "T4.3",
        statement: "for unital factors with characters, cyclic (weak) amenability of the tensor product passes to both factors",
        shapes: &[Tensor],
        finite_dim_note: "projective tensor product is the algebraic tensor product",
        subclaims: &["ca", "wa"],
        run: t43,
    },
    TheoremCheck {
        id: "T5.op",
        statement: "an algebra and its opposite have the same amenability verdicts",
        shapes: &[Single, Pair],
        finite_dim_note: "no analytic hypotheses",
        subclaims: &["single", "lau"],
        run: t5op,
    },
    TheoremCheck {
        id: "T5.bidual",
        statement: "point amenability, 0-point amenability and cyclic weak amenability descend from the bidual",
        shapes: &[Single],
        finite_dim_note: "the bidual is the algebra itself at finite dimension and weak compactness is automatic; identity sanity check, not probative",
        subclaims: &["pa", "zpa", "cwa"],
        run: t5bidual,
    },
    TheoremCheck {
        id: "DECOMP",
        statement: "weakly amenable iff cyclically amenable and cyclically weakly amenable",
        shapes: &[Single, Pair, Tensor],
        finite_dim_note: "subspace identity, no analytic hypotheses",
        subclaims: &["single", "lau", "sum", "tensor"],
        run: decomp,
    },
    TheoremCheck {
        id: "BRIDGE",
        statement: "with a complete nonempty character space: cyclically weakly amenable iff 0-point amenable iff point amenable and essential",
        shapes: &[Single, Pair, Tensor],
        finite_dim_note: "character spaces taken over Q; incomplete searches make the check inconclusive",
        subclaims: &["single", "lau", "sum", "tensor"],
        run: bridge,
    },
];

pub fn registry() -> &'static [TheoremCheck] {
    REGISTRY
}

fn ev(subclaim: &'static str, hypothesis: Verdict, conclusion: Verdict) -> Evaluation {
    Evaluation {
        subclaim,
        hypothesis,
        conclusion,
    }
}

fn b(x: bool) -> Verdict {
    x.into()
}

fn second(inst: &Instance) -> Option<&Algebra> {
    inst.second.as_ref()
}

fn lau(inst: &Instance) -> Option<Algebra> {
    inst.first.lau_product(second(inst)?, &inst.theta_values()).ok()
}

fn sum(inst: &Instance) -> Option<Algebra> {
    Some(inst.first.direct_sum(second(inst)?))
}

/// Surjective-homomorphism candidates attached to an instance.
fn maps(inst: &Instance) -> Vec<(&'static str, Morphism)> {
    let mut out = Vec::new();
    match inst.kind {
        Single => {
            if let Some(seed) = &inst.ideal_seed {
                if let Ok(ideal) = inst.first.ideal_generated_by(std::slice::from_ref(seed)) {
                    if let Ok((q, pi)) = inst.first.quotient(&ideal) {
                        if q.dim() > 0 {
                            out.push(("quotient", pi));
                        }
                    }
                }
            }
            if let Some(perm) = &inst.permutation {
                if let Ok((_, iso)) = inst.first.permute_basis(perm) {
                    out.push(("permutation", iso));
                }
            }
        }
        Pair => {
            let Some(b2) = second(inst) else { return out };
            if let Ok(p) = inst.first.lau_projection_second(b2, &inst.theta_values()) {
                out.push(("lau-projection", p));
            }
            if let Ok(p) = inst.first.lau_projection_second(b2, &exactla::zero_vec(b2.dim())) {
                out.push(("sum-projection", p));
            }
        }
        Tensor => {}
    }
    out
}

fn preserving(
    inst: &Instance,
    cache: &ReportCache,
    needs_dual_onto: bool,
    property: fn(&super::Analysis) -> Verdict,
) -> Vec<Evaluation> {
    maps(inst)
        .into_iter()
        .map(|(name, phi)| {
            let mut structural = phi.is_homomorphism() && phi.is_surjective();
            if needs_dual_onto {
                structural &= phi.dual_composition_full();
            }
            let src = cache.analyze(phi.source());
            let tgt = cache.analyze(phi.target());
            ev(name, b(structural).and(property(&src)), property(&tgt))
        })
        .collect()
}

fn t21_i(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    preserving(inst, cache, false, |a| a.cwa())
}

fn t21_ii(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    preserving(inst, cache, true, |a| a.ca())
}

fn t21_iii(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    preserving(inst, cache, true, |a| a.wa())
}

fn t21_iv(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    preserving(inst, cache, false, |a| a.zpa())
}

fn c22(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    let Some(seed) = (inst.kind == Single).then_some(()).and(inst.ideal_seed.as_ref()) else {
        return vec![];
    };
    let a = &inst.first;
    let Ok(ideal) = a.ideal_generated_by(std::slice::from_ref(seed)) else {
        return vec![];
    };
    let Ok((q, _)) = a.quotient(&ideal) else { return vec![] };
    if q.dim() == 0 {
        return vec![];
    }
    let (ra, rq) = (cache.analyze(a), cache.analyze(&q));
    vec![ev("cwa", ra.cwa(), rq.cwa()), ev("pa", ra.pa(), rq.pa())]
}

fn t24(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    let mut pairs: Vec<(&'static str, &'static str, Morphism, Morphism)> = Vec::new();
    let Some(b2) = second(inst) else { return vec![] };
    match inst.kind {
        Pair => {
            let t = inst.theta_values();
            if let (Ok(p), Ok(i)) = (
                inst.first.lau_projection_second(b2, &t),
                inst.first.lau_injection_second(b2, &t),
            ) {
                pairs.push(("lau-ca", "lau-wa", p, i));
            }
            let z = exactla::zero_vec(b2.dim());
            if let (Ok(p), Ok(i)) = (
                inst.first.lau_projection_first(b2, &z),
                inst.first.lau_injection_first(b2, &z),
            ) {
                pairs.push(("sum-ca", "sum-wa", p, i));
            }
        }
        Tensor => {
            let chars = cache.analyze(b2).chars.clone();
            if let Some(phi) = chars.characters.first() {
                if let Ok((l, g)) = inst.first.tensor_retraction(b2, phi.values()) {
                    pairs.push(("tensor-ca", "tensor-wa", l, g));
                }
            }
        }
        Single => {}
    }
    let mut out = Vec::new();
    for (ca_name, wa_name, phi, psi) in pairs {
        let retraction = b(Morphism::is_retraction(&phi, &psi).unwrap_or(false));
        let (s, t) = (cache.analyze(phi.source()), cache.analyze(phi.target()));
        out.push(ev(ca_name, retraction.and(s.ca()), t.ca()));
        out.push(ev(wa_name, retraction.and(s.wa()), t.wa()));
    }
    out
}

fn t31(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    match inst.kind {
        Pair => {
            let (Some(l), Some(s), Some(b2)) = (lau(inst), sum(inst), second(inst)) else {
                return vec![];
            };
            let (a1, a2) = (cache.analyze(&inst.first), cache.analyze(b2));
            let both = a1.zpa().and(a2.zpa());
            vec![
                ev("lau", True, cache.analyze(&l).zpa().iff(both)),
                ev("sum", True, cache.analyze(&s).zpa().iff(both)),
            ]
        }
        Single => {
            let a = cache.analyze(&inst.first);
            let u = cache.analyze(&inst.first.unitize());
            vec![ev("unitize", True, a.zpa().iff(u.zpa()))]
        }
        Tensor => vec![],
    }
}

fn c32(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    match inst.kind {
        Pair => {
            let (Some(l), Some(b2)) = (lau(inst), second(inst)) else {
                return vec![];
            };
            let (a1, a2) = (cache.analyze(&inst.first), cache.analyze(b2));
            let h = a1.nonempty().and(a2.nonempty()).and(b(!inst.theta_is_zero()));
            let c = cache.analyze(&l).cwa().iff(a1.cwa().and(a2.cwa()));
            vec![ev("lau", h, c)]
        }
        Single => {
            let a = cache.analyze(&inst.first);
            let u = cache.analyze(&inst.first.unitize());
            vec![ev("unitize", a.nonempty(), a.cwa().iff(u.cwa()))]
        }
        Tensor => vec![],
    }
}

fn t33(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    match inst.kind {
        Pair => {
            let (Some(l), Some(s), Some(b2)) = (lau(inst), sum(inst), second(inst)) else {
                return vec![];
            };
            let (a1, a2) = (cache.analyze(&inst.first), cache.analyze(b2));
            let (rl, rs) = (cache.analyze(&l), cache.analyze(&s));
            let both = a1.pa().and(a2.pa());
            let ess = a1.essential().and(a2.essential());
            vec![
                ev("lau", rl.pa(), both),
                ev("sum", rs.pa(), both),
                ev("lau-converse", ess.and(both), rl.pa()),
                ev("sum-converse", ess.and(both), rs.pa()),
            ]
        }
        Single => {
            let a = cache.analyze(&inst.first);
            let u = cache.analyze(&inst.first.unitize());
            vec![
                ev("unitize", u.pa(), a.pa()),
                ev("unitize-converse", a.essential().and(a.pa()), u.pa()),
            ]
        }
        Tensor => vec![],
    }
}

fn t34(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    match inst.kind {
        Pair => {
            let (Some(l), Some(b2)) = (lau(inst), second(inst)) else {
                return vec![];
            };
            let h = b(!inst.theta_is_zero()).and(cache.analyze(&l).ca());
            vec![ev("lau", h, cache.analyze(b2).ca())]
        }
        Single => {
            let a = cache.analyze(&inst.first);
            let u = cache.analyze(&inst.first.unitize());
            vec![ev("unitize", True, a.ca().iff(u.ca()))]
        }
        Tensor => vec![],
    }
}

fn t35(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    if inst.kind != Pair {
        return vec![];
    }
    let (Some(l), Some(b2)) = (lau(inst), second(inst)) else {
        return vec![];
    };
    let nonzero = b(!inst.theta_is_zero());
    let (a1, a2, rl) = (cache.analyze(&inst.first), cache.analyze(b2), cache.analyze(&l));
    let both_wa = a1.wa().and(a2.wa());
    let both_ne = a1.nonempty().and(a2.nonempty());
    let both_comm = a1.commutative().and(a2.commutative());
    vec![
        ev("i", nonzero.and(rl.wa()), both_wa),
        ev("ii", nonzero.and(both_wa).and(both_ne), rl.cwa()),
        ev("iii", nonzero.and(both_comm).and(both_ne), rl.wa().iff(both_wa)),
    ]
}

fn c37(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    if inst.kind != Single {
        return vec![];
    }
    let a = cache.analyze(&inst.first);
    let u = cache.analyze(&inst.first.unitize());
    vec![
        ev("forward", a.wa(), u.wa()),
        ev("converse", a.nonempty().and(u.wa()), a.wa()),
        ev("semisimple", a.semisimple(), a.wa().iff(u.wa())),
    ]
}

fn t36(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    if inst.kind != Pair {
        return vec![];
    }
    let (Some(s), Some(b2)) = (sum(inst), second(inst)) else {
        return vec![];
    };
    let (a1, a2, rs) = (cache.analyze(&inst.first), cache.analyze(b2), cache.analyze(&s));
    vec![
        ev("cwa", True, rs.cwa().iff(a1.cwa().and(a2.cwa()))),
        ev("ca", True, rs.ca().iff(a1.ca().and(a2.ca()))),
        ev("wa", True, rs.wa().iff(a1.wa().and(a2.wa()))),
    ]
}

fn c389(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    if inst.kind != Pair {
        return vec![];
    }
    let (Some(s), Some(b2)) = (sum(inst), second(inst)) else {
        return vec![];
    };
    let (n1, n) = (inst.first.dim(), s.dim());
    let block: Vec<_> = (0..n1).map(|i| exactla::unit_vec(n, i)).collect();
    let Ok(ideal) = s.ideal_generated_by(&block) else {
        return vec![];
    };
    let Ok((q, pi)) = s.quotient(&ideal) else { return vec![] };
    let block_space = Subspace::span(&block, n).expect("vectors of length n");
    let mut split = *ideal.space() == block_space && q.same_table(b2);
    if split {
        let z = exactla::zero_vec(b2.dim());
        let section = inst
            .first
            .lau_injection_second(b2, &z)
            .ok()
            .and_then(|i| Morphism::new(q.clone(), s.clone(), i.matrix().clone()).ok());
        split = section.is_some_and(|sec| Morphism::is_retraction(&pi, &sec).unwrap_or(false));
    }
    let (rs, a1, rq) = (cache.analyze(&s), cache.analyze(&inst.first), cache.analyze(&q));
    vec![ev("split", b(split).and(rs.wa()), a1.wa().and(rq.wa()))]
}

fn tensor_parts(inst: &Instance) -> Option<(&Algebra, &Algebra, Algebra)> {
    if inst.kind != Tensor {
        return None;
    }
    let b2 = second(inst)?;
    Some((&inst.first, b2, inst.first.tensor(b2)))
}

fn t41(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    let Some((a, b2, t)) = tensor_parts(inst) else { return vec![] };
    let both = cache.analyze(a).zpa().and(cache.analyze(b2).zpa());
    vec![ev("iff", True, cache.analyze(&t).zpa().iff(both))]
}

fn c42(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    let Some((a, b2, t)) = tensor_parts(inst) else { return vec![] };
    let (ua, ub) = (a.unitize(), b2.unitize());
    let (a1, a2) = (cache.analyze(a), cache.analyze(b2));
    let h = a1.nonempty().and(a2.nonempty());
    let va = cache.analyze(&t).cwa();
    let vb = a1.cwa().and(a2.cwa());
    let vc = cache.analyze(&ua).cwa().and(cache.analyze(&ub).cwa());
    let vd = cache.analyze(&ua.tensor(&ub)).cwa();
    vec![
        ev("a-b", h, va.iff(vb)),
        ev("b-c", h, vb.iff(vc)),
        ev("c-d", h, vc.iff(vd)),
    ]
}

fn t43(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    let Some((a, b2, t)) = tensor_parts(inst) else { return vec![] };
    let (a1, a2, rt) = (cache.analyze(a), cache.analyze(b2), cache.analyze(&t));
    let base = a1
        .unital()
        .and(a2.unital())
        .and(a1.nonempty())
        .and(a2.nonempty());
    vec![
        ev("ca", base.and(rt.ca()), a1.ca().and(a2.ca())),
        ev("wa", base.and(rt.wa()), a1.wa().and(a2.wa())),
    ]
}

fn same_verdicts(x: &super::Analysis, y: &super::Analysis) -> Verdict {
    let (p, q) = (&x.report, &y.report);
    if p.point_amenable == Verdict::Conditional || q.point_amenable == Verdict::Conditional {
        let rest = p.weakly_amenable == q.weakly_amenable
            && p.cyclically_amenable == q.cyclically_amenable
            && p.cyclically_weakly_amenable == q.cyclically_weakly_amenable;
        return if rest { Verdict::Conditional } else { Verdict::False };
    }
    b(p.verdicts() == q.verdicts()
        && (p.derivation_dim, p.inner_dim, p.cyclic_dim) == (q.derivation_dim, q.inner_dim, q.cyclic_dim))
}

fn t5op(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    let (name, a) = match inst.kind {
        Single => ("single", inst.first.clone()),
        Pair => match lau(inst) {
            Some(l) => ("lau", l),
            None => return vec![],
        },
        Tensor => return vec![],
    };
    let (x, y) = (cache.analyze(&a), cache.analyze(&a.opposite()));
    vec![ev(name, True, same_verdicts(&x, &y))]
}

fn t5bidual(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    if inst.kind != Single {
        return vec![];
    }
    let bidual = inst.first.clone().with_label(format!("bidual({})", inst.first.label()));
    let (x, a) = (cache.analyze(&bidual), cache.analyze(&inst.first));
    vec![
        ev("pa", x.pa(), a.pa()),
        ev("zpa", x.zpa(), a.zpa()),
        ev("cwa", x.cwa(), a.cwa()),
    ]
}

fn subjects(inst: &Instance) -> Vec<(&'static str, Algebra)> {
    match inst.kind {
        Single => vec![("single", inst.first.clone())],
        Pair => [("lau", lau(inst)), ("sum", sum(inst))]
            .into_iter()
            .filter_map(|(n, a)| a.map(|a| (n, a)))
            .collect(),
        Tensor => tensor_parts(inst).map(|(_, _, t)| vec![("tensor", t)]).unwrap_or_default(),
    }
}

fn decomp(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    subjects(inst)
        .into_iter()
        .map(|(name, a)| {
            let r = cache.analyze(&a);
            ev(name, True, r.wa().iff(r.ca().and(r.cwa())))
        })
        .collect()
}

fn bridge(inst: &Instance, cache: &ReportCache) -> Vec<Evaluation> {
    subjects(inst)
        .into_iter()
        .map(|(name, a)| {
            let r = cache.analyze(&a);
            let h = if r.chars.complete {
                b(!r.chars.is_empty())
            } else {
                Verdict::Conditional
            };
            let c = r.cwa().iff(r.zpa()).and(r.zpa().iff(r.pa().and(r.essential())));
            ev(name, h, c)
        })
        .collect()
}
