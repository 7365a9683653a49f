//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; the process fails if any
//! criterion fails.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use amenability::characters::characters_auto;
use amenability::cli::format::{AlgebraFile, AuditFile, ReportFile};
use amenability::cohomology::{
    cyclic_derivation_space, cyclic_qa_space, derivation_space, inner_qa_space, inner_space, point_derivation_space,
    quasi_additive_space,
};
use amenability::exactla::{self, int_vec};
use amenability::harness::{
    self, check_all, corpus, corpus_instances, generate, generated_instances, registry, reverify, Instance,
    InstanceKind, Status, Summary, Witness,
};
use amenability::{classify, Algebra, AmenabilityReport, Verdict};

const SEED: u64 = 1;
const TRIALS: usize = 200;
const MAX_DIM: usize = 12;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report(a: &Algebra) -> AmenabilityReport {
    classify(a, &characters_auto(a).expect("character search within cap"))
}

/// Every algebra an instance touches, each once, in first-seen order.
fn instance_algebras(instances: &[Instance]) -> Vec<Algebra> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut push = |a: Algebra| {
        if seen.insert(a.clone().with_label("")) {
            out.push(a);
        }
    };
    for inst in instances {
        push(inst.first.clone());
        let Some(b) = &inst.second else { continue };
        push(b.clone());
        match inst.kind {
            InstanceKind::Pair => {
                push(inst.first.lau_product(b, &inst.theta_values()).expect("θ is a character"));
                push(inst.first.direct_sum(b));
            }
            InstanceKind::Tensor => push(inst.first.tensor(b)),
            InstanceKind::Single => {}
        }
    }
    out
}

struct Context {
    generated: usize,
    algebras: Vec<Algebra>,
}

impl Context {
    fn new() -> Self {
        let mut instances = corpus_instances();
        let generated = generated_instances(SEED, TRIALS, MAX_DIM);
        let n = generated.len();
        instances.extend(generated);
        Context {
            generated: n,
            algebras: instance_algebras(&instances),
        }
    }
}

fn oracle_equivalence(ctx: &Context) -> Outcome {
    ensure(ctx.generated >= TRIALS, || format!("only {} generated instances", ctx.generated))?;
    let start = Instant::now();
    for a in &ctx.algebras {
        let pairs = [
            ("derivation", derivation_space(a).dim(), quasi_additive_space(a).dim()),
            ("inner", inner_space(a).dim(), inner_qa_space(a).dim()),
            ("cyclic", cyclic_derivation_space(a).dim(), cyclic_qa_space(a).dim()),
        ];
        for (what, d, q) in pairs {
            ensure(d == q, || format!("{}: {what} {d} vs quasi-additive {q}", a.label()))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    for a in &ctx.algebras {
        let r = report(a);
        ensure(
            r.qa_weakly_amenable == r.weakly_amenable && r.qa_cyclically_amenable == r.cyclically_amenable,
            || format!("{}: verdicts differ between engines", a.label()),
        )?;
    }
    Ok(format!(
        "{} algebras from corpus + {} generated instances, {:.1}s",
        ctx.algebras.len(),
        ctx.generated,
        elapsed.as_secs_f64()
    ))
}

fn chain_inclusions(ctx: &Context) -> Outcome {
    for a in &ctx.algebras {
        let (inn, cyc, der) = (inner_space(a), cyclic_derivation_space(a), derivation_space(a));
        ensure(cyc.contains(&inn).unwrap(), || format!("{}: Inn not in Cyc", a.label()))?;
        ensure(der.contains(&cyc).unwrap(), || format!("{}: Cyc not in Der", a.label()))?;
    }
    Ok(format!("{} algebras", ctx.algebras.len()))
}

fn decomposition() -> Outcome {
    let s = harness::audit(Some(&["DECOMP"]), SEED, TRIALS, MAX_DIM, false).map_err(|e| e.to_string())?;
    let o = &s.outcomes[0];
    ensure(o.counterexamples.is_empty(), || format!("{} counterexamples", o.counterexamples.len()))?;
    ensure(o.status() == Status::Pass, || format!("status {}", o.status().as_str()))?;
    let negated = harness::audit(Some(&["DECOMP"]), SEED, 5, MAX_DIM, true).map_err(|e| e.to_string())?;
    ensure(negated.counterexample_count() > 0, || "negated self-test found nothing".into())?;
    Ok(format!("{} passes over {} instances; negated self-test caught", o.tally.passes, s.instances))
}

fn fixed_values() -> Outcome {
    let get = |n: &str| corpus::lookup(n).expect("corpus entry").algebra;
    let dims = |r: &AmenabilityReport| (r.derivation_dim, r.inner_dim, r.cyclic_dim);
    let tuple = |r: &AmenabilityReport| {
        let (wa, ca, cwa, pa, zpa) = r.verdicts();
        (Verdict::from_bool(wa), Verdict::from_bool(ca), Verdict::from_bool(cwa), pa, zpa)
    };
    use Verdict::{False as F, True as T};

    let qx2 = get("Qx2");
    let r = report(&qx2);
    ensure(dims(&r) == (1, 0, 0), || format!("Qx2 dims {:?}", dims(&r)))?;
    let eval = point_derivation_space(&qx2, &int_vec(&[1, 0])).map_err(|e| e.to_string())?;
    ensure(eval.dim() == 1, || format!("Qx2 point derivations {}", eval.dim()))?;
    ensure(tuple(&r) == (F, T, F, F, F), || format!("Qx2 verdicts {:?}", tuple(&r)))?;

    let r = report(&get("Z2"));
    ensure(dims(&r) == (4, 0, 1), || format!("Z2 dims {:?}", dims(&r)))?;
    ensure(tuple(&r) == (F, F, F, T, F), || format!("Z2 verdicts {:?}", tuple(&r)))?;

    let m2 = get("M2");
    let chars = characters_auto(&m2).map_err(|e| e.to_string())?;
    let r = classify(&m2, &chars);
    ensure(r.derivation_dim == 3 && r.inner_dim == 3, || format!("M2 dims {:?}", dims(&r)))?;
    ensure(r.weakly_amenable && r.semisimple, || "M2 not WA and semisimple".into())?;
    ensure(chars.is_empty() && chars.complete, || "M2 characters not empty and complete".into())?;

    let r = report(&get("Q"));
    let all_zero = dims(&r) == (0, 0, 0)
        && r.quasi_additive_dim == 0
        && r.zero_point_derivation_dim == 0
        && r.point_derivations.iter().all(|p| p.dim == 0);
    ensure(all_zero, || "Q spaces not all zero".into())?;
    ensure(tuple(&r) == (T, T, T, T, T), || format!("Q verdicts {:?}", tuple(&r)))?;
    Ok("Q[x]/(x^2), Z2, M2, Q".into())
}

fn construction_identities() -> Outcome {
    let entries = corpus::corpus();
    let mut pairs = 0;
    for a in &entries {
        for b in &entries {
            let lau = a.algebra.lau_product(&b.algebra, &exactla::zero_vec(b.algebra.dim())).unwrap();
            ensure(lau.same_table(&a.algebra.direct_sum(&b.algebra)), || {
                format!("lau({},{},0) differs from the direct sum", a.name, b.name)
            })?;
            pairs += 1;
        }
    }
    let u = corpus::zero_algebra(1).unitize();
    let (u, _) = u.permute_basis(&[1, 0]).unwrap();
    ensure(u.same_table(&corpus::lookup("Qx2").unwrap().algebra), || "unitize(Z1) differs from Qx2".into())?;
    let generated = generate(SEED, 40, 8);
    for a in entries.iter().map(|e| &e.algebra).chain(generated.iter().map(|g| &g.algebra)) {
        ensure(a.opposite().opposite().same_table(a), || format!("op(op({})) differs", a.label()))?;
    }
    let small = generate(SEED + 1, 40, 4);
    for pair in small.chunks(2) {
        let (a, b) = (&pair[0].algebra, &pair[1].algebra);
        let t = a.tensor(b);
        ensure(t.dim() == a.dim() * b.dim() && t.validate().is_valid(), || {
            format!("tensor({},{}) has dim {}", pair[0].recipe, pair[1].recipe, t.dim())
        })?;
    }
    Ok(format!("{pairs} lau/sum pairs, unitize(Z1), op involution, 20 tensor pairs"))
}

fn theorem_audit(first: &Summary, second: &Summary, elapsed: Duration) -> Outcome {
    ensure(elapsed < Duration::from_secs(600), || format!("audit took {elapsed:?}"))?;
    let ids: Vec<&str> = first.outcomes.iter().map(|o| o.id).collect();
    let expected: Vec<&str> = registry().iter().map(|c| c.id).collect();
    ensure(ids == expected, || "audit skipped registry entries".into())?;
    for o in &first.outcomes {
        ensure(o.instances_tried > 0, || format!("{} never evaluated", o.id))?;
        ensure(o.status() != Status::Untested, || format!("{} untested", o.id))?;
        ensure(o.counterexamples.len() == o.tally.counterexamples, || {
            format!("{} lost witnesses", o.id)
        })?;
    }
    ensure(AuditFile::new(first).to_json() == AuditFile::new(second).to_json(), || {
        "audit is not deterministic".into()
    })?;
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut findings = Vec::new();
    for o in &first.outcomes {
        for (k, w) in o.counterexamples.iter().enumerate() {
            let path = dir.path().join(format!("{}.json", w.file_stem(k)));
            std::fs::write(&path, w.to_json()).map_err(|e| e.to_string())?;
            let reloaded = Witness::parse(&std::fs::read_to_string(&path).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            ensure(matches!(reverify(&reloaded), Ok(true)), || format!("{} does not re-verify", w.file_stem(k)))?;
        }
        if !o.counterexamples.is_empty() {
            findings.push(format!("{} x{}", o.id, o.counterexamples.len()));
        }
    }
    Ok(format!(
        "{} entries over {} instances in {:.1}s; counterexamples re-verified: {}",
        ids.len(),
        first.instances,
        elapsed.as_secs_f64(),
        if findings.is_empty() { "none".into() } else { findings.join(", ") }
    ))
}

fn opposite_invariance(ctx: &Context, audit: &Summary) -> Outcome {
    for a in &ctx.algebras {
        let (r, rop) = (report(a), report(&a.opposite()));
        ensure(r.verdicts() == rop.verdicts(), || format!("{}: verdicts differ from opposite", a.label()))?;
        ensure(r.derivation_dim == rop.derivation_dim, || format!("{}: Der dims differ", a.label()))?;
    }
    let t5 = audit.outcomes.iter().find(|o| o.id == "T5.op").ok_or("T5.op missing")?;
    ensure(t5.counterexamples.is_empty(), || "T5.op counterexamples".into())?;
    Ok(format!("{} algebras; T5.op passes {}", ctx.algebras.len(), t5.tally.passes))
}

fn round_trip(first: &Summary, second: &Summary) -> Outcome {
    for e in corpus::corpus() {
        let f = AlgebraFile::from_algebra(&e.algebra);
        let parsed = AlgebraFile::parse(&f.to_json()).map_err(|err| err.to_string())?;
        ensure(parsed == f, || format!("{}: file differs after round trip", e.name))?;
        let back = parsed.to_algebra().map_err(|err| err.to_string())?;
        ensure(back == e.algebra, || format!("{}: algebra differs after round trip", e.name))?;
        let r1 = ReportFile::for_algebra(&e.algebra, &report(&e.algebra)).to_json();
        let r2 = ReportFile::for_algebra(&back, &report(&back)).to_json();
        ensure(r1 == r2, || format!("{}: reports differ", e.name))?;
        ensure(ReportFile::parse(&r1).map_err(|err| err.to_string())?.to_json() == r1, || {
            format!("{}: report round trip", e.name)
        })?;
    }
    let (a, b) = (AuditFile::new(first).to_json(), AuditFile::new(second).to_json());
    ensure(a == b, || "audit reports differ between identical runs".into())?;
    Ok(format!("{} corpus files; audit report {} bytes identical", corpus::corpus().len(), a.len()))
}

fn main() {
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let ctx = Context::new();
    let start = Instant::now();
    let first = check_all(SEED, TRIALS, MAX_DIM);
    let elapsed = start.elapsed();
    let second = check_all(SEED, TRIALS, MAX_DIM);

    let results: Vec<(&str, Outcome)> = vec![
        ("1 oracle equivalence", oracle_equivalence(&ctx)),
        ("2 chain inclusions", chain_inclusions(&ctx)),
        ("3 decomposition", decomposition()),
        ("4 fixed values", fixed_values()),
        ("5 construction identities", construction_identities()),
        ("6 theorem audit", theorem_audit(&first, &second, elapsed)),
        ("7 opposite invariance", opposite_invariance(&ctx, &first)),
        ("8 round trip and determinism", round_trip(&first, &second)),
    ];
    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
