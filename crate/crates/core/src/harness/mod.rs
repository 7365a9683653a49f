//! Executable hereditary theorems.
//!
//! Every registry entry maps an [`Instance`] to a list of [`Evaluation`]s,
//! one per subclaim, each a tri-state hypothesis and conclusion read off
//! exact [`AmenabilityReport`]s and structural morphism checks. Instances come
//! from the corpus and from seeded random recipes.

pub mod corpus;
pub mod generate;
mod registry;
pub mod witness;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::Algebra;
use crate::characters::{characters_auto, find_rational_characters, CharacterError, CharacterSet};
use crate::cohomology::{classify, AmenabilityReport, Verdict};
use crate::exactla::{self, rat, Rational};

pub use generate::{generate, Generated, Generator, Recipe};
pub use registry::{registry, TheoremCheck};
pub use witness::{reverify, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceKind {
    /// One algebra, optionally with an ideal seed and a basis permutation.
    Single,
    /// Two algebras and θ in Δ₀ of the second, for Lau products and sums.
    Pair,
    /// Two small algebras whose tensor products stay within the cap.
    Tensor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub kind: InstanceKind,
    pub provenance: String,
    pub first: Algebra,
    pub second: Option<Algebra>,
    /// Values of θ on the second algebra; `None` is the zero character.
    pub theta: Option<Vec<Rational>>,
    pub ideal_seed: Option<Vec<Rational>>,
    pub permutation: Option<Vec<usize>>,
}

impl Instance {
    pub fn single(a: Algebra, provenance: impl Into<String>) -> Self {
        Instance {
            kind: InstanceKind::Single,
            provenance: provenance.into(),
            first: a,
            second: None,
            theta: None,
            ideal_seed: None,
            permutation: None,
        }
    }

    pub fn with_ideal_seed(mut self, seed: Vec<Rational>) -> Self {
        self.ideal_seed = Some(seed);
        self
    }

    pub fn with_permutation(mut self, perm: Vec<usize>) -> Self {
        self.permutation = Some(perm);
        self
    }

    pub fn pair(a: Algebra, b: Algebra, theta: Option<Vec<Rational>>, provenance: impl Into<String>) -> Self {
        Instance {
            kind: InstanceKind::Pair,
            provenance: provenance.into(),
            first: a,
            second: Some(b),
            theta,
            ideal_seed: None,
            permutation: None,
        }
    }

    pub fn tensor(a: Algebra, b: Algebra, provenance: impl Into<String>) -> Self {
        Instance {
            kind: InstanceKind::Tensor,
            provenance: provenance.into(),
            first: a,
            second: Some(b),
            theta: None,
            ideal_seed: None,
            permutation: None,
        }
    }

    /// θ as a vector; zero when unset.
    pub fn theta_values(&self) -> Vec<Rational> {
        match (&self.theta, &self.second) {
            (Some(t), _) => t.clone(),
            (None, Some(b)) => exactla::zero_vec(b.dim()),
            (None, None) => Vec::new(),
        }
    }

    pub fn theta_is_zero(&self) -> bool {
        self.theta.as_deref().is_none_or(exactla::is_zero_vec)
    }
}

/// A report together with the character set it was computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub report: AmenabilityReport,
    pub chars: CharacterSet,
    /// Character discovery gave up; point verdicts are conditional.
    pub search_failed: bool,
}

impl Analysis {
    pub fn of(a: &Algebra) -> Self {
        let (chars, search_failed) = match characters_auto(a) {
            Ok(c) => (c, false),
            Err(CharacterError::BadDeclared { .. }) => match find_rational_characters(a) {
                Ok(c) => (c, false),
                Err(_) => (CharacterSet::empty(false), true),
            },
            Err(_) => (CharacterSet::empty(false), true),
        };
        Analysis {
            report: classify(a, &chars),
            chars,
            search_failed,
        }
    }

    pub fn wa(&self) -> Verdict {
        self.report.wa()
    }

    pub fn ca(&self) -> Verdict {
        self.report.ca()
    }

    pub fn cwa(&self) -> Verdict {
        self.report.cwa()
    }

    pub fn pa(&self) -> Verdict {
        self.report.point_amenable
    }

    pub fn zpa(&self) -> Verdict {
        self.report.zero_point_amenable
    }

    /// Δ(A) ≠ ∅.
    pub fn nonempty(&self) -> Verdict {
        self.report.characters_nonempty
    }

    pub fn essential(&self) -> Verdict {
        self.report.essential.into()
    }

    pub fn commutative(&self) -> Verdict {
        self.report.commutative.into()
    }

    pub fn unital(&self) -> Verdict {
        self.report.unital.into()
    }

    pub fn semisimple(&self) -> Verdict {
        self.report.semisimple.into()
    }
}

/// Memoizes analyses by structure table, ignoring labels.
#[derive(Debug, Default)]
pub struct ReportCache {
    map: Mutex<HashMap<Algebra, Arc<Analysis>>>,
}

impl ReportCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn analyze(&self, a: &Algebra) -> Arc<Analysis> {
        let key = a.clone().with_label("");
        if let Some(hit) = self.map.lock().expect("cache lock").get(&key) {
            return Arc::clone(hit);
        }
        let fresh = Arc::new(Analysis::of(a));
        self.map
            .lock()
            .expect("cache lock")
            .entry(key)
            .or_insert(fresh)
            .clone()
    }

    pub fn len(&self) -> usize {
        self.map.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// One subclaim evaluated on one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Evaluation {
    pub subclaim: &'static str,
    pub hypothesis: Verdict,
    pub conclusion: Verdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Vacuous,
    Inconclusive,
    Fail,
}

impl Evaluation {
    pub fn outcome(&self) -> Outcome {
        match (self.hypothesis, self.conclusion) {
            (Verdict::False, _) => Outcome::Vacuous,
            (Verdict::Conditional, _) | (_, Verdict::Conditional) => Outcome::Inconclusive,
            (Verdict::True, Verdict::True) => Outcome::Pass,
            (Verdict::True, Verdict::False) => Outcome::Fail,
        }
    }

    fn negated(self) -> Self {
        Evaluation {
            conclusion: !self.conclusion,
            ..self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    /// The hypothesis never held on any instance.
    Untested,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
            Status::Untested => "untested",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub passes: usize,
    pub vacuous: usize,
    pub inconclusive: usize,
    pub counterexamples: usize,
}

impl Tally {
    fn add(&mut self, o: Outcome) {
        match o {
            Outcome::Pass => self.passes += 1,
            Outcome::Vacuous => self.vacuous += 1,
            Outcome::Inconclusive => self.inconclusive += 1,
            Outcome::Fail => self.counterexamples += 1,
        }
    }

    pub fn status(&self) -> Status {
        if self.counterexamples > 0 {
            Status::Fail
        } else if self.passes > 0 {
            Status::Pass
        } else if self.inconclusive > 0 {
            Status::Inconclusive
        } else {
            Status::Untested
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubclaimOutcome {
    pub name: String,
    pub status: Status,
    #[serde(flatten)]
    pub tally: Tally,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub finite_dim_note: &'static str,
    /// Instances on which at least one subclaim was evaluated.
    pub instances_tried: usize,
    pub tally: Tally,
    pub subclaims: Vec<SubclaimOutcome>,
    pub counterexamples: Vec<Witness>,
}

impl CheckOutcome {
    pub fn status(&self) -> Status {
        let statuses: Vec<Status> = self.subclaims.iter().map(|s| s.status).collect();
        if statuses.contains(&Status::Fail) {
            Status::Fail
        } else if statuses.contains(&Status::Pass) {
            Status::Pass
        } else if statuses.contains(&Status::Inconclusive) {
            Status::Inconclusive
        } else {
            Status::Untested
        }
    }

    pub fn vacuous_count(&self) -> usize {
        self.tally.vacuous
    }

    pub fn untested_subclaims(&self) -> Vec<&str> {
        self.subclaims
            .iter()
            .filter(|s| s.status == Status::Untested)
            .map(|s| s.name.as_str())
            .collect()
    }
}

/// Maps `f` over `items`, on several threads when available. Output order
/// follows input order.
pub fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let workers = if cfg!(target_arch = "wasm32") {
        1
    } else {
        std::thread::available_parallelism().map_or(1, |n| n.get()).min(items.len())
    };
    if workers <= 1 {
        return items.iter().map(f).collect();
    }
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut slots: Vec<Option<R>> = (0..items.len()).map(|_| None).collect();
    let done = Mutex::new(Vec::with_capacity(items.len()));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let r = f(&items[i]);
                done.lock().expect("result lock").push((i, r));
            });
        }
    });
    for (i, r) in done.into_inner().expect("result lock") {
        slots[i] = Some(r);
    }
    slots.into_iter().map(|r| r.expect("every index filled")).collect()
}

pub fn find_check(id: &str) -> Result<&'static TheoremCheck, HarnessError> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| HarnessError::UnknownTheorem(id.to_string()))
}

/// Runs one registry entry. With `negate` every conclusion is inverted, which
/// turns the entry into a deliberately wrong statement for self-testing.
pub fn check_with(
    id: &str,
    instances: &[Instance],
    cache: &ReportCache,
    negate: bool,
) -> Result<CheckOutcome, HarnessError> {
    let entry = find_check(id)?;
    let evaluated = par_map(instances, |inst| (entry.run)(inst, cache));
    let mut tally = Tally::default();
    let mut per_sub: BTreeMap<&'static str, Tally> = entry.subclaims.iter().map(|s| (*s, Tally::default())).collect();
    let mut counterexamples = Vec::new();
    let mut instances_tried = 0;
    for (inst, evals) in instances.iter().zip(evaluated) {
        if !evals.is_empty() {
            instances_tried += 1;
        }
        for e in evals {
            let e = if negate { e.negated() } else { e };
            let o = e.outcome();
            tally.add(o);
            per_sub.entry(e.subclaim).or_default().add(o);
            if o == Outcome::Fail {
                counterexamples.push(Witness::new(entry.id, &e, negate, inst));
            }
        }
    }
    let subclaims = entry
        .subclaims
        .iter()
        .map(|name| {
            let t = per_sub.remove(name).unwrap_or_default();
            SubclaimOutcome {
                name: name.to_string(),
                status: t.status(),
                tally: t,
            }
        })
        .collect();
    Ok(CheckOutcome {
        id: entry.id,
        finite_dim_note: entry.finite_dim_note,
        instances_tried,
        tally,
        subclaims,
        counterexamples,
    })
}

pub fn check(id: &str, instances: &[Instance]) -> Result<CheckOutcome, HarnessError> {
    check_with(id, instances, &ReportCache::new(), false)
}

/// Corpus entries of dimension at most two, used for exhaustive pairs.
fn small_corpus() -> Vec<(String, Algebra)> {
    corpus::corpus()
        .into_iter()
        .filter(|e| e.algebra.dim() <= 2)
        .map(|e| (e.name.to_string(), e.algebra))
        .collect()
}

fn int_seed(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

/// Every corpus algebra as a single instance, every pair of small corpus
/// algebras with every θ, and every small tensor pair.
pub fn corpus_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for e in corpus::corpus() {
        let n = e.algebra.dim();
        let seed = exactla::unit_vec(n, n - 1);
        let perm: Vec<usize> = (0..n).rev().collect();
        out.push(
            Instance::single(e.algebra, e.name)
                .with_ideal_seed(seed)
                .with_permutation(perm),
        );
    }
    let small = small_corpus();
    for (na, a) in &small {
        for (nb, b) in &small {
            let chars = generate::theta_candidates(b);
            out.push(Instance::pair(a.clone(), b.clone(), None, format!("({na},{nb},theta=zero)")));
            for (k, c) in chars.characters.iter().enumerate() {
                out.push(Instance::pair(
                    a.clone(),
                    b.clone(),
                    Some(c.values().to_vec()),
                    format!("({na},{nb},theta=#{k})"),
                ));
            }
            out.push(Instance::tensor(a.clone(), b.clone(), format!("({na},{nb})")));
        }
    }
    out
}

/// `trials` single, pair and tensor instances each, deterministic in `seed`.
pub fn generated_instances(seed: u64, trials: usize, max_dim: usize) -> Vec<Instance> {
    let max_dim = max_dim.max(2);
    let mut g = Generator::new(seed);
    let mut out = Vec::with_capacity(3 * trials);
    for _ in 0..trials {
        let s = g.algebra(3, max_dim);
        let n = s.algebra.dim();
        let ideal = int_seed(&g.vector(n));
        let perm = g.permutation(n);
        out.push(
            Instance::single(s.algebra, s.recipe.to_string())
                .with_ideal_seed(ideal)
                .with_permutation(perm),
        );

        let a = g.algebra(2, max_dim - 1);
        let b = g.algebra(2, max_dim - a.algebra.dim());
        let theta = g.pick_theta(&b.algebra);
        let values = theta.and_then(|k| {
            generate::theta_candidates(&b.algebra)
                .characters
                .get(k)
                .map(|c| c.values().to_vec())
        });
        let label = match theta {
            Some(k) => format!("({},{},theta=#{k})", a.recipe, b.recipe),
            None => format!("({},{},theta=zero)", a.recipe, b.recipe),
        };
        out.push(Instance::pair(a.algebra, b.algebra, values, label));

        // (d1 + 1)(d2 + 1) <= 16 keeps the unitized tensor within the cap.
        let a = g.algebra(1, 3);
        let cap = (16 / (a.algebra.dim() + 1) - 1).min(generate::TENSOR_FACTOR_CAP);
        let b = g.algebra(1, cap);
        let label = format!("({},{})", a.recipe, b.recipe);
        out.push(Instance::tensor(a.algebra, b.algebra, label));
    }
    out
}

/// Result of a full audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summary {
    pub seed: u64,
    pub trials: usize,
    pub max_dim: usize,
    pub negated: bool,
    pub instances: usize,
    pub outcomes: Vec<CheckOutcome>,
}

impl Summary {
    pub fn counterexample_count(&self) -> usize {
        self.outcomes.iter().map(|o| o.counterexamples.len()).sum()
    }

    /// Human-readable table, one line per entry and per subclaim.
    pub fn render(&self) -> String {
        let mut s = format!(
            "audit seed={} trials={} max_dim={} instances={}{}\n",
            self.seed,
            self.trials,
            self.max_dim,
            self.instances,
            if self.negated { " (conclusions negated)" } else { "" }
        );
        for o in &self.outcomes {
            let mut flags = Vec::new();
            if o.tally.vacuous > 0 {
                flags.push("vacuous-flagged");
            }
            if o.tally.inconclusive > 0 {
                flags.push("inconclusive-flagged");
            }
            s.push_str(&format!(
                "{:<10} {:<12} tried={} pass={} vacuous={} inconclusive={} counterexamples={}{}\n",
                o.id,
                o.status().as_str(),
                o.instances_tried,
                o.tally.passes,
                o.tally.vacuous,
                o.tally.inconclusive,
                o.tally.counterexamples,
                if flags.is_empty() {
                    String::new()
                } else {
                    format!(" [{}]", flags.join(", "))
                }
            ));
            for sub in &o.subclaims {
                s.push_str(&format!(
                    "    {:<22} {:<12} pass={} vacuous={} inconclusive={} counterexamples={}\n",
                    sub.name,
                    sub.status.as_str(),
                    sub.tally.passes,
                    sub.tally.vacuous,
                    sub.tally.inconclusive,
                    sub.tally.counterexamples
                ));
            }
        }
        s.push_str(&format!("counterexamples total: {}\n", self.counterexample_count()));
        s
    }
}

/// Runs the given entries (or all) over the corpus plus generated instances.
pub fn audit(
    ids: Option<&[&str]>,
    seed: u64,
    trials: usize,
    max_dim: usize,
    negate: bool,
) -> Result<Summary, HarnessError> {
    let selected: Vec<&str> = match ids {
        Some(ids) => {
            for id in ids {
                find_check(id)?;
            }
            ids.to_vec()
        }
        None => registry().iter().map(|c| c.id).collect(),
    };
    let mut instances = corpus_instances();
    instances.extend(generated_instances(seed, trials, max_dim));
    let cache = ReportCache::new();
    let outcomes = selected
        .iter()
        .map(|id| check_with(id, &instances, &cache, negate))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Summary {
        seed,
        trials,
        max_dim,
        negated: negate,
        instances: instances.len(),
        outcomes,
    })
}

/// Every registry entry over corpus and generated instances.
pub fn check_all(seed: u64, trials: usize, max_dim: usize) -> Summary {
    audit(None, seed, trials, max_dim, false).expect("registry ids are known")
}
