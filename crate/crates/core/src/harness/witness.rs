use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{find_check, Evaluation, Instance, InstanceKind, Outcome, ReportCache};
use crate::cli::format::{parse_rationals, rational_strings, AlgebraFile, FormatError};
use crate::cohomology::Verdict;

#[derive(Debug, Error)]
pub enum WitnessError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{0}")]
    Harness(#[from] super::HarnessError),
    #[error("witness of kind {0:?} lacks its second algebra")]
    MissingSecond(InstanceKind),
}

/// Which check failed, on which instance data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDescriptor {
    pub id: String,
    pub subclaim: String,
    pub negated: bool,
    pub kind: InstanceKind,
    pub provenance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal_seed: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Vec<usize>>,
    pub hypothesis: Verdict,
    pub conclusion: Verdict,
}

/// A counterexample, self-contained: the input algebras in the algebra file
/// format plus the check descriptor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub check: CheckDescriptor,
    pub first: AlgebraFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub second: Option<AlgebraFile>,
}

impl Witness {
    pub(crate) fn new(id: &str, e: &Evaluation, negated: bool, inst: &Instance) -> Self {
        Witness {
            check: CheckDescriptor {
                id: id.to_string(),
                subclaim: e.subclaim.to_string(),
                negated,
                kind: inst.kind,
                provenance: inst.provenance.clone(),
                theta: inst.theta.as_deref().map(rational_strings),
                ideal_seed: inst.ideal_seed.as_deref().map(rational_strings),
                permutation: inst.permutation.clone(),
                hypothesis: e.hypothesis,
                conclusion: e.conclusion,
            },
            first: AlgebraFile::from_algebra(&inst.first),
            second: inst.second.as_ref().map(AlgebraFile::from_algebra),
        }
    }

    /// File stem such as `T3.6-ca-0`.
    pub fn file_stem(&self, index: usize) -> String {
        format!("{}-{}-{index}", self.check.id.replace('/', "_"), self.check.subclaim)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn instance(&self) -> Result<Instance, WitnessError> {
        let d = &self.check;
        let second = self.second.as_ref().map(|f| f.to_algebra()).transpose()?;
        if d.kind != InstanceKind::Single && second.is_none() {
            return Err(WitnessError::MissingSecond(d.kind));
        }
        Ok(Instance {
            kind: d.kind,
            provenance: d.provenance.clone(),
            first: self.first.to_algebra()?,
            second,
            theta: d.theta.as_deref().map(parse_rationals).transpose()?,
            ideal_seed: d.ideal_seed.as_deref().map(parse_rationals).transpose()?,
            permutation: d.permutation.clone(),
        })
    }
}

/// Rebuilds the instance, reruns the named check from scratch and confirms
/// that the recorded subclaim fails again with the same verdicts.
pub fn reverify(w: &Witness) -> Result<bool, WitnessError> {
    let entry = find_check(&w.check.id)?;
    let inst = w.instance()?;
    let cache = ReportCache::new();
    Ok((entry.run)(&inst, &cache).into_iter().any(|e| {
        let e = if w.check.negated { e.negated() } else { e };
        e.subclaim == w.check.subclaim
            && e.outcome() == Outcome::Fail
            && e.hypothesis == w.check.hypothesis
            && e.conclusion == w.check.conclusion
    }))
}
