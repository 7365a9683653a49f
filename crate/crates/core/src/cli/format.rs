//! JSON file formats. Rationals are always strings such as `"3"` or `"-1/2"`.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, DeclaredCharacters};
use crate::cohomology::{AmenabilityReport, Verdict};
use crate::exactla::{self, LinalgError, Rational};
use crate::harness::{find_check, Status, SubclaimOutcome, Summary, Witness};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported field {0:?}, only \"Q\" is accepted")]
    Field(String),
    #[error("{what}: expected length {expected}, found {found}")]
    Shape {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("bad rational: {0}")]
    Rational(#[from] LinalgError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharactersBlock {
    pub values: Vec<Vec<String>>,
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub label: String,
    pub field: String,
    pub dim: usize,
    /// `table[i][j]` holds the coordinates of `e_i e_j`.
    pub table: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub characters: Option<CharactersBlock>,
}

pub fn rational_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(exactla::format_rational).collect()
}

pub fn parse_rationals(v: &[String]) -> Result<Vec<Rational>, FormatError> {
    v.iter()
        .map(|s| exactla::parse_rational(s).map_err(FormatError::from))
        .collect()
}

fn check_len(what: impl Into<String>, expected: usize, found: usize) -> Result<(), FormatError> {
    if expected != found {
        return Err(FormatError::Shape {
            what: what.into(),
            expected,
            found,
        });
    }
    Ok(())
}

impl AlgebraFile {
    pub fn from_algebra(a: &Algebra) -> Self {
        let n = a.dim();
        let table = (0..n)
            .map(|i| (0..n).map(|j| rational_strings(a.basis_product(i, j))).collect())
            .collect();
        AlgebraFile {
            label: a.label().to_string(),
            field: "Q".into(),
            dim: n,
            table,
            unit: a.unit().map(rational_strings),
            characters: a.declared_characters().map(|d| CharactersBlock {
                values: d.values.iter().map(|v| rational_strings(v)).collect(),
                complete: d.complete,
            }),
        }
    }

    /// Builds the algebra. Shapes are checked here; the algebra axioms and
    /// declared characters are left to `validate`.
    pub fn to_algebra(&self) -> Result<Algebra, FormatError> {
        if self.field != "Q" {
            return Err(FormatError::Field(self.field.clone()));
        }
        let n = self.dim;
        check_len("table rows", n, self.table.len())?;
        let mut table = Vec::with_capacity(n * n * n);
        for (i, row) in self.table.iter().enumerate() {
            check_len(format!("table[{i}]"), n, row.len())?;
            for (j, prod) in row.iter().enumerate() {
                check_len(format!("table[{i}][{j}]"), n, prod.len())?;
                table.extend(parse_rationals(prod)?);
            }
        }
        let mut a = Algebra::new(self.label.clone(), n, table)?;
        if let Some(u) = &self.unit {
            check_len("unit", n, u.len())?;
            a = a.with_unit(parse_rationals(u)?)?;
        }
        if let Some(c) = &self.characters {
            let mut values = Vec::with_capacity(c.values.len());
            for (k, v) in c.values.iter().enumerate() {
                check_len(format!("characters.values[{k}]"), n, v.len())?;
                values.push(parse_rationals(v)?);
            }
            a = a.with_declared_characters(DeclaredCharacters {
                values,
                complete: c.complete,
            });
        }
        Ok(a)
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

/// SHA-256 of the canonical serialization, as lowercase hex.
pub fn digest_algebra(a: &Algebra) -> String {
    let file = AlgebraFile::from_algebra(a);
    let bytes = serde_json::to_vec(&file).expect("plain data serializes");
    Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointDerivationEntry {
    pub character: Vec<String>,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub tool_version: String,
    pub input_digest: String,
    pub label: String,
    pub field: String,
    pub dim: usize,
    pub derivation_dim: usize,
    pub inner_dim: usize,
    pub cyclic_dim: usize,
    pub quasi_additive_dim: usize,
    pub inner_qa_dim: usize,
    pub cyclic_qa_dim: usize,
    pub point_derivations: Vec<PointDerivationEntry>,
    pub zero_point_derivation_dim: usize,
    pub square_dim: usize,
    pub weakly_amenable: Verdict,
    pub cyclically_amenable: Verdict,
    pub cyclically_weakly_amenable: Verdict,
    pub point_amenable: Verdict,
    pub zero_point_amenable: Verdict,
    pub essential: bool,
    pub semisimple: bool,
    pub commutative: bool,
    pub unital: bool,
    pub characters_nonempty: Verdict,
    pub character_set_complete: bool,
    pub qa_weakly_amenable: Verdict,
    pub qa_cyclically_amenable: Verdict,
    pub findings: Vec<String>,
}

impl ReportFile {
    pub fn new(r: &AmenabilityReport, input_digest: String) -> Self {
        ReportFile {
            tool_version: TOOL_VERSION.into(),
            input_digest,
            label: r.label.clone(),
            field: r.field.into(),
            dim: r.dim,
            derivation_dim: r.derivation_dim,
            inner_dim: r.inner_dim,
            cyclic_dim: r.cyclic_dim,
            quasi_additive_dim: r.quasi_additive_dim,
            inner_qa_dim: r.inner_qa_dim,
            cyclic_qa_dim: r.cyclic_qa_dim,
            point_derivations: r
                .point_derivations
                .iter()
                .map(|p| PointDerivationEntry {
                    character: rational_strings(p.character.values()),
                    dim: p.dim,
                })
                .collect(),
            zero_point_derivation_dim: r.zero_point_derivation_dim,
            square_dim: r.square_dim,
            weakly_amenable: r.wa(),
            cyclically_amenable: r.ca(),
            cyclically_weakly_amenable: r.cwa(),
            point_amenable: r.point_amenable,
            zero_point_amenable: r.zero_point_amenable,
            essential: r.essential,
            semisimple: r.semisimple,
            commutative: r.commutative,
            unital: r.unital,
            characters_nonempty: r.characters_nonempty,
            character_set_complete: r.character_set_complete,
            qa_weakly_amenable: r.qa_weakly_amenable.into(),
            qa_cyclically_amenable: r.qa_cyclically_amenable.into(),
            findings: r.findings.clone(),
        }
    }

    pub fn for_algebra(a: &Algebra, r: &AmenabilityReport) -> Self {
        ReportFile::new(r, digest_algebra(a))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub id: String,
    pub statement: String,
    pub finite_dim_note: String,
    pub status: Status,
    pub instances_tried: usize,
    pub passes: usize,
    pub vacuous: usize,
    pub inconclusive: usize,
    pub counterexamples: usize,
    pub vacuous_flagged: bool,
    pub inconclusive_flagged: bool,
    pub untested_subclaims: Vec<String>,
    pub subclaims: Vec<SubclaimOutcome>,
    pub witnesses: Vec<String>,
}

/// Machine-readable audit summary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditFile {
    pub tool_version: String,
    pub seed: u64,
    pub trials: usize,
    pub max_dim: usize,
    pub negated: bool,
    pub instances: usize,
    pub counterexamples: usize,
    pub entries: Vec<AuditEntry>,
}

impl AuditFile {
    pub fn new(s: &Summary) -> Self {
        let entries = s
            .outcomes
            .iter()
            .map(|o| AuditEntry {
                id: o.id.into(),
                statement: find_check(o.id).map(|c| c.statement).unwrap_or_default().into(),
                finite_dim_note: o.finite_dim_note.into(),
                status: o.status(),
                instances_tried: o.instances_tried,
                passes: o.tally.passes,
                vacuous: o.tally.vacuous,
                inconclusive: o.tally.inconclusive,
                counterexamples: o.tally.counterexamples,
                vacuous_flagged: o.tally.vacuous > 0,
                inconclusive_flagged: o.tally.inconclusive > 0,
                untested_subclaims: o.untested_subclaims().into_iter().map(String::from).collect(),
                subclaims: o.subclaims.clone(),
                witnesses: witness_stems(&o.counterexamples),
            })
            .collect();
        AuditFile {
            tool_version: TOOL_VERSION.into(),
            seed: s.seed,
            trials: s.trials,
            max_dim: s.max_dim,
            negated: s.negated,
            instances: s.instances,
            counterexamples: s.counterexample_count(),
            entries,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

/// File stems for a list of witnesses, numbered per subclaim.
pub fn witness_stems(ws: &[Witness]) -> Vec<String> {
    let mut counts: std::collections::HashMap<(String, String), usize> = Default::default();
    ws.iter()
        .map(|w| {
            let k = counts.entry((w.check.id.clone(), w.check.subclaim.clone())).or_default();
            let stem = w.file_stem(*k);
            *k += 1;
            stem
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int_vec, ratio};

    fn sample() -> Algebra {
        Algebra::from_products("D", 2, |i, j| match (i, j) {
            (0, 0) => int_vec(&[1, 0]),
            (0, 1) | (1, 0) => int_vec(&[0, 1]),
            _ => int_vec(&[0, 0]),
        })
        .with_detected_unit()
    }

    #[test]
    fn algebra_round_trip() {
        let a = sample().with_declared_characters(DeclaredCharacters {
            values: vec![int_vec(&[1, 0])],
            complete: true,
        });
        let f = AlgebraFile::from_algebra(&a);
        let back = AlgebraFile::parse(&f.to_json()).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.to_algebra().unwrap(), a);
        assert_eq!(f.table[0][1], vec!["0", "1"]);
    }

    #[test]
    fn rationals_are_strings() {
        let a = Algebra::new("h", 1, vec![ratio(-1, 2)]).unwrap();
        let json = AlgebraFile::from_algebra(&a).to_json();
        assert!(json.contains("\"-1/2\""));
    }

    #[test]
    fn shape_and_field_errors() {
        let mut f = AlgebraFile::from_algebra(&sample());
        f.table[1].pop();
        assert!(matches!(f.to_algebra(), Err(FormatError::Shape { .. })));
        let mut f = AlgebraFile::from_algebra(&sample());
        f.field = "C".into();
        assert!(matches!(f.to_algebra(), Err(FormatError::Field(_))));
        let mut f = AlgebraFile::from_algebra(&sample());
        f.table[0][0][0] = "1/0".into();
        assert!(matches!(f.to_algebra(), Err(FormatError::Rational(_))));
        assert!(matches!(AlgebraFile::parse("{"), Err(FormatError::Json(_))));
    }

    #[test]
    fn digest_is_stable_and_content_sensitive() {
        let a = sample();
        assert_eq!(digest_algebra(&a), digest_algebra(&a.clone()));
        assert_eq!(digest_algebra(&a).len(), 64);
        assert_ne!(digest_algebra(&a), digest_algebra(&a.clone().with_label("E")));
    }
}
