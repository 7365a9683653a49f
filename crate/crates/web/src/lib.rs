//! Browser bindings. Each export takes and returns plain strings (JSON for
//! algebras and reports) so the page needs no framework.

use amenability::characters::characters_auto;
use amenability::cli::format::{AlgebraFile, ReportFile};
use amenability::exactla;
use amenability::harness::{self, corpus};
use amenability::{classify, Algebra};
use wasm_bindgen::prelude::*;

/// Parses algebra JSON, or looks up a corpus name.
pub fn read_algebra(text: &str) -> Result<Algebra, String> {
    let t = text.trim();
    let a = if t.starts_with('{') {
        AlgebraFile::parse(t)
            .and_then(|f| f.to_algebra())
            .map_err(|e| e.to_string())?
    } else {
        corpus::lookup(t)
            .map(|e| e.algebra)
            .ok_or_else(|| format!("unknown corpus algebra {t:?}"))?
    };
    let v = a.validate();
    if !v.is_valid() {
        return Err(v.describe());
    }
    Ok(a)
}

/// JSON array of `{name, dim, label}`.
pub fn corpus_listing() -> String {
    let entries: Vec<serde_json::Value> = corpus::corpus()
        .iter()
        .map(|e| {
            serde_json::json!({
                "name": e.name,
                "dim": e.algebra.dim(),
                "label": e.algebra.label(),
            })
        })
        .collect();
    serde_json::Value::Array(entries).to_string()
}

pub fn analyze_text(text: &str) -> Result<String, String> {
    let a = read_algebra(text)?;
    let chars = characters_auto(&a).map_err(|e| e.to_string())?;
    Ok(ReportFile::for_algebra(&a, &classify(&a, &chars)).to_json())
}

/// θ-Lau product; `theta` is `zero` or an index into the characters of `second`.
pub fn lau_text(first: &str, second: &str, theta: &str) -> Result<String, String> {
    let a = read_algebra(first)?;
    let b = read_algebra(second)?;
    let t = if theta.trim() == "zero" {
        exactla::zero_vec(b.dim())
    } else {
        let k: usize = theta
            .trim()
            .parse()
            .map_err(|_| format!("theta must be an index or `zero`, got {theta:?}"))?;
        let chars = characters_auto(&b).map_err(|e| e.to_string())?;
        chars
            .characters
            .get(k)
            .ok_or_else(|| format!("{} has {} rational characters", b.label(), chars.len()))?
            .values()
            .to_vec()
    };
    let l = a.lau_product(&b, &t).map_err(|e| e.to_string())?;
    Ok(AlgebraFile::from_algebra(&l).to_json())
}

/// Human-readable audit summary for one registry id (or `all`).
pub fn check_text(theorem: &str, seed: u64, trials: usize, max_dim: usize) -> Result<String, String> {
    let ids = [theorem];
    let selected = (theorem != "all").then_some(&ids[..]);
    harness::audit(selected, seed, trials, max_dim.max(1), false)
        .map(|s| s.render())
        .map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = corpusListing)]
pub fn corpus_listing_js() -> String {
    corpus_listing()
}

#[wasm_bindgen(js_name = analyze)]
pub fn analyze_js(text: &str) -> Result<String, String> {
    analyze_text(text)
}

#[wasm_bindgen(js_name = lauProduct)]
pub fn lau_js(first: &str, second: &str, theta: &str) -> Result<String, String> {
    lau_text(first, second, theta)
}

#[wasm_bindgen(js_name = runCheck)]
pub fn check_js(theorem: &str, seed: u32, trials: u32, max_dim: u32) -> Result<String, String> {
    check_text(theorem, seed.into(), trials as usize, max_dim as usize)
}
