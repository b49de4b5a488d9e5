//! The invariant suite for one root datum, as run by `btcompact check`.

use serde_json::{json, Value};

use crate::fans::{is_degenerate_j, Fan};
use crate::parabolics::{is_j_relevant_exhaustive, is_j_relevant_via_perp, is_non_degenerate};
use crate::rootdata::{DiagramSubset, RootDatum};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn outcome(name: String, r: Result<(), String>) -> CheckResult {
    match r {
        Ok(()) => CheckResult { name, passed: true, detail: String::new() },
        Err(detail) => CheckResult { name, passed: false, detail },
    }
}

/// Fan axioms for every non-degenerate `J`, agreement of the
/// non-degeneracy conditions and of the two relevance criteria.
pub fn run_checks(datum: &RootDatum, samples: usize, seed: u64) -> Vec<CheckResult> {
    let d = if datum.is_essential() { datum.clone() } else { datum.essentialize() };
    let label = |s: DiagramSubset| format!("{{{}}}", d.subset_labels(s).join(","));
    let mut out = Vec::new();
    for j in DiagramSubset::all(d.rank()).filter(|&j| !is_degenerate_j(&d, j)) {
        let r = Fan::build(&d, j).and_then(|f| f.verify(samples, seed)).map_err(|e| e.to_string());
        out.push(outcome(format!("fan axioms J={}", label(j)), r));
    }
    let nd = DiagramSubset::all(d.rank()).try_for_each(|t| is_non_degenerate(&d, t).map(|_| ()).map_err(|e| e.to_string()));
    out.push(outcome("non-degeneracy conditions agree".into(), nd));
    let rel = DiagramSubset::all(d.rank())
        .filter(|&j| !is_degenerate_j(&d, j))
        .try_for_each(|j| {
            DiagramSubset::all(d.rank()).try_for_each(|t| {
                let a = is_j_relevant_exhaustive(&d, j, t).map_err(|e| e.to_string())?;
                let b = is_j_relevant_via_perp(&d, j, t).map_err(|e| e.to_string())?;
                if a == b {
                    Ok(())
                } else {
                    Err(format!("relevance criteria disagree at J={}, T={}", label(j), label(t)))
                }
            })
        });
    out.push(outcome("relevance criteria agree".into(), rel));
    out
}

pub fn checks_json(datum: &RootDatum, results: &[CheckResult]) -> Value {
    json!({
        "datum": datum.name(),
        "passed": results.iter().all(|r| r.passed),
        "checks": results
            .iter()
            .map(|r| json!({"name": r.name, "passed": r.passed, "detail": r.detail}))
            .collect::<Vec<_>>(),
    })
}
