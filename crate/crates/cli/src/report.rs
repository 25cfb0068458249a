//! Text and JSON renderings of job outcomes. Both are deterministic: keys
//! are emitted in a fixed order and rationals in lowest terms.

use std::fmt::Write as _;

use serde_json::{json, Value};

use semidirect::theorems::{Check, Condition, TheoremReport};
use semidirect::{Matrix, Rational};

use crate::jobs::{JobOutcome, JobResult, SpaceResult};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub jobs: usize,
    pub errors: usize,
    pub mismatches: usize,
}

impl Summary {
    pub fn of(outcomes: &[JobOutcome]) -> Self {
        Self {
            jobs: outcomes.len(),
            errors: outcomes.iter().filter(|o| o.result.is_err()).count(),
            mismatches: outcomes.iter().filter(|o| o.is_mismatch()).count(),
        }
    }

    /// 3 on any MISMATCH, else 2 on any failed job, else 0.
    pub fn exit_code(&self) -> u8 {
        if self.mismatches > 0 {
            3
        } else if self.errors > 0 {
            2
        } else {
            0
        }
    }
}

fn vector(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn matrix(m: &Matrix) -> Value {
    Value::Array(m.rows().map(vector).collect())
}

fn space(s: &SpaceResult) -> Value {
    json!({
        "source_dim": s.source_dim,
        "target_dim": s.target_dim,
        "dim": s.dim,
        "basis": s.basis.iter().map(|v| vector(v)).collect::<Vec<_>>(),
    })
}

fn check(c: &Check) -> Value {
    json!({ "name": c.name, "holds": c.holds, "witness": c.witness })
}

fn theorem(r: &TheoremReport) -> Value {
    json!({
        "theorem": r.theorem.key(),
        "instance": r.instance,
        "verdict": r.verdict.key(),
        "lhs_dim": r.lhs_dim,
        "rhs_dim": r.rhs_dim,
        "hypotheses": r.hypotheses.iter().map(check).collect::<Vec<_>>(),
        "claims": r.claims.iter().map(check).collect::<Vec<_>>(),
    })
}

fn condition_key(c: Condition) -> &'static str {
    match c {
        Condition::A => "a",
        Condition::B => "b",
        Condition::C => "c",
        Condition::D => "d",
    }
}

fn result_json(r: &JobResult) -> Value {
    match r {
        JobResult::Valid { kind, dim } => json!({ "valid": true, "object": kind.to_string(), "dim": dim }),
        JobResult::Built { name, kind, n, m } => json!({ "product": name, "kind": kind, "n": n, "m": m, "dim": n + m }),
        JobResult::Space(s) => space(s),
        JobResult::H1 { z1_dim, n1_dim, h1_dim } => json!({ "z1_dim": z1_dim, "n1_dim": n1_dim, "h1_dim": h1_dim }),
        JobResult::Spaces { r, c, i } => json!({ "R": space(r), "C": space(c), "I": space(i) }),
        JobResult::Blocks(b) => {
            let conditions: serde_json::Map<String, Value> = Condition::ALL
                .iter()
                .map(|&c| {
                    let failure = b.conditions.first_failure(c).map(ToString::to_string);
                    (
                        condition_key(c).to_string(),
                        json!({ "holds": failure.is_none(), "first_failure": failure }),
                    )
                })
                .collect();
            json!({
                "delta1": matrix(&b.delta1),
                "delta2": matrix(&b.delta2),
                "tau1": matrix(&b.tau1),
                "tau2": matrix(&b.tau2),
                "conditions": conditions,
                "is_derivation": b.is_derivation(),
            })
        }
        JobResult::InnerAlgebra(w) => json!({ "inner": w.is_some(), "x": w.as_deref().map(vector) }),
        JobResult::InnerProduct(w) => json!({
            "inner": w.is_some(),
            "a0": w.as_ref().map(|(a, _)| vector(a)),
            "x0": w.as_ref().map(|(_, x)| vector(x)),
        }),
        JobResult::Theorem(r) => theorem(r),
    }
}

pub fn to_json(outcomes: &[JobOutcome]) -> Value {
    let summary = Summary::of(outcomes);
    let jobs: Vec<Value> = outcomes
        .iter()
        .enumerate()
        .map(|(index, o)| match &o.result {
            Ok(r) => json!({ "index": index, "job": o.label, "status": "ok", "result": result_json(r) }),
            Err(e) => json!({ "index": index, "job": o.label, "status": "error", "error": e }),
        })
        .collect();
    json!({
        "jobs": jobs,
        "summary": { "jobs": summary.jobs, "errors": summary.errors, "mismatches": summary.mismatches },
    })
}

fn format_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn write_space(out: &mut String, name: &str, s: &SpaceResult) {
    let _ = writeln!(
        out,
        "  {name}: dim {} (maps {} -> {})",
        s.dim, s.source_dim, s.target_dim
    );
    for v in &s.basis {
        let _ = writeln!(out, "    {}", format_vector(v));
    }
}

fn write_matrix(out: &mut String, name: &str, m: &Matrix) {
    let _ = writeln!(out, "  {name} ({}x{}):", m.nrows(), m.ncols());
    for r in m.rows() {
        let _ = writeln!(out, "    {}", format_vector(r));
    }
}

pub fn to_text(outcomes: &[JobOutcome]) -> String {
    let mut out = String::new();
    for (index, o) in outcomes.iter().enumerate() {
        let _ = writeln!(out, "job {index}: {}", o.label);
        match &o.result {
            Err(e) => {
                let _ = writeln!(out, "  error: {e}");
            }
            Ok(JobResult::Valid { kind, dim }) => {
                let _ = writeln!(out, "  valid {kind} of dimension {dim}");
            }
            Ok(JobResult::Built { name, kind, n, m }) => {
                let _ = writeln!(out, "  built {name}: {kind}, dim A = {n}, dim U = {m}");
            }
            Ok(JobResult::Space(s)) => write_space(&mut out, "space", s),
            Ok(JobResult::H1 { z1_dim, n1_dim, h1_dim }) => {
                let _ = writeln!(out, "  dim Z¹ = {z1_dim}, dim N¹ = {n1_dim}, dim H¹ = {h1_dim}");
            }
            Ok(JobResult::Spaces { r, c, i }) => {
                write_space(&mut out, "R", r);
                write_space(&mut out, "C", c);
                write_space(&mut out, "I", i);
            }
            Ok(JobResult::Blocks(b)) => {
                write_matrix(&mut out, "δ1", &b.delta1);
                write_matrix(&mut out, "δ2", &b.delta2);
                write_matrix(&mut out, "τ1", &b.tau1);
                write_matrix(&mut out, "τ2", &b.tau2);
                for c in Condition::ALL {
                    let _ = match b.conditions.first_failure(c) {
                        None => writeln!(out, "  condition {c}: holds"),
                        Some(f) => writeln!(out, "  condition {c}: fails at {f}"),
                    };
                }
                let _ = writeln!(out, "  derivation: {}", b.is_derivation());
            }
            Ok(JobResult::InnerAlgebra(w)) => {
                let _ = match w {
                    Some(x) => writeln!(out, "  inner: id_x with x = {}", format_vector(x)),
                    None => writeln!(out, "  not inner"),
                };
            }
            Ok(JobResult::InnerProduct(w)) => {
                let _ = match w {
                    Some((a, x)) => writeln!(out, "  inner: a0 = {}, x0 = {}", format_vector(a), format_vector(x)),
                    None => writeln!(out, "  not inner"),
                };
            }
            Ok(JobResult::Theorem(r)) => {
                for line in r.to_string().lines() {
                    let _ = writeln!(out, "  {line}");
                }
            }
        }
    }
    let s = Summary::of(outcomes);
    let _ = writeln!(out, "summary: {} jobs, {} errors, {} MISMATCH", s.jobs, s.errors, s.mismatches);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use semidirect::theorems::{TheoremId, Verdict};

    fn theorem_outcome(verdict: Verdict) -> JobOutcome {
        JobOutcome {
            label: "verify 4.1 P".into(),
            result: Ok(JobResult::Theorem(TheoremReport {
                theorem: TheoremId::QuotientE,
                instance: "P".into(),
                hypotheses: Vec::new(),
                claims: Vec::new(),
                lhs_dim: Some(1),
                rhs_dim: Some(2),
                verdict,
            })),
        }
    }

    #[test]
    fn exit_codes() {
        let ok = theorem_outcome(Verdict::Verified);
        let failed = JobOutcome {
            label: "h1 Q".into(),
            result: Err("boom".into()),
        };
        let mismatch = theorem_outcome(Verdict::Mismatch);
        assert_eq!(Summary::of(std::slice::from_ref(&ok)).exit_code(), 0);
        assert_eq!(Summary::of(&[ok.clone(), failed.clone()]).exit_code(), 2);
        assert_eq!(Summary::of(&[failed, mismatch.clone()]).exit_code(), 3);
        let json = to_json(&[ok, mismatch]);
        assert_eq!(json["summary"]["mismatches"], 1);
        assert_eq!(json["jobs"][1]["result"]["verdict"], "MISMATCH");
    }
}
