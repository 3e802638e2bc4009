//! JSON report payloads. Rationals are strings in lowest terms and every
//! strategy, column or class index is 1-based.

use serde_json::{json, Value};

use crate::classify::{
    AdjacencyEdge, AdjacencyGraph, Classification, ClassificationReport, Membership, RejectReason,
};
use crate::indifference::{CoverReport, DifferenceMatrix, IndifferenceOutcome, NecessaryCondition};
use crate::model::{GameMatrix, MixedStrategy, Permutation, Rational};
use crate::oracle::{DominanceResult, EquilibriumSet};

/// Version of the report layout.
pub const SCHEMA_VERSION: u32 = 1;

pub fn rational_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn vector_json(v: &[Rational]) -> Value {
    v.iter().map(rational_json).collect()
}

pub fn rows_json(rows: &[Vec<Rational>]) -> Value {
    rows.iter().map(|r| vector_json(r)).collect()
}

pub fn matrix_json(m: &GameMatrix) -> Value {
    rows_json(&m.to_rows())
}

pub fn strategy_json(x: &MixedStrategy) -> Value {
    vector_json(x.weights())
}

pub fn permutation_json(p: &Permutation) -> Value {
    p.images().iter().map(|&i| json!(i + 1)).collect()
}

fn one_based(indices: &[usize]) -> Value {
    indices.iter().map(|&i| json!(i + 1)).collect()
}

/// Wraps a payload in the common envelope.
pub fn envelope(command: &str, input: Value, result: Value) -> Value {
    json!({
        "version": SCHEMA_VERSION,
        "tool": { "name": env!("CARGO_PKG_NAME"), "version": env!("CARGO_PKG_VERSION") },
        "command": command,
        "input": input,
        "result": result,
    })
}

pub fn render(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports are plain JSON");
    s.push('\n');
    s
}

pub fn indifference_json(out: &IndifferenceOutcome) -> Value {
    match out {
        IndifferenceOutcome::Indifferent { x, c } => json!({
            "status": "indifferent",
            "x": strategy_json(x),
            "payoff": rational_json(c),
        }),
        IndifferenceOutcome::NotPossible { w } => json!({
            "status": "not_possible",
            "witness": vector_json(w),
        }),
    }
}

pub fn cover_json(cover: &CoverReport) -> Value {
    json!({
        "covered": cover.covered,
        "witness": cover.witness.as_deref().map_or(Value::Null, vector_json),
    })
}

pub fn difference_json(d: &DifferenceMatrix) -> Value {
    rows_json(d.rows())
}

pub fn positivity_json(p: Option<&(MixedStrategy, Rational)>) -> Value {
    p.map_or(
        Value::Null,
        |(x, t)| json!({ "x": strategy_json(x), "min_weight": rational_json(t) }),
    )
}

pub fn necessary_json(n: &NecessaryCondition) -> Value {
    json!({ "player1": n.player1, "player2": n.player2 })
}

pub fn dominance_json(d: &DominanceResult) -> Value {
    json!({
        "dominated": d.dominated + 1,
        "dominator": strategy_json(&d.dominator),
        "margin": rational_json(&d.margin),
    })
}

pub fn equilibria_json(set: &EquilibriumSet) -> Value {
    let list: Vec<Value> = set
        .equilibria
        .iter()
        .map(|e| {
            json!({
                "supports": e.supports.iter().map(|s| one_based(s)).collect::<Vec<_>>(),
                "profile": e.profile.iter().map(strategy_json).collect::<Vec<_>>(),
                "completely_mixed": e.completely_mixed,
            })
        })
        .collect();
    json!({
        "count": set.len(),
        "degenerate": set.degenerate,
        "equilibria": list,
    })
}

fn membership_json(m: &Membership) -> Value {
    json!({
        "class": m.class.to_string(),
        "permutation": permutation_json(&m.permutation),
        "params": vector_json(&m.params),
    })
}

pub fn classification_json(report: &ClassificationReport) -> Value {
    let normalized = report.normalized.as_ref().map_or(Value::Null, |n| {
        json!({
            "matrix": matrix_json(&n.matrix),
            "transforms": n.transforms.iter().map(|t| json!({
                "shift": rational_json(&t.shift),
                "scale": rational_json(&t.scale),
            })).collect::<Vec<_>>(),
        })
    });
    let outcome = match &report.outcome {
        Classification::Classified {
            class,
            permutation,
            params,
        } => json!({
            "status": "classified",
            "class": class.to_string(),
            "permutation": permutation_json(permutation),
            "params": vector_json(params),
            "pattern": matrix_json(&class.matrix(params)),
        }),
        Classification::Rejected(reason) => {
            let mut v = match reason {
                RejectReason::NonGeneric { columns } => {
                    json!({ "reason": "non_generic", "columns": one_based(columns) })
                }
                RejectReason::PureSymmetricEquilibrium { strategies } => json!({
                    "reason": "pure_symmetric_equilibrium",
                    "strategies": one_based(strategies),
                }),
                RejectReason::DominatedStrategy(d) => {
                    json!({ "reason": "dominated_strategy", "dominance": dominance_json(d) })
                }
                RejectReason::ConditionViolated { candidates } => json!({
                    "reason": "condition_violated",
                    "candidates": candidates.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                }),
                RejectReason::NoClassPattern => json!({ "reason": "no_class_pattern" }),
            };
            v["status"] = json!("rejected");
            v
        }
    };
    json!({ "normalized": normalized, "outcome": outcome })
}

fn edge_json(e: &AdjacencyEdge) -> Value {
    json!({
        "classes": [e.classes.0.to_string(), e.classes.1.to_string()],
        "witness": matrix_json(&e.witness),
        "memberships": [membership_json(&e.memberships.0), membership_json(&e.memberships.1)],
        "verified": e.verify(),
    })
}

pub fn adjacency_json(g: &AdjacencyGraph) -> Value {
    json!({
        "resolution": rational_json(&g.resolution),
        "edge_count": g.edges.len(),
        "edges": g.edges.iter().map(edge_json).collect::<Vec<_>>(),
    })
}
