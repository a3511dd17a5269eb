//! JSON and DOT renderings. Output is deterministic: elements appear in the
//! lattice's canonical order.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{classify_element, ElementClassification};
use crate::counting::CountRow;
use crate::dynkin::NodeSet;
use crate::envlattice::{type_map, CrossSectionLattice, Idempotent};
use crate::renner::{AtomOrbit, Rank1OrbitPoset};
use crate::weyl::WeylGroup;

pub const SCHEMA: &str = "envlat/1";

/// Wraps a payload in the versioned envelope.
pub fn envelope(kind: &str, body: Value) -> Value {
    let mut out = json!({ "schema": SCHEMA, "kind": kind });
    if let (Value::Object(dst), Value::Object(src)) = (&mut out, body) {
        dst.extend(src);
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct ElementRecord {
    #[serde(rename = "I")]
    pub i: NodeSet,
    #[serde(rename = "J")]
    pub j: NodeSet,
    pub rank: usize,
    pub lambda_lower: NodeSet,
    pub lambda_upper: NodeSet,
    /// Indices of upper covers.
    pub covers: Vec<usize>,
}

pub fn element_records(lattice: &CrossSectionLattice) -> Vec<ElementRecord> {
    lattice
        .elements()
        .iter()
        .enumerate()
        .map(|(k, e)| {
            let t = type_map(lattice.diagram(), e);
            ElementRecord {
                i: e.i(),
                j: e.j(),
                rank: e.rank(),
                lambda_lower: t.lambda_star_lower,
                lambda_upper: t.lambda_star_upper,
                covers: lattice.upper_cover_indices(k).to_vec(),
            }
        })
        .collect()
}

pub fn lattice_json(lattice: &CrossSectionLattice) -> Value {
    envelope(
        "lattice",
        json!({
            "diagram": lattice.diagram().name(),
            "size": lattice.len(),
            "height": lattice.height(),
            "elements": element_records(lattice),
        }),
    )
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram drawn bottom-up, one layer per rank.
pub fn lattice_dot(lattice: &CrossSectionLattice) -> String {
    let mut out = String::new();
    let name = lattice.diagram().name();
    let _ = writeln!(out, "digraph \"{}\" {{", dot_escape(&name));
    out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
    for (k, e) in lattice.elements().iter().enumerate() {
        let _ = writeln!(out, "  n{k} [label=\"{}\"];", dot_escape(&e.label()));
    }
    for r in 0..=lattice.height() {
        let layer: Vec<String> = lattice
            .elements()
            .iter()
            .enumerate()
            .filter(|(_, e)| e.rank() == r)
            .map(|(k, _)| format!("n{k};"))
            .collect();
        if !layer.is_empty() {
            let _ = writeln!(out, "  {{ rank=same; {} }}", layer.join(" "));
        }
    }
    for (lo, hi) in lattice.hasse() {
        let _ = writeln!(out, "  n{lo} -> n{hi};");
    }
    out.push_str("}\n");
    out
}

pub fn classify_json(lattice: &CrossSectionLattice, only: Option<&Idempotent>) -> Value {
    let records: Vec<ElementClassification> = match only {
        Some(e) => vec![classify_element(lattice, e)],
        None => lattice
            .elements()
            .iter()
            .map(|e| classify_element(lattice, e))
            .collect(),
    };
    envelope(
        "classify",
        json!({ "diagram": lattice.diagram().name(), "elements": records }),
    )
}

pub fn count_json(method: &str, rows: &[CountRow]) -> Value {
    envelope("count", json!({ "method": method, "rows": rows }))
}

/// Poset of one rank-one orbit; nodes are `a | b` in reduced words.
pub fn rank1_dot(group: &WeylGroup, poset: &Rank1OrbitPoset) -> String {
    let mut out = String::new();
    let title = format!("{} {}", group.diagram().name(), poset.e.label());
    let _ = writeln!(out, "digraph \"{}\" {{", dot_escape(&title));
    out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
    for (k, (a, b)) in poset.elements.iter().enumerate() {
        let label = format!("{} | {}", group.word_label(*a), group.word_label(*b));
        let _ = writeln!(out, "  n{k} [label=\"{}\"];", dot_escape(&label));
    }
    for (lo, hi) in poset.covers() {
        let _ = writeln!(out, "  n{lo} -> n{hi};");
    }
    out.push_str("}\n");
    out
}

pub fn r1count_json(
    diagram_name: &str,
    formula: &num_bigint::BigUint,
    direct: &num_bigint::BigUint,
    breakdown: &[AtomOrbit],
) -> Value {
    let number = |v: &num_bigint::BigUint| -> Value {
        v.to_string()
            .parse::<serde_json::Number>()
            .map(Value::Number)
            .unwrap_or_else(|_| Value::String(v.to_string()))
    };
    envelope(
        "r1count",
        json!({
            "diagram": diagram_name,
            "count": number(formula),
            "direct": number(direct),
            "atoms": breakdown,
        }),
    )
}
