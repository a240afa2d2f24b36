//! Report trees. Keys serialize in sorted order, so identical inputs give
//! byte-identical output.

use gsm_core::applications::BoundCheck;
use gsm_core::measurement::{
    classify_with_tolerance, SymmetryParameters, Violation, ViolationReport, RANK_TOLERANCE,
};
use gsm_core::{is_informationally_complete, GeneralizedSymmetricMeasurement};
use serde_json::{json, Value};

use crate::format::FORMAT_VERSION;

/// `{"value", "tolerance"}`.
pub fn checked(value: f64, tolerance: f64) -> Value {
    json!({ "value": value, "tolerance": tolerance })
}

pub fn bound(c: &BoundCheck, tolerance: f64) -> Value {
    json!({
        "value": c.value,
        "bound": c.bound,
        "margin": c.margin(),
        "tolerance": tolerance,
        "violated": c.violated(tolerance),
    })
}

pub fn header(command: &str, tolerance: f64) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("command".into(), json!(command));
    m.insert("format_version".into(), json!(FORMAT_VERSION));
    m.insert("tolerance".into(), json!(tolerance));
    m
}

pub fn parameters(p: &SymmetryParameters) -> Value {
    json!({ "w": p.w, "x": p.x, "y": p.y, "z": p.z })
}

fn violation_kind(v: &Violation) -> &'static str {
    match v {
        Violation::NoBlocks => "no_blocks",
        Violation::BlockTooSmall { .. } => "block_too_small",
        Violation::Dimension { .. } => "dimension",
        Violation::Normalization { .. } => "normalization",
        Violation::Positivity { .. } => "positivity",
        Violation::Trace { .. } => "trace",
        Violation::Purity { .. } => "purity",
        Violation::Overlap { .. } => "overlap",
        Violation::Cross { .. } => "cross",
        Violation::Parameter { .. } => "parameter",
        Violation::PurityRange { .. } => "purity_range",
    }
}

pub fn violation(v: &Violation, tolerance: f64) -> Value {
    let magnitude = v.magnitude();
    json!({
        "kind": violation_kind(v),
        "message": v.to_string(),
        "magnitude": magnitude.is_finite().then_some(magnitude),
        "tolerance": tolerance,
    })
}

/// Symmetry parameters, informational completeness and class tags.
pub fn describe(
    g: &GeneralizedSymmetricMeasurement,
    tolerance: f64,
) -> serde_json::Map<String, Value> {
    let ic = is_informationally_complete(g);
    let tags = classify_with_tolerance(g, tolerance);
    let mut m = serde_json::Map::new();
    m.insert("valid".into(), json!(true));
    m.insert("d".into(), json!(g.dim()));
    m.insert("block_sizes".into(), json!(g.block_sizes()));
    m.insert("parameters".into(), parameters(g.params()));
    m.insert(
        "max_deviation".into(),
        checked(g.max_deviation(), tolerance),
    );
    m.insert(
        "informationally_complete".into(),
        json!({
            "value": ic.informationally_complete(),
            "count": ic.count,
            "needed": ic.needed,
            "rank": ic.rank,
            "full": ic.full,
            "min_singular_value": ic.singular_values.last().copied(),
            "tolerance": RANK_TOLERANCE,
        }),
    );
    m.insert(
        "classes".into(),
        json!({
            "tags": tags.names(),
            "r": tags.r,
            "s": tags.s,
            "tolerance": tolerance,
        }),
    );
    m.insert("violations".into(), json!([]));
    m
}

pub fn describe_failure(r: &ViolationReport, tolerance: f64) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("valid".into(), json!(false));
    m.insert("d".into(), json!(r.dim));
    m.insert(
        "parameters".into(),
        r.params.as_ref().map_or(Value::Null, parameters),
    );
    m.insert(
        "violations".into(),
        Value::Array(
            r.violations
                .iter()
                .map(|v| violation(v, tolerance))
                .collect(),
        ),
    );
    m
}
