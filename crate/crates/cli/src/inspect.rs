use std::path::Path;

use gsm_core::applications::{
    c_max, eur_bound, index_of_coincidence, probabilities, purity_from_probabilities,
    shannon_renyi_check, ENTROPY_TOLERANCE,
};
use gsm_core::designs::{certify_design, DESIGN_TOLERANCE};
use gsm_core::{verify_gsm, GeneralizedSymmetricMeasurement};
use serde_json::{json, Map, Value};

use crate::error::{CliError, Status};
use crate::format::{load_measurement, parse_states, read_text};
use crate::report::{checked, describe, describe_failure, header};

/// A measurement file that either verified or produced a violation report.
pub enum Loaded {
    Valid(GeneralizedSymmetricMeasurement),
    Invalid(Map<String, Value>),
}

pub fn load_gsm(path: &Path, tolerance: f64) -> Result<Loaded, CliError> {
    let file = load_measurement(path)?;
    let blocks = file.to_blocks()?;
    Ok(match verify_gsm(blocks, file.d, tolerance) {
        Ok(g) => Loaded::Valid(g),
        Err(r) => Loaded::Invalid(describe_failure(&r, tolerance)),
    })
}

fn merge(mut a: Map<String, Value>, b: Map<String, Value>) -> Value {
    a.extend(b);
    Value::Object(a)
}

pub fn verify(path: &Path, tolerance: f64) -> Result<(Value, Status), CliError> {
    let head = header("verify", tolerance);
    Ok(match load_gsm(path, tolerance)? {
        Loaded::Valid(g) => (merge(head, describe(&g, tolerance)), Status::Ok),
        Loaded::Invalid(r) => (merge(head, r), Status::ValidationFailed),
    })
}

pub fn certify(path: &Path, tolerance: f64) -> Result<(Value, Status), CliError> {
    let mut head = header("certify", tolerance);
    let g = match load_gsm(path, tolerance)? {
        Loaded::Valid(g) => g,
        Loaded::Invalid(r) => return Ok((merge(head, r), Status::ValidationFailed)),
    };
    let c = certify_design(&g);
    let expected = c
        .expected_kappas(g.dim())
        .map(|(kp, km)| json!({ "kappa_plus": kp, "kappa_minus": km }));
    let weighted_expected = c
        .expected_weighted_kappas(g.dim(), g.n_povms())
        .map(|(kp, km)| json!({ "kappa_plus": kp, "kappa_minus": km }));
    head.insert(
        "certificate".into(),
        json!({
            "kind": c.kind.name(),
            "r": c.r,
            "s": c.s,
            "mu": c.mu,
            "operator_fit": {
                "kappa_plus": c.kappa_plus,
                "kappa_minus": c.kappa_minus,
                "expected": expected,
                "residual": checked(c.residual_operator, DESIGN_TOLERANCE),
            },
            "map_fit": {
                "kappa_plus": c.kappa_plus_map,
                "kappa_minus": c.kappa_minus_map,
                "residual": checked(c.residual_map, DESIGN_TOLERANCE),
            },
            "weighted_fit": {
                "kappa_plus": c.weighted_kappa_plus,
                "kappa_minus": c.weighted_kappa_minus,
                "expected": weighted_expected,
                "residual": checked(c.residual_weighted, DESIGN_TOLERANCE),
            },
            "choi_deviation": checked(c.choi_deviation, DESIGN_TOLERANCE),
            "trace_identity_deviation": checked(c.trace_identity_deviation, DESIGN_TOLERANCE),
            "consistent": c.consistent,
        }),
    );
    Ok((merge(head, describe(&g, tolerance)), Status::Ok))
}

/// Requires an r-class measurement; anything else is a class mismatch.
pub fn require_c_max(g: &GeneralizedSymmetricMeasurement, which: &str) -> Result<f64, CliError> {
    c_max(g).map_err(|e| CliError::Mismatch(format!("{which}: {e}")))
}

pub fn bounds(
    path: &Path,
    states: Option<&Path>,
    tolerance: f64,
) -> Result<(Value, Status), CliError> {
    let mut head = header("bounds", tolerance);
    let g = match load_gsm(path, tolerance)? {
        Loaded::Valid(g) => g,
        Loaded::Invalid(r) => return Ok((merge(head, r), Status::ValidationFailed)),
    };
    let cm = require_c_max(&g, &path.display().to_string())?;
    let eur = eur_bound(&g).map_err(|e| CliError::Mismatch(e.to_string()))?;
    head.insert("c_max".into(), json!(cm));
    head.insert("mu".into(), json!(g.mu()));
    head.insert("n_povms".into(), json!(g.n_povms()));
    head.insert(
        "eur_bound".into(),
        json!({ "nats": eur.nats, "bits": eur.bits }),
    );

    if let Some(states) = states {
        let records = parse_states(&read_text(states)?)?;
        let mut rows = Vec::with_capacity(records.len());
        for (i, rec) in records.iter().enumerate() {
            let t = probabilities(&g, &rec.rho)
                .map_err(|e| CliError::Parse(format!("state {i}: {e}")))?;
            let c = index_of_coincidence(&t);
            let purity = rec.rho.purity();
            let via_identity = purity_from_probabilities(&g, &t);
            let e = shannon_renyi_check(&t);
            rows.push(json!({
                "index": i,
                "label": rec.label,
                "coincidence": {
                    "value": c,
                    "bound": cm,
                    "margin": c - cm,
                    "within": c <= cm + tolerance,
                    "tolerance": tolerance,
                },
                "purity": {
                    "value": purity,
                    "from_probabilities": via_identity,
                    "deviation": (purity - via_identity).abs(),
                    "tolerance": tolerance,
                },
                "entropy": {
                    "shannon_nats": e.shannon,
                    "renyi2_nats": e.renyi2,
                    "mean_shannon_nats": e.mean_shannon,
                    "state_bound_nats": e.state_bound,
                    "chain_holds": e.above_state_bound && e.state_bound >= eur.nats - ENTROPY_TOLERANCE,
                    "tolerance": ENTROPY_TOLERANCE,
                },
            }));
        }
        head.insert("states".into(), Value::Array(rows));
    }
    Ok((merge(head, describe(&g, tolerance)), Status::Ok))
}
