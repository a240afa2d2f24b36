use gsm_core::algebra::random::{random_density_matrix_with, random_separable_state, seeded_rng};
use gsm_core::applications::{separability_test, Verdict};
use gsm_core::max_entangled_projector;
use rand::Rng;
use serde_json::{json, Value};

use crate::cli::{DetectArgs, SampleKind};
use crate::error::{CliError, Status};
use crate::format::{parse_states, read_text, StateRecord};
use crate::inspect::{load_gsm, require_c_max, Loaded};
use crate::report::{bound, header};

pub fn sample_states(
    kind: SampleKind,
    n: usize,
    d_a: usize,
    d_b: usize,
    seed: u64,
) -> Result<Vec<StateRecord>, CliError> {
    let mut rng = seeded_rng(seed);
    let label = match kind {
        SampleKind::Bell => "bell",
        SampleKind::Separable => "separable",
        SampleKind::Random => "random",
    };
    (0..n)
        .map(|_| {
            let rho = match kind {
                SampleKind::Bell => {
                    if d_a != d_b {
                        return Err(CliError::Usage(format!(
                            "--kind bell needs equal dimensions, got {d_a} and {d_b}"
                        )));
                    }
                    max_entangled_projector(d_a).map_err(|e| CliError::Usage(e.to_string()))?
                }
                SampleKind::Separable => random_separable_state(d_a, d_b, 10, &mut rng),
                SampleKind::Random => {
                    let dim = d_a * d_b;
                    let rank = rng.random_range(1..=dim);
                    random_density_matrix_with(dim, rank, &mut rng)
                        .map_err(|e| CliError::Usage(e.to_string()))?
                }
            };
            Ok(StateRecord {
                label: Some(label.to_string()),
                rho,
            })
        })
        .collect()
}

pub fn detect(args: &DetectArgs, tolerance: f64) -> Result<(Value, Status), CliError> {
    let mut head = header("detect", tolerance);
    let mut gsms = Vec::with_capacity(2);
    for (name, path) in [("a", &args.a), ("b", &args.b)] {
        match load_gsm(path, tolerance)? {
            Loaded::Valid(g) => gsms.push(g),
            Loaded::Invalid(mut r) => {
                r.insert("file".into(), json!(name));
                head.extend(r);
                return Ok((Value::Object(head), Status::ValidationFailed));
            }
        }
    }
    let (ga, gb) = (&gsms[0], &gsms[1]);
    let ca = require_c_max(ga, "--a")?;
    let cb = require_c_max(gb, "--b")?;

    let states = match (&args.states, args.sample, args.kind) {
        (Some(path), _, _) => parse_states(&read_text(path)?)?,
        (None, Some(n), Some(kind)) => sample_states(kind, n, ga.dim(), gb.dim(), args.seed)?,
        _ => {
            return Err(CliError::Usage(
                "give --states or --sample with --kind".into(),
            ))
        }
    };

    let mut rows = Vec::with_capacity(states.len());
    let mut entangled = 0usize;
    for (i, rec) in states.iter().enumerate() {
        let r = separability_test(ga, gb, &rec.rho, tolerance)
            .map_err(|e| CliError::Parse(format!("state {i}: {e}")))?;
        if r.verdict == Verdict::Entangled {
            entangled += 1;
        }
        rows.push(json!({
            "index": i,
            "label": rec.label,
            "verdict": r.verdict.name(),
            "trace": r.trace.as_ref().map(|c| bound(c, tolerance)),
            "trace_norm": bound(&r.trace_norm, tolerance),
        }));
    }
    head.insert("c_max_a".into(), json!(ca));
    head.insert("c_max_b".into(), json!(cb));
    head.insert("d_a".into(), json!(ga.dim()));
    head.insert("d_b".into(), json!(gb.dim()));
    head.insert(
        "summary".into(),
        json!({
            "total": rows.len(),
            "entangled": entangled,
            "inconclusive": rows.len() - entangled,
        }),
    );
    head.insert("states".into(), Value::Array(rows));
    Ok((Value::Object(head), Status::Ok))
}
