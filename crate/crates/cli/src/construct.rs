use gsm_core::algebra::random::seeded_rng;
use gsm_core::basis::random_partition;
use gsm_core::construction::{block_t_range, projective_choice, t_for_r, t_from_x};
use gsm_core::{construct_gsm, gell_mann_basis, partition_basis, BasisPartition, Sign, VariantTag};

use crate::cli::ConstructArgs;
use crate::error::CliError;
use crate::format::{load_basis, MeasurementFile, Provenance};

/// A parsed `--variant` value; the sign may be left to the strength flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VariantSpec {
    pub primed: bool,
    pub sign: Option<Sign>,
}

impl std::str::FromStr for VariantSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let (family, sign) = match s.split_once(':') {
            Some((f, sg)) => (f, Some(sg)),
            None => (s, None),
        };
        let primed = match family.trim() {
            "unprimed" => false,
            "primed" => true,
            other => return Err(CliError::Usage(format!("unknown variant family {other:?}"))),
        };
        let sign = match sign.map(str::trim) {
            None => None,
            Some("+") => Some(Sign::Plus),
            Some("-") => Some(Sign::Minus),
            Some(other) => return Err(CliError::Usage(format!("unknown variant sign {other:?}"))),
        };
        Ok(Self { primed, sign })
    }
}

pub fn variant_name(v: VariantTag) -> String {
    let family = if v.primed { "primed" } else { "unprimed" };
    let sign = match v.sign {
        Sign::Plus => '+',
        Sign::Minus => '-',
    };
    format!("{family}:{sign}")
}

fn per_block<T: Clone>(values: &[T], n: usize, flag: &str) -> Result<Vec<T>, CliError> {
    match values.len() {
        1 => Ok(vec![values[0].clone(); n]),
        k if k == n => Ok(values.to_vec()),
        k => Err(CliError::Usage(format!(
            "{flag} takes 1 or {n} values, got {k}"
        ))),
    }
}

/// Resolves the variant for a flag whose sign is fixed or defaulted.
fn resolve(
    spec: Option<VariantSpec>,
    sign: Sign,
    forced: bool,
    flag: &str,
) -> Result<VariantTag, CliError> {
    let primed = spec.is_some_and(|s| s.primed);
    match spec.and_then(|s| s.sign) {
        Some(s) if forced && s != sign => Err(CliError::Usage(format!(
            "{flag} needs a variant with sign {}",
            if sign == Sign::Plus { '+' } else { '-' }
        ))),
        Some(s) => Ok(VariantTag::new(primed, s)),
        None => Ok(VariantTag::new(primed, sign)),
    }
}

fn partition(args: &ConstructArgs) -> Result<(BasisPartition, String), CliError> {
    let usage = |e: gsm_core::Error| CliError::Usage(e.to_string());
    if let Some(path) = &args.basis {
        let file = load_basis(path)?;
        if file.d != args.d {
            return Err(CliError::Usage(format!(
                "basis file has d = {}, but -d {} was given",
                file.d, args.d
            )));
        }
        let ops = file.to_operators()?;
        let p = partition_basis(&ops, &args.blocks).map_err(usage)?;
        return Ok((p, format!("file:{}", path.display())));
    }
    if let Some(seed) = args.seed {
        let p = random_partition(args.d, &args.blocks, &mut seeded_rng(seed)).map_err(usage)?;
        return Ok((p, format!("gell-mann rotated, seed {seed}")));
    }
    let basis = gell_mann_basis(args.d).map_err(usage)?;
    Ok((
        partition_basis(&basis, &args.blocks).map_err(usage)?,
        "gell-mann".into(),
    ))
}

fn choices(args: &ConstructArgs, p: &BasisPartition) -> Result<Vec<(VariantTag, f64)>, CliError> {
    let n = p.n_blocks();
    let d = p.dim();
    let specs: Vec<Option<VariantSpec>> = if args.variant.is_empty() {
        vec![None; n]
    } else {
        let parsed = args
            .variant
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<VariantSpec>, _>>()?;
        per_block(&parsed, n, "--variant")?
            .into_iter()
            .map(Some)
            .collect()
    };
    let range = |alpha: usize, primed: bool| {
        block_t_range(p, alpha, primed).map_err(CliError::from_construction)
    };
    let sizes = p.block_sizes();
    let mut out = Vec::with_capacity(n);

    if args.projective {
        for alpha in 0..n {
            out.push(projective_choice(p, alpha).map_err(CliError::from_construction)?);
        }
        return Ok(out);
    }
    if !args.t.is_empty() {
        for (alpha, t) in per_block(&args.t, n, "--t")?.into_iter().enumerate() {
            if t == 0.0 || !t.is_finite() {
                return Err(CliError::Usage(format!(
                    "--t must be finite and nonzero, got {t}"
                )));
            }
            out.push((
                resolve(
                    specs[alpha],
                    Sign::of(t),
                    true,
                    "a negative or positive --t",
                )?,
                t,
            ));
        }
        return Ok(out);
    }
    if !args.x.is_empty() {
        for (alpha, x) in per_block(&args.x, n, "--x")?.into_iter().enumerate() {
            let v = match specs[alpha] {
                Some(VariantSpec {
                    primed,
                    sign: Some(sign),
                }) => VariantTag::new(primed, sign),
                _ => {
                    return Err(CliError::Usage(
                        "--x fixes only t², so --variant must carry a sign, e.g. unprimed:+".into(),
                    ))
                }
            };
            out.push((
                v,
                t_from_x(x, sizes[alpha], d, v).map_err(CliError::from_construction)?,
            ));
        }
        return Ok(out);
    }
    if let Some(r) = args.r {
        if !(r > 0.0 && r.is_finite()) {
            return Err(CliError::Usage(format!("--r must be positive, got {r}")));
        }
        for alpha in 0..n {
            let v = resolve(specs[alpha], Sign::Plus, false, "--r")?;
            out.push((v, t_for_r(r, sizes[alpha], v)));
        }
        return Ok(out);
    }
    for alpha in 0..n {
        let (v, t) = if args.t_max {
            let v = resolve(specs[alpha], Sign::Plus, true, "--t-max")?;
            (v, range(alpha, v.primed)?.hi)
        } else if args.t_min {
            let v = resolve(specs[alpha], Sign::Minus, true, "--t-min")?;
            (v, range(alpha, v.primed)?.lo)
        } else {
            let v = resolve(specs[alpha], Sign::Plus, false, "--t-star")?;
            (v, v.sign.value() * range(alpha, v.primed)?.t_star())
        };
        out.push((v, t));
    }
    Ok(out)
}

pub fn construct(args: &ConstructArgs, tolerance: f64) -> Result<MeasurementFile, CliError> {
    let (p, basis) = partition(args)?;
    let choices = choices(args, &p)?;
    let g = construct_gsm(&p, &choices, tolerance).map_err(CliError::from_construction)?;
    let provenance = Provenance {
        basis,
        variants: choices.iter().map(|(v, _)| variant_name(*v)).collect(),
        t: choices.iter().map(|(_, t)| *t).collect(),
    };
    Ok(MeasurementFile::from_blocks(
        g.dim(),
        g.blocks(),
        Some(provenance),
    ))
}
