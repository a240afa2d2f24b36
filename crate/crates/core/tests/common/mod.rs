#![allow(dead_code)]

use gsm_core::algebra::random::seeded_rng;
use gsm_core::basis::partition_basis;
use gsm_core::basis::random_partition as rotated_partition;
use gsm_core::construction::{max_common_r, t_for_r, Sign, VariantTag};
use gsm_core::measurement::construct_gsm;
use gsm_core::{gell_mann_basis, BasisPartition, GeneralizedSymmetricMeasurement};
use rand::Rng;

/// Random composition of `d² − 1` into block sizes `M_α ≥ 2`.
pub fn full_sizes<R: Rng>(d: usize, rng: &mut R) -> Vec<usize> {
    let mut left = d * d - 1;
    let mut sizes = Vec::new();
    while left > 0 {
        let take = rng.random_range(1..=left.min(d * d - 1));
        sizes.push(take + 1);
        left -= take;
    }
    sizes
}

pub fn random_variant<R: Rng>(rng: &mut R) -> VariantTag {
    VariantTag::ALL[rng.random_range(0..4)]
}

pub fn random_full_partition(d: usize, seed: u64) -> BasisPartition {
    let mut rng = seeded_rng(seed);
    let sizes = full_sizes(d, &mut rng);
    rotated_partition(d, &sizes, &mut rng).unwrap()
}

/// r-class measurement with random variants at `frac` of the largest common r.
pub fn random_r_class(d: usize, seed: u64, frac: f64) -> GeneralizedSymmetricMeasurement {
    let mut rng = seeded_rng(seed);
    let sizes = full_sizes(d, &mut rng);
    let p = rotated_partition(d, &sizes, &mut rng).unwrap();
    let variants: Vec<VariantTag> = (0..sizes.len()).map(|_| random_variant(&mut rng)).collect();
    let r = frac * max_common_r(&p, &variants).unwrap();
    let choices: Vec<_> = variants
        .iter()
        .zip(&sizes)
        .map(|(&v, &m)| (v, t_for_r(r, m, v)))
        .collect();
    construct_gsm(&p, &choices, 1e-9).unwrap()
}

/// Measurement with independent random strengths per block (generally not
/// in any symmetry class).
pub fn random_gsm(d: usize, seed: u64) -> GeneralizedSymmetricMeasurement {
    let mut rng = seeded_rng(seed);
    let sizes = full_sizes(d, &mut rng);
    let p = rotated_partition(d, &sizes, &mut rng).unwrap();
    let choices: Vec<_> = (0..sizes.len())
        .map(|alpha| {
            let v = random_variant(&mut rng);
            let range = gsm_core::construction::block_t_range(&p, alpha, v.primed).unwrap();
            (v, rng.random_range(0.1..1.0) * range.extreme(v.sign))
        })
        .collect();
    construct_gsm(&p, &choices, 1e-9).unwrap()
}

/// Canonical (Gell-Mann, first-fit) r-class measurement with unprimed `t > 0`.
pub fn canonical_r_class(d: usize, sizes: &[usize], r: f64) -> GeneralizedSymmetricMeasurement {
    let p = partition_basis(&gell_mann_basis(d).unwrap(), sizes).unwrap();
    let v = VariantTag::new(false, Sign::Plus);
    let choices: Vec<_> = sizes.iter().map(|&m| (v, t_for_r(r, m, v))).collect();
    construct_gsm(&p, &choices, 1e-9).unwrap()
}
