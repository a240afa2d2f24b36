use alloc::vec::Vec;

use super::probability::{c_max, index_of_coincidence, ProbabilityTable};
use crate::error::Result;
use crate::measurement::GeneralizedSymmetricMeasurement;

/// Slack allowed in the entropy inequalities.
pub const ENTROPY_TOLERANCE: f64 = 1e-10;

/// State-independent lower bound `log(N/C_max)` on the mean Shannon entropy.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EurBound {
    pub n_povms: usize,
    pub c_max: f64,
    pub nats: f64,
    pub bits: f64,
}

pub fn eur_bound(g: &GeneralizedSymmetricMeasurement) -> Result<EurBound> {
    let c = c_max(g)?;
    let nats = libm::log(g.n_povms() as f64 / c);
    Ok(EurBound {
        n_povms: g.n_povms(),
        c_max: c,
        nats,
        bits: nats / core::f64::consts::LN_2,
    })
}

/// Per-block Shannon and Rényi-2 entropies with the inequality chain
/// `mean H ≥ mean R ≥ log(N/C)`.
#[derive(Clone, Debug, PartialEq)]
pub struct EntropyReport {
    pub shannon: Vec<f64>,
    pub renyi2: Vec<f64>,
    pub mean_shannon: f64,
    pub coincidence: f64,
    /// `log(N/C(ρ))`.
    pub state_bound: f64,
    /// `H ≥ R` on every block.
    pub shannon_dominates_renyi: bool,
    /// `mean H ≥ log(N/C(ρ))`.
    pub above_state_bound: bool,
}

pub fn shannon_renyi_check(t: &ProbabilityTable) -> EntropyReport {
    let n = t.n_blocks();
    let shannon: Vec<f64> = (0..n).map(|a| t.shannon(a)).collect();
    let renyi2: Vec<f64> = (0..n).map(|a| t.renyi2(a)).collect();
    let mean_shannon = shannon.iter().sum::<f64>() / n as f64;
    let coincidence = index_of_coincidence(t);
    let state_bound = libm::log(n as f64 / coincidence);
    EntropyReport {
        shannon_dominates_renyi: shannon
            .iter()
            .zip(&renyi2)
            .all(|(h, r)| *h >= r - ENTROPY_TOLERANCE),
        above_state_bound: mean_shannon >= state_bound - ENTROPY_TOLERANCE,
        shannon,
        renyi2,
        mean_shannon,
        coincidence,
        state_bound,
    }
}
