//! State reconstruction, coincidence and entropy bounds, and bipartite
//! separability screening.
//!
//! Entropies are in nats unless a name says otherwise; `0 · log 0 = 0`.

mod entropy;
mod frame;
mod probability;
mod separability;

pub use entropy::{eur_bound, shannon_renyi_check, EntropyReport, EurBound, ENTROPY_TOLERANCE};
pub use frame::{dual_frame, DualFrame};
pub use probability::{
    c_max, index_of_coincidence, probabilities, purity_from_coincidence, purity_from_probabilities,
    ProbabilityTable,
};
pub use separability::{
    correlation_matrix, separability_test, BoundCheck, CorrelationMatrix, SeparabilityReport,
    Verdict,
};
