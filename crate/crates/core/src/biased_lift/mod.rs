//! Lift matroids of biased graphs in a small class of graphs, spikes, and the
//! class of minors of spikes with at most `k` balanced Hamiltonian cycles.

pub mod bottom;
pub mod category;
pub mod census;
pub mod glance;
pub mod graph;
pub mod spike;

pub use bottom::{
    bottom_construct, bottom_solution_count, bottom_solutions, bottom_variables,
    verify_sk_excluded_minor, VerifyMode, FULL_VERIFY_LIMIT,
};
pub use category::{
    camera_fixtures, categorize, category_members, Category, CategoryIndex, CategoryMember,
    Construction,
};
pub use census::{census_sk_exact, census_sk_strata, sk_excluded_minors, CountMode, StrataRow};
pub use glance::{
    canonical_pick_families, canonical_trun, glance_isomorphic, glance_signature, trun_cells,
    GlanceKey,
};
pub use graph::{
    graphic, lift_from_contraction, lift_matroid, lift_rank_formula, move_to_end, GGraph,
    GraphKind, LinearClass,
};
pub use spike::{
    dual_picks, duality_check, picks_linear, spike, spike_cyclic_flats, HamiltonianLift, SpikeSpec,
};

use crate::kernel::KernelError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LiftError {
    #[error("graph {0:?} is not in the class")]
    InvalidGraph(GGraph),
    #[error("ground set of {0} elements is too large")]
    TooLarge(usize),
    #[error("invalid set of balanced cycles: {0}")]
    InvalidLinearClass(String),
    #[error("contraction is not the cycle matroid of the given graph")]
    PremiseViolated,
    #[error("signature needs rank at least 5 and at least two balanced cycles (rank {rank}, {cycles} cycles)")]
    HypothesisViolated { rank: usize, cycles: usize },
    #[error("bound {0} is out of range")]
    BoundOutOfRange(usize),
    #[error("t = {t} is below the minimum {min}")]
    TooSmall { t: usize, min: usize },
    #[error("assignment does not solve the cell equation")]
    NotASolution,
    #[error("full verification is limited to 14 elements, got {0}")]
    TooLargeForFull(usize),
    #[error("exact census is limited to {limit} elements, got {n}")]
    TooLargeForExact { n: usize, limit: usize },
    #[error("strata counts are defined for even sizes only, got {0}")]
    OddSize(usize),
    #[error("enumeration of {0} cell vectors exceeds the budget")]
    BudgetExceeded(u128),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}
