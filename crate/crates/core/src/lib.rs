//! Census machinery for two fractal minor-closed matroid classes: sparse
//! paving matroids with at most `k` circuit-hyperplanes, and minors of spikes
//! with at most `k` balanced Hamiltonian cycles.
//!
//! * [`kernel`] is the brute-force matroid oracle everything else is checked
//!   against.
//! * [`sparse_paving`] works with circuit-hyperplane families and their
//!   Venn-cell signatures.
//! * [`biased_lift`] builds lift matroids of small biased graphs, spikes and the
//!   six structural categories of spike minors.
//! * [`census`] turns the counts into boundary-ratio tables and slope fits.
//! * [`io`] reads and writes the JSON and CSV formats.

pub mod biased_lift;
pub mod bits;
pub mod census;
pub mod comb;
pub mod io;
pub mod kernel;
pub mod sparse_paving;

pub use bits::Mask;
pub use kernel::{IsoInvariant, KernelError, Matroid, RankTable, RankedFlat, SetFamily};
