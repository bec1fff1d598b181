use super::category::CategoryIndex;
use super::spike::{picks_linear, SpikeSpec};
use super::LiftError;
use crate::bits::{self, Mask};
use crate::comb::{stars_and_bars, WeightedCompositions};
use crate::sparse_paving::CompositionSolution;

/// Largest spike ground set verified against the full category census.
pub const FULL_VERIFY_LIMIT: usize = 14;

/// Index sets `I` of `{0..k-1}` with `1 <= |I| <= k - 2`, ascending by mask.
pub fn bottom_variables(k: usize) -> Vec<Mask> {
    (1..bits::full(k))
        .filter(|&m| bits::size(m) + 2 <= k)
        .collect()
}

fn bottom_target(t: usize, k: usize) -> Result<u64, LiftError> {
    if k < 2 {
        return Err(LiftError::BoundOutOfRange(k));
    }
    let min = 2 * (k + 1);
    if t < min {
        return Err(LiftError::TooSmall { t, min });
    }
    Ok((t - min) as u64)
}

/// Solutions of `sum_I x_I = t - 2(k+1)`, lexicographic in the order of
/// [`bottom_variables`].
pub fn bottom_solutions(
    t: usize,
    k: usize,
) -> Result<impl Iterator<Item = CompositionSolution>, LiftError> {
    let target = bottom_target(t, k)?;
    let sets = bottom_variables(k);
    let inner = WeightedCompositions::new(vec![1; sets.len()], target);
    Ok(inner.map(move |values| CompositionSolution {
        sets: sets.clone(),
        values,
    }))
}

pub fn bottom_solution_count(t: usize, k: usize) -> Result<u128, LiftError> {
    let target = bottom_target(t, k)?;
    Ok(stars_and_bars(target, bottom_variables(k).len() as u64))
}

/// A spike with `k + 1` balanced Hamiltonian cycles that is an excluded minor
/// for minors of spikes with at most `k` balanced Hamiltonian cycles.
///
/// Pairs are split into cells `D(I)` over `k` sets: two pairs in `D({})`, two
/// in each `D(all - i)`, and `phi(I)` in `D(I)`, numbered in that order. The
/// last cycle takes `a` at every pair; cycle `i < k` takes `a_j` when pair `j`
/// lies in `D_i` and `b_j` otherwise.
pub fn bottom_construct(
    phi: &CompositionSolution,
    t: usize,
    k: usize,
) -> Result<SpikeSpec, LiftError> {
    let target = bottom_target(t, k)?;
    let sets = bottom_variables(k);
    if phi.sets != sets || phi.values.len() != sets.len() {
        return Err(LiftError::NotASolution);
    }
    if phi.values.iter().map(|&v| u64::from(v)).sum::<u64>() != target {
        return Err(LiftError::NotASolution);
    }
    if t > 31 {
        return Err(LiftError::TooLarge(2 * t));
    }
    // cell_of[j]: the D-cell of pair j.
    let mut cell_of: Vec<Mask> = Vec::with_capacity(t);
    cell_of.extend([0, 0]);
    for i in 0..k {
        let c = bits::full(k) & !bits::bit(i);
        cell_of.extend([c, c]);
    }
    for (&set, &v) in sets.iter().zip(&phi.values) {
        cell_of.extend(std::iter::repeat_n(set, v as usize));
    }
    let mut picks = vec![0u32];
    for i in 0..k {
        let mut h = 0u32;
        for (j, &c) in cell_of.iter().enumerate() {
            if c & bits::bit(i) == 0 {
                h |= 1 << j;
            }
        }
        picks.push(h);
    }
    SpikeSpec::new(t, picks)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// Matroid-level excluded-minor check with category-census membership.
    Full,
    /// Checks on the pick incidence structure only.
    Structural,
}

/// Whether the spike is an excluded minor for the class with at most `k`
/// balanced Hamiltonian cycles.
///
/// Structural mode requires at least five pairs (so circuit-hyperplanes are
/// exactly the balanced cycles), more than `k` cycles pairwise differing in
/// two pairs, and every element in between `m - k` and `k` of the `m` cycles,
/// so that each deletion and contraction keeps at most `k` of them.
pub fn verify_sk_excluded_minor(
    spec: &SpikeSpec,
    k: usize,
    mode: VerifyMode,
) -> Result<bool, LiftError> {
    spec.validate()?;
    match mode {
        VerifyMode::Full => {
            let n = spec.n();
            if n > FULL_VERIFY_LIMIT {
                return Err(LiftError::TooLargeForFull(n));
            }
            let m = spec.matroid()?;
            let here = CategoryIndex::new(n, k)?;
            if here.categorize(&m).is_some() {
                return Ok(false);
            }
            let below = CategoryIndex::new(n - 1, k)?;
            Ok((0..n).all(|e| {
                below.categorize(&m.delete(e)).is_some()
                    && below.categorize(&m.contract(e)).is_some()
            }))
        }
        VerifyMode::Structural => {
            let m = spec.picks.len();
            if spec.t < 5 || m <= k || !picks_linear(&spec.picks) {
                return Ok(false);
            }
            Ok((0..spec.n()).all(|e| {
                let d = spec.degree(e);
                d + k >= m && d <= k
            }))
        }
    }
}
