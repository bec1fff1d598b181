use super::{CHFamily, SpError};
use crate::bits::{self, Mask};
use crate::comb::{count_weighted_compositions, WeightedCompositions};

/// A non-negative value for each variable `x_I` of a composition equation,
/// where the index sets `I` are listed in ascending mask order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompositionSolution {
    pub sets: Vec<Mask>,
    pub values: Vec<u32>,
}

impl CompositionSolution {
    pub fn get(&self, set: Mask) -> Option<u32> {
        self.sets
            .iter()
            .position(|&s| s == set)
            .map(|i| self.values[i])
    }
}

/// Index sets `I` of `{0..=k}` with `2 <= |I| <= k`, ascending by mask.
pub fn collar_variables(k: usize) -> Vec<Mask> {
    (0..=bits::full(k + 1))
        .filter(|&m| (2..=k).contains(&bits::size(m)))
        .collect()
}

fn collar_weights(k: usize, sets: &[Mask]) -> Vec<u32> {
    sets.iter()
        .map(|&s| (k + 2 - bits::size(s)) as u32)
        .collect()
}

fn collar_target(n: usize, k: usize) -> Result<u64, SpError> {
    let min = 2 * (k + 1);
    if n < min {
        return Err(SpError::TooSmall { n, min });
    }
    Ok((n - min) as u64)
}

/// Solutions of `sum_I (k + 2 - |I|) x_I = n - 2(k+1)`, lexicographic in the
/// variable order of [`collar_variables`].
pub struct CollarSolutions {
    sets: Vec<Mask>,
    inner: WeightedCompositions,
}

impl Iterator for CollarSolutions {
    type Item = CompositionSolution;

    fn next(&mut self) -> Option<CompositionSolution> {
        let values = self.inner.next()?;
        Some(CompositionSolution {
            sets: self.sets.clone(),
            values,
        })
    }
}

pub fn collar_solutions(n: usize, k: usize) -> Result<CollarSolutions, SpError> {
    let target = collar_target(n, k)?;
    let sets = collar_variables(k);
    let inner = WeightedCompositions::new(collar_weights(k, &sets), target);
    Ok(CollarSolutions { sets, inner })
}

pub fn collar_solution_count(n: usize, k: usize) -> Result<u128, SpError> {
    let target = collar_target(n, k)?;
    Ok(count_weighted_compositions(
        &collar_weights(k, &collar_variables(k)),
        target,
    ))
}

/// Builds a `(k+1)`-member family whose matroid is an excluded minor for the
/// class of sparse paving matroids with at most `k` circuit-hyperplanes.
///
/// Two elements go to each singleton cell. Then for each index set `I`, `phi(I)`
/// elements go to cell `I` and `phi(I)` more to each singleton cell `{i}` with
/// `i` outside `I`, so every set grows by `phi(I)`. Elements are numbered in
/// allocation order.
pub fn collar_construct(
    phi: &CompositionSolution,
    n: usize,
    k: usize,
) -> Result<CHFamily, SpError> {
    if k == 0 {
        return Err(SpError::BoundTooLarge(k));
    }
    let target = collar_target(n, k)?;
    let sets = collar_variables(k);
    if phi.sets != sets || phi.values.len() != sets.len() {
        return Err(SpError::NotASolution);
    }
    let weights = collar_weights(k, &sets);
    let total: u64 = phi
        .values
        .iter()
        .zip(&weights)
        .map(|(&v, &w)| u64::from(v) * u64::from(w))
        .sum();
    if total != target {
        return Err(SpError::NotASolution);
    }
    if n > bits::MAX_GROUND {
        return Err(SpError::TooLarge(n));
    }
    let mut chs: Vec<Mask> = vec![0; k + 1];
    let mut next = 0usize;
    let mut place = |cell: Mask, count: u32, chs: &mut Vec<Mask>| {
        for _ in 0..count {
            for i in bits::elements(cell) {
                chs[i] |= bits::bit(next);
            }
            next += 1;
        }
    };
    for i in 0..=k {
        place(bits::bit(i), 2, &mut chs);
    }
    for (&set, &v) in sets.iter().zip(&phi.values) {
        place(set, v, &mut chs);
        for i in bits::elements(bits::full(k + 1) & !set) {
            place(bits::bit(i), v, &mut chs);
        }
    }
    let rank = 2 + phi.values.iter().map(|&v| v as usize).sum::<usize>();
    CHFamily::new(n, rank, chs)
}
