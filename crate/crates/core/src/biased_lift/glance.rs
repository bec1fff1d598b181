use super::spike::HamiltonianLift;
use super::LiftError;
use crate::comb::WeightedCompositions;
use crate::sparse_paving::canonical_cells;

/// Isomorphism key for lifts of cycle graphs with at least five vertices and
/// at least two balanced Hamiltonian cycles: loop count, thin-edge count, and
/// the canonical truncated signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GlanceKey {
    pub p: usize,
    pub s: usize,
    pub sig: Vec<u32>,
}

/// Cells of the last cycle `picks[last]` split by the other cycles: the cell
/// indexed by `I` (bits over the other cycles in order) counts elements of the
/// last cycle lying in exactly the cycles of `I`. Thin edges lie in every cycle.
pub fn trun_cells(picks: &[u32], t: usize, s: usize, last: usize) -> Vec<u32> {
    let m = picks.len();
    let mut cells = vec![0u32; 1 << (m - 1)];
    for j in 0..t {
        let side = (picks[last] >> j) & 1;
        let mut cell = 0usize;
        for (idx, i) in (0..m).filter(|&i| i != last).enumerate() {
            if (picks[i] >> j) & 1 == side {
                cell |= 1 << idx;
            }
        }
        cells[cell] += 1;
    }
    cells[(1 << (m - 1)) - 1] += s as u32;
    cells
}

/// Least truncated cell vector over every ordering of the cycles.
pub fn canonical_trun(picks: &[u32], t: usize, s: usize) -> Vec<u32> {
    let m = picks.len();
    (0..m)
        .map(|last| canonical_cells(&trun_cells(picks, t, s, last), m - 1))
        .min()
        .expect("m >= 1")
}

fn check_hypotheses(d: &HamiltonianLift) -> Result<(), LiftError> {
    d.validate()?;
    if d.t + d.s < 5 || d.picks.len() < 2 {
        return Err(LiftError::HypothesisViolated {
            rank: d.t + d.s,
            cycles: d.picks.len(),
        });
    }
    Ok(())
}

pub fn glance_signature(d: &HamiltonianLift) -> Result<GlanceKey, LiftError> {
    check_hypotheses(d)?;
    Ok(GlanceKey {
        p: d.p,
        s: d.s,
        sig: canonical_trun(&d.picks, d.t, d.s),
    })
}

pub fn glance_isomorphic(d1: &HamiltonianLift, d2: &HamiltonianLift) -> Result<bool, LiftError> {
    Ok(glance_signature(d1)? == glance_signature(d2)?)
}

/// Pick vectors realizing truncated cells over `m - 1` cycles: the last cycle
/// takes `a` everywhere and the others take `a` exactly at the pairs of cells
/// containing them. Pairs are allocated cell by cell in ascending order.
pub fn picks_from_cells(cells: &[u32], m: usize) -> Vec<u32> {
    let mut picks = vec![0u32; m];
    let mut j = 0;
    for (cell, &count) in cells.iter().enumerate() {
        for _ in 0..count {
            for (i, p) in picks.iter_mut().enumerate().take(m - 1) {
                if cell & (1 << i) == 0 {
                    *p |= 1 << j;
                }
            }
            j += 1;
        }
    }
    picks.sort_unstable();
    picks
}

/// Whether truncated cells over `m - 1` cycles describe cycles pairwise
/// differing in at least two pairs.
pub fn trun_cells_linear(cells: &[u32], m: usize) -> bool {
    let k = m - 1;
    let sum = |pred: &dyn Fn(usize) -> bool| -> u32 {
        cells
            .iter()
            .enumerate()
            .filter(|&(c, _)| pred(c))
            .map(|(_, &v)| v)
            .sum()
    };
    for i in 0..k {
        if sum(&|c| c & (1 << i) == 0) < 2 {
            return false;
        }
        for j in i + 1..k {
            if sum(&|c| ((c >> i) ^ (c >> j)) & 1 == 1) < 2 {
                return false;
            }
        }
    }
    true
}

/// Number of truncated cell vectors that would be visited when enumerating
/// `m`-cycle families on `r` elements.
pub(crate) fn trun_enumeration_size(r: usize, m: usize) -> u128 {
    crate::comb::stars_and_bars(r as u64, 1u64 << (m - 1))
}

/// Canonical truncated cell vectors over `m - 1` cycles with total `r` that
/// describe linear families, ascending.
pub(crate) fn canonical_trun_vectors(r: usize, m: usize) -> Vec<Vec<u32>> {
    assert!(m >= 2);
    WeightedCompositions::new(vec![1; 1 << (m - 1)], r as u64)
        .filter(|cells| trun_cells_linear(cells, m))
        .filter(|cells| {
            let picks = picks_from_cells(cells, m);
            canonical_trun(&picks, r, 0) == *cells
        })
        .collect()
}

/// One pick family per orbit of `m`-element linear families on `t` pairs under
/// flipping pairs and permuting pairs.
pub fn canonical_pick_families(t: usize, m: usize) -> Vec<Vec<u32>> {
    match m {
        0 => vec![vec![]],
        1 => vec![vec![0]],
        _ => canonical_trun_vectors(t, m)
            .iter()
            .map(|c| picks_from_cells(c, m))
            .collect(),
    }
}
