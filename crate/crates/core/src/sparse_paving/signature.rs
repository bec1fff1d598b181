use super::{CHFamily, SpError};
use crate::bits::{self, Mask};
use crate::comb::WeightedCompositions;

/// Cell sizes of the Venn diagram of an ordered family of `k` sets. Cell `I`
/// (a `k`-bit mask) counts the elements lying in exactly the sets indexed by `I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VennSignature {
    pub k: usize,
    pub cells: Vec<u32>,
}

impl VennSignature {
    pub fn new(k: usize, cells: Vec<u32>) -> Self {
        assert_eq!(
            cells.len(),
            1 << k,
            "a signature on {k} sets has 2^{k} cells"
        );
        VennSignature { k, cells }
    }

    /// Total number of elements.
    pub fn n(&self) -> usize {
        self.cells.iter().map(|&c| c as usize).sum()
    }

    /// Number of elements in set `i`.
    pub fn row_sum(&self, i: usize) -> usize {
        self.cells
            .iter()
            .enumerate()
            .filter(|&(m, _)| m & (1 << i) != 0)
            .map(|(_, &c)| c as usize)
            .sum()
    }

    /// Number of elements in set `i` but not in set `j`.
    pub fn one_sided(&self, i: usize, j: usize) -> usize {
        self.cells
            .iter()
            .enumerate()
            .filter(|&(m, _)| m & (1 << i) != 0 && m & (1 << j) == 0)
            .map(|(_, &c)| c as usize)
            .sum()
    }

    pub fn canonical(&self) -> VennSignature {
        VennSignature {
            k: self.k,
            cells: canonical_cells(&self.cells, self.k),
        }
    }
}

pub fn venn_signature(f: &CHFamily) -> VennSignature {
    let k = f.k();
    let mut cells = vec![0u32; 1 << k];
    for e in 0..f.n {
        let mut cell = 0usize;
        for (i, &c) in f.chs.iter().enumerate() {
            if c & bits::bit(e) != 0 {
                cell |= 1 << i;
            }
        }
        cells[cell] += 1;
    }
    VennSignature { k, cells }
}

/// Lexicographically least cell vector over all `k!` reorderings of the sets.
///
/// After fixing which original sets become new sets `0..=j`, the new cells
/// indexed by masks below `2^(j+1)` are determined, so comparison against the
/// best vector so far can proceed one block at a time.
pub fn canonical_cells<T: Ord + Copy>(cells: &[T], k: usize) -> Vec<T> {
    assert_eq!(cells.len(), 1 << k);
    let mut c = Canon {
        cells,
        k,
        best: cells.to_vec(),
        cur: cells.to_vec(),
        old: vec![0; 1 << k],
    };
    c.search(0, 0, false);
    c.best
}

struct Canon<'a, T> {
    cells: &'a [T],
    k: usize,
    best: Vec<T>,
    cur: Vec<T>,
    // old[new mask]: the corresponding mask in the original indexing.
    old: Vec<usize>,
}

impl<T: Ord + Copy> Canon<'_, T> {
    /// `less`: the prefix fixed so far is already smaller than `best`'s.
    /// Returns whether `best` was replaced.
    fn search(&mut self, depth: usize, used: usize, mut less: bool) -> bool {
        if depth == self.k {
            if less {
                self.best.copy_from_slice(&self.cur);
            }
            return less;
        }
        let half = 1usize << depth;
        let mut updated = false;
        for o in 0..self.k {
            if used & (1 << o) != 0 {
                continue;
            }
            for s in 0..half {
                let om = self.old[s] | (1 << o);
                self.old[s + half] = om;
                self.cur[s + half] = self.cells[om];
            }
            let child_less = less
                || match self.cur[half..2 * half].cmp(&self.best[half..2 * half]) {
                    std::cmp::Ordering::Greater => continue,
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Equal => false,
                };
            if self.search(depth + 1, used | (1 << o), child_less) {
                // best now shares this node's prefix.
                updated = true;
                less = false;
            }
        }
        updated
    }
}

pub fn canonical_signature(f: &CHFamily) -> VennSignature {
    venn_signature(f).canonical()
}

/// Isomorphism of the sparse paving matroids of two families: same rank, same
/// number of circuit-hyperplanes, and equal canonical signatures.
pub fn ch_isomorphic(f1: &CHFamily, f2: &CHFamily) -> Result<bool, SpError> {
    if f1.n != f2.n {
        return Err(SpError::GroundSizeMismatch(f1.n, f2.n));
    }
    if f1.k() != f2.k() || f1.rank != f2.rank {
        return Ok(false);
    }
    Ok(canonical_signature(f1) == canonical_signature(f2))
}

/// `(n, r)` if the signature comes from a valid family: every set has the same
/// size `r` with `1 <= r <= n - 1`, and each set has at least two elements
/// outside each other set.
pub fn signature_realizable(psi: &VennSignature) -> Option<(usize, usize)> {
    if psi.k == 0 {
        return None;
    }
    let n = psi.n();
    let r = psi.row_sum(0);
    if r == 0 || r >= n || (1..psi.k).any(|i| psi.row_sum(i) != r) {
        return None;
    }
    for i in 0..psi.k {
        for j in 0..psi.k {
            if i != j && psi.one_sided(i, j) < 2 {
                return None;
            }
        }
    }
    Some((n, r))
}

/// A family with the given signature, elements allocated cell by cell in
/// ascending mask order.
pub fn signature_witness(psi: &VennSignature) -> Option<CHFamily> {
    let (n, r) = signature_realizable(psi)?;
    if n > bits::MAX_GROUND {
        return None;
    }
    let mut chs: Vec<Mask> = vec![0; psi.k];
    let mut next = 0;
    for (cell, &count) in psi.cells.iter().enumerate() {
        for _ in 0..count {
            for (i, c) in chs.iter_mut().enumerate() {
                if cell & (1 << i) != 0 {
                    *c |= bits::bit(next);
                }
            }
            next += 1;
        }
    }
    Some(CHFamily { n, rank: r, chs })
}

/// Every signature on `k` sets with total `n`, in lexicographic cell order.
pub fn all_signatures(k: usize, n: usize) -> impl Iterator<Item = VennSignature> {
    WeightedCompositions::new(vec![1; 1 << k], n as u64)
        .map(move |cells| VennSignature { k, cells })
}
