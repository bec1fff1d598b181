use super::{in_pk, signature_witness, CHFamily, SpError, VennSignature};
use crate::sparse_paving::signature::canonical_cells;
use rayon::prelude::*;

pub const MAX_CENSUS_BOUND: usize = 6;
pub const MAX_EXMINOR_BOUND: usize = 5;
pub const MAX_EXMINOR_SIZE: usize = 16;

/// Number of isomorphism classes of `n`-element matroids with exactly `m`
/// circuit-hyperplanes, in the census for bound `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub count: u128,
}

/// Canonical signatures of `m`-member families of `r`-subsets of an `n`-set,
/// sorted. With `band = Some(k)` only families where every element lies in
/// between `m - k` and `k` members are produced.
///
/// Families are grown one member at a time. Every prefix of a valid family is
/// valid, and the canonical form of a level is reached from any ordering of its
/// prefix, so deduplicating each level by canonical form loses nothing.
pub(crate) fn canonical_family_signatures(
    n: usize,
    r: usize,
    m: usize,
    band: Option<usize>,
) -> Vec<Vec<u8>> {
    assert!(n <= u8::MAX as usize);
    if m == 0 || r == 0 || r >= n || (m >= 2 && (r < 2 || n - r < 2)) {
        return Vec::new();
    }
    // An element in d members after `level` of them are placed can still end
    // with a degree in [m - k, k].
    let allowed = |level: usize, d: usize| match band {
        Some(k) => d <= k && d + k >= level,
        None => true,
    };
    if !allowed(1, 1) || (n > r && !allowed(1, 0)) {
        return Vec::new();
    }
    let mut level: Vec<Vec<u8>> = vec![vec![(n - r) as u8, r as u8]];
    for i in 1..m {
        let mut next: Vec<Vec<u8>> = level
            .par_iter()
            .flat_map_iter(|psi| {
                let mut out = Vec::new();
                extend(psi, i, r, &|d| allowed(i + 1, d), &mut out);
                out
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        level = next;
        if level.is_empty() {
            break;
        }
    }
    level
}

/// All ways to add member `i` (of size `r`) to a family with signature `psi`
/// on `i` members, canonicalized.
fn extend(psi: &[u8], i: usize, r: usize, allowed: &dyn Fn(usize) -> bool, out: &mut Vec<Vec<u8>>) {
    let cells = psi.len();
    // Bounds on how many elements of each cell join the new member.
    let mut lo = vec![0u8; cells];
    let mut hi = vec![0u8; cells];
    for cell in 0..cells {
        let d = cell.count_ones() as usize;
        let stay_ok = allowed(d);
        let join_ok = allowed(d + 1);
        match (stay_ok, join_ok) {
            (true, true) => hi[cell] = psi[cell],
            (false, true) => {
                lo[cell] = psi[cell];
                hi[cell] = psi[cell];
            }
            (true, false) => {}
            (false, false) => {
                if psi[cell] > 0 {
                    return;
                }
            }
        }
    }
    // suffix_hi[c]: most that cells c.. can contribute.
    let mut suffix_hi = vec![0usize; cells + 1];
    let mut suffix_lo = vec![0usize; cells + 1];
    for c in (0..cells).rev() {
        suffix_hi[c] = suffix_hi[c + 1] + hi[c] as usize;
        suffix_lo[c] = suffix_lo[c + 1] + lo[c] as usize;
    }
    let mut choice = vec![0u8; cells];
    // shared[j]: elements chosen so far that already lie in member j.
    let mut shared = vec![0usize; i];
    let ctx = Ext {
        psi,
        i,
        r,
        lo: &lo,
        hi: &hi,
        suffix_lo: &suffix_lo,
        suffix_hi: &suffix_hi,
    };
    ctx.search(0, r, &mut choice, &mut shared, out);
}

struct Ext<'a> {
    psi: &'a [u8],
    i: usize,
    r: usize,
    lo: &'a [u8],
    hi: &'a [u8],
    suffix_lo: &'a [usize],
    suffix_hi: &'a [usize],
}

impl Ext<'_> {
    fn search(
        &self,
        cell: usize,
        rest: usize,
        choice: &mut [u8],
        shared: &mut [usize],
        out: &mut Vec<Vec<u8>>,
    ) {
        if cell == self.psi.len() {
            if rest == 0 {
                let mut next = vec![0u8; 2 * self.psi.len()];
                for c in 0..self.psi.len() {
                    next[c] = self.psi[c] - choice[c];
                    next[c | (1 << self.i)] = choice[c];
                }
                out.push(canonical_cells(&next, self.i + 1));
            }
            return;
        }
        if rest < self.suffix_lo[cell] || rest > self.suffix_hi[cell] {
            return;
        }
        let lo = self.lo[cell] as usize;
        let hi = (self.hi[cell] as usize).min(rest);
        for v in lo..=hi {
            // Sharing more than r - 2 elements with an earlier member is not allowed.
            let mut ok = true;
            for (j, s) in shared.iter().enumerate() {
                if cell & (1 << j) != 0 && s + v > self.r - 2 {
                    ok = false;
                }
            }
            if !ok {
                break;
            }
            for (j, s) in shared.iter_mut().enumerate() {
                if cell & (1 << j) != 0 {
                    *s += v;
                }
            }
            choice[cell] = v as u8;
            self.search(cell + 1, rest - v, choice, shared, out);
            for (j, s) in shared.iter_mut().enumerate() {
                if cell & (1 << j) != 0 {
                    *s -= v;
                }
            }
        }
        choice[cell] = 0;
    }
}

/// Isomorphism classes of `n`-element sparse paving matroids with at most `k`
/// circuit-hyperplanes, one row per exact count `m = 0..=k`.
pub fn census_pk(n: usize, k: usize) -> Result<Vec<CensusRow>, SpError> {
    if k > MAX_CENSUS_BOUND {
        return Err(SpError::BoundTooLarge(k));
    }
    if n > u8::MAX as usize {
        return Err(SpError::TooLarge(n));
    }
    let mut rows = vec![CensusRow {
        n,
        k,
        m: 0,
        count: n as u128 + 1,
    }];
    for m in 1..=k {
        let count = (1..n)
            .map(|r| canonical_family_signatures(n, r, m, None).len() as u128)
            .sum();
        rows.push(CensusRow { n, k, m, count });
    }
    Ok(rows)
}

/// Sparse paving excluded minors for the class with at most `k`
/// circuit-hyperplanes, one family per isomorphism class, ordered by rank,
/// member count and canonical signature.
///
/// Candidates have between `k + 1` and `2k` members with every element in
/// between `m - k` and `k` of them; each is confirmed by the matroid-level
/// excluded-minor check.
pub fn sp_excluded_minors(n: usize, k: usize) -> Result<Vec<CHFamily>, SpError> {
    if k == 0 || k > MAX_EXMINOR_BOUND {
        return Err(SpError::BoundTooLarge(k));
    }
    if n > MAX_EXMINOR_SIZE {
        return Err(SpError::TooLarge(n));
    }
    let mut candidates: Vec<VennSignature> = Vec::new();
    for r in 2..=n.saturating_sub(2) {
        for m in k + 1..=2 * k {
            for cells in canonical_family_signatures(n, r, m, Some(k)) {
                candidates.push(VennSignature::new(
                    m,
                    cells.into_iter().map(u32::from).collect(),
                ));
            }
        }
    }
    let confirmed: Vec<Option<CHFamily>> = candidates
        .par_iter()
        .map(|psi| {
            let f = signature_witness(psi).expect("engine signatures are realizable");
            let m = f.to_matroid().expect("validated family");
            m.is_excluded_minor(|x| in_pk(x, k)).then_some(f)
        })
        .collect();
    Ok(confirmed.into_iter().flatten().collect())
}
