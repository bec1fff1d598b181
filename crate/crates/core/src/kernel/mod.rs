//! Ground-truth matroid oracle over small ground sets.
//!
//! A [`Matroid`] is stored as its basis family; every other notion (rank,
//! circuits, flats, minors, isomorphism) is derived from the bases. Ground
//! sets are capped at [`MAX_GROUND`] elements so that a full rank table over
//! all subsets fits in memory.

mod iso;
mod minor;
mod structure;
pub(crate) mod table;

use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::bits::{self, Mask, MAX_GROUND};

pub use iso::IsoInvariant;
pub use table::RankTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("ground set of size {0} exceeds the limit of {MAX_GROUND}")]
    TooLarge(usize),
    #[error("basis family is empty")]
    EmptyBases,
    #[error("bases have different cardinalities ({0} and {1})")]
    NonEquicardinal(usize, usize),
    #[error("basis exchange fails: no y in B2-B1 with (B1-{x})+y a basis (B1={b1:?}, B2={b2:?})")]
    ExchangeViolation {
        b1: Vec<usize>,
        b2: Vec<usize>,
        x: usize,
    },
    #[error("rank {rank} out of range for ground set of size {n}")]
    RankOutOfRange { rank: usize, n: usize },
    #[error("set {0:?} is not contained in the ground set")]
    OutOfRange(Vec<usize>),
    #[error("delete and contract sets overlap in {0:?}")]
    OverlappingSets(Vec<usize>),
    #[error("direct sum would have {0} elements")]
    SizeOverflow(usize),
    #[error("matroid has rank zero")]
    RankZero,
}

/// A matroid on `{0, .., n-1}` given by its bases.
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<Mask>,
    table: OnceLock<Arc<RankTable>>,
}

impl Clone for Matroid {
    fn clone(&self) -> Self {
        let table = OnceLock::new();
        if let Some(t) = self.table.get() {
            let _ = table.set(Arc::clone(t));
        }
        Matroid {
            n: self.n,
            rank: self.rank,
            bases: self.bases.clone(),
            table,
        }
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rank == other.rank && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl std::hash::Hash for Matroid {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.rank.hash(state);
        self.bases.hash(state);
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.n)
            .field("rank", &self.rank)
            .field("bases", &self.bases.len())
            .finish()
    }
}

impl Matroid {
    /// Validates a basis family and builds the matroid.
    ///
    /// Runs the full basis-exchange check, so this is quadratic in the number
    /// of bases. Internal constructions whose output is a matroid by
    /// construction go through [`Matroid::from_bases_unchecked`] instead.
    pub fn new<I: IntoIterator<Item = Mask>>(n: usize, bases: I) -> Result<Self, KernelError> {
        if n > MAX_GROUND {
            return Err(KernelError::TooLarge(n));
        }
        let mut bases: Vec<Mask> = bases.into_iter().collect();
        bases.sort_unstable();
        bases.dedup();
        let first = *bases.first().ok_or(KernelError::EmptyBases)?;
        let rank = bits::size(first);
        let ground = bits::full(n);
        for &b in &bases {
            if b & !ground != 0 {
                return Err(KernelError::OutOfRange(bits::to_vec(b)));
            }
            if bits::size(b) != rank {
                return Err(KernelError::NonEquicardinal(rank, bits::size(b)));
            }
        }
        check_exchange(n, &bases)?;
        Ok(Self::from_parts(n, rank, bases))
    }

    /// Builds a matroid from a family already known to satisfy the axioms.
    /// The family is sorted and deduplicated.
    pub fn from_bases_unchecked(n: usize, mut bases: Vec<Mask>) -> Self {
        bases.sort_unstable();
        bases.dedup();
        debug_assert!(!bases.is_empty());
        let rank = bits::size(bases[0]);
        Self::from_parts(n, rank, bases)
    }

    fn from_parts(n: usize, rank: usize, bases: Vec<Mask>) -> Self {
        Matroid {
            n,
            rank,
            bases,
            table: OnceLock::new(),
        }
    }

    pub fn uniform(rank: usize, n: usize) -> Result<Self, KernelError> {
        if n > MAX_GROUND {
            return Err(KernelError::TooLarge(n));
        }
        if rank > n {
            return Err(KernelError::RankOutOfRange { rank, n });
        }
        Ok(Self::from_parts(
            n,
            rank,
            bits::combinations(n, rank).collect(),
        ))
    }

    /// Direct sum; the elements of `other` are shifted up by `self.n()`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Self, KernelError> {
        let n = self.n + other.n;
        if n > MAX_GROUND {
            return Err(KernelError::SizeOverflow(n));
        }
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &a in &self.bases {
            for &b in &other.bases {
                bases.push(a | (b << self.n));
            }
        }
        Ok(Self::from_bases_unchecked(n, bases))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn corank(&self) -> usize {
        self.n - self.rank
    }

    pub fn ground(&self) -> Mask {
        bits::full(self.n)
    }

    /// Bases in ascending mask order.
    pub fn bases(&self) -> &[Mask] {
        &self.bases
    }

    pub fn is_basis(&self, b: Mask) -> bool {
        self.bases.binary_search(&b).is_ok()
    }

    /// Rank of `x`: the largest intersection of `x` with a basis.
    pub fn rank_of(&self, x: Mask) -> Result<usize, KernelError> {
        if x & !self.ground() != 0 {
            return Err(KernelError::OutOfRange(bits::to_vec(x)));
        }
        if let Some(t) = self.table.get() {
            return Ok(t.rank(x));
        }
        let mut best = 0;
        for &b in &self.bases {
            best = best.max(bits::size(b & x));
            if best == self.rank || best == bits::size(x) {
                break;
            }
        }
        Ok(best)
    }

    /// The rank function over every subset, built on first use.
    pub fn table(&self) -> &RankTable {
        self.table
            .get_or_init(|| Arc::new(RankTable::from_bases(self.n, self.rank, &self.bases)))
    }

    pub fn dual(&self) -> Matroid {
        let g = self.ground();
        Self::from_bases_unchecked(self.n, self.bases.iter().map(|&b| g & !b).collect())
    }

    /// Number of bases containing each element.
    pub fn basis_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &b in &self.bases {
            for e in bits::elements(b) {
                deg[e] += 1;
            }
        }
        deg
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.bases.iter().all(|&b| b & bits::bit(e) == 0)
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.bases.iter().all(|&b| b & bits::bit(e) != 0)
    }

    /// Applies a relabelling `perm[old] = new` of the ground set.
    pub fn relabel(&self, perm: &[usize]) -> Matroid {
        assert_eq!(perm.len(), self.n);
        let map = |b: Mask| bits::elements(b).fold(0, |acc, e| acc | bits::bit(perm[e]));
        Self::from_bases_unchecked(self.n, self.bases.iter().map(|&b| map(b)).collect())
    }
}

/// Basis exchange: for all `B1`, `B2` and `x` in `B1 - B2` some `y` in
/// `B2 - B1` makes `(B1 - x) + y` a basis.
fn check_exchange(n: usize, bases: &[Mask]) -> Result<(), KernelError> {
    let contains = |m: Mask| bases.binary_search(&m).is_ok();
    let ground = bits::full(n);
    for &b1 in bases {
        // partners[x] = elements y outside b1 with (b1 - x) + y a basis
        let mut partners = [0 as Mask; 32];
        for x in bits::elements(b1) {
            let base = b1 & !bits::bit(x);
            for y in bits::elements(ground & !b1) {
                if contains(base | bits::bit(y)) {
                    partners[x] |= bits::bit(y);
                }
            }
        }
        for &b2 in bases {
            let out = b2 & !b1;
            for x in bits::elements(b1 & !b2) {
                if partners[x] & out == 0 {
                    return Err(KernelError::ExchangeViolation {
                        b1: bits::to_vec(b1),
                        b2: bits::to_vec(b2),
                        x,
                    });
                }
            }
        }
    }
    Ok(())
}

/// A family of subsets of `{0, .., n-1}`, sorted ascending and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    pub n: usize,
    pub members: Vec<Mask>,
}

impl SetFamily {
    pub fn new(n: usize, mut members: Vec<Mask>) -> Self {
        members.sort_unstable();
        members.dedup();
        SetFamily { n, members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: Mask) -> bool {
        self.members.binary_search(&m).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Mask> + '_ {
        self.members.iter().copied()
    }
}

/// A flat together with its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankedFlat {
    pub flat: Mask,
    pub rank: usize,
}
