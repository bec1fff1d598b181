//! Sparse paving matroids described by their circuit-hyperplane families.

mod census;
mod collar;
mod signature;

pub use census::{
    census_pk, sp_excluded_minors, CensusRow, MAX_CENSUS_BOUND, MAX_EXMINOR_BOUND, MAX_EXMINOR_SIZE,
};
pub use collar::{
    collar_construct, collar_solution_count, collar_solutions, collar_variables, CollarSolutions,
    CompositionSolution,
};
pub use signature::{
    all_signatures, canonical_cells, canonical_signature, ch_isomorphic, signature_realizable,
    signature_witness, venn_signature, VennSignature,
};

use crate::bits::{self, Mask};
use crate::comb::binomial;
use crate::kernel::{KernelError, Matroid};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpError {
    /// Indices are 0-based positions in the family.
    #[error("circuit-hyperplanes {0} and {1} differ in at most one element")]
    DifferenceOne(usize, usize),
    #[error("circuit-hyperplane {index} has {size} elements, expected rank {rank}")]
    WrongCardinality {
        index: usize,
        size: usize,
        rank: usize,
    },
    #[error("rank {rank} out of range for {n} elements with circuit-hyperplanes")]
    RankOutOfRange { rank: usize, n: usize },
    #[error("circuit-hyperplane {0} has elements outside the ground set")]
    OutOfRange(usize),
    #[error("ground set of {0} elements exceeds the supported maximum")]
    TooLarge(usize),
    #[error("every {0}-subset is a circuit-hyperplane")]
    NoBasesLeft(usize),
    #[error("element {0} is a coloop")]
    IsColoop(usize),
    #[error("element {0} is a loop")]
    IsLoop(usize),
    #[error("element {0} outside the ground set")]
    ElementOutOfRange(usize),
    #[error("ground sizes differ: {0} and {1}")]
    GroundSizeMismatch(usize, usize),
    #[error("bound k = {0} outside the supported range")]
    BoundTooLarge(usize),
    #[error("size {n} is below 2(k+1) = {min}")]
    TooSmall { n: usize, min: usize },
    #[error("assignment does not solve the composition equation")]
    NotASolution,
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// An ordered family of circuit-hyperplanes `(C_1, ..., C_k)` of an `n`-element
/// rank-`r` sparse paving matroid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CHFamily {
    pub n: usize,
    pub rank: usize,
    pub chs: Vec<Mask>,
}

impl CHFamily {
    /// Builds and validates a family.
    pub fn new(n: usize, rank: usize, chs: Vec<Mask>) -> Result<Self, SpError> {
        let f = CHFamily { n, rank, chs };
        f.validate()?;
        Ok(f)
    }

    pub fn k(&self) -> usize {
        self.chs.len()
    }

    pub fn validate(&self) -> Result<(), SpError> {
        let (n, r) = (self.n, self.rank);
        if n > bits::MAX_GROUND {
            return Err(SpError::TooLarge(n));
        }
        let rank_ok = if self.chs.is_empty() {
            r <= n
        } else {
            r >= 1 && r < n
        };
        if !rank_ok {
            return Err(SpError::RankOutOfRange { rank: r, n });
        }
        for (i, &c) in self.chs.iter().enumerate() {
            if c & !bits::full(n) != 0 {
                return Err(SpError::OutOfRange(i));
            }
            if bits::size(c) != r {
                return Err(SpError::WrongCardinality {
                    index: i,
                    size: bits::size(c),
                    rank: r,
                });
            }
        }
        for i in 0..self.chs.len() {
            for j in i + 1..self.chs.len() {
                if bits::size(self.chs[i] & !self.chs[j]) <= 1 {
                    return Err(SpError::DifferenceOne(i, j));
                }
            }
        }
        Ok(())
    }

    /// The sparse paving matroid whose bases are the `r`-subsets outside the family.
    pub fn to_matroid(&self) -> Result<Matroid, SpError> {
        self.validate()?;
        let bases: Vec<Mask> = bits::combinations(self.n, self.rank)
            .filter(|b| !self.chs.contains(b))
            .collect();
        if bases.is_empty() {
            return Err(SpError::NoBasesLeft(self.rank));
        }
        Ok(Matroid::from_bases_unchecked(self.n, bases))
    }

    /// Number of members containing `e`.
    pub fn degree(&self, e: usize) -> usize {
        self.chs.iter().filter(|&&c| c & bits::bit(e) != 0).count()
    }

    /// `M \ e` keeps the members avoiding `e`.
    pub fn delete(&self, e: usize) -> Result<CHFamily, SpError> {
        if e >= self.n {
            return Err(SpError::ElementOutOfRange(e));
        }
        let avoiding = self.chs.len() - self.degree(e);
        // e is a coloop exactly when every r-subset avoiding it is a member.
        if binomial((self.n - 1) as i64, self.rank as i64) == avoiding as u128 {
            return Err(SpError::IsColoop(e));
        }
        let removed = bits::bit(e);
        let chs = self
            .chs
            .iter()
            .filter(|&&c| c & removed == 0)
            .map(|&c| bits::compact(c, removed))
            .collect();
        Ok(CHFamily {
            n: self.n - 1,
            rank: self.rank,
            chs,
        })
    }

    /// `M / e` keeps the members through `e`, with `e` removed.
    pub fn contract(&self, e: usize) -> Result<CHFamily, SpError> {
        if e >= self.n {
            return Err(SpError::ElementOutOfRange(e));
        }
        let through = self.degree(e);
        if self.rank == 0
            || binomial((self.n - 1) as i64, (self.rank - 1) as i64) == through as u128
        {
            return Err(SpError::IsLoop(e));
        }
        let removed = bits::bit(e);
        let chs = self
            .chs
            .iter()
            .filter(|&&c| c & removed != 0)
            .map(|&c| bits::compact(c & !removed, removed))
            .collect();
        Ok(CHFamily {
            n: self.n - 1,
            rank: self.rank - 1,
            chs,
        })
    }
}

/// Validates a family; free-function form of [`CHFamily::validate`].
pub fn validate_chfamily(f: &CHFamily) -> Result<(), SpError> {
    f.validate()
}

pub fn ch_to_matroid(f: &CHFamily) -> Result<Matroid, SpError> {
    f.to_matroid()
}

pub fn ch_delete(f: &CHFamily, e: usize) -> Result<CHFamily, SpError> {
    f.delete(e)
}

pub fn ch_contract(f: &CHFamily, e: usize) -> Result<CHFamily, SpError> {
    f.contract(e)
}

/// Recovers the family from a sparse paving matroid, members in ascending mask order.
pub fn chfamily_of(m: &Matroid) -> Option<CHFamily> {
    if !m.is_sparse_paving() {
        return None;
    }
    Some(CHFamily {
        n: m.n(),
        rank: m.rank(),
        chs: m.circuit_hyperplanes().members,
    })
}

/// Membership in the class of sparse paving matroids with at most `k`
/// circuit-hyperplanes.
pub fn in_pk(m: &Matroid, k: usize) -> bool {
    m.is_sparse_paving() && m.circuit_hyperplanes().len() <= k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Mask {
        bits::from_elements(v.iter().copied())
    }

    #[test]
    fn validation_examples() {
        assert!(CHFamily::new(4, 2, vec![s(&[0, 1]), s(&[2, 3])]).is_ok());
        assert_eq!(
            CHFamily::new(4, 2, vec![s(&[0, 1]), s(&[1, 2])]),
            Err(SpError::DifferenceOne(0, 1))
        );
        assert_eq!(
            CHFamily::new(6, 3, vec![s(&[0, 1, 2]), s(&[3, 4, 5]), s(&[0, 3, 4])]),
            Err(SpError::DifferenceOne(1, 2))
        );
        assert!(matches!(
            CHFamily::new(4, 2, vec![s(&[0, 1, 2])]),
            Err(SpError::WrongCardinality {
                index: 0,
                size: 3,
                rank: 2
            })
        ));
        assert!(matches!(
            CHFamily::new(4, 4, vec![s(&[0, 1, 2, 3])]),
            Err(SpError::RankOutOfRange { .. })
        ));
        assert!(CHFamily::new(4, 4, vec![]).is_ok());
    }

    #[test]
    fn matroid_examples() {
        let f = CHFamily::new(4, 2, vec![s(&[0, 1]), s(&[2, 3])]).unwrap();
        let m = f.to_matroid().unwrap();
        assert_eq!(m.bases().len(), 4);
        assert!(Matroid::new(4, m.bases().to_vec()).is_ok());
        assert_eq!(chfamily_of(&m).unwrap().chs, f.chs);

        let u = CHFamily::new(5, 2, vec![]).unwrap().to_matroid().unwrap();
        assert_eq!(u, Matroid::uniform(2, 5).unwrap());
        let one = CHFamily::new(6, 3, vec![s(&[0, 1, 2])])
            .unwrap()
            .to_matroid()
            .unwrap();
        assert_eq!(one.bases().len(), 19);
    }

    #[test]
    fn minor_examples() {
        let f = CHFamily::new(4, 2, vec![s(&[0, 1]), s(&[2, 3])]).unwrap();
        assert_eq!(
            f.delete(0).unwrap(),
            CHFamily {
                n: 3,
                rank: 2,
                chs: vec![s(&[1, 2])]
            }
        );
        assert_eq!(
            f.contract(0).unwrap(),
            CHFamily {
                n: 3,
                rank: 1,
                chs: vec![s(&[0])]
            }
        );
        let g = CHFamily::new(6, 3, vec![s(&[0, 1, 2]), s(&[3, 4, 5])]).unwrap();
        let c = g.contract(5).unwrap();
        assert_eq!(
            c,
            CHFamily {
                n: 5,
                rank: 2,
                chs: vec![s(&[3, 4])]
            }
        );
        assert_eq!(c.to_matroid().unwrap(), g.to_matroid().unwrap().contract(5));
    }

    #[test]
    fn loops_and_coloops_are_reported() {
        // Rank 1 on two elements with {0} a circuit-hyperplane: 0 is a loop.
        let f = CHFamily::new(3, 1, vec![s(&[0])]).unwrap();
        assert_eq!(f.contract(0), Err(SpError::IsLoop(0)));
        // n = 3, r = 2, {1,2} a circuit-hyperplane: 0 is a coloop.
        let g = CHFamily::new(3, 2, vec![s(&[1, 2])]).unwrap();
        assert_eq!(g.delete(0), Err(SpError::IsColoop(0)));
        assert!(g.to_matroid().unwrap().is_coloop(0));
    }

    #[test]
    fn excluded_minor_membership() {
        let f = CHFamily::new(6, 3, vec![s(&[0, 1, 2]), s(&[3, 4, 5])]).unwrap();
        let m = f.to_matroid().unwrap();
        assert!(m.is_excluded_minor(|x| in_pk(x, 1)));
        assert!(!Matroid::uniform(2, 4)
            .unwrap()
            .is_excluded_minor(|x| in_pk(x, 0)));
    }
}
