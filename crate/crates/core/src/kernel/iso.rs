use super::{Matroid, RankTable};
use crate::bits::{self, Mask};

/// Isomorphism invariants used to bucket and prune the permutation search.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoInvariant {
    pub n: usize,
    pub rank: usize,
    pub bases: usize,
    /// Sorted multiset of per-element basis counts.
    pub degrees: Vec<usize>,
    pub non_spanning_circuits: usize,
}

impl Matroid {
    pub fn iso_invariant(&self) -> IsoInvariant {
        let mut degrees = self.basis_degrees();
        degrees.sort_unstable();
        IsoInvariant {
            n: self.n,
            rank: self.rank,
            bases: self.bases.len(),
            degrees,
            non_spanning_circuits: self.non_spanning_circuits().len(),
        }
    }

    pub fn is_isomorphic(&self, other: &Matroid) -> bool {
        self.find_isomorphism(other).is_some()
    }

    /// A bijection `map[e]` of ground sets carrying bases of `self` onto bases
    /// of `other`, if one exists.
    pub fn find_isomorphism(&self, other: &Matroid) -> Option<Vec<usize>> {
        if self.n != other.n || self.rank != other.rank || self.bases.len() != other.bases.len() {
            return None;
        }
        if self == other {
            return Some((0..self.n).collect());
        }
        let da = self.basis_degrees();
        let db = other.basis_degrees();
        let (mut sa, mut sb) = (da.clone(), db.clone());
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
        if self.non_spanning_circuits().len() != other.non_spanning_circuits().len() {
            return None;
        }

        // Most constrained elements first: small degree classes.
        let class_size = |d: usize| da.iter().filter(|&&x| x == d).count();
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&e| (class_size(da[e]), da[e], e));
        let candidates: Vec<Vec<usize>> = (0..self.n)
            .map(|e| (0..self.n).filter(|&f| db[f] == da[e]).collect())
            .collect();

        let mut search = Search {
            ta: self.table(),
            tb: other.table(),
            order: &order,
            candidates: &candidates,
            image: vec![usize::MAX; self.n],
            used: 0,
            left: vec![0; 1 << self.n],
            right: vec![0; 1 << self.n],
        };
        if search.extend(0) {
            Some(search.image)
        } else {
            None
        }
    }
}

struct Search<'a> {
    ta: &'a RankTable,
    tb: &'a RankTable,
    order: &'a [usize],
    candidates: &'a [Vec<usize>],
    image: Vec<usize>,
    used: Mask,
    // left[s] / right[s]: the sets of already-placed elements selected by the
    // position-subset s, in each matroid.
    left: Vec<Mask>,
    right: Vec<Mask>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let ea = self.order[depth];
        let half = 1usize << depth;
        for i in 0..self.candidates[ea].len() {
            let eb = self.candidates[ea][i];
            if self.used & bits::bit(eb) != 0 {
                continue;
            }
            // Every subset containing the new element must keep its rank.
            let mut ok = true;
            for s in 0..half {
                let ma = self.left[s] | bits::bit(ea);
                let mb = self.right[s] | bits::bit(eb);
                if self.ta.rank(ma) != self.tb.rank(mb) {
                    ok = false;
                    break;
                }
                self.left[s + half] = ma;
                self.right[s + half] = mb;
            }
            if !ok {
                continue;
            }
            self.used |= bits::bit(eb);
            self.image[ea] = eb;
            if self.extend(depth + 1) {
                return true;
            }
            self.used &= !bits::bit(eb);
            self.image[ea] = usize::MAX;
        }
        false
    }
}
