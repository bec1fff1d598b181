use crate::bits::{self, Mask};

/// The rank of every subset of the ground set, indexed by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTable {
    n: usize,
    ranks: Vec<u8>,
}

impl RankTable {
    /// Independent sets are the subsets of bases.
    pub fn from_bases(n: usize, rank: usize, bases: &[Mask]) -> Self {
        let size = 1usize << n;
        let mut indep = vec![false; size];
        for &b in bases {
            indep[b as usize] = true;
        }
        // Downward closure, largest masks first.
        for x in (0..size).rev() {
            if !indep[x] {
                continue;
            }
            for e in bits::elements(x as Mask) {
                indep[x & !(1 << e)] = true;
            }
        }
        let t = Self::from_independent(n, &indep);
        debug_assert_eq!(t.rank(bits::full(n)), rank);
        t
    }

    /// Builds the rank function from an independence indicator over all masks.
    pub fn from_independent(n: usize, indep: &[bool]) -> Self {
        let size = 1usize << n;
        assert_eq!(indep.len(), size);
        let mut ranks = vec![0u8; size];
        for x in 1..size {
            let card = (x as Mask).count_ones() as u8;
            if indep[x] {
                ranks[x] = card;
                continue;
            }
            let mut best = 0;
            for e in bits::elements(x as Mask) {
                let r = ranks[x & !(1 << e)];
                if r > best {
                    best = r;
                    if best + 1 == card {
                        break;
                    }
                }
            }
            ranks[x] = best;
        }
        RankTable { n, ranks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rank(&self, x: Mask) -> usize {
        self.ranks[x as usize] as usize
    }

    #[inline]
    pub fn is_independent(&self, x: Mask) -> bool {
        self.rank(x) == bits::size(x)
    }

    pub fn closure(&self, x: Mask) -> Mask {
        let r = self.rank(x);
        let mut out = x;
        for e in bits::elements(bits::full(self.n) & !x) {
            if self.rank(x | bits::bit(e)) == r {
                out |= bits::bit(e);
            }
        }
        out
    }

    pub fn is_flat(&self, x: Mask) -> bool {
        let r = self.rank(x);
        bits::elements(bits::full(self.n) & !x).all(|e| self.rank(x | bits::bit(e)) > r)
    }

    pub fn is_circuit(&self, x: Mask) -> bool {
        x != 0
            && !self.is_independent(x)
            && bits::elements(x).all(|e| self.is_independent(x & !bits::bit(e)))
    }
}

/// Independence indicator for the family of sets containing none of `circuits`.
pub(crate) fn independent_avoiding(n: usize, circuits: &[Mask]) -> Vec<bool> {
    let size = 1usize << n;
    let mut dep = vec![false; size];
    for &c in circuits {
        dep[c as usize] = true;
    }
    for x in 1..size {
        if dep[x] {
            continue;
        }
        let mut rest = x as Mask;
        while rest != 0 {
            let e = rest.trailing_zeros();
            rest &= rest - 1;
            if dep[x & !(1 << e)] {
                dep[x] = true;
                break;
            }
        }
    }
    dep.into_iter().map(|d| !d).collect()
}
