//! Subset-as-bitmask helpers shared by every module.

/// A subset of a ground set `{0, .., n-1}` with `n <= 32`.
pub type Mask = u32;

/// Largest ground set the kernel materializes.
pub const MAX_GROUND: usize = 24;

#[inline]
pub fn full(n: usize) -> Mask {
    if n >= 32 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

#[inline]
pub fn bit(e: usize) -> Mask {
    1 << e
}

#[inline]
pub fn size(m: Mask) -> usize {
    m.count_ones() as usize
}

/// Iterates the elements of a mask in ascending order.
#[derive(Clone, Copy, Debug)]
pub struct Elements(Mask);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = size(self.0);
        (c, Some(c))
    }
}

impl ExactSizeIterator for Elements {}

#[inline]
pub fn elements(m: Mask) -> Elements {
    Elements(m)
}

pub fn from_elements<I: IntoIterator<Item = usize>>(it: I) -> Mask {
    it.into_iter().fold(0, |acc, e| acc | bit(e))
}

pub fn to_vec(m: Mask) -> Vec<usize> {
    elements(m).collect()
}

/// Removes the elements of `removed` from `m` and shifts the survivors down so
/// that the remaining ground set is relabelled `0..` in ascending order.
pub fn compact(m: Mask, removed: Mask) -> Mask {
    let mut out = 0;
    for e in elements(m & !removed) {
        let below = (removed & (bit(e) - 1)).count_ones();
        out |= 1 << (e as u32 - below);
    }
    out
}

/// All `k`-subsets of `{0, .., n-1}` in ascending mask order (Gosper's hack).
#[derive(Clone, Debug)]
pub struct Combinations {
    limit: u64,
    cur: u64,
    done: bool,
}

pub fn combinations(n: usize, k: usize) -> Combinations {
    assert!(n <= 32);
    if k > n {
        return Combinations {
            limit: 0,
            cur: 0,
            done: true,
        };
    }
    Combinations {
        limit: 1u64 << n,
        cur: (1u64 << k) - 1,
        done: false,
    }
}

impl Iterator for Combinations {
    type Item = Mask;

    fn next(&mut self) -> Option<Mask> {
        if self.done {
            return None;
        }
        let out = self.cur;
        if out == 0 {
            self.done = true;
            return Some(0);
        }
        let c = out & out.wrapping_neg();
        let r = out + c;
        let next = (((r ^ out) >> 2) / c) | r;
        if next >= self.limit {
            self.done = true;
        } else {
            self.cur = next;
        }
        Some(out as Mask)
    }
}

/// Subsets of `m` (including `0` and `m` itself) in ascending order.
pub fn subsets_of(m: Mask) -> impl Iterator<Item = Mask> {
    let mut cur: Option<Mask> = Some(0);
    std::iter::from_fn(move || {
        let out = cur?;
        cur = if out == m {
            None
        } else {
            Some(((out | !m).wrapping_add(1)) & m)
        };
        Some(out)
    })
}
