//! Exact counting helpers: binomials and weighted composition counts.

/// `binom(n, k)` in `u128`; zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> u128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) is exact at every step.
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of non-negative integer vectors `x` with `sum(weights[i] * x[i]) == target`.
pub fn count_weighted_compositions(weights: &[u32], target: u64) -> u128 {
    let t = target as usize;
    let mut ways = vec![0u128; t + 1];
    ways[0] = 1;
    for &w in weights {
        let w = w as usize;
        assert!(w > 0, "zero weight");
        for v in w..=t {
            ways[v] += ways[v - w];
        }
    }
    ways[t]
}

/// Stars and bars: vectors of `vars` non-negative integers summing to `total`.
pub fn stars_and_bars(total: u64, vars: u64) -> u128 {
    if vars == 0 {
        return u128::from(total == 0);
    }
    binomial((total + vars - 1) as i64, (vars - 1) as i64)
}

/// All non-negative vectors `x` with `sum(weights[i] * x[i]) == target`, in
/// ascending lexicographic order.
#[derive(Debug, Clone)]
pub struct WeightedCompositions {
    weights: Vec<u32>,
    target: u64,
    // reach[j][v]: positions j.. can sum to exactly v.
    reach: Vec<Vec<bool>>,
    current: Option<Vec<u32>>,
    started: bool,
}

impl WeightedCompositions {
    pub fn new(weights: Vec<u32>, target: u64) -> Self {
        assert!(weights.iter().all(|&w| w > 0), "zero weight");
        let t = target as usize;
        let len = weights.len();
        let mut reach = vec![vec![false; t + 1]; len + 1];
        reach[len][0] = true;
        for j in (0..len).rev() {
            let w = weights[j] as usize;
            for v in 0..=t {
                reach[j][v] = reach[j + 1][v] || (v >= w && reach[j][v - w]);
            }
        }
        let mut it = WeightedCompositions {
            weights,
            target,
            reach,
            current: None,
            started: false,
        };
        if it.reach[0][t] {
            let mut x = vec![0; len];
            it.fill_least(&mut x, 0, t);
            it.current = Some(x);
        }
        it
    }

    /// Lexicographically least completion of positions `from..` summing to `rest`.
    fn fill_least(&self, x: &mut [u32], from: usize, mut rest: usize) {
        for (j, slot) in x.iter_mut().enumerate().skip(from) {
            let w = self.weights[j] as usize;
            let mut v = 0;
            while !self.reach[j + 1][rest - v * w] {
                v += 1;
            }
            *slot = v as u32;
            rest -= v * w;
        }
    }

    fn advance(&mut self) {
        let Some(x) = self.current.as_mut() else {
            return;
        };
        let len = x.len();
        let weights = &self.weights;
        let mut prefix: Vec<usize> = Vec::with_capacity(len + 1);
        prefix.push(0);
        for j in 0..len {
            prefix.push(prefix[j] + weights[j] as usize * x[j] as usize);
        }
        let t = self.target as usize;
        for i in (0..len).rev() {
            let w = weights[i] as usize;
            let mut v = x[i] as usize + 1;
            while prefix[i] + v * w <= t {
                let rest = t - prefix[i] - v * w;
                if self.reach[i + 1][rest] {
                    let mut next = x.clone();
                    next[i] = v as u32;
                    self.fill_least(&mut next, i + 1, rest);
                    self.current = Some(next);
                    return;
                }
                v += 1;
            }
        }
        self.current = None;
    }
}

impl Iterator for WeightedCompositions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.started {
            self.advance();
        }
        self.started = true;
        self.current.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(24, 24), 1);
        assert_eq!(binomial(5, 7), 0);
        assert_eq!(binomial(5, -1), 0);
        assert_eq!(binomial(60, 30), 118_264_581_564_861_424);
    }

    #[test]
    fn compositions_match_stars_and_bars() {
        for vars in 0..5u64 {
            for total in 0..12u64 {
                let w = vec![1; vars as usize];
                assert_eq!(
                    count_weighted_compositions(&w, total),
                    stars_and_bars(total, vars)
                );
            }
        }
    }

    #[test]
    fn weighted_example() {
        // 3a + 2b = 2 with six a's and four b's: only b-unit solutions.
        let w = [3, 3, 3, 3, 3, 3, 2, 2, 2, 2];
        assert_eq!(count_weighted_compositions(&w, 2), 4);
        assert_eq!(count_weighted_compositions(&w, 1), 0);
        assert_eq!(count_weighted_compositions(&w, 0), 1);
    }

    #[test]
    fn enumeration_matches_count_and_is_sorted() {
        for (weights, target) in [
            (vec![3, 3, 2, 2], 9u64),
            (vec![1, 1, 1], 4),
            (vec![2], 3),
            (vec![], 0),
            (vec![], 2),
        ] {
            let all: Vec<Vec<u32>> = WeightedCompositions::new(weights.clone(), target).collect();
            assert_eq!(
                all.len() as u128,
                count_weighted_compositions(&weights, target)
            );
            assert!(all.windows(2).all(|p| p[0] < p[1]));
            for x in &all {
                let s: u64 = x
                    .iter()
                    .zip(&weights)
                    .map(|(&a, &w)| u64::from(a * w))
                    .sum();
                assert_eq!(s, target);
            }
        }
        let first: Vec<Vec<u32>> = WeightedCompositions::new(vec![1, 1], 2).collect();
        assert_eq!(first, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
    }
}
