//! Brute-force oracles shared by the integration suites. They deliberately
//! avoid the signature machinery under test.
#![allow(dead_code)]

use fractal_core::bits::{self, Mask};
use fractal_core::sparse_paving::CHFamily;
use fractal_core::{IsoInvariant, Matroid};
use std::collections::HashMap;

/// Isomorphism by trying every permutation of the ground set.
pub fn iso_by_all_permutations(a: &Matroid, b: &Matroid) -> bool {
    if a.n() != b.n() || a.rank() != b.rank() || a.bases().len() != b.bases().len() {
        return false;
    }
    let n = a.n();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if a.relabel(&perm) == *b {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..k).collect();
    let mut out = vec![p.clone()];
    while next_permutation(&mut p) {
        out.push(p.clone());
    }
    out
}

/// All sets of `m` distinct `r`-subsets of an `n`-set pairwise differing in at
/// least two elements, each listed once in ascending order.
pub fn labeled_families(n: usize, r: usize, m: usize) -> Vec<CHFamily> {
    let subsets: Vec<Mask> = bits::combinations(n, r).collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(subsets: &[Mask], from: usize, m: usize, cur: &mut Vec<Mask>, out: &mut Vec<Vec<Mask>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in from..subsets.len() {
            let s = subsets[i];
            if cur.iter().all(|&c| (c & !s).count_ones() >= 2) {
                cur.push(s);
                go(subsets, i + 1, m, cur, out);
                cur.pop();
            }
        }
    }
    go(&subsets, 0, m, &mut cur, &mut out);
    out.into_iter()
        .map(|chs| CHFamily { n, rank: r, chs })
        .collect()
}

/// All families of any size (every sparse paving matroid of rank `r`).
pub fn all_labeled_families(n: usize, r: usize) -> Vec<CHFamily> {
    if r == 0 || r == n {
        return vec![CHFamily {
            n,
            rank: r,
            chs: Vec::new(),
        }];
    }
    let mut out = Vec::new();
    for m in 0.. {
        let level = labeled_families(n, r, m);
        if level.is_empty() {
            break;
        }
        out.extend(level);
    }
    out
}

/// Isomorphism classes among `ms`, using kernel isomorphism within invariant buckets.
pub struct IsoClasses {
    buckets: HashMap<IsoInvariant, Vec<usize>>,
    pub reps: Vec<Matroid>,
}

impl IsoClasses {
    pub fn new() -> Self {
        IsoClasses {
            buckets: HashMap::new(),
            reps: Vec::new(),
        }
    }

    /// Index of the class of `m`, adding a new class if needed.
    pub fn insert(&mut self, m: Matroid) -> usize {
        let key = m.iso_invariant();
        let bucket = self.buckets.entry(key).or_default();
        for &i in bucket.iter() {
            if self.reps[i].is_isomorphic(&m) {
                return i;
            }
        }
        bucket.push(self.reps.len());
        self.reps.push(m);
        self.reps.len() - 1
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }
}

/// Per-stratum isomorphism-class counts of sparse paving matroids with at most
/// `k` circuit-hyperplanes on `n` elements, from labeled families.
pub fn brute_census_pk(n: usize, k: usize) -> Vec<u128> {
    let mut counts = vec![0u128; k + 1];
    counts[0] = (n + 1) as u128;
    for (m, count) in counts.iter_mut().enumerate().skip(1) {
        let mut classes = IsoClasses::new();
        for r in 1..n {
            for f in labeled_families(n, r, m) {
                classes.insert(f.to_matroid().unwrap());
            }
        }
        *count = classes.len() as u128;
    }
    counts
}

/// Relabels a family's ground set by `perm[old] = new`.
pub fn relabel_family(f: &CHFamily, perm: &[usize]) -> CHFamily {
    let map = |c: Mask| bits::elements(c).fold(0, |acc, e| acc | bits::bit(perm[e]));
    CHFamily {
        n: f.n,
        rank: f.rank,
        chs: f.chs.iter().map(|&c| map(c)).collect(),
    }
}

/// Endpoints of each edge of a graph in the class, following the documented
/// labelling. Loops sit on vertex 0.
pub fn edge_endpoints(
    kind: fractal_core::biased_lift::GraphKind,
    t: usize,
    s: usize,
    p: usize,
) -> (usize, Vec<(usize, usize)>) {
    use fractal_core::biased_lift::GraphKind;
    let mut ends = Vec::new();
    let vertices = match kind {
        GraphKind::SingleVertex => 1,
        GraphKind::TwoVertex => {
            ends.extend(std::iter::repeat_n((0, 1), 2 * t + s));
            2
        }
        GraphKind::Cycle => {
            let v = t + s;
            for i in 0..t {
                ends.push((i, (i + 1) % v));
                ends.push((i, (i + 1) % v));
            }
            for j in 0..s {
                ends.push((t + j, (t + j + 1) % v));
            }
            v
        }
    };
    ends.extend(std::iter::repeat_n((0, 0), p));
    (vertices, ends)
}

/// Edge sets forming a connected 2-regular subgraph, found by scanning every subset.
pub fn brute_cycles(vertices: usize, ends: &[(usize, usize)]) -> Vec<Mask> {
    let n = ends.len();
    let mut out = Vec::new();
    for x in 1..bits::full(n) + 1 {
        let mut deg = vec![0usize; vertices];
        for e in bits::elements(x) {
            deg[ends[e].0] += 1;
            deg[ends[e].1] += 1;
        }
        if deg.iter().any(|&d| d != 0 && d != 2) {
            continue;
        }
        if components(vertices, ends, x).1 == 1 {
            out.push(x);
        }
    }
    out
}

/// Vertices touched by `x` and the number of components of the subgraph they span.
fn components(vertices: usize, ends: &[(usize, usize)], x: Mask) -> (usize, usize) {
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(p: &mut [usize], v: usize) -> usize {
        let mut v = v;
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    let mut touched = vec![false; vertices];
    for e in bits::elements(x) {
        let (a, b) = ends[e];
        touched[a] = true;
        touched[b] = true;
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let v = touched.iter().filter(|&&b| b).count();
    let c = (0..vertices)
        .filter(|&u| touched[u] && find(&mut parent, u) == u)
        .count();
    (v, c)
}

/// Lift-matroid rank of every subset: vertices touched minus components, plus
/// one when the subset contains a cycle outside `balanced`.
pub fn brute_lift_ranks(vertices: usize, ends: &[(usize, usize)], balanced: &[Mask]) -> Vec<usize> {
    let n = ends.len();
    let unbalanced: Vec<Mask> = brute_cycles(vertices, ends)
        .into_iter()
        .filter(|c| !balanced.contains(c))
        .collect();
    (0..=bits::full(n))
        .map(|x| {
            let (v, c) = components(vertices, ends, x);
            v - c + usize::from(unbalanced.iter().any(|&u| u & !x == 0))
        })
        .collect()
}

/// Every set of `m` pick vectors on `t` pairs, pairwise differing in at least
/// two positions, each sorted ascending.
pub fn all_linear_pick_families(t: usize, m: usize) -> Vec<Vec<u32>> {
    let mut level: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..m {
        let mut next = Vec::new();
        for f in &level {
            let start = f.last().map_or(0, |&h| h + 1);
            for h in start..1u32 << t {
                if f.iter().all(|&x| (x ^ h).count_ones() >= 2) {
                    let mut g = f.clone();
                    g.push(h);
                    next.push(g);
                }
            }
        }
        level = next;
    }
    level
}

/// Isomorphism-class counts, indexed by size, of all minors of spikes with
/// `3 <= t <= t_max` pairs and at most `k` balanced Hamiltonian cycles.
/// Pick families are taken through the all-`a` cycle, which loses nothing
/// since flipping a pair relabels the spike.
pub fn spike_minor_census(k: usize, t_max: usize) -> Vec<usize> {
    let mut levels: Vec<IsoClasses> = (0..=2 * t_max).map(|_| IsoClasses::new()).collect();
    for t in 3..=t_max {
        for m in 0..=k {
            for f in all_linear_pick_families(t, m) {
                if m == 0 || f[0] == 0 {
                    levels[2 * t]
                        .insert(fractal_core::biased_lift::spike(t, &f).expect("linear family"));
                }
            }
        }
    }
    for n in (0..2 * t_max).rev() {
        let above = levels[n + 1].reps.clone();
        for m in above {
            for e in 0..m.n() {
                levels[n].insert(m.delete(e));
                levels[n].insert(m.contract(e));
            }
        }
    }
    levels.iter().map(IsoClasses::len).collect()
}
