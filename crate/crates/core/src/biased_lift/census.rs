use super::bottom::{bottom_construct, bottom_solutions};
use super::category::{build, category_constructions, Category, Construction, EXACT_LIMIT};
use super::glance::{canonical_trun_vectors, glance_signature, trun_enumeration_size};
use super::graph::lift_rank_formula;
use super::spike::SpikeSpec;
use super::LiftError;
use crate::kernel::{IsoInvariant, Matroid};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

/// Largest size for the plain exact census.
pub const SK_EXACT_LIMIT: usize = 12;
/// Largest bound accepted by the strata census.
pub const MAX_STRATA_BOUND: usize = 6;
/// Largest number of truncated cell vectors visited for one stratum.
pub const STRATA_BUDGET: u128 = 50_000_000;

/// Isomorphism classes in `items`, keeping the first representative of each.
fn dedupe<T: Sync>(items: Vec<(T, Matroid)>) -> Vec<(T, Matroid)> {
    let invariants: Vec<IsoInvariant> = items.par_iter().map(|(_, m)| m.iso_invariant()).collect();
    let mut buckets: HashMap<IsoInvariant, Vec<usize>> = HashMap::new();
    for (i, inv) in invariants.into_iter().enumerate() {
        buckets.entry(inv).or_default().push(i);
    }
    // keep[i]: no earlier item in the bucket is isomorphic.
    let keep: HashSet<usize> = buckets
        .into_par_iter()
        .flat_map_iter(|(_, idx)| {
            let mut reps: Vec<usize> = Vec::new();
            for &i in &idx {
                if !reps.iter().any(|&j| items[j].1.is_isomorphic(&items[i].1)) {
                    reps.push(i);
                }
            }
            reps
        })
        .collect();
    items
        .into_iter()
        .enumerate()
        .filter(|(i, _)| keep.contains(i))
        .map(|(_, x)| x)
        .collect()
}

/// Number of isomorphism classes of `n`-element minors of spikes with at most
/// `k` balanced Hamiltonian cycles.
pub fn census_sk_exact(n: usize, k: usize) -> Result<u128, LiftError> {
    if n > SK_EXACT_LIMIT {
        return Err(LiftError::TooLargeForExact {
            n,
            limit: SK_EXACT_LIMIT,
        });
    }
    let items: Vec<((), Matroid)> = category_constructions(n, k)
        .par_iter()
        .map(|(_, c)| ((), build(c)))
        .collect();
    Ok(dedupe(items).len() as u128)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CountMode {
    /// Isomorphism classes counted exactly.
    Exact,
    /// Parameter tuples counted; at least the number of classes.
    Upper,
}

impl fmt::Display for CountMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountMode::Exact => "exact",
            CountMode::Upper => "upper",
        })
    }
}

/// One stratum: members of `category` of rank `r` built with `m` balanced
/// cycles. For Category A lifts `r` is the length of the underlying cycle.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StrataRow {
    pub n: usize,
    pub k: usize,
    pub category: Category,
    pub r: usize,
    pub m: usize,
    pub count: u128,
    pub mode: CountMode,
}

/// Whether a construction is a Category A lift covered by the signature count.
fn signature_covered(category: Category, c: &Construction) -> bool {
    match (category, c) {
        (Category::A, Construction::Lift { graph, balanced }) => {
            graph.t + graph.s >= 5 && balanced.len() >= 2
        }
        _ => false,
    }
}

fn stratum(category: Category, c: &Construction, n: usize) -> (usize, usize) {
    match c {
        Construction::Small { coloops, pairs, .. } => (coloops + pairs, 0),
        Construction::Lift { graph, balanced } => {
            let m = if category == Category::D {
                0
            } else {
                balanced.len()
            };
            let r = if category == Category::A {
                graph.t + graph.s
            } else {
                lift_rank_formula(graph, balanced)
            };
            (r, m)
        }
        Construction::Cographic { graph } => {
            let r = graph.vertices() - 1;
            (n - r, 0)
        }
    }
}

/// Strata counts for `n`-element members with bound `k`.
///
/// Category A lifts of cycles of length at least five with at least two
/// balanced cycles are counted by canonical truncated signature together with
/// the loop and thin-edge counts; each such key is one isomorphism class. All
/// other members are deduplicated up to isomorphism when `n <= 14` and counted
/// by parameters otherwise. Classes shared between the two parts are not
/// subtracted, so the total is an upper bound.
pub fn census_sk_strata(n: usize, k: usize) -> Result<Vec<StrataRow>, LiftError> {
    if n % 2 == 1 {
        return Err(LiftError::OddSize(n));
    }
    strata_unchecked(n, k)
}

pub(crate) fn strata_unchecked(n: usize, k: usize) -> Result<Vec<StrataRow>, LiftError> {
    if k > MAX_STRATA_BOUND {
        return Err(LiftError::BoundOutOfRange(k));
    }
    let mut counts: BTreeMap<(Category, usize, usize, CountMode), u128> = BTreeMap::new();

    let rest: Vec<(Category, Construction)> = category_constructions(n, k)
        .into_iter()
        .filter(|(cat, c)| !signature_covered(*cat, c))
        .collect();
    if n <= EXACT_LIMIT {
        let built: Vec<((Category, usize, usize), Matroid)> = rest
            .par_iter()
            .map(|(cat, c)| {
                let (r, m) = stratum(*cat, c, n);
                ((*cat, r, m), build(c))
            })
            .collect();
        for ((cat, r, m), _) in dedupe(built) {
            *counts.entry((cat, r, m, CountMode::Exact)).or_default() += 1;
        }
    } else {
        for (cat, c) in &rest {
            let (r, m) = stratum(*cat, c, n);
            *counts.entry((*cat, r, m, CountMode::Upper)).or_default() += 1;
        }
    }

    // r = t + s with n = 2r - s + p, so r <= n / 2 + s / 2 and t = r - s >= 2.
    for m in 2..=k {
        for r in 5..n {
            let s_min = (2 * r).saturating_sub(n);
            if s_min + 2 > r {
                continue;
            }
            let size = trun_enumeration_size(r, m);
            if size > STRATA_BUDGET {
                return Err(LiftError::BudgetExceeded(size));
            }
            let full = (1usize << (m - 1)) - 1;
            let count: u128 = canonical_trun_vectors(r, m)
                .iter()
                .map(|cells| {
                    let top = cells[full] as usize;
                    // Thin edges s range over s_min..=top, keeping two pairs.
                    let hi = top.min(r - 2);
                    if hi >= s_min {
                        (hi - s_min + 1) as u128
                    } else {
                        0
                    }
                })
                .sum();
            if count > 0 {
                *counts
                    .entry((Category::A, r, m, CountMode::Exact))
                    .or_default() += count;
            }
        }
    }

    Ok(counts
        .into_iter()
        .map(|((category, r, m, mode), count)| StrataRow {
            n,
            k,
            category,
            r,
            m,
            count,
            mode,
        })
        .collect())
}

/// Spikes from the cell-equation construction on `2t` elements for bound
/// `k`, one per isomorphism class (classes told apart by truncated signature).
pub fn sk_excluded_minors(t: usize, k: usize) -> Result<Vec<SpikeSpec>, LiftError> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for phi in bottom_solutions(t, k)? {
        let spec = bottom_construct(&phi, t, k)?;
        if seen.insert(glance_signature(&spec.as_lift())?) {
            out.push(spec);
        }
    }
    Ok(out)
}
