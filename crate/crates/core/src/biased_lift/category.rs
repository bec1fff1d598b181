use super::glance::canonical_pick_families;
use super::graph::{graphic, lift_unchecked, GGraph, LinearClass};
use super::LiftError;
use crate::bits;
use crate::kernel::{IsoInvariant, Matroid};
use std::collections::HashMap;
use std::fmt;

/// Largest ground set for which category membership is decided exactly.
pub const EXACT_LIMIT: usize = 14;

/// The six families whose union is the class of minors of spikes with at most
/// `k` balanced Hamiltonian cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category {
    /// Lift of a cycle graph with at most `k` balanced Hamiltonian cycles.
    A,
    /// Lift of a two-vertex graph with at most `k` edge-disjoint balanced cycles.
    B,
    /// Lift of a one-vertex graph with at most `min(k, 1)` balanced loops.
    C,
    /// Cycle matroid of a graph in the class.
    D,
    /// Dual of such a cycle matroid.
    E,
    /// Every component has at most two elements.
    F,
}

impl Category {
    pub const ALL: [Category; 6] = [
        Category::A,
        Category::B,
        Category::C,
        Category::D,
        Category::E,
        Category::F,
    ];
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// How a category member is built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Construction {
    /// Loops, coloops and parallel pairs.
    Small {
        loops: usize,
        coloops: usize,
        pairs: usize,
    },
    /// Lift or cycle matroid of a graph with the given balanced cycles.
    Lift {
        graph: GGraph,
        balanced: LinearClass,
    },
    /// Dual of the cycle matroid of a graph.
    Cographic { graph: GGraph },
}

#[derive(Debug, Clone)]
pub struct CategoryMember {
    pub category: Category,
    pub construction: Construction,
    /// Number of balanced cycles in the construction (zero for D, E, F).
    pub balanced: usize,
    pub matroid: Matroid,
}

impl CategoryMember {
    pub fn rank(&self) -> usize {
        self.matroid.rank()
    }
}

/// Direct sum of `loops` loops, `coloops` coloops and `pairs` parallel pairs.
pub fn small_components(loops: usize, coloops: usize, pairs: usize) -> Matroid {
    let mut m = Matroid::uniform(0, loops).expect("valid");
    let coloop = Matroid::uniform(1, 1).expect("valid");
    let pair = Matroid::uniform(1, 2).expect("valid");
    for _ in 0..coloops {
        m = m.direct_sum(&coloop).expect("small");
    }
    for _ in 0..pairs {
        m = m.direct_sum(&pair).expect("small");
    }
    m
}

/// Graphs of the class with `n` edges, up to the order of pairs and thin edges.
pub fn class_graphs(n: usize) -> Vec<GGraph> {
    let mut out = vec![GGraph::single(n)];
    for j in 1..=4.min(n) {
        out.push(GGraph::two(j, n - j));
    }
    for t in 0..=n / 2 {
        for s in 0..=n - 2 * t {
            if t + s >= 3 {
                out.push(GGraph::cycle(t, s, n - 2 * t - s));
            }
        }
    }
    out
}

/// Parameter descriptions of all members of every category on `n` elements
/// for bound `k`, without building matroids. Category A families are listed up
/// to flipping and permuting pairs.
pub fn category_constructions(n: usize, k: usize) -> Vec<(Category, Construction)> {
    let mut out = Vec::new();
    // A
    for t in 0..=n / 2 {
        for s in 0..=n - 2 * t {
            if t + s < 3 {
                continue;
            }
            let g = GGraph::cycle(t, s, n - 2 * t - s);
            let max_m = if t == 0 { 1 } else { 1usize << (t - 1).min(20) };
            for m in 0..=k.min(max_m) {
                for picks in canonical_pick_families(t, m) {
                    out.push((
                        Category::A,
                        Construction::Lift {
                            graph: g,
                            balanced: LinearClass::hamiltonian(&g, &picks),
                        },
                    ));
                }
            }
        }
    }
    // B
    for j in 1..=4.min(n) {
        let g = GGraph::two(j, n - j);
        for b in 0..=k.min(j / 2) {
            let cycles = (0..b)
                .map(|i| bits::bit(2 * i) | bits::bit(2 * i + 1))
                .collect();
            out.push((
                Category::B,
                Construction::Lift {
                    graph: g,
                    balanced: LinearClass::new(cycles),
                },
            ));
        }
    }
    // C
    if n >= 1 {
        let g = GGraph::single(n);
        for b in 0..=k.min(1) {
            let cycles = (0..b).map(bits::bit).collect();
            out.push((
                Category::C,
                Construction::Lift {
                    graph: g,
                    balanced: LinearClass::new(cycles),
                },
            ));
        }
    }
    // D, E
    for g in class_graphs(n) {
        out.push((
            Category::D,
            Construction::Lift {
                graph: g,
                balanced: LinearClass::all_cycles(&g),
            },
        ));
    }
    for g in class_graphs(n) {
        out.push((Category::E, Construction::Cographic { graph: g }));
    }
    // F
    for pairs in 0..=n / 2 {
        for coloops in 0..=n - 2 * pairs {
            out.push((
                Category::F,
                Construction::Small {
                    loops: n - 2 * pairs - coloops,
                    coloops,
                    pairs,
                },
            ));
        }
    }
    out
}

pub fn build(c: &Construction) -> Matroid {
    match c {
        Construction::Small {
            loops,
            coloops,
            pairs,
        } => small_components(*loops, *coloops, *pairs),
        Construction::Lift { graph, balanced } => lift_unchecked(graph, balanced),
        Construction::Cographic { graph } => graphic(graph).expect("class graph").dual(),
    }
}

fn balanced_count(c: &Category, con: &Construction) -> usize {
    match (c, con) {
        (Category::A | Category::B | Category::C, Construction::Lift { balanced, .. }) => {
            balanced.len()
        }
        _ => 0,
    }
}

/// Every member of every category on `n` elements, ordered by category.
pub fn category_members(n: usize, k: usize) -> Result<Vec<CategoryMember>, LiftError> {
    if n > EXACT_LIMIT {
        return Err(LiftError::TooLargeForExact {
            n,
            limit: EXACT_LIMIT,
        });
    }
    Ok(category_constructions(n, k)
        .into_iter()
        .map(|(category, construction)| {
            let matroid = build(&construction);
            let balanced = balanced_count(&category, &construction);
            CategoryMember {
                category,
                construction,
                balanced,
                matroid,
            }
        })
        .collect())
}

/// Category census on `n` elements for bound `k`, bucketed by isomorphism
/// invariants.
pub struct CategoryIndex {
    n: usize,
    members: Vec<CategoryMember>,
    buckets: HashMap<IsoInvariant, Vec<usize>>,
}

impl CategoryIndex {
    pub fn new(n: usize, k: usize) -> Result<Self, LiftError> {
        let members = category_members(n, k)?;
        let mut buckets: HashMap<IsoInvariant, Vec<usize>> = HashMap::new();
        for (i, m) in members.iter().enumerate() {
            buckets
                .entry(m.matroid.iso_invariant())
                .or_default()
                .push(i);
        }
        Ok(CategoryIndex {
            n,
            members,
            buckets,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[CategoryMember] {
        &self.members
    }

    /// First category (alphabetically) with a member isomorphic to `m`.
    pub fn categorize(&self, m: &Matroid) -> Option<Category> {
        self.find(m).map(|i| self.members[i].category)
    }

    /// Index of the first member isomorphic to `m`.
    pub fn find(&self, m: &Matroid) -> Option<usize> {
        if m.n() != self.n {
            return None;
        }
        let bucket = self.buckets.get(&m.iso_invariant())?;
        bucket
            .iter()
            .copied()
            .find(|&i| self.members[i].matroid.is_isomorphic(m))
    }
}

/// Category of `m` for bound `k`, or `None` when it is not a minor of such a spike.
pub fn categorize(m: &Matroid, k: usize) -> Result<Option<Category>, LiftError> {
    Ok(CategoryIndex::new(m.n(), k)?.categorize(m))
}

/// Five small matroids that are not minors of any spike: a loop, a coloop and
/// `U_{1,3}`; a loop, a coloop and `U_{2,3}`; a loop and `U_{2,4}`; a coloop
/// and `U_{2,4}`; `U_{1,2}` beside the cycle matroid of a triangle with one
/// edge doubled.
pub fn camera_fixtures() -> Vec<Matroid> {
    let u = |r, n| Matroid::uniform(r, n).expect("valid");
    let sum = |a: &Matroid, b: &Matroid| a.direct_sum(b).expect("small");
    let triangle_doubled = graphic(&GGraph::cycle(1, 2, 0)).expect("valid");
    vec![
        sum(&sum(&u(0, 1), &u(1, 1)), &u(1, 3)),
        sum(&sum(&u(0, 1), &u(1, 1)), &u(2, 3)),
        sum(&u(0, 1), &u(2, 4)),
        sum(&u(1, 1), &u(2, 4)),
        sum(&u(1, 2), &triangle_doubled),
    ]
}
