use super::LiftError;
use crate::bits::{self, Mask};
use crate::kernel::table::independent_avoiding;
use crate::kernel::{Matroid, RankTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphKind {
    SingleVertex,
    TwoVertex,
    Cycle,
}

/// A graph in the class of one-vertex graphs, two-vertex graphs with at most
/// four joining edges, and cycles of length at least three with some edges
/// doubled, loops allowed throughout.
///
/// Edge labels: pair `i < t` is `a_i = 2i`, `b_i = 2i + 1`; thin edge `j < s`
/// is `2t + j`; loop `l < p` is `2t + s + l`. On a cycle the vertices are
/// `v_0..v_{t+s}` around the cycle, pair `i` joins `v_i, v_{i+1}` and thin edge
/// `j` joins `v_{t+j}, v_{t+j+1}`. On two vertices every non-loop edge joins
/// them. Loops sit on `v_0`; for lift and graphic matroids their position is
/// irrelevant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GGraph {
    pub kind: GraphKind,
    pub t: usize,
    pub s: usize,
    pub p: usize,
}

impl GGraph {
    pub fn single(p: usize) -> Self {
        GGraph {
            kind: GraphKind::SingleVertex,
            t: 0,
            s: 0,
            p,
        }
    }

    /// Two vertices joined by `joining` edges, labelled as thin edges.
    pub fn two(joining: usize, p: usize) -> Self {
        GGraph {
            kind: GraphKind::TwoVertex,
            t: 0,
            s: joining,
            p,
        }
    }

    pub fn cycle(t: usize, s: usize, p: usize) -> Self {
        GGraph {
            kind: GraphKind::Cycle,
            t,
            s,
            p,
        }
    }

    pub fn n(&self) -> usize {
        2 * self.t + self.s + self.p
    }

    pub fn vertices(&self) -> usize {
        match self.kind {
            GraphKind::SingleVertex => 1,
            GraphKind::TwoVertex => 2,
            GraphKind::Cycle => self.t + self.s,
        }
    }

    pub fn validate(&self) -> Result<(), LiftError> {
        let ok = match self.kind {
            GraphKind::SingleVertex => self.t == 0 && self.s == 0,
            GraphKind::TwoVertex => (1..=4).contains(&(2 * self.t + self.s)),
            GraphKind::Cycle => self.t + self.s >= 3,
        };
        if !ok {
            return Err(LiftError::InvalidGraph(*self));
        }
        if self.n() > bits::MAX_GROUND {
            return Err(LiftError::TooLarge(self.n()));
        }
        Ok(())
    }

    pub fn pair(&self, i: usize) -> Mask {
        bits::bit(2 * i) | bits::bit(2 * i + 1)
    }

    pub fn thins(&self) -> Mask {
        bits::full(2 * self.t + self.s) & !bits::full(2 * self.t)
    }

    pub fn loops(&self) -> Mask {
        bits::full(self.n()) & !bits::full(2 * self.t + self.s)
    }

    /// Edge set of the Hamiltonian cycle of a cycle graph choosing `b_i` at
    /// pair `i` when bit `i` of `pick` is set and `a_i` otherwise.
    pub fn hamiltonian(&self, pick: u32) -> Mask {
        let mut m = self.thins();
        for i in 0..self.t {
            m |= bits::bit(2 * i + ((pick >> i) & 1) as usize);
        }
        m
    }

    /// Edge sets of all cycles, ascending.
    pub fn cycles(&self) -> Vec<Mask> {
        let mut out: Vec<Mask> = bits::elements(self.loops()).map(bits::bit).collect();
        match self.kind {
            GraphKind::SingleVertex => {}
            GraphKind::TwoVertex => out.extend(bits::combinations(2 * self.t + self.s, 2)),
            GraphKind::Cycle => {
                out.extend((0..self.t).map(|i| self.pair(i)));
                out.extend((0..1u32 << self.t).map(|h| self.hamiltonian(h)));
            }
        }
        out.sort_unstable();
        out
    }

    /// Theta subgraphs with their three cycles.
    pub fn thetas(&self) -> Vec<(Mask, [Mask; 3])> {
        let mut out = Vec::new();
        match self.kind {
            GraphKind::SingleVertex => {}
            GraphKind::TwoVertex => {
                for tri in bits::combinations(2 * self.t + self.s, 3) {
                    let e: Vec<usize> = bits::to_vec(tri);
                    let c = |x: usize, y: usize| bits::bit(e[x]) | bits::bit(e[y]);
                    out.push((tri, [c(0, 1), c(0, 2), c(1, 2)]));
                }
            }
            GraphKind::Cycle => {
                // A Hamiltonian cycle plus the other edge of one pair.
                for i in 0..self.t {
                    for h in 0..1u32 << self.t {
                        if h & (1 << i) == 0 {
                            let (x, y) = (self.hamiltonian(h), self.hamiltonian(h | (1 << i)));
                            out.push((x | y, [x, y, self.pair(i)]));
                        }
                    }
                }
            }
        }
        out
    }

    /// Unions of two cycles meeting in at most one vertex.
    fn loose_cycle_pairs(&self) -> Vec<Mask> {
        let cycles = self.cycles();
        let mut out = Vec::new();
        for l in bits::elements(self.loops()) {
            for &c in &cycles {
                if c != bits::bit(l) {
                    out.push(c | bits::bit(l));
                }
            }
        }
        if self.kind == GraphKind::Cycle {
            for i in 0..self.t {
                for j in i + 1..self.t {
                    out.push(self.pair(i) | self.pair(j));
                }
            }
        }
        out
    }
}

/// A set of balanced cycles, as sorted edge masks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LinearClass {
    pub cycles: Vec<Mask>,
}

impl LinearClass {
    pub fn new(mut cycles: Vec<Mask>) -> Self {
        cycles.sort_unstable();
        cycles.dedup();
        LinearClass { cycles }
    }

    pub fn empty() -> Self {
        LinearClass::default()
    }

    /// Hamiltonian cycles of a cycle graph given by pick vectors.
    pub fn hamiltonian(g: &GGraph, picks: &[u32]) -> Self {
        LinearClass::new(picks.iter().map(|&h| g.hamiltonian(h)).collect())
    }

    /// Every cycle balanced: the lift matroid is then the cycle matroid.
    pub fn all_cycles(g: &GGraph) -> Self {
        LinearClass { cycles: g.cycles() }
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn contains(&self, c: Mask) -> bool {
        self.cycles.binary_search(&c).is_ok()
    }

    /// Members are cycles of `g` and no theta holds exactly two of them.
    pub fn validate(&self, g: &GGraph) -> Result<(), LiftError> {
        let all = g.cycles();
        if let Some(&bad) = self.cycles.iter().find(|c| all.binary_search(c).is_err()) {
            return Err(LiftError::InvalidLinearClass(format!(
                "{} is not a cycle",
                mask_str(bad)
            )));
        }
        for (theta, cs) in g.thetas() {
            if cs.iter().filter(|&&c| self.contains(c)).count() == 2 {
                return Err(LiftError::InvalidLinearClass(format!(
                    "theta {} holds exactly two balanced cycles",
                    mask_str(theta)
                )));
            }
        }
        Ok(())
    }

    /// Whether every balanced two-vertex cycle is edge-disjoint from the others.
    pub fn edge_disjoint(&self) -> bool {
        self.cycles
            .iter()
            .enumerate()
            .all(|(i, &x)| self.cycles[i + 1..].iter().all(|&y| x & y == 0))
    }
}

fn mask_str(m: Mask) -> String {
    format!("{:?}", bits::to_vec(m))
}

/// The lift matroid: its circuits are balanced cycles, thetas containing no
/// balanced cycle, and pairs of unbalanced cycles meeting in at most one
/// vertex. Independent sets are those containing none of these (or any other
/// dependent configuration listed alongside them).
pub fn lift_matroid(g: &GGraph, b: &LinearClass) -> Result<Matroid, LiftError> {
    g.validate()?;
    b.validate(g)?;
    Ok(lift_unchecked(g, b))
}

pub(crate) fn lift_unchecked(g: &GGraph, b: &LinearClass) -> Matroid {
    let mut dependent: Vec<Mask> = b.cycles.clone();
    dependent.extend(g.thetas().into_iter().map(|(x, _)| x));
    dependent.extend(g.loose_cycle_pairs());
    let n = g.n();
    let table = RankTable::from_independent(n, &independent_avoiding(n, &dependent));
    let rank = table.rank(bits::full(n));
    let bases = bits::combinations(n, rank)
        .filter(|&x| table.is_independent(x))
        .collect();
    Matroid::from_bases_unchecked(n, bases)
}

/// Cycle matroid of `g`.
pub fn graphic(g: &GGraph) -> Result<Matroid, LiftError> {
    g.validate()?;
    Ok(lift_unchecked(g, &LinearClass::all_cycles(g)))
}

/// Rank predicted by vertex count minus the number of balanced components
/// (graphs here are connected).
pub fn lift_rank_formula(g: &GGraph, b: &LinearClass) -> usize {
    let balanced = g.cycles().iter().all(|&c| b.contains(c));
    g.vertices() - usize::from(balanced)
}

/// Given `M` whose contraction of `e` is the cycle matroid of `g` (labels of
/// `M / e` compacted as usual), returns `g` with `e` added as its last loop and
/// the class of cycles of `g` that are circuits of `M`. The lift of that pair
/// equals `M` after moving `e` to the last label.
pub fn lift_from_contraction(
    m: &Matroid,
    e: usize,
    g: &GGraph,
) -> Result<(GGraph, LinearClass), LiftError> {
    g.validate()?;
    if e >= m.n() || m.n() != g.n() + 1 {
        return Err(LiftError::PremiseViolated);
    }
    if m.contract(e) != lift_unchecked(g, &LinearClass::all_cycles(g)) {
        return Err(LiftError::PremiseViolated);
    }
    // Undo the compaction of e.
    let expand = |c: Mask| -> Mask {
        let low = c & (bits::bit(e) - 1);
        low | ((c & !(bits::bit(e) - 1)) << 1)
    };
    let t = m.table();
    let balanced: Vec<Mask> = g
        .cycles()
        .into_iter()
        .filter(|&c| t.is_circuit(expand(c)))
        .collect();
    let mut ge = *g;
    ge.p += 1;
    let class = LinearClass::new(balanced);
    class.validate(&ge)?;
    Ok((ge, class))
}

/// Relabeling `perm[old] = new` that moves `e` to the last position and keeps
/// the order of the other elements.
pub fn move_to_end(n: usize, e: usize) -> Vec<usize> {
    (0..n)
        .map(|x| {
            if x == e {
                n - 1
            } else if x > e {
                x - 1
            } else {
                x
            }
        })
        .collect()
}
