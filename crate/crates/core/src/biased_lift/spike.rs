use super::graph::{lift_unchecked, GGraph, LinearClass};
use super::LiftError;
use crate::bits::{self, Mask};
use crate::kernel::{Matroid, RankedFlat};

/// Lift of a cycle graph with `t` pairs, `s` thin edges and `p` loops whose
/// balanced cycles are the Hamiltonian cycles given by `picks`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HamiltonianLift {
    pub t: usize,
    pub s: usize,
    pub p: usize,
    pub picks: Vec<u32>,
}

/// A spike: `t` pairs around a cycle, no thin edges or loops.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpikeSpec {
    pub t: usize,
    pub picks: Vec<u32>,
}

/// Whether pick vectors pairwise differ in at least two positions.
pub fn picks_linear(picks: &[u32]) -> bool {
    picks
        .iter()
        .enumerate()
        .all(|(i, &x)| picks[i + 1..].iter().all(|&y| (x ^ y).count_ones() >= 2))
}

impl HamiltonianLift {
    pub fn new(t: usize, s: usize, p: usize, mut picks: Vec<u32>) -> Result<Self, LiftError> {
        picks.sort_unstable();
        picks.dedup();
        let h = HamiltonianLift { t, s, p, picks };
        h.validate()?;
        Ok(h)
    }

    pub fn graph(&self) -> GGraph {
        GGraph::cycle(self.t, self.s, self.p)
    }

    pub fn n(&self) -> usize {
        2 * self.t + self.s + self.p
    }

    pub fn validate(&self) -> Result<(), LiftError> {
        self.graph().validate()?;
        if self.t < 32 && self.picks.iter().any(|&h| h >> self.t != 0) {
            return Err(LiftError::InvalidLinearClass(
                "pick vector longer than the pair count".into(),
            ));
        }
        if !picks_linear(&self.picks) {
            return Err(LiftError::InvalidLinearClass(
                "two picks differ in fewer than two pairs".into(),
            ));
        }
        Ok(())
    }

    pub fn linear_class(&self) -> LinearClass {
        LinearClass::hamiltonian(&self.graph(), &self.picks)
    }

    pub fn matroid(&self) -> Result<Matroid, LiftError> {
        self.validate()?;
        Ok(lift_unchecked(&self.graph(), &self.linear_class()))
    }
}

impl SpikeSpec {
    pub fn new(t: usize, mut picks: Vec<u32>) -> Result<Self, LiftError> {
        picks.sort_unstable();
        picks.dedup();
        let s = SpikeSpec { t, picks };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), LiftError> {
        if self.t < 3 {
            return Err(LiftError::InvalidGraph(GGraph::cycle(self.t, 0, 0)));
        }
        self.as_lift().validate()
    }

    pub fn as_lift(&self) -> HamiltonianLift {
        HamiltonianLift {
            t: self.t,
            s: 0,
            p: 0,
            picks: self.picks.clone(),
        }
    }

    pub fn n(&self) -> usize {
        2 * self.t
    }

    pub fn matroid(&self) -> Result<Matroid, LiftError> {
        self.validate()?;
        spike(self.t, &self.picks)
    }

    /// Edge sets of the balanced Hamiltonian cycles.
    pub fn cycle_sets(&self) -> Vec<Mask> {
        let g = GGraph::cycle(self.t, 0, 0);
        let mut v: Vec<Mask> = self.picks.iter().map(|&h| g.hamiltonian(h)).collect();
        v.sort_unstable();
        v
    }

    /// Number of balanced cycles through element `e`.
    pub fn degree(&self, e: usize) -> usize {
        let (pair, side) = (e / 2, (e % 2) as u32);
        self.picks
            .iter()
            .filter(|&&h| (h >> pair) & 1 == side)
            .count()
    }
}

pub fn spike(t: usize, picks: &[u32]) -> Result<Matroid, LiftError> {
    if t < 3 {
        return Err(LiftError::InvalidGraph(GGraph::cycle(t, 0, 0)));
    }
    HamiltonianLift::new(t, 0, 0, picks.to_vec())?.matroid()
}

/// Complement cycles: every pick bit flipped.
pub fn dual_picks(picks: &[u32], t: usize) -> Vec<u32> {
    let mut v: Vec<u32> = picks.iter().map(|&h| !h & (bits::full(t))).collect();
    v.sort_unstable();
    v
}

/// The dual of the spike equals the spike of the complement cycles, with the
/// same labels.
pub fn duality_check(spec: &SpikeSpec) -> Result<bool, LiftError> {
    let m = spec.matroid()?;
    let d = spike(spec.t, &dual_picks(&spec.picks, spec.t))?;
    Ok(m.dual() == d)
}

/// Cyclic flats in closed form: the ground set at rank `t`, the empty set, each
/// balanced cycle at rank `t - 1`, and every union of `p` pairs at rank `p + 1`
/// for `2 <= p <= t - 2`. Ascending by mask.
pub fn spike_cyclic_flats(spec: &SpikeSpec) -> Result<Vec<RankedFlat>, LiftError> {
    spec.validate()?;
    let t = spec.t;
    let g = GGraph::cycle(t, 0, 0);
    let mut out = vec![
        RankedFlat { flat: 0, rank: 0 },
        RankedFlat {
            flat: bits::full(2 * t),
            rank: t,
        },
    ];
    out.extend(
        spec.cycle_sets()
            .into_iter()
            .map(|flat| RankedFlat { flat, rank: t - 1 }),
    );
    for p in 2..=t.saturating_sub(2) {
        for chosen in bits::combinations(t, p) {
            let flat = bits::elements(chosen).fold(0, |acc, i| acc | g.pair(i));
            out.push(RankedFlat { flat, rank: p + 1 });
        }
    }
    out.sort_unstable_by_key(|f| f.flat);
    Ok(out)
}
