//! JSON and CSV interchange formats.

use crate::biased_lift::{GGraph, GraphKind, LiftError, SpikeSpec, StrataRow};
use crate::bits::{self, Mask};
use crate::census::GammaRow;
use crate::kernel::{KernelError, Matroid};
use crate::sparse_paving::{CHFamily, CensusRow, SpError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("CSV output failed: {0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    SparsePaving(#[from] SpError),
    #[error(transparent)]
    Lift(#[from] LiftError),
}

#[derive(Serialize, Deserialize)]
struct MatroidJson {
    n: usize,
    rank: usize,
    bases: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct FamilyJson {
    n: usize,
    rank: usize,
    chs: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct SpikeJson {
    t: usize,
    picks: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    kind: String,
    t: usize,
    s: usize,
    p: usize,
}

fn sorted_lists(masks: &[Mask]) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = masks.iter().map(|&m| bits::to_vec(m)).collect();
    v.sort();
    v
}

fn to_masks(lists: &[Vec<usize>], n: usize) -> Result<Vec<Mask>, FormatError> {
    lists
        .iter()
        .map(|l| {
            if let Some(&e) = l.iter().find(|&&e| e >= n) {
                return Err(FormatError::Invalid(format!(
                    "element {e} outside ground set of size {n}"
                )));
            }
            let m = bits::from_elements(l.iter().copied());
            if bits::size(m) != l.len() {
                return Err(FormatError::Invalid(format!("repeated element in {l:?}")));
            }
            Ok(m)
        })
        .collect()
}

fn with_newline(mut s: String) -> String {
    s.push('\n');
    s
}

pub fn matroid_to_json(m: &Matroid) -> String {
    let j = MatroidJson {
        n: m.n(),
        rank: m.rank(),
        bases: sorted_lists(m.bases()),
    };
    with_newline(serde_json::to_string(&j).expect("serializable"))
}

/// Parses and validates a matroid; the stated rank must match the bases.
pub fn matroid_from_json(s: &str) -> Result<Matroid, FormatError> {
    let j: MatroidJson = serde_json::from_str(s)?;
    if j.n > bits::MAX_GROUND {
        return Err(KernelError::TooLarge(j.n).into());
    }
    let m = Matroid::new(j.n, to_masks(&j.bases, j.n)?)?;
    if m.rank() != j.rank {
        return Err(FormatError::Invalid(format!(
            "stated rank {} but bases have size {}",
            j.rank,
            m.rank()
        )));
    }
    Ok(m)
}

pub fn family_to_json(f: &CHFamily) -> String {
    let j = FamilyJson {
        n: f.n,
        rank: f.rank,
        chs: sorted_lists(&f.chs),
    };
    with_newline(serde_json::to_string(&j).expect("serializable"))
}

/// Parses a circuit-hyperplane family without validating it.
pub fn family_from_json(s: &str) -> Result<CHFamily, FormatError> {
    let j: FamilyJson = serde_json::from_str(s)?;
    if j.n > bits::MAX_GROUND {
        return Err(SpError::TooLarge(j.n).into());
    }
    Ok(CHFamily {
        n: j.n,
        rank: j.rank,
        chs: to_masks(&j.chs, j.n)?,
    })
}

/// Pick vector as a string: character `i` is `1` when the cycle takes `b_i`.
pub fn pick_string(h: u32, t: usize) -> String {
    (0..t)
        .map(|i| if (h >> i) & 1 == 1 { '1' } else { '0' })
        .collect()
}

pub fn parse_pick(s: &str, t: usize) -> Result<u32, FormatError> {
    if s.len() != t || t > 32 {
        return Err(FormatError::Invalid(format!(
            "pick {s:?} must have length {t}"
        )));
    }
    s.chars().enumerate().try_fold(0u32, |acc, (i, c)| match c {
        '0' => Ok(acc),
        '1' => Ok(acc | 1 << i),
        _ => Err(FormatError::Invalid(format!(
            "pick {s:?} must use only 0 and 1"
        ))),
    })
}

pub fn spike_to_json(spec: &SpikeSpec) -> String {
    let mut picks: Vec<String> = spec.picks.iter().map(|&h| pick_string(h, spec.t)).collect();
    picks.sort();
    with_newline(serde_json::to_string(&SpikeJson { t: spec.t, picks }).expect("serializable"))
}

/// Parses and validates a spike.
pub fn spike_from_json(s: &str) -> Result<SpikeSpec, FormatError> {
    let j: SpikeJson = serde_json::from_str(s)?;
    let picks = j
        .picks
        .iter()
        .map(|p| parse_pick(p, j.t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SpikeSpec::new(j.t, picks)?)
}

pub fn graph_to_json(g: &GGraph) -> String {
    let kind = match g.kind {
        GraphKind::SingleVertex => "single",
        GraphKind::TwoVertex => "two",
        GraphKind::Cycle => "cycle",
    };
    with_newline(
        serde_json::to_string(&GraphJson {
            kind: kind.into(),
            t: g.t,
            s: g.s,
            p: g.p,
        })
        .expect("serializable"),
    )
}

/// Parses and validates a graph.
pub fn graph_from_json(s: &str) -> Result<GGraph, FormatError> {
    let j: GraphJson = serde_json::from_str(s)?;
    let kind = match j.kind.as_str() {
        "single" => GraphKind::SingleVertex,
        "two" => GraphKind::TwoVertex,
        "cycle" => GraphKind::Cycle,
        other => {
            return Err(FormatError::Invalid(format!(
                "unknown graph kind {other:?}"
            )))
        }
    };
    let g = GGraph {
        kind,
        t: j.t,
        s: j.s,
        p: j.p,
    };
    g.validate()?;
    Ok(g)
}

fn write_csv<I: IntoIterator<Item = Vec<String>>>(
    header: &[&str],
    rows: I,
) -> Result<String, FormatError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| FormatError::Invalid(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("ASCII output"))
}

pub fn census_csv(rows: &[CensusRow]) -> Result<String, FormatError> {
    write_csv(
        &["n", "k", "m", "count"],
        rows.iter().map(|r| {
            vec![
                r.n.to_string(),
                r.k.to_string(),
                r.m.to_string(),
                r.count.to_string(),
            ]
        }),
    )
}

pub fn strata_csv(rows: &[StrataRow]) -> Result<String, FormatError> {
    write_csv(
        &["n", "k", "category", "r", "m", "count", "mode"],
        rows.iter().map(|r| {
            vec![
                r.n.to_string(),
                r.k.to_string(),
                r.category.to_string(),
                r.r.to_string(),
                r.m.to_string(),
                r.count.to_string(),
                r.mode.to_string(),
            ]
        }),
    )
}

pub fn gamma_csv(rows: &[GammaRow]) -> Result<String, FormatError> {
    write_csv(
        &[
            "n",
            "m_count",
            "m_mode",
            "x_count",
            "x_mode",
            "gamma_num",
            "gamma_den",
            "gamma",
        ],
        rows.iter().map(|r| {
            vec![
                r.n.to_string(),
                r.m_count.to_string(),
                r.m_mode.to_string(),
                r.x_count.to_string(),
                r.x_mode.to_string(),
                r.gamma_num.to_string(),
                r.gamma_den.to_string(),
                format!("{:.12}", r.gamma()),
            ]
        }),
    )
}
