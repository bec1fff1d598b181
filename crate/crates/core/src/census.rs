//! Boundary ratios between member counts and excluded-minor counts, and
//! log-log slope fits of count series.

use crate::biased_lift::census::strata_unchecked;
use crate::biased_lift::{census_sk_strata, sk_excluded_minors, LiftError};
use crate::sparse_paving::{census_pk, sp_excluded_minors, SpError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("slope fit needs at least 5 points with positive counts and distinct positive sizes in the window, got {0}")]
    DegenerateSeries(usize),
    #[error(transparent)]
    SparsePaving(#[from] SpError),
    #[error(transparent)]
    Lift(#[from] LiftError),
}

/// Member count `m`, excluded-minor count `x` and `gamma = x / (m + x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaRow {
    pub n: usize,
    pub m_count: u128,
    /// `"exact"` or `"m-upper"`.
    pub m_mode: &'static str,
    pub x_count: u128,
    /// `"exact"` or `"x-lower"`.
    pub x_mode: &'static str,
    pub gamma_num: u128,
    pub gamma_den: u128,
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl GammaRow {
    pub fn new(
        n: usize,
        m_count: u128,
        m_mode: &'static str,
        x_count: u128,
        x_mode: &'static str,
    ) -> Self {
        let den = m_count + x_count;
        let g = gcd(x_count, den).max(1);
        GammaRow {
            n,
            m_count,
            m_mode,
            x_count,
            x_mode,
            gamma_num: x_count / g,
            gamma_den: den / g,
        }
    }

    pub fn gamma(&self) -> f64 {
        if self.gamma_den == 0 {
            0.0
        } else {
            self.gamma_num as f64 / self.gamma_den as f64
        }
    }

    /// `gamma_num * (m + x) == x * gamma_den` with the fraction in lowest terms.
    pub fn is_consistent(&self) -> bool {
        self.gamma_num * (self.m_count + self.x_count) == self.x_count * self.gamma_den
            && gcd(self.gamma_num, self.gamma_den) <= 1
            && self.gamma_num < self.gamma_den.max(1)
    }
}

/// Rows for sparse paving matroids with at most `k` circuit-hyperplanes. The
/// excluded-minor count covers sparse paving excluded minors only.
pub fn gamma_pk_table(
    k: usize,
    ns: impl IntoIterator<Item = usize>,
) -> Result<Vec<GammaRow>, CensusError> {
    ns.into_iter()
        .map(|n| {
            let m: u128 = census_pk(n, k)?.iter().map(|r| r.count).sum();
            let x = sp_excluded_minors(n, k)?.len() as u128;
            Ok(GammaRow::new(n, m, "exact", x, "x-lower"))
        })
        .collect()
}

/// Rows for minors of spikes with at most `k` balanced Hamiltonian cycles on
/// `2t` elements, and on `2t + 1` elements when `with_odd` is set (these carry
/// no constructed excluded minors). Member counts are strata upper bounds;
/// excluded minors are the constructed spikes, one per signature.
pub fn gamma_sk_table(
    k: usize,
    ts: impl IntoIterator<Item = usize>,
    with_odd: bool,
) -> Result<Vec<GammaRow>, CensusError> {
    if k < 2 {
        return Err(LiftError::BoundOutOfRange(k).into());
    }
    let mut rows = Vec::new();
    for t in ts {
        let n = 2 * t;
        let m: u128 = census_sk_strata(n, k)?.iter().map(|r| r.count).sum();
        let x = if t >= 2 * (k + 1) {
            sk_excluded_minors(t, k)?.len() as u128
        } else {
            0
        };
        rows.push(GammaRow::new(n, m, "m-upper", x, "x-lower"));
        if with_odd {
            let m: u128 = strata_unchecked(n + 1, k)?.iter().map(|r| r.count).sum();
            rows.push(GammaRow::new(n + 1, m, "m-upper", 0, "x-lower"));
        }
    }
    Ok(rows)
}

/// Least-squares slope of `log count` against `log size`.
#[derive(Debug, Clone, PartialEq)]
pub struct SlopeEstimate {
    pub exponent: f64,
    pub window: (f64, f64),
    /// Root-mean-square deviation of the points from the fitted line.
    pub residual: f64,
}

/// Fits points whose size lies in `window` (inclusive).
pub fn slope_fit(series: &[(f64, f64)], window: (f64, f64)) -> Result<SlopeEstimate, CensusError> {
    let pts: Vec<(f64, f64)> = series
        .iter()
        .filter(|&&(x, _)| x >= window.0 && x <= window.1)
        .map(|&(x, y)| (x, y))
        .collect();
    if pts.len() < 5
        || pts
            .iter()
            .any(|&(x, y)| x <= 0.0 || y <= 0.0 || !x.is_finite() || !y.is_finite())
    {
        return Err(CensusError::DegenerateSeries(pts.len()));
    }
    let logs: Vec<(f64, f64)> = pts.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let len = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / len;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / len;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(CensusError::DegenerateSeries(pts.len()));
    }
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let exponent = sxy / sxx;
    let intercept = my - exponent * mx;
    let sse: f64 = logs
        .iter()
        .map(|p| (p.1 - intercept - exponent * p.0).powi(2))
        .sum();
    Ok(SlopeEstimate {
        exponent,
        window,
        residual: (sse / len).sqrt(),
    })
}
