//! Two-regime analysis: exhaustive breakpoint scan, breakpoint selection,
//! transfer of the breakpoint to the frequency axis, and independent power-law
//! fits on either side.
//!
//! Regime 1 is always the low-rank, high-frequency side.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::binning::AsSeries;
use crate::error::{Error, Regime, Result};
use crate::powerlaw::{fit_logs, log_points, Law, Moments, PowerLawFit};

pub const DEFAULT_MIN_SEGMENT: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DevianceCandidate {
    /// Number of points in the first segment.
    pub split_index: usize,
    /// Midpoint of the x values on either side of the split.
    pub split_rank: f64,
    /// Sum of both segments' log-space squared residuals.
    pub deviance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DevianceCurve {
    pub min_segment: usize,
    pub candidates: Vec<DevianceCandidate>,
}

impl DevianceCurve {
    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    pub fn get(&self, split_index: usize) -> Option<&DevianceCandidate> {
        let first = self.candidates.first()?.split_index;
        self.candidates
            .get(split_index.checked_sub(first)?)
            .filter(|c| c.split_index == split_index)
    }

    /// Lowest deviance; the earliest split wins ties.
    pub fn global_min(&self) -> Option<&DevianceCandidate> {
        self.candidates
            .iter()
            .reduce(|best, c| if c.deviance < best.deviance { c } else { best })
    }

    pub fn write_tsv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "split_index\tsplit_rank\tdeviance")?;
        for c in &self.candidates {
            writeln!(out, "{}\t{}\t{}", c.split_index, c.split_rank, c.deviance)?;
        }
        Ok(())
    }
}

/// Fits a line to each side of every admissible split of `points` and records
/// the summed log-space squared error.
///
/// `points` must be sorted by ascending x. A split at `k` puts the first `k`
/// points in segment 1; each segment keeps at least `min_segment` points.
pub fn deviance_scan(points: &[(f64, f64)], min_segment: usize) -> Result<DevianceCurve> {
    if min_segment < 2 {
        return Err(Error::Domain(format!(
            "min_segment must be at least 2, got {min_segment}"
        )));
    }
    let n = points.len();
    if n < 2 * min_segment {
        return Err(Error::InsufficientData {
            needed: 2 * min_segment,
            got: n,
        });
    }
    if points.windows(2).any(|w| w[1].0 < w[0].0) {
        return Err(Error::Domain("deviance scan needs points sorted by x".into()));
    }
    let logs = log_points(points)?;

    // prefix[k] and suffix[k] summarize logs[..k] and logs[k..].
    let mut prefix = Vec::with_capacity(n + 1);
    let mut m = Moments::default();
    prefix.push(m);
    for &(u, v) in &logs {
        m.push(u, v);
        prefix.push(m);
    }
    let mut suffix = vec![Moments::default(); n + 1];
    let mut m = Moments::default();
    for k in (0..n).rev() {
        m.push(logs[k].0, logs[k].1);
        suffix[k] = m;
    }

    let candidates = (min_segment..=n - min_segment)
        .map(|k| DevianceCandidate {
            split_index: k,
            split_rank: 0.5 * (points[k - 1].0 + points[k].0),
            deviance: prefix[k].sse() + suffix[k].sse(),
        })
        .collect();
    Ok(DevianceCurve {
        min_segment,
        candidates,
    })
}

/// Deviance scan over the rank-frequency points of a series.
pub fn rank_frequency_deviance<S: AsSeries + ?Sized>(
    series: &S,
    min_segment: usize,
) -> Result<DevianceCurve> {
    deviance_scan(&series.as_series().rank_frequency_points(), min_segment)
}

/// Candidates strictly lower than their neighbours. Runs of equal deviance
/// count as one candidate, reported at their leftmost split; the first and
/// last candidates are compared with their single neighbour only.
pub fn local_minima(curve: &DevianceCurve) -> Vec<DevianceCandidate> {
    let c = &curve.candidates;
    let mut out = Vec::new();
    let mut i = 0;
    while i < c.len() {
        let mut j = i;
        while j + 1 < c.len() && c[j + 1].deviance == c[i].deviance {
            j += 1;
        }
        let left = i == 0 || c[i - 1].deviance > c[i].deviance;
        let right = j + 1 == c.len() || c[j + 1].deviance > c[i].deviance;
        if left && right {
            out.push(c[i]);
        }
        i = j + 1;
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BreakpointSource {
    GlobalMin,
    FirstLocalMin,
    Manual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BreakpointStrategy {
    GlobalMin,
    FirstLocalMin,
    /// Use the candidate with this split index.
    Manual(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Breakpoint {
    pub split_index: usize,
    pub i_star: f64,
    pub f_of_i_star: f64,
    pub source: BreakpointSource,
}

pub fn select_breakpoint<S: AsSeries + ?Sized>(
    curve: &DevianceCurve,
    series: &S,
    strategy: BreakpointStrategy,
) -> Result<Breakpoint> {
    let (chosen, source) = match strategy {
        BreakpointStrategy::GlobalMin => (curve.global_min().copied(), BreakpointSource::GlobalMin),
        BreakpointStrategy::FirstLocalMin => (
            local_minima(curve).first().copied(),
            BreakpointSource::FirstLocalMin,
        ),
        BreakpointStrategy::Manual(k) => {
            let c = curve.get(k).copied();
            if c.is_none() {
                let lo = curve.candidates.first().map_or(0, |c| c.split_index);
                let hi = curve.candidates.last().map_or(0, |c| c.split_index);
                return Err(Error::OutOfRange {
                    what: "manual split index",
                    value: k as f64,
                    lo: lo as f64,
                    hi: hi as f64,
                });
            }
            (c, BreakpointSource::Manual)
        }
    };
    let chosen = chosen.ok_or(Error::InsufficientData { needed: 1, got: 0 })?;
    Ok(Breakpoint {
        split_index: chosen.split_index,
        i_star: chosen.split_rank,
        f_of_i_star: breakpoint_frequency(series, chosen.split_rank)?,
        source,
    })
}

/// Mean raw frequency of the bin whose rank interval
/// `(first_rank - 0.5, last_rank + 0.5]` contains `i_star`.
pub fn breakpoint_frequency<S: AsSeries + ?Sized>(series: &S, i_star: f64) -> Result<f64> {
    let s = series.as_series();
    if let Some(bin) = s.bins.iter().find(|b| b.contains_rank(i_star)) {
        return Ok(bin.mean_frequency);
    }
    let lo = s.bins.first().map_or(f64::NAN, |b| b.rank_interval().0);
    let hi = s.bins.last().map_or(f64::NAN, |b| b.rank_interval().1);
    Err(Error::OutOfRange {
        what: "breakpoint rank",
        value: i_star,
        lo,
        hi,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoRegimeFit {
    pub law: Law,
    pub fit1: PowerLawFit,
    pub fit2: PowerLawFit,
    pub breakpoint: Breakpoint,
    pub total_deviance: f64,
}

fn fit_segment(law: Law, regime: Regime, logs: &[(f64, f64)]) -> Result<PowerLawFit> {
    fit_logs(logs)
        .map(|raw| PowerLawFit::from_raw(law, raw))
        .map_err(|e| Error::DegenerateSegment {
            regime,
            inner: Box::new(e),
        })
}

/// Splits the points of `law` at the breakpoint and fits each side.
///
/// Rank laws split on `mean_rank <= i_star`; the meaning-frequency law splits
/// on `mean_frequency >= f(i_star)`. Both put the matching side in regime 1.
pub fn two_regime_fit<S: AsSeries + ?Sized>(
    law: Law,
    series: &S,
    bp: &Breakpoint,
) -> Result<TwoRegimeFit> {
    let points = law.points(series);
    let logs = log_points(&points)?;
    let in_regime_one = |&(x, _): &(f64, f64)| match law {
        Law::RankFrequency | Law::MeaningDistribution => x <= bp.i_star,
        Law::MeaningFrequency => x >= bp.f_of_i_star,
    };
    let (one, two): (Vec<_>, Vec<_>) = points
        .iter()
        .zip(logs)
        .partition(|(p, _)| in_regime_one(p));
    let one: Vec<_> = one.into_iter().map(|(_, l)| l).collect();
    let two: Vec<_> = two.into_iter().map(|(_, l)| l).collect();
    let fit1 = fit_segment(law, Regime::One, &one)?;
    let fit2 = fit_segment(law, Regime::Two, &two)?;
    Ok(TwoRegimeFit {
        law,
        fit1,
        fit2,
        breakpoint: *bp,
        total_deviance: fit1.sse_log + fit2.sse_log,
    })
}

/// Alpha on either side of the breakpoint.
pub fn two_regime_fit_rank_frequency<S: AsSeries + ?Sized>(
    series: &S,
    bp: &Breakpoint,
) -> Result<TwoRegimeFit> {
    two_regime_fit(Law::RankFrequency, series, bp)
}

/// Gamma on either side of the same rank breakpoint.
pub fn two_regime_fit_meaning_distribution<S: AsSeries + ?Sized>(
    series: &S,
    bp: &Breakpoint,
) -> Result<TwoRegimeFit> {
    two_regime_fit(Law::MeaningDistribution, series, bp)
}

/// Delta above and below the transferred frequency threshold `f(i*)`.
pub fn two_regime_fit_meaning_frequency<S: AsSeries + ?Sized>(
    series: &S,
    bp: &Breakpoint,
) -> Result<TwoRegimeFit> {
    two_regime_fit(Law::MeaningFrequency, series, bp)
}

/// `(gamma1 / alpha1, gamma2 / alpha2)`.
pub fn predicted_deltas(alpha1: f64, alpha2: f64, gamma1: f64, gamma2: f64) -> Result<(f64, f64)> {
    let d1 = crate::powerlaw::predicted_delta(alpha1, gamma1)?;
    let d2 = crate::powerlaw::predicted_delta(alpha2, gamma2)?;
    Ok((d1, d2))
}
