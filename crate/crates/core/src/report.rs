//! Machine-readable JSON reports and the human summary tables.
//!
//! Every real number in a report carries 6 significant digits. Predicted
//! deltas are computed from the rounded alpha and gamma.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::analysis::{series_label, OneRegimeAnalysis, SeriesAnalysis, TwoRegimeAnalysis};
use crate::lexicon::DropSummary;
use crate::powerlaw::{Law, PowerLawFit};
use crate::regimes::{BreakpointSource, TwoRegimeFit};

/// Rounds to 6 significant digits.
pub fn sig6(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.5e}").parse().unwrap_or(x)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    pub law: Law,
    pub exponent: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub sse_log: f64,
    pub n_points: usize,
    pub bin_size: Option<usize>,
}

impl FitReport {
    pub fn new(fit: &PowerLawFit, bin_size: Option<usize>) -> Self {
        FitReport {
            law: fit.law,
            exponent: sig6(fit.exponent),
            intercept: sig6(fit.log_intercept),
            r_squared: sig6(fit.r_squared),
            sse_log: sig6(fit.sse_log),
            n_points: fit.n_points,
            bin_size,
        }
    }

    /// Signed slope of the fitted log-log line.
    pub fn slope(&self) -> f64 {
        match self.law {
            Law::RankFrequency | Law::MeaningDistribution => -self.exponent,
            Law::MeaningFrequency => self.exponent,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OneRegimeReport {
    pub rank_frequency: FitReport,
    pub meaning_distribution: FitReport,
    pub meaning_frequency: FitReport,
    pub alpha: f64,
    pub gamma: f64,
    pub delta: f64,
    pub delta_predicted: f64,
    pub delta_abs_diff: f64,
}

impl OneRegimeReport {
    pub fn new(a: &OneRegimeAnalysis, bin_size: Option<usize>) -> Self {
        let rank_frequency = FitReport::new(&a.alpha, bin_size);
        let meaning_distribution = FitReport::new(&a.gamma, bin_size);
        let meaning_frequency = FitReport::new(&a.delta, bin_size);
        let alpha = rank_frequency.exponent;
        let gamma = meaning_distribution.exponent;
        let delta = meaning_frequency.exponent;
        let delta_predicted = sig6(gamma / alpha);
        OneRegimeReport {
            rank_frequency,
            meaning_distribution,
            meaning_frequency,
            alpha,
            gamma,
            delta,
            delta_predicted,
            delta_abs_diff: sig6((delta - delta_predicted).abs()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegimePairReport {
    pub fit1: FitReport,
    pub fit2: FitReport,
    pub total_deviance: f64,
}

impl RegimePairReport {
    fn new(f: &TwoRegimeFit, bin_size: Option<usize>) -> Self {
        RegimePairReport {
            fit1: FitReport::new(&f.fit1, bin_size),
            fit2: FitReport::new(&f.fit2, bin_size),
            total_deviance: sig6(f.total_deviance),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BreakpointReport {
    pub split_index: usize,
    pub i_star: f64,
    pub f_of_i_star: f64,
    pub source: BreakpointSource,
    pub deviance: f64,
    /// Split ranks of every local minimum of the deviance curve.
    pub local_minima: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwoRegimeReport {
    pub breakpoint: BreakpointReport,
    pub rank_frequency: RegimePairReport,
    pub meaning_distribution: RegimePairReport,
    pub meaning_frequency: RegimePairReport,
    pub alpha1: f64,
    pub alpha2: f64,
    pub gamma1: f64,
    pub gamma2: f64,
    pub delta1: f64,
    pub delta2: f64,
    pub delta1_predicted: f64,
    pub delta2_predicted: f64,
    pub delta1_abs_diff: f64,
    pub delta2_abs_diff: f64,
}

impl TwoRegimeReport {
    pub fn new(a: &TwoRegimeAnalysis, bin_size: Option<usize>) -> Self {
        let rank_frequency = RegimePairReport::new(&a.alpha, bin_size);
        let meaning_distribution = RegimePairReport::new(&a.gamma, bin_size);
        let meaning_frequency = RegimePairReport::new(&a.delta, bin_size);
        let (alpha1, alpha2) = (rank_frequency.fit1.exponent, rank_frequency.fit2.exponent);
        let (gamma1, gamma2) = (
            meaning_distribution.fit1.exponent,
            meaning_distribution.fit2.exponent,
        );
        let (delta1, delta2) = (meaning_frequency.fit1.exponent, meaning_frequency.fit2.exponent);
        let delta1_predicted = sig6(gamma1 / alpha1);
        let delta2_predicted = sig6(gamma2 / alpha2);
        let bp = &a.breakpoint;
        let deviance = a
            .curve
            .get(bp.split_index)
            .map_or(f64::NAN, |c| c.deviance);
        TwoRegimeReport {
            breakpoint: BreakpointReport {
                split_index: bp.split_index,
                i_star: sig6(bp.i_star),
                f_of_i_star: sig6(bp.f_of_i_star),
                source: bp.source,
                deviance: sig6(deviance),
                local_minima: a.local_minima.iter().map(|c| sig6(c.split_rank)).collect(),
            },
            rank_frequency,
            meaning_distribution,
            meaning_frequency,
            alpha1,
            alpha2,
            gamma1,
            gamma2,
            delta1,
            delta2,
            delta1_predicted,
            delta2_predicted,
            delta1_abs_diff: sig6((delta1 - delta1_predicted).abs()),
            delta2_abs_diff: sig6((delta2 - delta2_predicted).abs()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub label: String,
    pub bin_size: Option<usize>,
    pub n_points: usize,
    pub dropped_records: usize,
    pub one_regime: Option<OneRegimeReport>,
    pub two_regime: Option<TwoRegimeReport>,
}

impl SeriesReport {
    pub fn new(a: &SeriesAnalysis) -> Self {
        SeriesReport {
            label: series_label(a.bin_size),
            bin_size: a.bin_size,
            n_points: a.series.len(),
            dropped_records: a.series.dropped,
            one_regime: a.one.as_ref().map(|o| OneRegimeReport::new(o, a.bin_size)),
            two_regime: a.two.as_ref().map(|t| TwoRegimeReport::new(t, a.bin_size)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DropReport {
    pub corpus_only: usize,
    pub dictionary_only: usize,
}

impl From<DropSummary> for DropReport {
    fn from(d: DropSummary) -> Self {
        DropReport {
            corpus_only: d.corpus_only,
            dictionary_only: d.dictionary_only,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub lexicon_size: usize,
    pub intersection_dropped: Option<DropReport>,
    pub series: Vec<SeriesReport>,
}

impl Report {
    pub fn new(lexicon_size: usize, dropped: Option<DropSummary>, analyses: &[SeriesAnalysis]) -> Self {
        Report {
            lexicon_size,
            intersection_dropped: dropped.map(Into::into),
            series: analyses.iter().map(SeriesReport::new).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Fixed-width tables with 3 decimals, one-regime table first.
    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        let size = |s: &SeriesReport| s.bin_size.map_or_else(|| "-".to_owned(), |b| b.to_string());

        let ones: Vec<_> = self
            .series
            .iter()
            .filter_map(|s| s.one_regime.as_ref().map(|o| (s, o)))
            .collect();
        if !ones.is_empty() {
            let _ = writeln!(out, "One regime");
            let _ = writeln!(
                out,
                "{:>8} {:>8} {:>8} {:>8} {:>8}",
                "bin_size", "alpha", "gamma", "delta", "delta'"
            );
            for (s, o) in ones {
                let _ = writeln!(
                    out,
                    "{:>8} {:>8.3} {:>8.3} {:>8.3} {:>8.3}",
                    size(s),
                    o.alpha,
                    o.gamma,
                    o.delta,
                    o.delta_predicted
                );
            }
        }

        let twos: Vec<_> = self
            .series
            .iter()
            .filter_map(|s| s.two_regime.as_ref().map(|t| (s, t)))
            .collect();
        if !twos.is_empty() {
            if !out.is_empty() {
                out.push('\n');
            }
            let _ = writeln!(out, "Two regimes");
            let _ = writeln!(
                out,
                "{:>8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>10} {:>12}",
                "bin_size", "alpha1", "alpha2", "gamma1", "gamma2", "delta1", "delta1'", "delta2",
                "delta2'", "i*", "f(i*)"
            );
            for (s, t) in twos {
                let _ = writeln!(
                    out,
                    "{:>8} {:>8.3} {:>8.3} {:>8.3} {:>8.3} {:>8.3} {:>8.3} {:>8.3} {:>8.3} {:>10.3} {:>12.3}",
                    size(s),
                    t.alpha1,
                    t.alpha2,
                    t.gamma1,
                    t.gamma2,
                    t.delta1,
                    t.delta1_predicted,
                    t.delta2,
                    t.delta2_predicted,
                    t.breakpoint.i_star,
                    t.breakpoint.f_of_i_star
                );
            }
        }
        out
    }
}
