//! The full protocol for one lexicon: bin, fit the three laws, and optionally
//! locate a breakpoint and fit both regimes.

use crate::binning::{equal_size_bin, BinnedSeries, RemainderPolicy};
use crate::error::{Error, Result};
use crate::lexicon::RankedLexicon;
use crate::powerlaw::{fit_law, predicted_delta, Law, PowerLawFit};
use crate::regimes::{
    local_minima, predicted_deltas, rank_frequency_deviance, select_breakpoint, two_regime_fit,
    Breakpoint, BreakpointStrategy, DevianceCandidate, DevianceCurve, TwoRegimeFit,
    DEFAULT_MIN_SEGMENT,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RegimeMode {
    One,
    Two,
    #[default]
    Both,
}

impl RegimeMode {
    pub fn one(self) -> bool {
        matches!(self, RegimeMode::One | RegimeMode::Both)
    }

    pub fn two(self) -> bool {
        matches!(self, RegimeMode::Two | RegimeMode::Both)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub regimes: RegimeMode,
    pub strategy: BreakpointStrategy,
    pub min_segment: usize,
    pub remainder: RemainderPolicy,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            regimes: RegimeMode::Both,
            strategy: BreakpointStrategy::GlobalMin,
            min_segment: DEFAULT_MIN_SEGMENT,
            remainder: RemainderPolicy::Strict,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OneRegimeAnalysis {
    pub alpha: PowerLawFit,
    pub gamma: PowerLawFit,
    pub delta: PowerLawFit,
    pub delta_predicted: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TwoRegimeAnalysis {
    pub curve: DevianceCurve,
    pub local_minima: Vec<DevianceCandidate>,
    pub breakpoint: Breakpoint,
    pub alpha: TwoRegimeFit,
    pub gamma: TwoRegimeFit,
    pub delta: TwoRegimeFit,
    pub delta1_predicted: f64,
    pub delta2_predicted: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesAnalysis {
    /// `None` for the unbinned lexicon.
    pub bin_size: Option<usize>,
    pub series: BinnedSeries,
    pub one: Option<OneRegimeAnalysis>,
    pub two: Option<TwoRegimeAnalysis>,
}

impl SeriesAnalysis {
    /// `raw` or `bin<size>`; used in output file names.
    pub fn label(&self) -> String {
        series_label(self.bin_size)
    }
}

pub fn series_label(bin_size: Option<usize>) -> String {
    match bin_size {
        None => "raw".to_owned(),
        Some(b) => format!("bin{b}"),
    }
}

fn stage<T>(name: &'static str, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::Stage {
        stage: name,
        inner: Box::new(e),
    })
}

pub fn one_regime(series: &BinnedSeries) -> Result<OneRegimeAnalysis> {
    let alpha = stage("rank-frequency fit", fit_law(Law::RankFrequency, series))?;
    let gamma = stage("meaning distribution fit", fit_law(Law::MeaningDistribution, series))?;
    let delta = stage("meaning-frequency fit", fit_law(Law::MeaningFrequency, series))?;
    let delta_predicted = stage("exponent relation", predicted_delta(alpha.exponent, gamma.exponent))?;
    Ok(OneRegimeAnalysis {
        alpha,
        gamma,
        delta,
        delta_predicted,
    })
}

pub fn two_regime(series: &BinnedSeries, opts: &AnalysisOptions) -> Result<TwoRegimeAnalysis> {
    let curve = stage("deviance scan", rank_frequency_deviance(series, opts.min_segment))?;
    let minima = local_minima(&curve);
    let breakpoint = stage("breakpoint selection", select_breakpoint(&curve, series, opts.strategy))?;
    let alpha = stage("two-regime rank-frequency fit", two_regime_fit(Law::RankFrequency, series, &breakpoint))?;
    let gamma = stage(
        "two-regime meaning distribution fit",
        two_regime_fit(Law::MeaningDistribution, series, &breakpoint),
    )?;
    let delta = stage(
        "two-regime meaning-frequency fit",
        two_regime_fit(Law::MeaningFrequency, series, &breakpoint),
    )?;
    let (delta1_predicted, delta2_predicted) = stage(
        "exponent relation",
        predicted_deltas(
            alpha.fit1.exponent,
            alpha.fit2.exponent,
            gamma.fit1.exponent,
            gamma.fit2.exponent,
        ),
    )?;
    Ok(TwoRegimeAnalysis {
        curve,
        local_minima: minima,
        breakpoint,
        alpha,
        gamma,
        delta,
        delta1_predicted,
        delta2_predicted,
    })
}

pub fn analyze_series(
    series: BinnedSeries,
    bin_size: Option<usize>,
    opts: &AnalysisOptions,
) -> Result<SeriesAnalysis> {
    let one = if opts.regimes.one() {
        Some(one_regime(&series)?)
    } else {
        None
    };
    let two = if opts.regimes.two() {
        Some(two_regime(&series, opts)?)
    } else {
        None
    };
    Ok(SeriesAnalysis {
        bin_size,
        series,
        one,
        two,
    })
}

/// Runs the protocol on the raw lexicon (when `include_raw` or no bin sizes
/// are given) and then on each bin size, in that order.
pub fn analyze_lexicon(
    lex: &RankedLexicon,
    bin_sizes: &[usize],
    include_raw: bool,
    opts: &AnalysisOptions,
) -> Result<Vec<SeriesAnalysis>> {
    let mut out = Vec::new();
    if include_raw || bin_sizes.is_empty() {
        out.push(analyze_series(BinnedSeries::from(lex), None, opts)?);
    }
    for &size in bin_sizes {
        let series = stage("binning", equal_size_bin(lex, size, opts.remainder))?;
        out.push(analyze_series(series, Some(size), opts)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::{generate, SynthSpec};

    #[test]
    fn exact_single_regime_pipeline() {
        let lex = generate(&SynthSpec::single(600, 1.0e6, 1.0, 200.0, 0.5)).unwrap();
        let opts = AnalysisOptions {
            regimes: RegimeMode::One,
            ..Default::default()
        };
        let res = analyze_lexicon(&lex, &[1, 2, 3], true, &opts).unwrap();
        assert_eq!(res.len(), 4);
        assert_eq!(res[0].label(), "raw");
        assert_eq!(res[3].label(), "bin3");
        let raw = res[0].one.as_ref().unwrap();
        assert!((raw.alpha.exponent - 1.0).abs() < 1e-9);
        assert!((raw.gamma.exponent - 0.5).abs() < 1e-9);
        assert!((raw.delta.exponent - 0.5).abs() < 1e-9);
        assert!((raw.delta_predicted - 0.5).abs() < 1e-9);
        assert!(res[0].two.is_none());
        assert_eq!(res[1].one, res[0].one);
    }

    #[test]
    fn stage_names_surface_in_errors() {
        let lex = generate(&SynthSpec::single(7, 100.0, 1.0, 2.0, 0.0)).unwrap();
        let err = analyze_lexicon(&lex, &[2], false, &AnalysisOptions::default()).unwrap_err();
        assert_eq!(
            err.to_string(),
            "binning: bin size 2 does not divide 7; nearest valid bin sizes: 1, 7"
        );
        let lex = generate(&SynthSpec::single(5, 100.0, 1.0, 2.0, 0.0)).unwrap();
        let err = analyze_lexicon(&lex, &[], false, &AnalysisOptions::default()).unwrap_err();
        assert!(err.to_string().starts_with("deviance scan: insufficient data"));
    }

    #[test]
    fn two_regime_pipeline() {
        let spec = SynthSpec {
            n: 400,
            alpha1: 1.0,
            alpha2: 2.0,
            i_star: 80,
            c: 1.0e6,
            gamma1: 0.5,
            gamma2: 0.3,
            d: 100.0,
            noise_sigma: 0.0,
            seed: 0,
        };
        let lex = generate(&spec).unwrap();
        let res = analyze_lexicon(&lex, &[], false, &AnalysisOptions::default()).unwrap();
        let two = res[0].two.as_ref().unwrap();
        assert!((two.breakpoint.i_star - 80.0).abs() <= 0.5);
        assert!((two.alpha.fit1.exponent - 1.0).abs() < 1e-9);
        assert!((two.alpha.fit2.exponent - 2.0).abs() < 1e-9);
        assert!((two.delta1_predicted - 0.5).abs() < 1e-9);
        assert!((two.delta2_predicted - 0.15).abs() < 1e-9);
        assert!((two.delta.fit1.exponent - 0.5).abs() < 1e-9);
        assert!((two.delta.fit2.exponent - 0.15).abs() < 1e-9);
    }
}
