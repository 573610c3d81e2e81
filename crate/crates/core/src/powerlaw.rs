//! Single-regime power-law fits by ordinary least squares in log-log space.
//!
//! All logarithms are natural. Exponents are reported as positive magnitudes:
//! `alpha` and `gamma` are the negated slopes of the decaying rank laws,
//! `delta` is the (growing) slope of senses against frequency.

use serde::{Deserialize, Serialize};

use crate::binning::AsSeries;
use crate::error::{Error, Result};

/// A straight line through `(ln x, ln y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogLogFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub sse_log: f64,
    pub n_points: usize,
}

/// Running centered moments of `(u, v)` pairs, updated one point at a time.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Moments {
    pub n: usize,
    pub mean_u: f64,
    pub mean_v: f64,
    pub s_uu: f64,
    pub s_uv: f64,
    pub s_vv: f64,
}

impl Moments {
    pub fn push(&mut self, u: f64, v: f64) {
        self.n += 1;
        let n = self.n as f64;
        let du = u - self.mean_u;
        let dv = v - self.mean_v;
        self.mean_u += du / n;
        self.mean_v += dv / n;
        self.s_uu += du * (u - self.mean_u);
        self.s_uv += du * (v - self.mean_v);
        self.s_vv += dv * (v - self.mean_v);
    }

    /// Residual sum of squares of the OLS line through the accumulated points.
    pub fn sse(&self) -> f64 {
        if self.s_uu <= 0.0 {
            return self.s_vv.max(0.0);
        }
        (self.s_vv - self.s_uv * self.s_uv / self.s_uu).max(0.0)
    }
}

pub(crate) fn log_points(points: &[(f64, f64)]) -> Result<Vec<(f64, f64)>> {
    points
        .iter()
        .map(|&(x, y)| {
            if x > 0.0 && y > 0.0 && x.is_finite() && y.is_finite() {
                Ok((x.ln(), y.ln()))
            } else {
                Err(Error::Domain(format!(
                    "log-log fit needs positive finite coordinates, got ({x}, {y})"
                )))
            }
        })
        .collect()
}

/// OLS fit of `ln y = intercept + slope * ln x`.
pub fn fit_loglog(points: &[(f64, f64)]) -> Result<LogLogFit> {
    if points.len() < 2 {
        return Err(Error::InsufficientData {
            needed: 2,
            got: points.len(),
        });
    }
    let logs = log_points(points)?;
    fit_logs(&logs)
}

/// OLS on already log-transformed points.
pub(crate) fn fit_logs(logs: &[(f64, f64)]) -> Result<LogLogFit> {
    let n = logs.len();
    if n < 2 {
        return Err(Error::InsufficientData { needed: 2, got: n });
    }
    let nf = n as f64;
    let mean_u = logs.iter().map(|p| p.0).sum::<f64>() / nf;
    let mean_v = logs.iter().map(|p| p.1).sum::<f64>() / nf;
    let (mut s_uu, mut s_uv, mut s_vv) = (0.0, 0.0, 0.0);
    for &(u, v) in logs {
        let du = u - mean_u;
        let dv = v - mean_v;
        s_uu += du * du;
        s_uv += du * dv;
        s_vv += dv * dv;
    }
    let first = logs[0].0;
    if logs.iter().all(|p| p.0 == first) || s_uu == 0.0 {
        return Err(Error::DegenerateFit("all x values are equal".into()));
    }
    let slope = s_uv / s_uu;
    let intercept = mean_v - slope * mean_u;
    let sse_log: f64 = logs
        .iter()
        .map(|&(u, v)| {
            let r = v - (intercept + slope * u);
            r * r
        })
        .sum();
    let r_squared = if s_vv > 0.0 {
        (1.0 - sse_log / s_vv).clamp(0.0, 1.0)
    } else {
        1.0
    };
    Ok(LogLogFit {
        slope,
        intercept,
        r_squared,
        sse_log,
        n_points: n,
    })
}

/// Which of the three laws a fit describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    /// Frequency against rank, exponent alpha.
    RankFrequency,
    /// Sense count against rank, exponent gamma.
    MeaningDistribution,
    /// Sense count against frequency, exponent delta.
    MeaningFrequency,
}

impl Law {
    pub const ALL: [Law; 3] = [Law::RankFrequency, Law::MeaningDistribution, Law::MeaningFrequency];

    pub fn name(self) -> &'static str {
        match self {
            Law::RankFrequency => "rank_frequency",
            Law::MeaningDistribution => "meaning_distribution",
            Law::MeaningFrequency => "meaning_frequency",
        }
    }

    pub fn exponent_symbol(self) -> &'static str {
        match self {
            Law::RankFrequency => "alpha",
            Law::MeaningDistribution => "gamma",
            Law::MeaningFrequency => "delta",
        }
    }

    /// Sign applied to the raw slope to obtain the reported exponent.
    pub(crate) fn exponent_sign(self) -> f64 {
        match self {
            Law::RankFrequency | Law::MeaningDistribution => -1.0,
            Law::MeaningFrequency => 1.0,
        }
    }

    pub(crate) fn points<S: AsSeries + ?Sized>(self, series: &S) -> Vec<(f64, f64)> {
        let s = series.as_series();
        match self {
            Law::RankFrequency => s.rank_frequency_points(),
            Law::MeaningDistribution => s.rank_senses_points(),
            Law::MeaningFrequency => s.frequency_senses_points(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerLawFit {
    pub law: Law,
    pub exponent: f64,
    /// Natural-log intercept of the fitted line.
    pub log_intercept: f64,
    pub r_squared: f64,
    pub sse_log: f64,
    pub n_points: usize,
}

impl PowerLawFit {
    pub(crate) fn from_raw(law: Law, raw: LogLogFit) -> Self {
        PowerLawFit {
            law,
            exponent: law.exponent_sign() * raw.slope,
            log_intercept: raw.intercept,
            r_squared: raw.r_squared,
            sse_log: raw.sse_log,
            n_points: raw.n_points,
        }
    }

    /// Fitted value of the law at `x`.
    pub fn predict(&self, x: f64) -> f64 {
        (self.log_intercept + self.law.exponent_sign() * self.exponent * x.ln()).exp()
    }
}

pub fn fit_law<S: AsSeries + ?Sized>(law: Law, series: &S) -> Result<PowerLawFit> {
    let raw = fit_loglog(&law.points(series))?;
    Ok(PowerLawFit::from_raw(law, raw))
}

/// Fits frequency against rank; the exponent is alpha.
pub fn fit_rank_frequency<S: AsSeries + ?Sized>(series: &S) -> Result<PowerLawFit> {
    fit_law(Law::RankFrequency, series)
}

/// Fits sense count against rank; the exponent is gamma.
pub fn fit_meaning_distribution<S: AsSeries + ?Sized>(series: &S) -> Result<PowerLawFit> {
    fit_law(Law::MeaningDistribution, series)
}

/// Fits sense count against frequency; the exponent is delta.
pub fn fit_meaning_frequency<S: AsSeries + ?Sized>(series: &S) -> Result<PowerLawFit> {
    fit_law(Law::MeaningFrequency, series)
}

/// Meaning-frequency exponent implied by the other two laws: `gamma / alpha`.
pub fn predicted_delta(alpha: f64, gamma: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::Domain(format!("alpha must be positive, got {alpha}")));
    }
    Ok(gamma / alpha)
}
