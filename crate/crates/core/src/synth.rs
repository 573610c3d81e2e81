//! Synthetic lexicons with known exponents, used as ground truth for the
//! fitting routines.
//!
//! Frequencies follow a continuity-matched double power law
//!
//! ```text
//! f(i) = C i^-alpha1                          i <= i*
//! f(i) = C i*^(alpha2 - alpha1) i^-alpha2     i >  i*
//! ```
//!
//! and sense counts the same shape with `D`, `gamma1`, `gamma2`, floored at 1.
//! A single regime is the case `alpha1 == alpha2`, `gamma1 == gamma2`.
//!
//! Noise is multiplicative, `exp(sigma * z)`, with `z` standard normal. The
//! stream of `z` values depends on the seed alone, on every platform:
//!
//! * the generator is xoshiro256++ seeded through SplitMix64
//!   (`SeedableRng::seed_from_u64`);
//! * each 64-bit output `x` becomes a uniform `u = ((x >> 11) + 0.5) / 2^53`
//!   in the open interval (0, 1);
//! * `z` is Acklam's rational approximation of the inverse normal CDF at `u`,
//!   without a refinement step;
//! * for rank `i = 1..=n` two variates are drawn in order: one for `f(i)`,
//!   then one for `mu(i)`.

use std::fmt::Write as _;
use std::str::FromStr;

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lexicon::{LexRecord, RankedLexicon};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SynthSpec {
    pub n: usize,
    pub alpha1: f64,
    pub alpha2: f64,
    pub i_star: usize,
    /// Regime-1 frequency prefactor.
    pub c: f64,
    pub gamma1: f64,
    pub gamma2: f64,
    /// Regime-1 sense-count prefactor.
    pub d: f64,
    pub noise_sigma: f64,
    pub seed: u64,
}

impl SynthSpec {
    /// A noiseless single-regime spec.
    pub fn single(n: usize, c: f64, alpha: f64, d: f64, gamma: f64) -> Self {
        SynthSpec {
            n,
            alpha1: alpha,
            alpha2: alpha,
            i_star: n,
            c,
            gamma1: gamma,
            gamma2: gamma,
            d,
            noise_sigma: 0.0,
            seed: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSpec(m));
        if self.n < 4 {
            return bad(format!("n must be at least 4, got {}", self.n));
        }
        for (name, v) in [("alpha1", self.alpha1), ("alpha2", self.alpha2)] {
            if !(v > 0.0 && v.is_finite()) {
                return bad(format!("{name} must be positive, got {v}"));
            }
        }
        if !(1..=self.n).contains(&self.i_star) {
            return bad(format!("i_star must lie in 1..={}, got {}", self.n, self.i_star));
        }
        if !(self.c > 0.0 && self.c.is_finite()) {
            return bad(format!("c must be positive, got {}", self.c));
        }
        for (name, v) in [("gamma1", self.gamma1), ("gamma2", self.gamma2)] {
            if !(v >= 0.0 && v.is_finite()) {
                return bad(format!("{name} must be non-negative, got {v}"));
            }
        }
        if !(self.d >= 1.0 && self.d.is_finite()) {
            return bad(format!("d must be at least 1, got {}", self.d));
        }
        if !(self.noise_sigma >= 0.0 && self.noise_sigma.is_finite()) {
            return bad(format!("noise_sigma must be non-negative, got {}", self.noise_sigma));
        }
        Ok(())
    }

    /// Noiseless frequency at rank `i`.
    pub fn frequency_at(&self, i: usize) -> f64 {
        broken_power(i, self.i_star, self.c, self.alpha1, self.alpha2)
    }

    /// Noiseless sense count at rank `i`, before flooring.
    pub fn senses_at(&self, i: usize) -> f64 {
        broken_power(i, self.i_star, self.d, self.gamma1, self.gamma2)
    }

    /// Serializes as `key = value` lines accepted by [`SynthSpec::from_str`].
    pub fn to_config_string(&self) -> String {
        let mut s = String::new();
        for (k, v) in self.pairs() {
            let _ = writeln!(s, "{k} = {v}");
        }
        s
    }

    fn pairs(&self) -> [(&'static str, String); 10] {
        [
            ("n", self.n.to_string()),
            ("alpha1", self.alpha1.to_string()),
            ("alpha2", self.alpha2.to_string()),
            ("i_star", self.i_star.to_string()),
            ("c", self.c.to_string()),
            ("gamma1", self.gamma1.to_string()),
            ("gamma2", self.gamma2.to_string()),
            ("d", self.d.to_string()),
            ("noise_sigma", self.noise_sigma.to_string()),
            ("seed", self.seed.to_string()),
        ]
    }
}

fn broken_power(i: usize, joint: usize, prefactor: f64, e1: f64, e2: f64) -> f64 {
    let x = i as f64;
    if i <= joint {
        prefactor * x.powf(-e1)
    } else {
        prefactor * (joint as f64).powf(e2 - e1) * x.powf(-e2)
    }
}

/// Parses flat `key = value` (or `key=value`) lines; `#` starts a comment.
///
/// Required keys: `n`, `alpha1`, `c`, `d`. `alpha2` and `gamma2` default to
/// their regime-1 counterparts, `gamma1` to 0, `i_star` to `n`,
/// `noise_sigma` to 0 and `seed` to 0.
impl FromStr for SynthSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut n = None;
        let mut alpha1 = None;
        let mut alpha2 = None;
        let mut i_star = None;
        let mut c = None;
        let mut gamma1 = None;
        let mut gamma2 = None;
        let mut d = None;
        let mut noise_sigma = None;
        let mut seed = None;

        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: idx + 1,
                message,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| parse_err(format!("expected key = value, got {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            let real = || {
                value
                    .parse::<f64>()
                    .map_err(|_| parse_err(format!("{key}: {value:?} is not a number")))
            };
            let int = || {
                value
                    .parse::<u64>()
                    .map_err(|_| parse_err(format!("{key}: {value:?} is not a non-negative integer")))
            };
            match key {
                "n" => n = Some(int()? as usize),
                "alpha1" => alpha1 = Some(real()?),
                "alpha2" => alpha2 = Some(real()?),
                "i_star" => i_star = Some(int()? as usize),
                "c" => c = Some(real()?),
                "gamma1" => gamma1 = Some(real()?),
                "gamma2" => gamma2 = Some(real()?),
                "d" => d = Some(real()?),
                "noise_sigma" => noise_sigma = Some(real()?),
                "seed" => seed = Some(int()?),
                other => return Err(parse_err(format!("unknown key {other:?}"))),
            }
        }

        let missing = |k: &str| Error::InvalidSpec(format!("missing required key {k:?}"));
        let n = n.ok_or_else(|| missing("n"))?;
        let alpha1 = alpha1.ok_or_else(|| missing("alpha1"))?;
        let gamma1 = gamma1.unwrap_or(0.0);
        let spec = SynthSpec {
            n,
            alpha1,
            alpha2: alpha2.unwrap_or(alpha1),
            i_star: i_star.unwrap_or(n),
            c: c.ok_or_else(|| missing("c"))?,
            gamma1,
            gamma2: gamma2.unwrap_or(gamma1),
            d: d.ok_or_else(|| missing("d"))?,
            noise_sigma: noise_sigma.unwrap_or(0.0),
            seed: seed.unwrap_or(0),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Seeded stream of standard normal variates.
pub struct NormalStream {
    rng: Xoshiro256PlusPlus,
}

impl NormalStream {
    pub fn new(seed: u64) -> Self {
        NormalStream {
            rng: Xoshiro256PlusPlus::seed_from_u64(seed),
        }
    }

    /// Uniform variate in the open interval (0, 1).
    pub fn next_uniform(&mut self) -> f64 {
        ((self.rng.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }

    pub fn next_normal(&mut self) -> f64 {
        inverse_normal_cdf(self.next_uniform())
    }
}

/// Acklam's approximation to the standard normal quantile function,
/// relative error below 1.15e-9 on (0, 1).
pub fn inverse_normal_cdf(p: f64) -> f64 {
    const A: [f64; 6] = [
        -3.969683028665376e+01,
        2.209460984245205e+02,
        -2.759285104469687e+02,
        1.38357751867269e+02,
        -3.066479806614716e+01,
        2.506628277459239e+00,
    ];
    const B: [f64; 5] = [
        -5.447609879822406e+01,
        1.615858368580409e+02,
        -1.556989798598866e+02,
        6.680131188771972e+01,
        -1.328068155288572e+01,
    ];
    const C: [f64; 6] = [
        -7.784894002430293e-03,
        -3.223964580411365e-01,
        -2.400758277161838e+00,
        -2.549732539343734e+00,
        4.374664141464968e+00,
        2.938163982698783e+00,
    ];
    const D: [f64; 4] = [
        7.784695709041462e-03,
        3.224671290700398e-01,
        2.445134137142996e+00,
        3.754408661907416e+00,
    ];
    const P_LOW: f64 = 0.02425;

    if p <= 0.0 {
        return f64::NEG_INFINITY;
    }
    if p >= 1.0 {
        return f64::INFINITY;
    }
    let tail = |q: f64| {
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    };
    if p < P_LOW {
        tail((-2.0 * p.ln()).sqrt())
    } else if p <= 1.0 - P_LOW {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        -tail((-2.0 * (1.0 - p).ln()).sqrt())
    }
}

/// Builds the lexicon described by `spec`. Frequencies are real-valued; see
/// [`integerize`] for integer counts.
pub fn generate(spec: &SynthSpec) -> Result<RankedLexicon> {
    spec.validate()?;
    let width = spec.n.to_string().len();
    let mut noise = (spec.noise_sigma > 0.0).then(|| NormalStream::new(spec.seed));
    let items = (1..=spec.n).map(|i| {
        let mut f = spec.frequency_at(i);
        let mut mu = spec.senses_at(i);
        if let Some(stream) = noise.as_mut() {
            f *= (spec.noise_sigma * stream.next_normal()).exp();
            mu *= (spec.noise_sigma * stream.next_normal()).exp();
        }
        (format!("w{i:0width$}"), f, mu.max(1.0))
    });
    RankedLexicon::from_unranked(items.collect::<Vec<_>>())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntegerizeMode {
    #[default]
    Round,
    Floor,
}

impl FromStr for IntegerizeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "round" => Ok(IntegerizeMode::Round),
            "floor" => Ok(IntegerizeMode::Floor),
            other => Err(Error::Domain(format!("unknown integerize mode {other:?}"))),
        }
    }
}

/// How much integerization moved the frequencies.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Distortion {
    pub max_abs_change: f64,
    pub max_rel_change: f64,
    pub changed: usize,
}

/// Converts frequencies to integer counts and re-ranks.
pub fn integerize(lex: &RankedLexicon, mode: IntegerizeMode) -> Result<(RankedLexicon, Distortion)> {
    let convert = |f: f64| match mode {
        IntegerizeMode::Round => f.round(),
        IntegerizeMode::Floor => f.floor(),
    };
    let below = lex.frequencies().filter(|&f| convert(f) < 1.0).count();
    if below > 0 {
        return Err(Error::BelowOne { count: below });
    }
    let mut distortion = Distortion::default();
    let records: Vec<LexRecord> = lex
        .records()
        .iter()
        .map(|r| {
            let f = convert(r.frequency);
            let change = (f - r.frequency).abs();
            if change > 0.0 {
                distortion.changed += 1;
            }
            distortion.max_abs_change = distortion.max_abs_change.max(change);
            distortion.max_rel_change = distortion.max_rel_change.max(change / r.frequency);
            LexRecord {
                frequency: f,
                ..r.clone()
            }
        })
        .collect();
    Ok((RankedLexicon::rerank(records)?, distortion))
}
