//! Equal-size binning of a ranked lexicon.
//!
//! Consecutive blocks of `bin_size` records are averaged: each bin reports the
//! arithmetic mean of its members' ranks, frequencies and sense counts. A raw
//! lexicon is the special case `bin_size == 1`, which is how every fitting
//! routine sees unbinned data (see [`AsSeries`]).

use std::borrow::Cow;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lexicon::RankedLexicon;

/// All positive divisors of `n`, ascending. Empty for `n == 0`.
pub fn valid_bin_sizes(n: usize) -> Vec<usize> {
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            low.push(d);
            if d != n / d {
                high.push(n / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    low
}

/// What to do with the trailing records when `bin_size` does not divide `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RemainderPolicy {
    /// Refuse non-dividing bin sizes.
    #[default]
    Strict,
    /// Discard the final partial block.
    DropTail,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bin {
    pub first_rank: usize,
    pub last_rank: usize,
    pub mean_rank: f64,
    pub mean_frequency: f64,
    pub mean_senses: f64,
    pub member_count: usize,
}

impl Bin {
    /// Ranks covered by the bin as the half-open real interval
    /// `(first_rank - 0.5, last_rank + 0.5]`.
    pub fn rank_interval(&self) -> (f64, f64) {
        (self.first_rank as f64 - 0.5, self.last_rank as f64 + 0.5)
    }

    pub fn contains_rank(&self, rank: f64) -> bool {
        let (lo, hi) = self.rank_interval();
        lo < rank && rank <= hi
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BinnedSeries {
    pub bin_size: usize,
    pub bins: Vec<Bin>,
    /// Records discarded by [`RemainderPolicy::DropTail`].
    pub dropped: usize,
}

impl BinnedSeries {
    pub fn len(&self) -> usize {
        self.bins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bins.is_empty()
    }

    pub fn rank_frequency_points(&self) -> Vec<(f64, f64)> {
        self.bins.iter().map(|b| (b.mean_rank, b.mean_frequency)).collect()
    }

    pub fn rank_senses_points(&self) -> Vec<(f64, f64)> {
        self.bins.iter().map(|b| (b.mean_rank, b.mean_senses)).collect()
    }

    pub fn frequency_senses_points(&self) -> Vec<(f64, f64)> {
        self.bins.iter().map(|b| (b.mean_frequency, b.mean_senses)).collect()
    }

    /// Writes the series as tab-separated text with a header row.
    pub fn write_tsv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "bin_index\tmean_rank\tmean_frequency\tmean_senses\tmember_count")?;
        for (i, b) in self.bins.iter().enumerate() {
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                i + 1,
                b.mean_rank,
                b.mean_frequency,
                b.mean_senses,
                b.member_count
            )?;
        }
        Ok(())
    }

    /// Reads a series written by [`BinnedSeries::write_tsv`]. Bins are assumed
    /// to be consecutive, so rank coverage is reconstructed from member counts.
    pub fn read_tsv<R: BufRead>(reader: R) -> Result<Self> {
        let mut bins = Vec::new();
        let mut next_rank = 1usize;
        for (idx, line) in reader.lines().enumerate() {
            let line_no = idx + 1;
            let line = line?;
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || (line_no == 1 && line.starts_with("bin_index")) {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 5 {
                return Err(parse_err(format!("expected 5 fields, found {}", fields.len())));
            }
            let real = |s: &str| {
                s.parse::<f64>()
                    .map_err(|_| parse_err(format!("{s:?} is not a number")))
            };
            let member_count: usize = fields[4]
                .parse()
                .ok()
                .filter(|&c| c >= 1)
                .ok_or_else(|| parse_err(format!("bad member count {:?}", fields[4])))?;
            bins.push(Bin {
                first_rank: next_rank,
                last_rank: next_rank + member_count - 1,
                mean_rank: real(fields[1])?,
                mean_frequency: real(fields[2])?,
                mean_senses: real(fields[3])?,
                member_count,
            });
            next_rank += member_count;
        }
        let bin_size = bins.first().map(|b| b.member_count).unwrap_or(1);
        Ok(Self {
            bin_size,
            bins,
            dropped: 0,
        })
    }
}

/// Bins `lex` into consecutive blocks of `bin_size` records.
pub fn equal_size_bin(
    lex: &RankedLexicon,
    bin_size: usize,
    policy: RemainderPolicy,
) -> Result<BinnedSeries> {
    if bin_size == 0 {
        return Err(Error::InvalidBinSize(bin_size));
    }
    let n = lex.len();
    let remainder = n % bin_size;
    if remainder != 0 && policy == RemainderPolicy::Strict {
        return Err(Error::Divisibility {
            n,
            bin_size,
            nearest: nearest_divisors(n, bin_size),
        });
    }
    let bins: Vec<Bin> = lex
        .records()
        .chunks_exact(bin_size)
        .map(|block| {
            let count = block.len() as f64;
            let (mut r, mut f, mut s) = (0.0, 0.0, 0.0);
            for rec in block {
                r += rec.rank as f64;
                f += rec.frequency;
                s += rec.senses;
            }
            Bin {
                first_rank: block[0].rank,
                last_rank: block[block.len() - 1].rank,
                mean_rank: r / count,
                mean_frequency: f / count,
                mean_senses: s / count,
                member_count: block.len(),
            }
        })
        .collect();
    if bins.is_empty() {
        return Err(Error::InsufficientData {
            needed: bin_size,
            got: n,
        });
    }
    Ok(BinnedSeries {
        bin_size,
        bins,
        dropped: remainder,
    })
}

/// The closest divisors of `n` below and above `bin_size`.
fn nearest_divisors(n: usize, bin_size: usize) -> Vec<usize> {
    let divisors = valid_bin_sizes(n);
    let below = divisors.iter().rev().find(|&&d| d < bin_size).copied();
    let above = divisors.iter().find(|&&d| d > bin_size).copied();
    below.into_iter().chain(above).collect()
}

/// Anything the fitting routines can treat as a sequence of rank-ordered points.
pub trait AsSeries {
    fn as_series(&self) -> Cow<'_, BinnedSeries>;
}

impl AsSeries for BinnedSeries {
    fn as_series(&self) -> Cow<'_, BinnedSeries> {
        Cow::Borrowed(self)
    }
}

impl AsSeries for RankedLexicon {
    fn as_series(&self) -> Cow<'_, BinnedSeries> {
        Cow::Owned(BinnedSeries::from(self))
    }
}

impl From<&RankedLexicon> for BinnedSeries {
    fn from(lex: &RankedLexicon) -> Self {
        BinnedSeries {
            bin_size: 1,
            bins: lex
                .records()
                .iter()
                .map(|r| Bin {
                    first_rank: r.rank,
                    last_rank: r.rank,
                    mean_rank: r.rank as f64,
                    mean_frequency: r.frequency,
                    mean_senses: r.senses,
                    member_count: 1,
                })
                .collect(),
            dropped: 0,
        }
    }
}
