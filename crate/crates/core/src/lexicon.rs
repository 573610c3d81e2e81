//! Frequency and sense-count tables, their intersection, and the ranked
//! lexicon every law is fitted on.
//!
//! All on-disk formats are UTF-8 text, one record per line, fields split by a
//! single delimiter character (tab unless configured otherwise). Blank lines
//! and lines whose first non-blank character is `#` are skipped.
//!
//! | format      | fields                    |
//! |-------------|---------------------------|
//! | frequency   | lemma, count              |
//! | meanings    | lemma, senses             |
//! | tokens      | surface, lemma, tag class |

use std::collections::{BTreeMap, BTreeSet};
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

pub const DEFAULT_DELIMITER: char = '\t';

/// Lemma to token count. Counts are always at least one.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FrequencyTable {
    entries: BTreeMap<String, u64>,
}

impl FrequencyTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `count` occurrences of `lemma`, summing with any existing entry.
    pub fn add(&mut self, lemma: &str, count: u64) -> Result<()> {
        check_lemma(lemma)?;
        if count == 0 {
            return Err(Error::Domain(format!("count for {lemma:?} must be at least 1")));
        }
        let slot = self.entries.entry(lemma.to_owned()).or_insert(0);
        *slot = slot
            .checked_add(count)
            .ok_or_else(|| Error::Domain(format!("count overflow for {lemma:?}")))?;
        Ok(())
    }

    pub fn get(&self, lemma: &str) -> Option<u64> {
        self.entries.get(lemma).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in lemma order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, u64)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn total_tokens(&self) -> u64 {
        self.entries.values().sum()
    }
}

/// Lemma to number of dictionary senses. Sense counts are always at least one.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MeaningTable {
    entries: BTreeMap<String, u32>,
}

impl MeaningTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `senses` to `lemma`. Homograph entries accumulate.
    pub fn add(&mut self, lemma: &str, senses: u32) -> Result<()> {
        check_lemma(lemma)?;
        if senses == 0 {
            return Err(Error::Domain(format!("sense count for {lemma:?} must be at least 1")));
        }
        let slot = self.entries.entry(lemma.to_owned()).or_insert(0);
        *slot = slot
            .checked_add(senses)
            .ok_or_else(|| Error::Domain(format!("sense count overflow for {lemma:?}")))?;
        Ok(())
    }

    pub fn get(&self, lemma: &str) -> Option<u32> {
        self.entries.get(lemma).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u32)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), *v))
    }
}

/// Annotation classes whose tokens are discarded before counting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenFilterConfig {
    pub excluded: BTreeSet<String>,
}

impl TokenFilterConfig {
    pub const PUNCTUATION: &'static str = "punctuation";
    pub const NUMBER: &'static str = "number";
    pub const PROPER_NOUN: &'static str = "proper_noun";

    /// Keeps every token.
    pub fn none() -> Self {
        Self {
            excluded: BTreeSet::new(),
        }
    }

    pub fn excluding<I, S>(tags: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self {
            excluded: tags.into_iter().map(Into::into).collect(),
        }
    }

    pub fn is_excluded(&self, tag: &str) -> bool {
        self.excluded.contains(tag)
    }
}

impl Default for TokenFilterConfig {
    fn default() -> Self {
        Self::excluding([Self::PUNCTUATION, Self::NUMBER, Self::PROPER_NOUN])
    }
}

fn check_lemma(lemma: &str) -> Result<()> {
    if lemma.is_empty() {
        return Err(Error::Domain("empty lemma".into()));
    }
    if lemma.trim() != lemma {
        return Err(Error::Domain(format!(
            "lemma {lemma:?} has leading or trailing whitespace"
        )));
    }
    Ok(())
}

/// Yields `(line_number, fields)` for every data line, checking the field count.
fn for_each_record<R, F>(reader: R, delimiter: char, arity: usize, mut f: F) -> Result<()>
where
    R: BufRead,
    F: FnMut(usize, &[&str]) -> Result<()>,
{
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        let lead = line.trim_start();
        if lead.is_empty() || lead.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(delimiter).map(str::trim).collect();
        if fields.len() != arity {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected {arity} fields, found {}", fields.len()),
            });
        }
        f(line_no, &fields).map_err(|e| match e {
            Error::Parse { .. } => e,
            other => Error::Parse {
                line: line_no,
                message: other.to_string(),
            },
        })?;
    }
    Ok(())
}

fn parse_positive(field: &str, what: &str, line: usize) -> Result<u64> {
    match field.parse::<u64>() {
        Ok(v) if v >= 1 => Ok(v),
        _ => Err(Error::Parse {
            line,
            message: format!("{what} {field:?} is not a positive integer"),
        }),
    }
}

/// Reads `lemma<delim>count` lines. Repeated lemmas have their counts summed.
pub fn ingest_frequency_table<R: BufRead>(reader: R, delimiter: char) -> Result<FrequencyTable> {
    let mut table = FrequencyTable::new();
    for_each_record(reader, delimiter, 2, |line, fields| {
        let count = parse_positive(fields[1], "count", line)?;
        table.add(fields[0], count)
    })?;
    Ok(table)
}

/// Reads `surface<delim>lemma<delim>tag` lines and counts lemmas whose tag is
/// not excluded by `config`.
pub fn ingest_token_stream<R: BufRead>(
    reader: R,
    delimiter: char,
    config: &TokenFilterConfig,
) -> Result<FrequencyTable> {
    let mut table = FrequencyTable::new();
    for_each_record(reader, delimiter, 3, |_, fields| {
        if config.is_excluded(fields[2]) {
            return Ok(());
        }
        table.add(fields[1], 1)
    })?;
    Ok(table)
}

/// Reads `lemma<delim>senses` lines. Homograph entries have their senses summed.
pub fn ingest_meaning_table<R: BufRead>(reader: R, delimiter: char) -> Result<MeaningTable> {
    let mut table = MeaningTable::new();
    for_each_record(reader, delimiter, 2, |line, fields| {
        let senses = parse_positive(fields[1], "sense count", line)?;
        let senses = u32::try_from(senses).map_err(|_| Error::Parse {
            line,
            message: format!("sense count {senses} too large"),
        })?;
        table.add(fields[0], senses)
    })?;
    Ok(table)
}

fn check_writable(lemma: &str, delimiter: char) -> Result<()> {
    if lemma.contains(delimiter) || lemma.contains('\n') || lemma.starts_with('#') {
        return Err(Error::Domain(format!(
            "lemma {lemma:?} cannot be written in delimited form"
        )));
    }
    Ok(())
}

pub fn write_frequency_table<W: Write>(
    table: &FrequencyTable,
    mut out: W,
    delimiter: char,
) -> Result<()> {
    for (lemma, count) in table.iter() {
        check_writable(lemma, delimiter)?;
        writeln!(out, "{lemma}{delimiter}{count}")?;
    }
    Ok(())
}

pub fn write_meaning_table<W: Write>(table: &MeaningTable, mut out: W, delimiter: char) -> Result<()> {
    for (lemma, senses) in table.iter() {
        check_writable(lemma, delimiter)?;
        writeln!(out, "{lemma}{delimiter}{senses}")?;
    }
    Ok(())
}

/// How many lemmas each side lost in an intersection.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DropSummary {
    pub corpus_only: usize,
    pub dictionary_only: usize,
}

/// Lemmas found both in the corpus and in the dictionary, not yet ranked.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct JoinedTable {
    entries: BTreeMap<String, (u64, u32)>,
    pub dropped: DropSummary,
}

impl JoinedTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, lemma: &str) -> Option<(u64, u32)> {
        self.entries.get(lemma).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u64, u32)> {
        self.entries.iter().map(|(k, &(f, m))| (k.as_str(), f, m))
    }
}

pub fn intersect(freq: &FrequencyTable, meanings: &MeaningTable) -> JoinedTable {
    let entries: BTreeMap<String, (u64, u32)> = freq
        .iter()
        .filter_map(|(lemma, f)| meanings.get(lemma).map(|m| (lemma.to_owned(), (f, m))))
        .collect();
    let kept = entries.len();
    JoinedTable {
        entries,
        dropped: DropSummary {
            corpus_only: freq.len() - kept,
            dictionary_only: meanings.len() - kept,
        },
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LexRecord {
    pub rank: usize,
    pub lemma: String,
    pub frequency: f64,
    pub senses: f64,
}

/// Records ordered by descending frequency, ranked `1..=n`.
///
/// Frequencies and sense counts are reals. Synthetic lexicons carry exact
/// power-law values; lexicons built from tables hold integers.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedLexicon {
    records: Vec<LexRecord>,
}

impl RankedLexicon {
    /// Sorts by frequency descending, ties by lemma in codepoint order, then
    /// assigns ranks. Every frequency and sense count must be finite and > 0.
    pub fn from_unranked<I>(items: I) -> Result<Self>
    where
        I: IntoIterator<Item = (String, f64, f64)>,
    {
        let mut records: Vec<LexRecord> = items
            .into_iter()
            .map(|(lemma, frequency, senses)| LexRecord {
                rank: 0,
                lemma,
                frequency,
                senses,
            })
            .collect();
        if records.is_empty() {
            return Err(Error::EmptyLexicon);
        }
        for r in &records {
            if !(r.frequency.is_finite() && r.frequency > 0.0) {
                return Err(Error::Domain(format!(
                    "frequency of {:?} must be positive, got {}",
                    r.lemma, r.frequency
                )));
            }
            if !(r.senses.is_finite() && r.senses > 0.0) {
                return Err(Error::Domain(format!(
                    "sense count of {:?} must be positive, got {}",
                    r.lemma, r.senses
                )));
            }
        }
        records.sort_by(|a, b| {
            b.frequency
                .total_cmp(&a.frequency)
                .then_with(|| a.lemma.cmp(&b.lemma))
        });
        for (i, r) in records.iter_mut().enumerate() {
            r.rank = i + 1;
        }
        Ok(Self { records })
    }

    pub fn records(&self) -> &[LexRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn frequencies(&self) -> impl Iterator<Item = f64> + '_ {
        self.records.iter().map(|r| r.frequency)
    }

    pub fn senses(&self) -> impl Iterator<Item = f64> + '_ {
        self.records.iter().map(|r| r.senses)
    }

    /// Re-ranks after frequencies were changed in place.
    pub(crate) fn rerank(records: Vec<LexRecord>) -> Result<Self> {
        Self::from_unranked(records.into_iter().map(|r| (r.lemma, r.frequency, r.senses)))
    }

    /// Splits back into the two source tables. Frequencies must be integral;
    /// sense counts are rounded to the nearest integer.
    pub fn to_tables(&self) -> Result<(FrequencyTable, MeaningTable)> {
        let mut freq = FrequencyTable::new();
        let mut meanings = MeaningTable::new();
        for r in &self.records {
            if r.frequency.fract() != 0.0 || r.frequency > u64::MAX as f64 {
                return Err(Error::Domain(format!(
                    "frequency {} of {:?} is not an integer count",
                    r.frequency, r.lemma
                )));
            }
            let senses = r.senses.round().max(1.0);
            if senses > u32::MAX as f64 {
                return Err(Error::Domain(format!("sense count of {:?} too large", r.lemma)));
            }
            freq.add(&r.lemma, r.frequency as u64)?;
            meanings.add(&r.lemma, senses as u32)?;
        }
        Ok((freq, meanings))
    }
}

/// Ranks a joined table. Fails on an empty table.
pub fn rank(joined: &JoinedTable) -> Result<RankedLexicon> {
    RankedLexicon::from_unranked(
        joined
            .iter()
            .map(|(lemma, f, m)| (lemma.to_owned(), f as f64, m as f64)),
    )
}
