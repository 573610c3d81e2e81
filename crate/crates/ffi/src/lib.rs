//! C ABI over `zipflaws`.
//!
//! Every fallible function returns a [`ZlStatus`]. On failure a description
//! is available from [`zl_last_error_message`] on the same thread until the
//! next failing call. Handles are opaque and must be released with the
//! matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use zipflaws::analysis::{analyze_lexicon, AnalysisOptions, RegimeMode};
use zipflaws::binning::{equal_size_bin, valid_bin_sizes, BinnedSeries, RemainderPolicy};
use zipflaws::lexicon::{ingest_frequency_table, ingest_meaning_table, intersect, rank, RankedLexicon};
use zipflaws::powerlaw::{fit_law, fit_loglog, predicted_delta, Law, PowerLawFit};
use zipflaws::regimes::{
    deviance_scan, predicted_deltas, rank_frequency_deviance, select_breakpoint, two_regime_fit,
    Breakpoint, BreakpointSource, BreakpointStrategy, DevianceCurve,
};
use zipflaws::report::Report;
use zipflaws::synth::{generate, SynthSpec};
use zipflaws::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    EmptyLexicon = 4,
    Divisibility = 5,
    InvalidArgument = 6,
    Domain = 7,
    DegenerateFit = 8,
    InsufficientData = 9,
    OutOfRange = 10,
    BufferTooSmall = 11,
    Io = 12,
    Panic = 13,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZlLaw {
    RankFrequency = 0,
    MeaningDistribution = 1,
    MeaningFrequency = 2,
}

impl From<ZlLaw> for Law {
    fn from(l: ZlLaw) -> Self {
        match l {
            ZlLaw::RankFrequency => Law::RankFrequency,
            ZlLaw::MeaningDistribution => Law::MeaningDistribution,
            ZlLaw::MeaningFrequency => Law::MeaningFrequency,
        }
    }
}

impl From<Law> for ZlLaw {
    fn from(l: Law) -> Self {
        match l {
            Law::RankFrequency => ZlLaw::RankFrequency,
            Law::MeaningDistribution => ZlLaw::MeaningDistribution,
            Law::MeaningFrequency => ZlLaw::MeaningFrequency,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZlStrategy {
    GlobalMin = 0,
    FirstLocalMin = 1,
    Manual = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZlRegimes {
    One = 0,
    Two = 1,
    Both = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ZlSynthSpec {
    pub n: usize,
    pub alpha1: f64,
    pub alpha2: f64,
    pub i_star: usize,
    pub c: f64,
    pub gamma1: f64,
    pub gamma2: f64,
    pub d: f64,
    pub noise_sigma: f64,
    pub seed: u64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ZlBin {
    pub first_rank: usize,
    pub last_rank: usize,
    pub mean_rank: f64,
    pub mean_frequency: f64,
    pub mean_senses: f64,
    pub member_count: usize,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ZlLogLogFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub sse_log: f64,
    pub n_points: usize,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZlPowerLawFit {
    pub law: ZlLaw,
    pub exponent: f64,
    pub log_intercept: f64,
    pub r_squared: f64,
    pub sse_log: f64,
    pub n_points: usize,
}

impl From<PowerLawFit> for ZlPowerLawFit {
    fn from(f: PowerLawFit) -> Self {
        ZlPowerLawFit {
            law: f.law.into(),
            exponent: f.exponent,
            log_intercept: f.log_intercept,
            r_squared: f.r_squared,
            sse_log: f.sse_log,
            n_points: f.n_points,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ZlDevianceCandidate {
    pub split_index: usize,
    pub split_rank: f64,
    pub deviance: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZlBreakpoint {
    pub split_index: usize,
    pub i_star: f64,
    pub f_of_i_star: f64,
    pub source: ZlStrategy,
}

impl From<Breakpoint> for ZlBreakpoint {
    fn from(b: Breakpoint) -> Self {
        ZlBreakpoint {
            split_index: b.split_index,
            i_star: b.i_star,
            f_of_i_star: b.f_of_i_star,
            source: match b.source {
                BreakpointSource::GlobalMin => ZlStrategy::GlobalMin,
                BreakpointSource::FirstLocalMin => ZlStrategy::FirstLocalMin,
                BreakpointSource::Manual => ZlStrategy::Manual,
            },
        }
    }
}

impl From<ZlBreakpoint> for Breakpoint {
    fn from(b: ZlBreakpoint) -> Self {
        Breakpoint {
            split_index: b.split_index,
            i_star: b.i_star,
            f_of_i_star: b.f_of_i_star,
            source: match b.source {
                ZlStrategy::GlobalMin => BreakpointSource::GlobalMin,
                ZlStrategy::FirstLocalMin => BreakpointSource::FirstLocalMin,
                ZlStrategy::Manual => BreakpointSource::Manual,
            },
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZlTwoRegimeFit {
    pub fit1: ZlPowerLawFit,
    pub fit2: ZlPowerLawFit,
    pub total_deviance: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZlAnalysisOptions {
    pub regimes: ZlRegimes,
    pub strategy: ZlStrategy,
    /// Split index used when `strategy` is `Manual`.
    pub manual_index: usize,
    pub min_segment: usize,
    pub drop_tail: bool,
}

/// Ranked lexicon handle.
pub struct ZlLexicon(RankedLexicon);

/// Binned (or raw) series handle.
pub struct ZlSeries(BinnedSeries);

/// Deviance curve handle.
pub struct ZlCurve(DevianceCurve);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> ZlStatus {
    match e {
        Error::Parse { .. } => ZlStatus::Parse,
        Error::EmptyLexicon => ZlStatus::EmptyLexicon,
        Error::Divisibility { .. } => ZlStatus::Divisibility,
        Error::InvalidBinSize(_) | Error::InvalidSpec(_) | Error::BelowOne { .. } => ZlStatus::InvalidArgument,
        Error::Domain(_) => ZlStatus::Domain,
        Error::DegenerateFit(_) => ZlStatus::DegenerateFit,
        Error::InsufficientData { .. } => ZlStatus::InsufficientData,
        Error::OutOfRange { .. } => ZlStatus::OutOfRange,
        Error::DegenerateSegment { inner, .. } | Error::Stage { inner, .. } => status_of(inner),
        Error::Io(_) => ZlStatus::Io,
    }
}

struct Fail(ZlStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(ZlStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> ZlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ZlStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".to_owned());
            ZlStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(ZlStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn points(xs: *const f64, ys: *const f64, n: usize) -> Result<Vec<(f64, f64)>, Fail> {
    if n == 0 {
        return Ok(Vec::new());
    }
    if xs.is_null() || ys.is_null() {
        return Err(null("coordinate array"));
    }
    let (xs, ys) = (slice::from_raw_parts(xs, n), slice::from_raw_parts(ys, n));
    Ok(xs.iter().copied().zip(ys.iter().copied()).collect())
}

fn delimiter(d: c_char) -> Result<char, Fail> {
    let b = d as u8;
    if b.is_ascii() && b != b'\n' && b != 0 {
        Ok(b as char)
    } else {
        Err(Fail(ZlStatus::InvalidArgument, "delimiter must be a printable ASCII byte".into()))
    }
}

/// Message for the last failure on this thread, or null if none. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn zl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a ranked lexicon from the text of a frequency table and a meanings
/// table, keeping only lemmas present in both.
///
/// # Safety
/// `freq_tsv` and `meanings_tsv` must be NUL-terminated strings; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn zl_lexicon_from_tsv(
    freq_tsv: *const c_char,
    meanings_tsv: *const c_char,
    delim: c_char,
    out: *mut *mut ZlLexicon,
) -> ZlStatus {
    guard(|| {
        let d = delimiter(delim)?;
        let freq = ingest_frequency_table(text(freq_tsv, "freq_tsv")?.as_bytes(), d)?;
        let meanings = ingest_meaning_table(text(meanings_tsv, "meanings_tsv")?.as_bytes(), d)?;
        let lex = rank(&intersect(&freq, &meanings))?;
        write_out(out, Box::into_raw(Box::new(ZlLexicon(lex))))
    })
}

/// Generates a real-valued synthetic lexicon.
///
/// # Safety
/// `spec` must point to a valid spec; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_synth_generate(spec: *const ZlSynthSpec, out: *mut *mut ZlLexicon) -> ZlStatus {
    guard(|| {
        let s = deref(spec, "spec")?;
        let spec = SynthSpec {
            n: s.n,
            alpha1: s.alpha1,
            alpha2: s.alpha2,
            i_star: s.i_star,
            c: s.c,
            gamma1: s.gamma1,
            gamma2: s.gamma2,
            d: s.d,
            noise_sigma: s.noise_sigma,
            seed: s.seed,
        };
        let lex = generate(&spec)?;
        write_out(out, Box::into_raw(Box::new(ZlLexicon(lex))))
    })
}

/// Number of records; 0 for a null handle.
///
/// # Safety
/// `lex` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn zl_lexicon_len(lex: *const ZlLexicon) -> usize {
    lex.as_ref().map_or(0, |l| l.0.len())
}

/// # Safety
/// `lex` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zl_lexicon_free(lex: *mut ZlLexicon) {
    if !lex.is_null() {
        drop(Box::from_raw(lex));
    }
}

/// Equal-size binning. With `drop_tail` false the bin size must divide the
/// lexicon size.
///
/// # Safety
/// `lex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_series_bin(
    lex: *const ZlLexicon,
    bin_size: usize,
    drop_tail: bool,
    out: *mut *mut ZlSeries,
) -> ZlStatus {
    guard(|| {
        let lex = deref(lex, "lexicon")?;
        let policy = if drop_tail {
            RemainderPolicy::DropTail
        } else {
            RemainderPolicy::Strict
        };
        let series = equal_size_bin(&lex.0, bin_size, policy)?;
        write_out(out, Box::into_raw(Box::new(ZlSeries(series))))
    })
}

/// The unbinned lexicon as a series of single-record bins.
///
/// # Safety
/// `lex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_series_raw(lex: *const ZlLexicon, out: *mut *mut ZlSeries) -> ZlStatus {
    guard(|| {
        let lex = deref(lex, "lexicon")?;
        write_out(out, Box::into_raw(Box::new(ZlSeries(BinnedSeries::from(&lex.0)))))
    })
}

/// # Safety
/// `series` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn zl_series_len(series: *const ZlSeries) -> usize {
    series.as_ref().map_or(0, |s| s.0.len())
}

/// # Safety
/// `series` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_series_get(series: *const ZlSeries, index: usize, out: *mut ZlBin) -> ZlStatus {
    guard(|| {
        let s = deref(series, "series")?;
        let b = s.0.bins.get(index).ok_or_else(|| {
            Fail(ZlStatus::OutOfRange, format!("bin index {index} out of range 0..{}", s.0.len()))
        })?;
        write_out(
            out,
            ZlBin {
                first_rank: b.first_rank,
                last_rank: b.last_rank,
                mean_rank: b.mean_rank,
                mean_frequency: b.mean_frequency,
                mean_senses: b.mean_senses,
                member_count: b.member_count,
            },
        )
    })
}

/// # Safety
/// `series` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zl_series_free(series: *mut ZlSeries) {
    if !series.is_null() {
        drop(Box::from_raw(series));
    }
}

/// Writes the divisors of `n` in ascending order. `*len` always receives the
/// full count; if it exceeds `cap` nothing is written and `BufferTooSmall` is
/// returned.
///
/// # Safety
/// `buf` must have room for `cap` values (or be null when `cap` is 0); `len`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_valid_bin_sizes(n: usize, buf: *mut usize, cap: usize, len: *mut usize) -> ZlStatus {
    guard(|| {
        let sizes = valid_bin_sizes(n);
        write_out(len, sizes.len())?;
        if sizes.len() > cap {
            return Err(Fail(
                ZlStatus::BufferTooSmall,
                format!("{} bin sizes do not fit in a buffer of {cap}", sizes.len()),
            ));
        }
        if buf.is_null() && !sizes.is_empty() {
            return Err(null("buf"));
        }
        slice::from_raw_parts_mut(buf, sizes.len()).copy_from_slice(&sizes);
        Ok(())
    })
}

/// Least-squares line through `(ln x, ln y)`.
///
/// # Safety
/// `xs` and `ys` must each hold `n` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_fit_loglog(xs: *const f64, ys: *const f64, n: usize, out: *mut ZlLogLogFit) -> ZlStatus {
    guard(|| {
        let fit = fit_loglog(&points(xs, ys, n)?)?;
        write_out(
            out,
            ZlLogLogFit {
                slope: fit.slope,
                intercept: fit.intercept,
                r_squared: fit.r_squared,
                sse_log: fit.sse_log,
                n_points: fit.n_points,
            },
        )
    })
}

/// # Safety
/// `series` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_fit_law(series: *const ZlSeries, law: ZlLaw, out: *mut ZlPowerLawFit) -> ZlStatus {
    guard(|| {
        let s = deref(series, "series")?;
        write_out(out, fit_law(law.into(), &s.0)?.into())
    })
}

/// `gamma / alpha`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_predicted_delta(alpha: f64, gamma: f64, out: *mut f64) -> ZlStatus {
    guard(|| write_out(out, predicted_delta(alpha, gamma)?))
}

/// Per-regime `gamma_k / alpha_k`.
///
/// # Safety
/// `out1` and `out2` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_predicted_deltas(
    alpha1: f64,
    alpha2: f64,
    gamma1: f64,
    gamma2: f64,
    out1: *mut f64,
    out2: *mut f64,
) -> ZlStatus {
    guard(|| {
        let (d1, d2) = predicted_deltas(alpha1, alpha2, gamma1, gamma2)?;
        write_out(out1, d1)?;
        write_out(out2, d2)
    })
}

/// Exhaustive two-segment deviance scan over points sorted by x.
///
/// # Safety
/// `xs` and `ys` must each hold `n` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_deviance_scan(
    xs: *const f64,
    ys: *const f64,
    n: usize,
    min_segment: usize,
    out: *mut *mut ZlCurve,
) -> ZlStatus {
    guard(|| {
        let curve = deviance_scan(&points(xs, ys, n)?, min_segment)?;
        write_out(out, Box::into_raw(Box::new(ZlCurve(curve))))
    })
}

/// Deviance scan of a series' rank-frequency points.
///
/// # Safety
/// `series` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_series_deviance(
    series: *const ZlSeries,
    min_segment: usize,
    out: *mut *mut ZlCurve,
) -> ZlStatus {
    guard(|| {
        let s = deref(series, "series")?;
        let curve = rank_frequency_deviance(&s.0, min_segment)?;
        write_out(out, Box::into_raw(Box::new(ZlCurve(curve))))
    })
}

/// # Safety
/// `curve` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn zl_curve_len(curve: *const ZlCurve) -> usize {
    curve.as_ref().map_or(0, |c| c.0.len())
}

/// Candidate at position `index` (not split index) of the curve.
///
/// # Safety
/// `curve` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_curve_get(curve: *const ZlCurve, index: usize, out: *mut ZlDevianceCandidate) -> ZlStatus {
    guard(|| {
        let c = deref(curve, "curve")?;
        let cand = c.0.candidates.get(index).ok_or_else(|| {
            Fail(ZlStatus::OutOfRange, format!("candidate index {index} out of range 0..{}", c.0.len()))
        })?;
        write_out(
            out,
            ZlDevianceCandidate {
                split_index: cand.split_index,
                split_rank: cand.split_rank,
                deviance: cand.deviance,
            },
        )
    })
}

/// # Safety
/// `curve` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zl_curve_free(curve: *mut ZlCurve) {
    if !curve.is_null() {
        drop(Box::from_raw(curve));
    }
}

/// `manual_index` is the split index used with `ZlStrategy::Manual` and is
/// ignored otherwise.
///
/// # Safety
/// `curve` and `series` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_select_breakpoint(
    curve: *const ZlCurve,
    series: *const ZlSeries,
    strategy: ZlStrategy,
    manual_index: usize,
    out: *mut ZlBreakpoint,
) -> ZlStatus {
    guard(|| {
        let c = deref(curve, "curve")?;
        let s = deref(series, "series")?;
        let bp = select_breakpoint(&c.0, &s.0, to_strategy(strategy, manual_index))?;
        write_out(out, bp.into())
    })
}

/// # Safety
/// `series` and `breakpoint` must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_two_regime_fit(
    series: *const ZlSeries,
    law: ZlLaw,
    breakpoint: *const ZlBreakpoint,
    out: *mut ZlTwoRegimeFit,
) -> ZlStatus {
    guard(|| {
        let s = deref(series, "series")?;
        let bp: Breakpoint = (*deref(breakpoint, "breakpoint")?).into();
        let fit = two_regime_fit(law.into(), &s.0, &bp)?;
        write_out(
            out,
            ZlTwoRegimeFit {
                fit1: fit.fit1.into(),
                fit2: fit.fit2.into(),
                total_deviance: fit.total_deviance,
            },
        )
    })
}

fn to_strategy(strategy: ZlStrategy, manual_index: usize) -> BreakpointStrategy {
    match strategy {
        ZlStrategy::GlobalMin => BreakpointStrategy::GlobalMin,
        ZlStrategy::FirstLocalMin => BreakpointStrategy::FirstLocalMin,
        ZlStrategy::Manual => BreakpointStrategy::Manual(manual_index),
    }
}

/// Default analysis options.
#[no_mangle]
pub extern "C" fn zl_analysis_options_default() -> ZlAnalysisOptions {
    let d = AnalysisOptions::default();
    ZlAnalysisOptions {
        regimes: ZlRegimes::Both,
        strategy: ZlStrategy::GlobalMin,
        manual_index: 0,
        min_segment: d.min_segment,
        drop_tail: false,
    }
}

/// Runs the full analysis and returns the JSON report as a string to be
/// released with [`zl_string_free`]. A null `options` means defaults.
///
/// # Safety
/// `bin_sizes` must hold `n_sizes` values (or be null when `n_sizes` is 0);
/// `lex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zl_analyze_json(
    lex: *const ZlLexicon,
    bin_sizes: *const usize,
    n_sizes: usize,
    include_raw: bool,
    options: *const ZlAnalysisOptions,
    out: *mut *mut c_char,
) -> ZlStatus {
    guard(|| {
        let lex = deref(lex, "lexicon")?;
        let sizes = match n_sizes {
            0 => &[][..],
            _ if bin_sizes.is_null() => return Err(null("bin_sizes")),
            _ => slice::from_raw_parts(bin_sizes, n_sizes),
        };
        let o = options.as_ref().copied().unwrap_or_else(|| zl_analysis_options_default());
        let opts = AnalysisOptions {
            regimes: match o.regimes {
                ZlRegimes::One => RegimeMode::One,
                ZlRegimes::Two => RegimeMode::Two,
                ZlRegimes::Both => RegimeMode::Both,
            },
            strategy: to_strategy(o.strategy, o.manual_index),
            min_segment: o.min_segment,
            remainder: if o.drop_tail {
                RemainderPolicy::DropTail
            } else {
                RemainderPolicy::Strict
            },
        };
        let analyses = analyze_lexicon(&lex.0, sizes, include_raw, &opts)?;
        let json = Report::new(lex.0.len(), None, &analyses).to_json();
        let c = CString::new(json).map_err(|_| Fail(ZlStatus::Panic, "report contains NUL".into()))?;
        write_out(out, c.into_raw())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
