use std::ffi::{c_char, CStr, CString};
use std::ptr;

use zipflaws_ffi::*;

fn last_error() -> String {
    let p = zl_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn synth(spec: &ZlSynthSpec) -> *mut ZlLexicon {
    let mut lex = ptr::null_mut();
    assert_eq!(unsafe { zl_synth_generate(spec, &mut lex) }, ZlStatus::Ok);
    lex
}

fn two_regime_spec() -> ZlSynthSpec {
    ZlSynthSpec {
        n: 200,
        alpha1: 1.0,
        alpha2: 2.0,
        i_star: 40,
        c: 1.0e6,
        gamma1: 0.5,
        gamma2: 0.3,
        d: 100.0,
        noise_sigma: 0.0,
        seed: 0,
    }
}

#[test]
fn lexicon_from_tsv_text() {
    let freq = CString::new("a\t10\nb\t5\nc\t2\nd\t1\n").unwrap();
    let meanings = CString::new("a\t4\nb\t3\nc\t2\nzz\t9\n").unwrap();
    let mut lex = ptr::null_mut();
    let status = unsafe { zl_lexicon_from_tsv(freq.as_ptr(), meanings.as_ptr(), b'\t' as c_char, &mut lex) };
    assert_eq!(status, ZlStatus::Ok);
    assert_eq!(unsafe { zl_lexicon_len(lex) }, 3);

    let mut series = ptr::null_mut();
    assert_eq!(unsafe { zl_series_raw(lex, &mut series) }, ZlStatus::Ok);
    let mut bin = ZlBin::default();
    assert_eq!(unsafe { zl_series_get(series, 0, &mut bin) }, ZlStatus::Ok);
    assert_eq!((bin.mean_rank, bin.mean_frequency, bin.mean_senses), (1.0, 10.0, 4.0));
    assert_eq!(unsafe { zl_series_get(series, 3, &mut bin) }, ZlStatus::OutOfRange);
    unsafe {
        zl_series_free(series);
        zl_lexicon_free(lex);
    }
}

#[test]
fn parse_errors_carry_messages() {
    let freq = CString::new("a\t10\nb\tmany\n").unwrap();
    let meanings = CString::new("a\t1\n").unwrap();
    let mut lex = ptr::null_mut();
    let status = unsafe { zl_lexicon_from_tsv(freq.as_ptr(), meanings.as_ptr(), b'\t' as c_char, &mut lex) };
    assert_eq!(status, ZlStatus::Parse);
    assert!(lex.is_null());
    assert!(last_error().contains("line 2"), "{}", last_error());
}

#[test]
fn null_arguments_are_rejected() {
    let mut lex = ptr::null_mut();
    assert_eq!(unsafe { zl_synth_generate(ptr::null(), &mut lex) }, ZlStatus::NullPointer);
    assert_eq!(unsafe { zl_series_raw(ptr::null(), ptr::null_mut()) }, ZlStatus::NullPointer);
    assert_eq!(unsafe { zl_lexicon_len(ptr::null()) }, 0);
    unsafe {
        zl_lexicon_free(ptr::null_mut());
        zl_string_free(ptr::null_mut());
    }
}

#[test]
fn bin_sizes_buffer_protocol() {
    let mut len = 0;
    assert_eq!(unsafe { zl_valid_bin_sizes(12, ptr::null_mut(), 0, &mut len) }, ZlStatus::BufferTooSmall);
    assert_eq!(len, 6);
    let mut buf = vec![0usize; len];
    assert_eq!(unsafe { zl_valid_bin_sizes(12, buf.as_mut_ptr(), buf.len(), &mut len) }, ZlStatus::Ok);
    assert_eq!(buf, [1, 2, 3, 4, 6, 12]);
}

#[test]
fn divisibility_status() {
    let lex = synth(&ZlSynthSpec {
        n: 7,
        alpha1: 1.0,
        alpha2: 1.0,
        i_star: 7,
        c: 100.0,
        d: 2.0,
        ..Default::default()
    });
    let mut series = ptr::null_mut();
    assert_eq!(unsafe { zl_series_bin(lex, 2, false, &mut series) }, ZlStatus::Divisibility);
    assert!(last_error().contains("1, 7"));
    assert_eq!(unsafe { zl_series_bin(lex, 2, true, &mut series) }, ZlStatus::Ok);
    assert_eq!(unsafe { zl_series_len(series) }, 3);
    unsafe {
        zl_series_free(series);
        zl_lexicon_free(lex);
    }
}

#[test]
fn loglog_fit_over_arrays() {
    let xs: Vec<f64> = (1..=10).map(f64::from).collect();
    let ys: Vec<f64> = xs.iter().map(|x| 5.0 * x.powf(-1.5)).collect();
    let mut fit = ZlLogLogFit::default();
    assert_eq!(unsafe { zl_fit_loglog(xs.as_ptr(), ys.as_ptr(), 10, &mut fit) }, ZlStatus::Ok);
    assert!((fit.slope + 1.5).abs() < 1e-12);
    assert!((fit.intercept - 5f64.ln()).abs() < 1e-12);
    assert_eq!(fit.n_points, 10);

    let bad = [1.0, -2.0];
    assert_eq!(unsafe { zl_fit_loglog(bad.as_ptr(), bad.as_ptr(), 2, &mut fit) }, ZlStatus::Domain);
}

#[test]
fn exponent_relation() {
    let mut d = 0.0;
    assert_eq!(unsafe { zl_predicted_delta(2.0, 0.5, &mut d) }, ZlStatus::Ok);
    assert_eq!(d, 0.25);
    assert_eq!(unsafe { zl_predicted_delta(0.0, 0.5, &mut d) }, ZlStatus::Domain);
    let (mut d1, mut d2) = (0.0, 0.0);
    assert_eq!(unsafe { zl_predicted_deltas(1.0, 2.0, 0.5, 0.3, &mut d1, &mut d2) }, ZlStatus::Ok);
    assert_eq!((d1, d2), (0.5, 0.15));
}

#[test]
fn two_regime_pipeline() {
    let lex = synth(&two_regime_spec());
    let mut series = ptr::null_mut();
    assert_eq!(unsafe { zl_series_raw(lex, &mut series) }, ZlStatus::Ok);

    let mut alpha = std::mem::MaybeUninit::<ZlPowerLawFit>::uninit();
    assert_eq!(unsafe { zl_fit_law(series, ZlLaw::RankFrequency, alpha.as_mut_ptr()) }, ZlStatus::Ok);
    let alpha = unsafe { alpha.assume_init() };
    assert_eq!(alpha.law, ZlLaw::RankFrequency);
    assert!(alpha.exponent > 1.0 && alpha.exponent < 2.0);

    let mut curve = ptr::null_mut();
    assert_eq!(unsafe { zl_series_deviance(series, 3, &mut curve) }, ZlStatus::Ok);
    let n = unsafe { zl_curve_len(curve) };
    assert_eq!(n, 200 - 2 * 3 + 1);
    let mut first = ZlDevianceCandidate::default();
    assert_eq!(unsafe { zl_curve_get(curve, 0, &mut first) }, ZlStatus::Ok);
    assert_eq!((first.split_index, first.split_rank), (3, 3.5));

    let mut bp = std::mem::MaybeUninit::<ZlBreakpoint>::uninit();
    let status = unsafe { zl_select_breakpoint(curve, series, ZlStrategy::GlobalMin, 0, bp.as_mut_ptr()) };
    assert_eq!(status, ZlStatus::Ok);
    let bp = unsafe { bp.assume_init() };
    assert!((bp.i_star - 40.0).abs() <= 0.5, "i* = {}", bp.i_star);
    assert_eq!(bp.source, ZlStrategy::GlobalMin);

    let mut fit = std::mem::MaybeUninit::<ZlTwoRegimeFit>::uninit();
    assert_eq!(unsafe { zl_two_regime_fit(series, ZlLaw::RankFrequency, &bp, fit.as_mut_ptr()) }, ZlStatus::Ok);
    let fit = unsafe { fit.assume_init() };
    assert!((fit.fit1.exponent - 1.0).abs() < 1e-9);
    assert!((fit.fit2.exponent - 2.0).abs() < 1e-9);

    let mut manual = std::mem::MaybeUninit::<ZlBreakpoint>::uninit();
    let status = unsafe { zl_select_breakpoint(curve, series, ZlStrategy::Manual, 9999, manual.as_mut_ptr()) };
    assert_eq!(status, ZlStatus::OutOfRange);

    unsafe {
        zl_curve_free(curve);
        zl_series_free(series);
        zl_lexicon_free(lex);
    }
}

#[test]
fn analyze_to_json() {
    let lex = synth(&two_regime_spec());
    let sizes = [2usize, 4];
    let mut json = ptr::null_mut();
    let status = unsafe { zl_analyze_json(lex, sizes.as_ptr(), sizes.len(), true, ptr::null(), &mut json) };
    assert_eq!(status, ZlStatus::Ok);
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_owned();
    unsafe { zl_string_free(json) };
    let report = zipflaws::report::Report::from_json(&text).expect("valid report JSON");
    assert_eq!(report.series.len(), 3);
    assert_eq!(report.series[0].label, "raw");
    assert_eq!(report.series[2].label, "bin4");

    let mut opts = zl_analysis_options_default();
    opts.regimes = ZlRegimes::One;
    let bad = [3usize];
    let status = unsafe { zl_analyze_json(lex, bad.as_ptr(), 1, false, &opts, &mut json) };
    assert_eq!(status, ZlStatus::Divisibility);
    assert!(last_error().starts_with("binning: "));
    unsafe { zl_lexicon_free(lex) };
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/zipflaws.h");
    let source = include_str!("../src/lib.rs");
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .filter_map(|rest| rest.split('(').next())
        .collect();
    assert!(exports.len() > 20);
    for name in exports {
        let declared = header.contains(&format!(" {name}(")) || header.contains(&format!("*{name}("));
        assert!(declared, "{name} missing from header");
    }
}
