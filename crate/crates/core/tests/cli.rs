use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use zipflaws::report::Report;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zipflaws"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn analyze(fixture: &str, out: &Path, extra: &[&str]) -> Output {
    let dir = fixtures().join(fixture);
    let freq = dir.join("frequencies.tsv");
    let meanings = dir.join("meanings.tsv");
    let mut args = vec![
        "analyze",
        "--freq",
        freq.to_str().unwrap(),
        "--meanings",
        meanings.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ];
    args.extend_from_slice(extra);
    run(&args)
}

#[test]
fn bins_lists_divisors() {
    assert_eq!(stdout(&run(&["bins", "12"])), "1 2 3 4 6 12\n");
    assert_eq!(stdout(&run(&["bins", "7"])), "1 7\n");
    assert_eq!(stdout(&run(&["bins", "3082"])), "1 2 23 46 67 134 1541 3082\n");
}

#[test]
fn bins_rejects_bad_input() {
    for arg in ["-3", "0", "twelve"] {
        let o = run(&["bins", arg]);
        assert!(!o.status.success(), "bins {arg} should fail");
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn single_regime_fixture_end_to_end() {
    let tmp = tempfile::tempdir().unwrap();
    let o = analyze("single", tmp.path(), &["--regimes", "one"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let summary = stdout(&o);
    let row = summary.lines().nth(2).unwrap();
    let cols: Vec<&str> = row.split_whitespace().collect();
    assert_eq!(cols, ["-", "1.000", "0.500", "0.500", "0.500"], "{summary}");

    let report = Report::from_json(&fs::read_to_string(tmp.path().join("report.json")).unwrap()).unwrap();
    let one = report.series[0].one_regime.as_ref().unwrap();
    assert!((one.alpha - 1.0).abs() < 1e-5);
    assert!((one.gamma - 0.5).abs() < 1e-5);
    assert!((one.delta - 0.5).abs() < 1e-5);
    assert_eq!(one.delta_predicted, zipflaws::report::sig6(one.gamma / one.alpha));
    assert_eq!(fs::read_to_string(tmp.path().join("summary.txt")).unwrap(), summary);
    assert!(report.series[0].two_regime.is_none());
    assert!(!tmp.path().join("deviance_raw.tsv").exists());
    assert!(tmp.path().join("rank_frequency_raw.svg").exists());
}

#[test]
fn divisibility_error_names_divisors() {
    let tmp = tempfile::tempdir().unwrap();
    let o = analyze("n7", tmp.path(), &["--bin-size", "2"]);
    assert!(!o.status.success());
    let err = stderr(&o);
    assert!(err.contains("binning: bin size 2 does not divide 7; nearest valid bin sizes: 1, 7"), "{err}");
    assert_eq!(err.matches("does not divide").count(), 1, "{err}");
    assert!(!tmp.path().join("report.json").exists());

    let o = analyze("n7", tmp.path(), &["--bin-size", "2", "--remainder", "drop-tail", "--regimes", "one"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let report = Report::from_json(&fs::read_to_string(tmp.path().join("report.json")).unwrap()).unwrap();
    assert_eq!(report.series[0].n_points, 3);
    assert_eq!(report.series[0].dropped_records, 1);
}

#[test]
fn two_regime_fixture_recovers_spec() {
    let spec: zipflaws::synth::SynthSpec = fs::read_to_string(fixtures().join("two_regime.cfg"))
        .unwrap()
        .parse()
        .unwrap();
    let tmp = tempfile::tempdir().unwrap();
    let o = analyze("two_regime", tmp.path(), &["--regimes", "two"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let report = Report::from_json(&fs::read_to_string(tmp.path().join("report.json")).unwrap()).unwrap();
    let two = report.series[0].two_regime.as_ref().unwrap();
    // committed counts are rounded to integers
    let tol = 1e-4;
    assert!((two.breakpoint.i_star - spec.i_star as f64).abs() <= 0.5, "{}", two.breakpoint.i_star);
    assert!((two.alpha1 - spec.alpha1).abs() < tol);
    assert!((two.alpha2 - spec.alpha2).abs() < tol);
    assert!((two.gamma1 - spec.gamma1).abs() < tol);
    assert!((two.gamma2 - spec.gamma2).abs() < tol);
    assert!((two.delta1 - spec.gamma1 / spec.alpha1).abs() < tol);
    assert!((two.delta2 - spec.gamma2 / spec.alpha2).abs() < tol);
    assert!(tmp.path().join("deviance_raw.tsv").exists());
}

#[test]
fn synth_reproduces_committed_fixtures() {
    for name in ["single", "two_regime"] {
        let tmp = tempfile::tempdir().unwrap();
        let cfg = fixtures().join(format!("{name}.cfg"));
        let o = run(&["synth", "--config", cfg.to_str().unwrap(), "--out", tmp.path().to_str().unwrap()]);
        assert!(o.status.success(), "{}", stderr(&o));
        for file in ["frequencies.tsv", "meanings.tsv"] {
            let got = fs::read(tmp.path().join(file)).unwrap();
            let want = fs::read(fixtures().join(name).join(file)).unwrap();
            assert!(got == want, "{name}/{file} differs from the committed fixture");
        }
    }
}

#[test]
fn synth_flags_override_config() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = fixtures().join("single.cfg");
    let out = tmp.path().to_str().unwrap();
    let o = run(&["synth", "--config", cfg.to_str().unwrap(), "--n", "10", "--out", out]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = fs::read_to_string(tmp.path().join("frequencies.tsv")).unwrap();
    assert_eq!(text.lines().count(), 10);

    let o = run(&["synth", "--n", "10", "--alpha1", "1", "--out", out]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("missing required key \"c\""), "{}", stderr(&o));

    let o = run(&["synth", "--n", "3", "--alpha1", "1", "--c", "0.4", "--d", "1", "--integerize", "floor", "--out", out]);
    assert!(!o.status.success());
}

#[test]
fn plot_rebuilds_figures_from_outputs() {
    let tmp = tempfile::tempdir().unwrap();
    let first = tmp.path().join("analysis");
    let o = analyze("two_regime", &first, &["--bin-size", "10", "--raw"]);
    assert!(o.status.success(), "{}", stderr(&o));

    let svgs: Vec<PathBuf> = fs::read_dir(&first)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "svg"))
        .collect();
    assert_eq!(svgs.len(), 12);

    let replot = tmp.path().join("replot");
    let o = run(&["plot", "--from", first.to_str().unwrap(), "--out", replot.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    for svg in &svgs {
        let again = replot.join(svg.file_name().unwrap());
        assert_eq!(fs::read(svg).unwrap(), fs::read(again).unwrap(), "{}", svg.display());
    }

    let single = fs::read_to_string(first.join("rank_frequency_bin10.svg")).unwrap();
    assert_eq!(single.matches(r#"class="point""#).count(), 100);
    assert_eq!(single.matches(r#"class="fit""#).count(), 1);
    assert_eq!(single.matches("stroke-dasharray").count(), 0);
    let two = fs::read_to_string(first.join("meaning_frequency_bin10_two_regime.svg")).unwrap();
    assert_eq!(two.matches(r#"class="fit""#).count(), 2);
    assert_eq!(two.matches(r#"class="breakpoint""#).count(), 1);
}

#[test]
fn plot_without_inputs_fails() {
    let tmp = tempfile::tempdir().unwrap();
    let o = run(&["plot", "--from", tmp.path().to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("plot: cannot read"), "{}", stderr(&o));
}

#[test]
fn formats_restrict_outputs() {
    let tmp = tempfile::tempdir().unwrap();
    let o = analyze("single", tmp.path(), &["--regimes", "one", "--formats", "plot-data"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let names: Vec<String> = fs::read_dir(tmp.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    assert_eq!(names, ["series_raw.tsv"]);
}

#[test]
fn token_stream_input() {
    let tmp = tempfile::tempdir().unwrap();
    let tokens = tmp.path().join("tokens.tsv");
    let mut text = String::new();
    for (lemma, count) in [("casa", 8), ("gat", 4), ("riu", 3), ("mar", 2), ("sol", 2), ("pa", 1)] {
        for _ in 0..count {
            text.push_str(&format!("{lemma}\t{lemma}\tnoun\n"));
        }
    }
    text.push_str(".\t.\tpunctuation\nBarcelona\tBarcelona\tproper_noun\n");
    fs::write(&tokens, text).unwrap();
    let meanings = tmp.path().join("meanings.tsv");
    fs::write(&meanings, "casa\t9\ngat\t5\nriu\t4\nmar\t6\nsol\t3\npa\t2\n.\t1\nBarcelona\t1\n").unwrap();
    let out = tmp.path().join("out");
    let o = run(&[
        "analyze",
        "--tokens",
        tokens.to_str().unwrap(),
        "--meanings",
        meanings.to_str().unwrap(),
        "--regimes",
        "one",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let report = Report::from_json(&fs::read_to_string(out.join("report.json")).unwrap()).unwrap();
    assert_eq!(report.lexicon_size, 6);
    let dropped = report.intersection_dropped.unwrap();
    assert_eq!((dropped.corpus_only, dropped.dictionary_only), (0, 2));
}

#[test]
fn parse_errors_exit_nonzero_with_stage() {
    let tmp = tempfile::tempdir().unwrap();
    let freq = tmp.path().join("f.tsv");
    fs::write(&freq, "a\t3\nb\n").unwrap();
    let o = run(&[
        "analyze",
        "--freq",
        freq.to_str().unwrap(),
        "--meanings",
        freq.to_str().unwrap(),
        "--out",
        tmp.path().to_str().unwrap(),
    ]);
    assert!(!o.status.success());
    let err = stderr(&o);
    assert!(err.contains("ingest: ") && err.contains("line 2"), "{err}");
}
