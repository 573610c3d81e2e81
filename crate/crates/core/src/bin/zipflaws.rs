use std::fs::{self, File};
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use zipflaws::analysis::{analyze_lexicon, series_label, AnalysisOptions, RegimeMode};
use zipflaws::binning::{valid_bin_sizes, BinnedSeries, RemainderPolicy};
use zipflaws::lexicon::{
    ingest_frequency_table, ingest_meaning_table, ingest_token_stream, intersect, rank,
    write_frequency_table, write_meaning_table, TokenFilterConfig,
};
use zipflaws::plot::series_figures;
use zipflaws::regimes::{BreakpointStrategy, DEFAULT_MIN_SEGMENT};
use zipflaws::report::Report;
use zipflaws::synth::{generate, integerize, IntegerizeMode, SynthSpec};

#[derive(Parser)]
#[command(name = "zipflaws", version, about = "Fit Zipf's rank-frequency, meaning distribution and meaning-frequency laws")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the bin sizes that divide N.
    Bins {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Run the full analysis and write reports.
    Analyze(AnalyzeArgs),
    /// Render SVG figures from a previous `analyze` output directory.
    Plot {
        #[arg(long)]
        from: PathBuf,
        /// Defaults to the `--from` directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a synthetic lexicon as frequency and meanings tables.
    Synth(SynthArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Regimes {
    One,
    Two,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Remainder {
    Strict,
    DropTail,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Report,
    PlotData,
    Figures,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Frequency table: `lemma<delim>count`.
    #[arg(long, conflicts_with = "tokens", required_unless_present = "tokens")]
    freq: Option<PathBuf>,
    /// Token stream: `surface<delim>lemma<delim>tag`.
    #[arg(long)]
    tokens: Option<PathBuf>,
    /// Tag to drop from the token stream; repeatable. Replaces the default set.
    #[arg(long = "exclude-tag", requires = "tokens")]
    exclude_tags: Vec<String>,
    /// Keep every token regardless of tag.
    #[arg(long, requires = "tokens", conflicts_with = "exclude_tags")]
    no_filter: bool,
    /// Meanings table: `lemma<delim>senses`.
    #[arg(long)]
    meanings: PathBuf,
    #[arg(long, default_value_t = '\t')]
    delimiter: char,
    /// Bin size; repeatable. With none given the raw lexicon is analyzed.
    #[arg(long = "bin-size", value_parser = clap::value_parser!(u64).range(1..))]
    bin_sizes: Vec<u64>,
    /// Also analyze the unbinned lexicon.
    #[arg(long)]
    raw: bool,
    #[arg(long, value_enum, default_value = "both")]
    regimes: Regimes,
    /// `global-min`, `first-local-min` or `manual:K` (K = split index).
    #[arg(long, default_value = "global-min", value_parser = parse_strategy)]
    strategy: BreakpointStrategy,
    #[arg(long, default_value_t = DEFAULT_MIN_SEGMENT)]
    min_segment: usize,
    #[arg(long, value_enum, default_value = "strict")]
    remainder: Remainder,
    #[arg(long, default_value = ".")]
    out: PathBuf,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "report,plot-data,figures")]
    formats: Vec<Format>,
}

#[derive(Args)]
struct SynthArgs {
    /// `key = value` spec file; flags below override its entries.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    alpha1: Option<f64>,
    #[arg(long)]
    alpha2: Option<f64>,
    #[arg(long)]
    i_star: Option<usize>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long)]
    gamma1: Option<f64>,
    #[arg(long)]
    gamma2: Option<f64>,
    #[arg(long)]
    d: Option<f64>,
    #[arg(long)]
    noise_sigma: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value = "round", value_parser = |s: &str| s.parse::<IntegerizeMode>().map_err(|e| e.to_string()))]
    integerize: IntegerizeMode,
    #[arg(long, default_value_t = '\t')]
    delimiter: char,
    /// Writes `frequencies.tsv` and `meanings.tsv` here.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

fn parse_strategy(s: &str) -> Result<BreakpointStrategy, String> {
    match s {
        "global-min" => Ok(BreakpointStrategy::GlobalMin),
        "first-local-min" => Ok(BreakpointStrategy::FirstLocalMin),
        _ => s
            .strip_prefix("manual:")
            .and_then(|k| k.parse().ok())
            .map(BreakpointStrategy::Manual)
            .ok_or_else(|| format!("unknown strategy {s:?}; use global-min, first-local-min or manual:K")),
    }
}

fn open(path: &Path) -> Result<BufReader<File>> {
    let f = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    Ok(BufReader::new(f))
}

fn write_file(path: &Path, contents: &[u8]) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))
}

fn cmd_bins(n: u64) {
    let sizes: Vec<String> = valid_bin_sizes(n as usize).iter().map(|s| s.to_string()).collect();
    println!("{}", sizes.join(" "));
}

fn cmd_analyze(args: &AnalyzeArgs) -> Result<()> {
    let freq = match (&args.freq, &args.tokens) {
        (Some(path), _) => ingest_frequency_table(open(path)?, args.delimiter)
            .with_context(|| format!("ingest: {}", path.display()))?,
        (None, Some(path)) => {
            let filter = if args.no_filter {
                TokenFilterConfig::none()
            } else if args.exclude_tags.is_empty() {
                TokenFilterConfig::default()
            } else {
                TokenFilterConfig::excluding(&args.exclude_tags)
            };
            ingest_token_stream(open(path)?, args.delimiter, &filter)
                .with_context(|| format!("ingest: {}", path.display()))?
        }
        (None, None) => bail!("ingest: no frequency source given"),
    };
    let meanings = ingest_meaning_table(open(&args.meanings)?, args.delimiter)
        .with_context(|| format!("ingest: {}", args.meanings.display()))?;
    let joined = intersect(&freq, &meanings);
    let lex = rank(&joined).context("rank")?;

    let opts = AnalysisOptions {
        regimes: match args.regimes {
            Regimes::One => RegimeMode::One,
            Regimes::Two => RegimeMode::Two,
            Regimes::Both => RegimeMode::Both,
        },
        strategy: args.strategy,
        min_segment: args.min_segment,
        remainder: match args.remainder {
            Remainder::Strict => RemainderPolicy::Strict,
            Remainder::DropTail => RemainderPolicy::DropTail,
        },
    };
    let sizes: Vec<usize> = args.bin_sizes.iter().map(|&b| b as usize).collect();
    let analyses = analyze_lexicon(&lex, &sizes, args.raw, &opts)?;
    let report = Report::new(lex.len(), Some(joined.dropped), &analyses);

    fs::create_dir_all(&args.out).with_context(|| format!("cannot create {}", args.out.display()))?;
    let summary = report.summary_table();
    if args.formats.contains(&Format::Report) {
        write_file(&args.out.join("report.json"), report.to_json().as_bytes())?;
        write_file(&args.out.join("summary.txt"), summary.as_bytes())?;
    }
    if args.formats.contains(&Format::PlotData) {
        for a in &analyses {
            let mut buf = Vec::new();
            a.series.write_tsv(&mut buf)?;
            write_file(&args.out.join(format!("series_{}.tsv", a.label())), &buf)?;
            if let Some(two) = &a.two {
                let mut buf = Vec::new();
                two.curve.write_tsv(&mut buf)?;
                write_file(&args.out.join(format!("deviance_{}.tsv", a.label())), &buf)?;
            }
        }
    }
    if args.formats.contains(&Format::Figures) {
        for (a, s) in analyses.iter().zip(&report.series) {
            for (name, svg) in series_figures(s, &a.series) {
                write_file(&args.out.join(name), svg.as_bytes())?;
            }
        }
    }
    print!("{summary}");
    Ok(())
}

fn cmd_plot(from: &Path, out: &Path) -> Result<()> {
    let report_path = from.join("report.json");
    let text = fs::read_to_string(&report_path)
        .with_context(|| format!("plot: cannot read {}", report_path.display()))?;
    let report = Report::from_json(&text).with_context(|| format!("plot: {}", report_path.display()))?;
    fs::create_dir_all(out).with_context(|| format!("cannot create {}", out.display()))?;
    for s in &report.series {
        let path = from.join(format!("series_{}.tsv", series_label(s.bin_size)));
        let series = BinnedSeries::read_tsv(open(&path).context("plot")?)
            .with_context(|| format!("plot: {}", path.display()))?;
        for (name, svg) in series_figures(s, &series) {
            write_file(&out.join(name), svg.as_bytes())?;
        }
    }
    Ok(())
}

fn cmd_synth(args: &SynthArgs) -> Result<()> {
    let mut config = match &args.config {
        Some(path) => {
            fs::read_to_string(path).with_context(|| format!("synth: cannot read {}", path.display()))?
        }
        None => String::new(),
    };
    let overrides = [
        ("n", args.n.map(|v| v.to_string())),
        ("alpha1", args.alpha1.map(|v| v.to_string())),
        ("alpha2", args.alpha2.map(|v| v.to_string())),
        ("i_star", args.i_star.map(|v| v.to_string())),
        ("c", args.c.map(|v| v.to_string())),
        ("gamma1", args.gamma1.map(|v| v.to_string())),
        ("gamma2", args.gamma2.map(|v| v.to_string())),
        ("d", args.d.map(|v| v.to_string())),
        ("noise_sigma", args.noise_sigma.map(|v| v.to_string())),
        ("seed", args.seed.map(|v| v.to_string())),
    ];
    config.push('\n');
    for (key, value) in overrides {
        if let Some(v) = value {
            config.push_str(&format!("{key} = {v}\n"));
        }
    }
    let spec: SynthSpec = config.parse().context("synth: spec")?;
    let lex = generate(&spec).context("synth: generate")?;
    let (lex, distortion) = integerize(&lex, args.integerize).context("synth: integerize")?;
    let (freq, meanings) = lex.to_tables().context("synth: tables")?;

    fs::create_dir_all(&args.out).with_context(|| format!("cannot create {}", args.out.display()))?;
    let mut buf = Vec::new();
    write_frequency_table(&freq, &mut buf, args.delimiter)?;
    write_file(&args.out.join("frequencies.tsv"), &buf)?;
    buf.clear();
    write_meaning_table(&meanings, &mut buf, args.delimiter)?;
    write_file(&args.out.join("meanings.tsv"), &buf)?;

    let mut err = io::stderr().lock();
    writeln!(
        err,
        "{} lemmas; integerization changed {} frequencies (max abs {:.3}, max rel {:.3e})",
        lex.len(),
        distortion.changed,
        distortion.max_abs_change,
        distortion.max_rel_change
    )?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Bins { n } => {
            cmd_bins(*n);
            Ok(())
        }
        Command::Analyze(args) => cmd_analyze(args),
        Command::Plot { from, out } => cmd_plot(from, out.as_deref().unwrap_or(from)),
        Command::Synth(args) => cmd_synth(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
