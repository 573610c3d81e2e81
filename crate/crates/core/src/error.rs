use std::fmt;

/// Which side of a two-regime split a failure refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// Low rank, high frequency.
    One,
    /// High rank, low frequency.
    Two,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regime::One => f.write_str("regime 1"),
            Regime::Two => f.write_str("regime 2"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("lexicon is empty")]
    EmptyLexicon,

    #[error("bin size {bin_size} does not divide {n}; nearest valid bin sizes: {}", join_sizes(.nearest))]
    Divisibility {
        n: usize,
        bin_size: usize,
        nearest: Vec<usize>,
    },

    #[error("invalid bin size {0}; must be at least 1")]
    InvalidBinSize(usize),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate fit: {0}")]
    DegenerateFit(String),

    #[error("insufficient data: need at least {needed} points, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("{what} {value} outside valid range {lo}..={hi}")]
    OutOfRange {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("{regime}: {inner}")]
    DegenerateSegment { regime: Regime, inner: Box<Error> },

    #[error("invalid synthetic spec: {0}")]
    InvalidSpec(String),

    #[error("{count} frequencies would map below 1 when integerized")]
    BelowOne { count: usize },

    #[error("{stage}: {inner}")]
    Stage { stage: &'static str, inner: Box<Error> },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn join_sizes(sizes: &[usize]) -> String {
    sizes
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
