//! Fitting toolkit for the three Zipfian laws of word frequency and meaning:
//!
//! * rank-frequency, `f ~ i^-alpha`
//! * meaning distribution, `mu ~ i^-gamma`
//! * meaning-frequency, `mu ~ f^delta`
//!
//! together with the exponent relation `delta = gamma / alpha`, equal-size
//! binning, exhaustive two-regime breakpoint detection and synthetic lexicons
//! with known exponents.
//!
//! ```
//! use zipflaws::{powerlaw, synth};
//!
//! let lex = synth::generate(&synth::SynthSpec::single(1000, 1.0e5, 1.0, 50.0, 0.5)).unwrap();
//! let alpha = powerlaw::fit_rank_frequency(&lex).unwrap().exponent;
//! let gamma = powerlaw::fit_meaning_distribution(&lex).unwrap().exponent;
//! let delta = powerlaw::fit_meaning_frequency(&lex).unwrap().exponent;
//! assert!((alpha - 1.0).abs() < 1e-9);
//! assert!((delta - powerlaw::predicted_delta(alpha, gamma).unwrap()).abs() < 1e-9);
//! ```

pub mod analysis;
pub mod binning;
pub mod error;
pub mod lexicon;
pub mod plot;
pub mod powerlaw;
pub mod regimes;
pub mod report;
pub mod synth;

pub use error::{Error, Result};
