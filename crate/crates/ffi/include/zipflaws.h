#ifndef ZIPFLAWS_H
#define ZIPFLAWS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ZlStatus {
  ZL_STATUS_OK = 0,
  ZL_STATUS_NULL_POINTER = 1,
  ZL_STATUS_INVALID_UTF8 = 2,
  ZL_STATUS_PARSE = 3,
  ZL_STATUS_EMPTY_LEXICON = 4,
  ZL_STATUS_DIVISIBILITY = 5,
  ZL_STATUS_INVALID_ARGUMENT = 6,
  ZL_STATUS_DOMAIN = 7,
  ZL_STATUS_DEGENERATE_FIT = 8,
  ZL_STATUS_INSUFFICIENT_DATA = 9,
  ZL_STATUS_OUT_OF_RANGE = 10,
  ZL_STATUS_BUFFER_TOO_SMALL = 11,
  ZL_STATUS_IO = 12,
  ZL_STATUS_PANIC = 13,
} ZlStatus;

typedef enum ZlLaw {
  ZL_LAW_RANK_FREQUENCY = 0,
  ZL_LAW_MEANING_DISTRIBUTION = 1,
  ZL_LAW_MEANING_FREQUENCY = 2,
} ZlLaw;

typedef enum ZlStrategy {
  ZL_STRATEGY_GLOBAL_MIN = 0,
  ZL_STRATEGY_FIRST_LOCAL_MIN = 1,
  ZL_STRATEGY_MANUAL = 2,
} ZlStrategy;

typedef enum ZlRegimes {
  ZL_REGIMES_ONE = 0,
  ZL_REGIMES_TWO = 1,
  ZL_REGIMES_BOTH = 2,
} ZlRegimes;

/*
 Deviance curve handle.
 */
typedef struct ZlCurve ZlCurve;

/*
 Ranked lexicon handle.
 */
typedef struct ZlLexicon ZlLexicon;

/*
 Binned (or raw) series handle.
 */
typedef struct ZlSeries ZlSeries;

typedef struct ZlSynthSpec {
  size_t n;
  double alpha1;
  double alpha2;
  size_t i_star;
  double c;
  double gamma1;
  double gamma2;
  double d;
  double noise_sigma;
  uint64_t seed;
} ZlSynthSpec;

typedef struct ZlBin {
  size_t first_rank;
  size_t last_rank;
  double mean_rank;
  double mean_frequency;
  double mean_senses;
  size_t member_count;
} ZlBin;

typedef struct ZlLogLogFit {
  double slope;
  double intercept;
  double r_squared;
  double sse_log;
  size_t n_points;
} ZlLogLogFit;

typedef struct ZlPowerLawFit {
  enum ZlLaw law;
  double exponent;
  double log_intercept;
  double r_squared;
  double sse_log;
  size_t n_points;
} ZlPowerLawFit;

typedef struct ZlDevianceCandidate {
  size_t split_index;
  double split_rank;
  double deviance;
} ZlDevianceCandidate;

typedef struct ZlBreakpoint {
  size_t split_index;
  double i_star;
  double f_of_i_star;
  enum ZlStrategy source;
} ZlBreakpoint;

typedef struct ZlTwoRegimeFit {
  struct ZlPowerLawFit fit1;
  struct ZlPowerLawFit fit2;
  double total_deviance;
} ZlTwoRegimeFit;

typedef struct ZlAnalysisOptions {
  enum ZlRegimes regimes;
  enum ZlStrategy strategy;
  /*
   Split index used when `strategy` is `Manual`.
   */
  size_t manual_index;
  size_t min_segment;
  bool drop_tail;
} ZlAnalysisOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failure on this thread, or null if none. The pointer
 stays valid until the next failing call on the same thread.
 */
const char *zl_last_error_message(void);

/*
 Builds a ranked lexicon from the text of a frequency table and a meanings
 table, keeping only lemmas present in both.

 # Safety
 `freq_tsv` and `meanings_tsv` must be NUL-terminated strings; `out` must be
 writable.
 */
enum ZlStatus zl_lexicon_from_tsv(const char *freq_tsv,
                                  const char *meanings_tsv,
                                  char delim,
                                  struct ZlLexicon **out);

/*
 Generates a real-valued synthetic lexicon.

 # Safety
 `spec` must point to a valid spec; `out` must be writable.
 */
enum ZlStatus zl_synth_generate(const struct ZlSynthSpec *spec, struct ZlLexicon **out);

/*
 Number of records; 0 for a null handle.

 # Safety
 `lex` must be null or a live handle.
 */
size_t zl_lexicon_len(const struct ZlLexicon *lex);

/*
 # Safety
 `lex` must be null or a handle not yet freed.
 */
void zl_lexicon_free(struct ZlLexicon *lex);

/*
 Equal-size binning. With `drop_tail` false the bin size must divide the
 lexicon size.

 # Safety
 `lex` must be a live handle; `out` must be writable.
 */
enum ZlStatus zl_series_bin(const struct ZlLexicon *lex,
                            size_t bin_size,
                            bool drop_tail,
                            struct ZlSeries **out);

/*
 The unbinned lexicon as a series of single-record bins.

 # Safety
 `lex` must be a live handle; `out` must be writable.
 */
enum ZlStatus zl_series_raw(const struct ZlLexicon *lex, struct ZlSeries **out);

/*
 # Safety
 `series` must be null or a live handle.
 */
size_t zl_series_len(const struct ZlSeries *series);

/*
 # Safety
 `series` must be a live handle; `out` must be writable.
 */
enum ZlStatus zl_series_get(const struct ZlSeries *series, size_t index, struct ZlBin *out);

/*
 # Safety
 `series` must be null or a handle not yet freed.
 */
void zl_series_free(struct ZlSeries *series);

/*
 Writes the divisors of `n` in ascending order. `*len` always receives the
 full count; if it exceeds `cap` nothing is written and `BufferTooSmall` is
 returned.

 # Safety
 `buf` must have room for `cap` values (or be null when `cap` is 0); `len`
 must be writable.
 */
enum ZlStatus zl_valid_bin_sizes(size_t n, size_t *buf, size_t cap, size_t *len);

/*
 Least-squares line through `(ln x, ln y)`.

 # Safety
 `xs` and `ys` must each hold `n` values; `out` must be writable.
 */
enum ZlStatus zl_fit_loglog(const double *xs, const double *ys, size_t n, struct ZlLogLogFit *out);

/*
 # Safety
 `series` must be a live handle; `out` must be writable.
 */
enum ZlStatus zl_fit_law(const struct ZlSeries *series, enum ZlLaw law, struct ZlPowerLawFit *out);

/*
 `gamma / alpha`.

 # Safety
 `out` must be writable.
 */
enum ZlStatus zl_predicted_delta(double alpha, double gamma, double *out);

/*
 Per-regime `gamma_k / alpha_k`.

 # Safety
 `out1` and `out2` must be writable.
 */
enum ZlStatus zl_predicted_deltas(double alpha1,
                                  double alpha2,
                                  double gamma1,
                                  double gamma2,
                                  double *out1,
                                  double *out2);

/*
 Exhaustive two-segment deviance scan over points sorted by x.

 # Safety
 `xs` and `ys` must each hold `n` values; `out` must be writable.
 */
enum ZlStatus zl_deviance_scan(const double *xs,
                               const double *ys,
                               size_t n,
                               size_t min_segment,
                               struct ZlCurve **out);

/*
 Deviance scan of a series' rank-frequency points.

 # Safety
 `series` must be a live handle; `out` must be writable.
 */
enum ZlStatus zl_series_deviance(const struct ZlSeries *series,
                                 size_t min_segment,
                                 struct ZlCurve **out);

/*
 # Safety
 `curve` must be null or a live handle.
 */
size_t zl_curve_len(const struct ZlCurve *curve);

/*
 Candidate at position `index` (not split index) of the curve.

 # Safety
 `curve` must be a live handle; `out` must be writable.
 */
enum ZlStatus zl_curve_get(const struct ZlCurve *curve,
                           size_t index,
                           struct ZlDevianceCandidate *out);

/*
 # Safety
 `curve` must be null or a handle not yet freed.
 */
void zl_curve_free(struct ZlCurve *curve);

/*
 `manual_index` is the split index used with `ZlStrategy::Manual` and is
 ignored otherwise.

 # Safety
 `curve` and `series` must be live handles; `out` must be writable.
 */
enum ZlStatus zl_select_breakpoint(const struct ZlCurve *curve,
                                   const struct ZlSeries *series,
                                   enum ZlStrategy strategy,
                                   size_t manual_index,
                                   struct ZlBreakpoint *out);

/*
 # Safety
 `series` and `breakpoint` must be valid; `out` must be writable.
 */
enum ZlStatus zl_two_regime_fit(const struct ZlSeries *series,
                                enum ZlLaw law,
                                const struct ZlBreakpoint *breakpoint,
                                struct ZlTwoRegimeFit *out);

/*
 Default analysis options.
 */
struct ZlAnalysisOptions zl_analysis_options_default(void);

/*
 Runs the full analysis and returns the JSON report as a string to be
 released with [`zl_string_free`]. A null `options` means defaults.

 # Safety
 `bin_sizes` must hold `n_sizes` values (or be null when `n_sizes` is 0);
 `lex` must be a live handle; `out` must be writable.
 */
enum ZlStatus zl_analyze_json(const struct ZlLexicon *lex,
                              const size_t *bin_sizes,
                              size_t n_sizes,
                              bool include_raw,
                              const struct ZlAnalysisOptions *options,
                              char **out);

/*
 # Safety
 `s` must be null or a string returned by this library and not yet freed.
 */
void zl_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZIPFLAWS_H */
