//! Dependency-free SVG rendering of log-log panels: a scatter of the series,
//! fitted power-law lines and dashed breakpoint markers.
//!
//! Output depends only on the inputs. Coordinates carry two decimals.

use std::fmt::Write as _;

use crate::binning::BinnedSeries;
use crate::powerlaw::Law;
use crate::report::{FitReport, SeriesReport};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;

/// `y = exp(log_intercept) * x^slope` drawn over `[x_from, x_to]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitLine {
    pub x_from: f64,
    pub x_to: f64,
    pub log_intercept: f64,
    pub slope: f64,
}

impl FitLine {
    fn y(&self, x: f64) -> f64 {
        (self.log_intercept + self.slope * x.ln()).exp()
    }

    fn from_report(fit: &FitReport, x_from: f64, x_to: f64) -> Self {
        FitLine {
            x_from,
            x_to,
            log_intercept: fit.intercept,
            slope: fit.slope(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct LogLogPlot {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub points: Vec<(f64, f64)>,
    pub lines: Vec<FitLine>,
    /// x positions of dashed vertical markers.
    pub markers: Vec<f64>,
}

struct Axis {
    lo: f64,
    hi: f64,
}

impl Axis {
    fn spanning(values: impl Iterator<Item = f64>) -> Self {
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for v in values.filter(|v| *v > 0.0 && v.is_finite()) {
            let l = v.log10();
            lo = lo.min(l);
            hi = hi.max(l);
        }
        if !lo.is_finite() {
            return Axis { lo: 0.0, hi: 1.0 };
        }
        if hi - lo < 1e-9 {
            return Axis {
                lo: lo - 0.5,
                hi: hi + 0.5,
            };
        }
        let pad = 0.05 * (hi - lo);
        Axis {
            lo: lo - pad,
            hi: hi + pad,
        }
    }

    /// Fraction of the axis covered at value `v`.
    fn frac(&self, v: f64) -> f64 {
        (v.log10() - self.lo) / (self.hi - self.lo)
    }

    fn decades(&self) -> impl Iterator<Item = i32> {
        (self.lo.ceil() as i32)..=(self.hi.floor() as i32)
    }
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

impl LogLogPlot {
    pub fn render(&self) -> String {
        let line_xs = self.lines.iter().flat_map(|l| [l.x_from, l.x_to]);
        let line_ys = self.lines.iter().flat_map(|l| [l.y(l.x_from), l.y(l.x_to)]);
        let xa = Axis::spanning(self.points.iter().map(|p| p.0).chain(line_xs).chain(self.markers.iter().copied()));
        let ya = Axis::spanning(self.points.iter().map(|p| p.1).chain(line_ys));
        let plot_w = WIDTH - LEFT - RIGHT;
        let plot_h = HEIGHT - TOP - BOTTOM;
        let px = |x: f64| LEFT + xa.frac(x) * plot_w;
        let py = |y: f64| TOP + (1.0 - ya.frac(y)) * plot_h;

        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
        );
        let _ = writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="14">{}</text>"#,
            WIDTH / 2.0,
            esc(&self.title)
        );
        let _ = writeln!(
            s,
            r#"<rect class="frame" x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>"#
        );

        for k in xa.decades() {
            let x = px(10f64.powi(k));
            let _ = writeln!(
                s,
                r#"<line class="tick" x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/><text x="{x:.2}" y="{:.2}" text-anchor="middle">1e{k}</text>"#,
                TOP + plot_h,
                TOP + plot_h + 5.0,
                TOP + plot_h + 18.0
            );
        }
        for k in ya.decades() {
            let y = py(10f64.powi(k));
            let _ = writeln!(
                s,
                r#"<line class="tick" x1="{:.2}" y1="{y:.2}" x2="{LEFT}" y2="{y:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">1e{k}</text>"#,
                LEFT - 5.0,
                LEFT - 8.0,
                y + 4.0
            );
        }
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            LEFT + plot_w / 2.0,
            HEIGHT - 15.0,
            esc(&self.x_label)
        );
        let _ = writeln!(
            s,
            r#"<text x="18" y="{:.2}" text-anchor="middle" transform="rotate(-90 18 {:.2})">{}</text>"#,
            TOP + plot_h / 2.0,
            TOP + plot_h / 2.0,
            esc(&self.y_label)
        );

        let _ = writeln!(s, r##"<g fill="#1f4e9c" fill-opacity="0.7">"##);
        for &(x, y) in &self.points {
            let _ = writeln!(s, r#"<circle class="point" cx="{:.2}" cy="{:.2}" r="2.5"/>"#, px(x), py(y));
        }
        let _ = writeln!(s, "</g>");

        for l in &self.lines {
            let _ = writeln!(
                s,
                r##"<line class="fit" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#c62828" stroke-width="2"/>"##,
                px(l.x_from),
                py(l.y(l.x_from)),
                px(l.x_to),
                py(l.y(l.x_to))
            );
        }
        for &m in &self.markers {
            let x = px(m);
            let _ = writeln!(
                s,
                r##"<line class="breakpoint" x1="{x:.2}" y1="{TOP}" x2="{x:.2}" y2="{:.2}" stroke="#1565c0" stroke-dasharray="6 4"/>"##,
                TOP + plot_h
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

fn axis_labels(law: Law) -> (&'static str, &'static str) {
    match law {
        Law::RankFrequency => ("rank i", "frequency f"),
        Law::MeaningDistribution => ("rank i", "meanings mu"),
        Law::MeaningFrequency => ("frequency f", "meanings mu"),
    }
}

fn x_range(points: &[(f64, f64)]) -> (f64, f64) {
    points
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| (lo.min(p.0), hi.max(p.0)))
}

/// File name and SVG text for every panel a series report supports.
pub fn series_figures(report: &SeriesReport, series: &BinnedSeries) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for law in Law::ALL {
        let points = law.points(series);
        if points.is_empty() {
            continue;
        }
        let (x_min, x_max) = x_range(&points);
        let (x_label, y_label) = axis_labels(law);

        if let Some(one) = &report.one_regime {
            let fit = match law {
                Law::RankFrequency => &one.rank_frequency,
                Law::MeaningDistribution => &one.meaning_distribution,
                Law::MeaningFrequency => &one.meaning_frequency,
            };
            let plot = LogLogPlot {
                title: format!("{} ({}), {} = {:.3}", law.name(), report.label, law.exponent_symbol(), fit.exponent),
                x_label: x_label.into(),
                y_label: y_label.into(),
                points: points.clone(),
                lines: vec![FitLine::from_report(fit, x_min, x_max)],
                markers: Vec::new(),
            };
            out.push((format!("{}_{}.svg", law.name(), report.label), plot.render()));
        }

        if let Some(two) = &report.two_regime {
            let pair = match law {
                Law::RankFrequency => &two.rank_frequency,
                Law::MeaningDistribution => &two.meaning_distribution,
                Law::MeaningFrequency => &two.meaning_frequency,
            };
            let (lines, marker) = match law {
                Law::MeaningFrequency => {
                    let cut = two.breakpoint.f_of_i_star;
                    (
                        vec![
                            FitLine::from_report(&pair.fit1, cut, x_max),
                            FitLine::from_report(&pair.fit2, x_min, cut),
                        ],
                        cut,
                    )
                }
                _ => {
                    let cut = two.breakpoint.i_star;
                    (
                        vec![
                            FitLine::from_report(&pair.fit1, x_min, cut),
                            FitLine::from_report(&pair.fit2, cut, x_max),
                        ],
                        cut,
                    )
                }
            };
            let plot = LogLogPlot {
                title: format!(
                    "{} ({}), {}1 = {:.3}, {}2 = {:.3}",
                    law.name(),
                    report.label,
                    law.exponent_symbol(),
                    pair.fit1.exponent,
                    law.exponent_symbol(),
                    pair.fit2.exponent
                ),
                x_label: x_label.into(),
                y_label: y_label.into(),
                points,
                lines,
                markers: vec![marker],
            };
            out.push((format!("{}_{}_two_regime.svg", law.name(), report.label), plot.render()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> LogLogPlot {
        LogLogPlot {
            title: "a < b".into(),
            x_label: "x".into(),
            y_label: "y".into(),
            points: (1..=20).map(|i| (i as f64, 100.0 / i as f64)).collect(),
            lines: vec![FitLine {
                x_from: 1.0,
                x_to: 20.0,
                log_intercept: 100f64.ln(),
                slope: -1.0,
            }],
            markers: vec![],
        }
    }

    #[test]
    fn structure() {
        let svg = sample().render();
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches(r#"class="point""#).count(), 20);
        assert_eq!(svg.matches(r#"class="fit""#).count(), 1);
        assert_eq!(svg.matches("stroke-dasharray").count(), 0);
        assert!(svg.contains("a &lt; b"));
    }

    #[test]
    fn marker_and_two_lines() {
        let mut p = sample();
        p.lines.push(FitLine {
            x_from: 5.0,
            x_to: 20.0,
            log_intercept: 5.0,
            slope: -2.0,
        });
        p.lines[0].x_to = 5.0;
        p.markers.push(5.0);
        let svg = p.render();
        assert_eq!(svg.matches(r#"class="fit""#).count(), 2);
        assert_eq!(svg.matches(r#"class="breakpoint""#).count(), 1);
        assert_eq!(svg.matches("stroke-dasharray").count(), 1);
    }

    #[test]
    fn deterministic() {
        assert_eq!(sample().render(), sample().render());
    }

    #[test]
    fn degenerate_ranges_render() {
        let p = LogLogPlot {
            points: vec![(3.0, 3.0)],
            ..Default::default()
        };
        let svg = p.render();
        assert!(!svg.contains("NaN"));
        assert!(!svg.contains("inf"));
    }
}
