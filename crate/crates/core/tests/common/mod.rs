#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

pub fn rng(seed: u64) -> Xoshiro256PlusPlus {
    Xoshiro256PlusPlus::seed_from_u64(seed)
}

pub fn uniform(rng: &mut Xoshiro256PlusPlus, lo: f64, hi: f64) -> f64 {
    let u = (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
    lo + (hi - lo) * u
}

fn exact(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite")
}

/// Slope and intercept of the least-squares line through `(ln x, ln y)`,
/// solved from the normal equations in exact rational arithmetic.
pub fn normal_equations_fit(points: &[(f64, f64)]) -> (f64, f64) {
    let n = BigRational::from_integer(BigInt::from(points.len()));
    let (mut sx, mut sy, mut sxx, mut sxy) = (
        BigRational::zero(),
        BigRational::zero(),
        BigRational::zero(),
        BigRational::zero(),
    );
    for &(x, y) in points {
        let (u, v) = (exact(x.ln()), exact(y.ln()));
        sx += &u;
        sy += &v;
        sxx += &u * &u;
        sxy += &u * &v;
    }
    let det = &n * &sxx - &sx * &sx;
    let slope = (&n * &sxy - &sx * &sy) / &det;
    let intercept = (&sy - &slope * &sx) / &n;
    (slope.to_f64().unwrap(), intercept.to_f64().unwrap())
}

/// Sum of squared log residuals around a line fitted from scratch.
fn segment_sse(points: &[(f64, f64)]) -> f64 {
    let m = points.len() as f64;
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / m;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / m;
    let mut num = 0.0;
    let mut den = 0.0;
    for &(u, v) in &logs {
        num += (u - mx) * (v - my);
        den += (u - mx) * (u - mx);
    }
    let b = num / den;
    let a = my - b * mx;
    logs.iter().map(|&(u, v)| (v - a - b * u).powi(2)).sum()
}

/// `(split_index, split_rank, deviance)` for every admissible split,
/// refitting both sides independently at each one.
pub fn naive_deviance(points: &[(f64, f64)], min_segment: usize) -> Vec<(usize, f64, f64)> {
    let n = points.len();
    let mut out = Vec::new();
    for k in min_segment..=n - min_segment {
        let dev = segment_sse(&points[..k]) + segment_sse(&points[k..]);
        out.push((k, (points[k - 1].0 + points[k].0) / 2.0, dev));
    }
    out
}

pub fn single_fit_sse(points: &[(f64, f64)]) -> f64 {
    segment_sse(points)
}

/// Positive points with strictly increasing x and noisy decreasing y.
pub fn random_points(rng: &mut Xoshiro256PlusPlus, n: usize) -> Vec<(f64, f64)> {
    let mut x = 0.0;
    (0..n)
        .map(|_| {
            x += uniform(rng, 0.1, 3.0);
            let y = 1000.0 * x.powf(-uniform(rng, 0.5, 2.0)) * uniform(rng, 0.5, 2.0);
            (x, y)
        })
        .collect()
}

/// Lemma, frequency and sense count rows for a random lexicon.
pub fn random_rows(rng: &mut Xoshiro256PlusPlus, n: usize) -> Vec<(String, f64, f64)> {
    (0..n)
        .map(|i| {
            let f = (uniform(rng, 1.0, 10_000.0)).round();
            let mu = (uniform(rng, 1.0, 40.0)).round();
            (format!("l{i}"), f, mu)
        })
        .collect()
}
