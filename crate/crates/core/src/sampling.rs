//! Monte-Carlo estimation of `r_k = d_k / C(n, k)` for graphs too large to
//! enumerate.
//!
//! Samples are drawn in fixed chunks of [`CHUNK`]; chunk `c` runs its own
//! SplitMix64 stream seeded with [`rng::derive_seed`]`(seed, c)`. Within a
//! chunk each sample is a uniform `k`-subset drawn by selection sampling:
//! vertex `i` is taken iff `draw53 * (n - i) < needed * 2^53`, where `needed`
//! counts vertices still to choose. Chunks are independent of the worker
//! count, so tallies are reproducible.
//!
//! Intervals are exact Clopper–Pearson bounds: with `x` hits in `m` samples and
//! `a = 1 - level`, the lower bound is the `a/2` quantile of `Beta(x, m-x+1)`
//! and the upper bound the `1 - a/2` quantile of `Beta(x+1, m-x)`. For `m = 10`,
//! `x = 0`, level 0.95 the interval is `[0, 0.308497]`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rayon::prelude::*;
use statrs::function::beta::inv_beta_reg;

use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng;

pub const CHUNK: u64 = 4096;

#[derive(Debug, Clone, PartialEq)]
pub struct Estimate {
    pub k: usize,
    pub samples: u64,
    pub hits: u64,
    pub seed: u64,
    pub level: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

impl Estimate {
    pub fn point(&self) -> BigRational {
        BigRational::new(self.hits.into(), self.samples.into())
    }

    pub fn point_f64(&self) -> f64 {
        self.hits as f64 / self.samples as f64
    }

    pub fn covers(&self, value: f64) -> bool {
        self.ci_low <= value && value <= self.ci_high
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleOptions {
    pub workers: usize,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions { workers: std::thread::available_parallelism().map_or(1, |n| n.get()) }
    }
}

/// Exact binomial confidence bounds for `hits` successes in `samples` trials.
pub fn clopper_pearson(hits: u64, samples: u64, level: f64) -> (f64, f64) {
    assert!(hits <= samples && samples > 0);
    let tail = (1.0 - level) / 2.0;
    let (x, m) = (hits as f64, samples as f64);
    let low = if hits == 0 { 0.0 } else { inv_beta_reg(x, m - x + 1.0, tail) };
    let high = if hits == samples { 1.0 } else { inv_beta_reg(x + 1.0, m - x, 1.0 - tail) };
    (low, high)
}

/// Draws one uniform `k`-subset of `0..n` into `out`.
pub fn sample_subset(stream: &mut rng::SplitMix64, n: usize, k: usize, out: &mut Vec<usize>) {
    out.clear();
    let mut needed = k as u128;
    for i in 0..n {
        if needed == 0 {
            break;
        }
        let remaining = (n - i) as u128;
        if (rng::draw53(stream) as u128) * remaining < needed << 53 {
            out.push(i);
            needed -= 1;
        }
    }
}

fn count_hits(g: &Graph, k: usize, seed: u64, chunk: u64, samples: u64) -> u64 {
    let mut stream = rng::stream(rng::derive_seed(seed, chunk));
    let mut subset = Vec::with_capacity(k);
    let mut hits = 0;
    for _ in 0..samples {
        sample_subset(&mut stream, g.n(), k, &mut subset);
        hits += g.is_dominating_list(&subset) as u64;
    }
    hits
}

fn validate(g: &Graph, k: usize, samples: u64, level: f64) -> Result<()> {
    if k == 0 || k > g.n() {
        return Err(Error::input(format!("k must lie in [1, n] = [1, {}], got {k}", g.n())));
    }
    if samples == 0 {
        return Err(Error::input("at least one sample is required"));
    }
    if !(level > 0.0 && level < 1.0) {
        return Err(Error::input(format!("confidence level must lie in (0, 1), got {level}")));
    }
    Ok(())
}

pub fn estimate_rk(g: &Graph, k: usize, samples: u64, seed: u64, level: f64) -> Result<Estimate> {
    estimate_rk_with(g, k, samples, seed, level, &SampleOptions::default())
}

/// Estimates the fraction of `k`-subsets that dominate `g`.
pub fn estimate_rk_with(
    g: &Graph,
    k: usize,
    samples: u64,
    seed: u64,
    level: f64,
    opts: &SampleOptions,
) -> Result<Estimate> {
    validate(g, k, samples, level)?;
    let chunks: Vec<(u64, u64)> = (0..samples.div_ceil(CHUNK)).map(|c| (c, CHUNK.min(samples - c * CHUNK))).collect();
    let hits: u64 = if opts.workers <= 1 || chunks.len() == 1 {
        chunks.iter().map(|&(c, m)| count_hits(g, k, seed, c, m)).sum()
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.workers).build().expect("thread pool");
        pool.install(|| chunks.par_iter().map(|&(c, m)| count_hits(g, k, seed, c, m)).sum())
    };
    let (ci_low, ci_high) = clopper_pearson(hits, samples, level);
    Ok(Estimate { k, samples, hits, seed, level, ci_low, ci_high })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    /// `d_k > d_{k+1}`.
    Greater,
    /// `d_k < d_{k+1}`.
    Less,
    Inconclusive,
}

impl Comparison {
    pub fn as_str(self) -> &'static str {
        match self {
            Comparison::Greater => "greater",
            Comparison::Less => "less",
            Comparison::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub verdict: Comparison,
    pub lower: Estimate,
    pub upper: Estimate,
}

fn exact(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite bound")
}

/// Compares `d_k` with `d_{k+1}` from two estimates, splitting `budget`
/// samples evenly. The `r_k` estimate uses sub-stream 0 of `seed` and the
/// `r_{k+1}` estimate sub-stream 1. A verdict is returned only when the
/// scaled intervals `C(n,k)[lo, hi]` and `C(n,k+1)[lo', hi']` are disjoint.
pub fn compare_coefficients(
    g: &Graph,
    k: usize,
    budget: u64,
    seed: u64,
    level: f64,
    opts: &SampleOptions,
) -> Result<ComparisonReport> {
    if k + 1 > g.n() {
        return Err(Error::input(format!("k + 1 must not exceed n = {}", g.n())));
    }
    if budget < 2 {
        return Err(Error::input("budget must allow at least one sample per coefficient"));
    }
    let half = budget / 2;
    let n = g.n() as u64;

    // d_0 = 0 for n >= 1, so k = 0 is exact on the lower side
    let lower = if k == 0 {
        Estimate { k: 0, samples: half, hits: 0, seed, level, ci_low: 0.0, ci_high: 0.0 }
    } else {
        estimate_rk_with(g, k, half, rng::derive_seed(seed, 0), level, opts)?
    };
    let upper = estimate_rk_with(g, k + 1, budget - half, rng::derive_seed(seed, 1), level, opts)?;

    let scale = |b: BigUint| BigRational::from_integer(BigInt::from(b));
    let (ck, ck1) = (scale(binomial(n, k as u64)), scale(binomial(n, k as u64 + 1)));
    let verdict = if &ck * exact(lower.ci_high) < &ck1 * exact(upper.ci_low) {
        Comparison::Less
    } else if &ck * exact(lower.ci_low) > &ck1 * exact(upper.ci_high) {
        Comparison::Greater
    } else {
        Comparison::Inconclusive
    };
    Ok(ComparisonReport { verdict, lower, upper })
}
