//! Unimodality, mode, concavity and normalized-ratio analysis of coefficient
//! sequences.
//!
//! A sequence `a_0..a_n` is unimodal when some `k` has `a_i <= a_{i+1}` for all
//! `i < k` and `a_i >= a_{i+1}` for all `i >= k`. With plateaus several `k`
//! qualify; the mode is the largest of them.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::binomial::binomial;
use crate::enumerate::CoefficientVector;

/// A witness of non-unimodality: a strict ascent `a_index < a_{index+1}`
/// occurring after a strict descent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    /// `(a_{index-1}, a_index, a_{index+1})`.
    pub triple: (BigUint, BigUint, BigUint),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub unimodal: bool,
    pub mode: Option<usize>,
    pub first_violation: Option<Violation>,
    /// All `l` with `2 a_{l+1} > a_l + a_{l+2}`.
    pub concavity_window: Vec<usize>,
    /// Whether `a_k / C(n, k)` is non-decreasing, `n = len - 1`.
    pub ratio_monotone: bool,
}

pub fn analyze(coeffs: &CoefficientVector) -> AnalysisReport {
    let a = coeffs.as_slice();
    let n = a.len() - 1;

    // valid peaks form the range [last strict ascent + 1, first strict descent]
    let first_descent = (0..n).find(|&i| a[i] > a[i + 1]).unwrap_or(n);
    let last_ascent_end = (0..n).rev().find(|&i| a[i] < a[i + 1]).map_or(0, |i| i + 1);
    let unimodal = last_ascent_end <= first_descent;

    let first_violation = (!unimodal).then(|| {
        let index =
            (first_descent + 1..n).find(|&i| a[i] < a[i + 1]).expect("a strict ascent follows the first descent");
        Violation { index, triple: (a[index - 1].clone(), a[index].clone(), a[index + 1].clone()) }
    });

    let concavity_window = (0..n.saturating_sub(1)).filter(|&l| (&a[l + 1] << 1u32) > &a[l] + &a[l + 2]).collect();

    AnalysisReport {
        unimodal,
        mode: unimodal.then_some(first_descent),
        first_violation,
        concavity_window,
        ratio_monotone: ratio_sequence(coeffs).non_decreasing,
    }
}

/// `r_k = d_k / C(n, k)` for `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioSequence {
    pub ratios: Vec<BigRational>,
    pub non_decreasing: bool,
}

pub fn ratio_sequence(coeffs: &CoefficientVector) -> RatioSequence {
    let n = coeffs.n() as u64;
    let ratios: Vec<BigRational> = coeffs
        .as_slice()
        .iter()
        .enumerate()
        .map(|(k, d)| BigRational::new(BigInt::from(d.clone()), BigInt::from(binomial(n, k as u64))))
        .collect();
    let non_decreasing = ratios.windows(2).all(|w| w[0] <= w[1]);
    RatioSequence { ratios, non_decreasing }
}

/// Whether the sequence is unimodal with mode in `[n/2, n/2 + log2(n) + 2]`.
///
/// The upper end is compared exactly: with `t = 2*mode - n - 4`, the bound
/// holds iff `t <= 0` or `2^t <= n^2`.
pub fn mode_bounds_check(coeffs: &CoefficientVector, n: usize) -> bool {
    let Some(mode) = analyze(coeffs).mode else {
        return false;
    };
    mode_in_log_window(mode, n)
}

/// `mode ∈ [n/2, n/2 + log2(n) + 2]`, evaluated without floating point.
pub fn mode_in_log_window(mode: usize, n: usize) -> bool {
    if n == 0 || 2 * mode < n {
        return false;
    }
    let t = 2 * mode as i128 - n as i128 - 4;
    if t <= 0 {
        return true;
    }
    let n_sq = BigUint::from(n) * BigUint::from(n);
    (BigUint::one() << t as u64) <= n_sq
}

/// `mode ∈ {floor(n/2), floor((n+1)/2)}`.
pub fn mode_is_central(mode: usize, n: usize) -> bool {
    mode == n / 2 || mode == n.div_ceil(2)
}

/// Whether `d_i <= d_{i+1}` for every `i < n/2`.
pub fn rises_below_half(coeffs: &CoefficientVector) -> bool {
    let a = coeffs.as_slice();
    let n = coeffs.n();
    (0..n).take_while(|&i| 2 * i < n).all(|i| a[i] <= a[i + 1])
}

/// Sum of all coefficients.
pub fn total(coeffs: &CoefficientVector) -> BigUint {
    coeffs.as_slice().iter().fold(BigUint::zero(), |acc, c| acc + c)
}
