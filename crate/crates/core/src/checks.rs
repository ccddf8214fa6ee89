//! Exact verification of the counting identities on enumerable graphs, and
//! exact-rational evaluation of the coefficient conditions that bound the mode
//! and certify concavity, at any `n`.
//!
//! Notation: `d_k` counts dominating `k`-sets, `E_k^T` counts `k`-sets leaving
//! exactly `T` undominated, `D(T)` counts single vertices dominating `T`,
//! `D(S:T)` counts vertices dominating `S \ T` while missing `T`, and `D'(S)`
//! counts ordered pairs of non-dominating vertices that dominate `S` jointly.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::binomial::{binomial, binomial_ratio, ceil_log2, floor_log2};
use crate::enumerate::{
    domination_polynomial_with, e_statistics_all, e_statistics_with, CoefficientVector, DominationCounts, EStatistics,
    EnumOptions,
};
use crate::error::{Error, Result};
use crate::generate::construction_degree;
use crate::graph::{Graph, VertexSet};

/// Both sides of an integer identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn big(x: impl Into<BigInt>) -> BigInt {
    x.into()
}

fn rat(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn coefficient(d: &CoefficientVector, k: usize) -> BigInt {
    BigInt::from(d.get(k).clone())
}

/// `(k+1)(d_{k+1} - d_k)` against `Σ_{T≠∅} E_k^T D(T) - (2k+1-n) d_k`.
pub fn growth_identity(
    n: usize,
    k: usize,
    d: &CoefficientVector,
    stats: &EStatistics,
    counts: &DominationCounts,
) -> IdentityReport {
    let (dk, dk1) = (coefficient(d, k), coefficient(d, k + 1));
    let lhs = big(k + 1) * (&dk1 - &dk);
    let sum: BigInt = stats.nonempty().map(|(t, e)| big(e) * big(counts.dominators(t))).sum();
    let rhs = sum - big(2 * k as i64 + 1 - n as i64) * dk;
    IdentityReport { lhs, rhs }
}

/// Checks the growth identity at one `k in [0, n-1]`.
pub fn verify_growth_identity(g: &Graph, k: usize, opts: &EnumOptions) -> Result<IdentityReport> {
    let n = g.n();
    if k >= n {
        return Err(Error::input(format!("k must lie in [0, n-1] = [0, {}], got {k}", n as i64 - 1)));
    }
    let d = domination_polynomial_with(g, opts)?;
    let stats = e_statistics_with(g, k, opts)?;
    let counts = DominationCounts::new(g)?;
    Ok(growth_identity(n, k, &d, &stats, &counts))
}

/// The growth identity at every `k in [0, n-1]`, from one enumeration pass.
pub fn verify_growth_identity_all(g: &Graph, opts: &EnumOptions) -> Result<Vec<IdentityReport>> {
    let n = g.n();
    let d = domination_polynomial_with(g, opts)?;
    let all = e_statistics_all(g, opts)?;
    let counts = DominationCounts::new(g)?;
    Ok((0..n).map(|k| growth_identity(n, k, &d, &all[k], &counts)).collect())
}

/// One instance of the undominated-set recurrence:
/// `(k+1)(E_{k+1}^T - E_k^T) = Σ_{S⊋T} E_k^S D(S:T) - (2k+1+|N(T)|-n) E_k^T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceReport {
    pub t: VertexSet,
    pub identity: IdentityReport,
}

/// Checks the recurrence for every nonempty `T` that is a key at level `k`
/// or `k + 1`.
pub fn verify_undominated_recurrence(g: &Graph, k: usize, opts: &EnumOptions) -> Result<Vec<RecurrenceReport>> {
    let n = g.n();
    if k >= n {
        return Err(Error::input(format!("k must lie in [0, n-1], got {k} for n = {n}")));
    }
    let lower = e_statistics_with(g, k, opts)?;
    let upper = e_statistics_with(g, k + 1, opts)?;
    let counts = DominationCounts::new(g)?;
    Ok(undominated_recurrence(g, k, &lower, &upper, &counts))
}

pub fn undominated_recurrence(
    g: &Graph,
    k: usize,
    lower: &EStatistics,
    upper: &EStatistics,
    counts: &DominationCounts,
) -> Vec<RecurrenceReport> {
    let n = g.n() as i64;
    let mut keys: Vec<VertexSet> = lower.nonempty().chain(upper.nonempty()).map(|(t, _)| t).collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .map(|t| {
            let (ek, ek1) = (big(lower.get(t)), big(upper.get(t)));
            let lhs = big(k + 1) * (ek1 - &ek);
            let sum: BigInt = lower
                .nonempty()
                .filter(|&(s, _)| t.is_subset(s) && s != t)
                .map(|(s, e)| big(e) * big(counts.split(s, t)))
                .sum();
            let nt = g.closed_neighborhood_unchecked(t).len() as i64;
            let rhs = sum - big(2 * k as i64 + 1 + nt - n) * ek;
            RecurrenceReport { t, identity: IdentityReport { lhs, rhs } }
        })
        .collect()
}

/// `Σ_{∅≠T⊊S} D(S:T) D(T)` against `D(S)|N(S)| - D(S)^2 + D'(S)`.
pub fn verify_pair_identity(g: &Graph, s: VertexSet) -> Result<IdentityReport> {
    g.check_set(s)?;
    if s.is_empty() {
        return Err(Error::input("the pair identity needs a nonempty S"));
    }
    let counts = DominationCounts::new(g)?;
    Ok(pair_identity(g, s, &counts))
}

pub fn pair_identity(g: &Graph, s: VertexSet, counts: &DominationCounts) -> IdentityReport {
    let lhs: BigInt = s.proper_nonempty_subsets().map(|t| big(counts.split(s, t)) * big(counts.dominators(t))).sum();
    let ds = big(counts.dominators(s));
    let ns = big(g.closed_neighborhood_unchecked(s).len());
    let rhs = &ds * ns - &ds * &ds + big(counts.pairs(s));
    IdentityReport { lhs, rhs }
}

/// Whether `k ∈ [n/2, n/2 + sqrt(n)/4]`, decided as `2k >= n` and `4(2k-n)^2 <= n`.
pub fn in_concavity_range(n: u64, k: u64) -> bool {
    let twice = 2 * k as i128 - n as i128;
    twice >= 0 && 4 * twice * twice <= n as i128
}

/// The coefficient step used to bound the second difference:
/// `(2k+3-n)/(k+2) >= (2k+2-n)/(n-k)`, compared by cross-multiplication.
/// It fails for small `n` even inside the concavity range (e.g. `n = 6, k = 3`),
/// and where it fails the second-difference bound need not hold.
pub fn concavity_step_holds(n: u64, k: u64) -> bool {
    let (n, k) = (n as i128, k as i128);
    k < n && (2 * k + 3 - n) * (n - k) >= (2 * k + 2 - n) * (k + 2)
}

/// `k` values at which the second-difference bound applies to a graph on `n`
/// vertices: the concavity range intersected with `k + 2 <= n`.
pub fn concavity_bound_ks(n: usize) -> Vec<usize> {
    (0..=n).filter(|&k| k + 2 <= n && in_concavity_range(n as u64, k as u64)).collect()
}

/// Both sides of
/// `2d_{k+1} - d_k - d_{k+2} >= d_k/(k+1) - Σ_{S≠∅} E_k^S D'(S) / (k+1)^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityReport {
    pub k: usize,
    pub lhs: BigRational,
    pub rhs: BigRational,
    /// Whether [`concavity_step_holds`] at this `(n, k)`.
    pub step_holds: bool,
}

impl InequalityReport {
    pub fn holds(&self) -> bool {
        self.lhs >= self.rhs
    }
}

pub fn verify_concavity_bound(g: &Graph, k: usize, opts: &EnumOptions) -> Result<InequalityReport> {
    let n = g.n();
    if k + 2 > n {
        return Err(Error::input(format!("k + 2 must not exceed n = {n}, got k = {k}")));
    }
    if !in_concavity_range(n as u64, k as u64) {
        return Err(Error::input(format!(
            "k = {k} lies outside [n/2, n/2 + sqrt(n)/4] for n = {n}; valid k: {:?}",
            concavity_bound_ks(n)
        )));
    }
    let d = domination_polynomial_with(g, opts)?;
    let stats = e_statistics_with(g, k, opts)?;
    let counts = DominationCounts::new(g)?;
    Ok(concavity_bound(k, &d, &stats, &counts))
}

pub fn concavity_bound(
    k: usize,
    d: &CoefficientVector,
    stats: &EStatistics,
    counts: &DominationCounts,
) -> InequalityReport {
    let (dk, dk1, dk2) = (coefficient(d, k), coefficient(d, k + 1), coefficient(d, k + 2));
    let lhs = BigRational::from_integer(big(2) * dk1 - &dk - dk2);
    let pair_sum: BigInt = stats.nonempty().map(|(s, e)| big(e) * big(counts.pairs(s))).sum();
    let k1 = big(k + 1);
    let rhs = rat(dk, k1.clone()) - rat(pair_sum, &k1 * &k1);
    InequalityReport { k, lhs, rhs, step_holds: concavity_step_holds(d.n() as u64, k as u64) }
}

/// A certified lower bound on `d_k` for a graph that may be too large to enumerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoefficientBound {
    /// A known integer lower bound (e.g. the exact coefficient).
    Exact(BigUint),
    /// `C(n-1, k-1)`: every `k`-set containing a universal vertex dominates.
    UniversalVertex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionParams {
    pub n: u64,
    pub h: u64,
    pub k: u64,
    pub alpha: u64,
}

/// Outcome of a strict inequality `d_k > rhs`. Both sides are divided by
/// `C(n, k)` so that no full-size binomial is ever expanded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionVerdict {
    pub params: ConditionParams,
    pub holds: bool,
    /// Lower bound on `d_k / C(n, k)`.
    pub lhs: BigRational,
    /// Right-hand side divided by `C(n, k)`.
    pub rhs: BigRational,
}

fn validate_common(p: &ConditionParams) -> Result<()> {
    if p.n == 0 {
        return Err(Error::input("n must be positive"));
    }
    if p.k > p.n || 2 * p.k < p.n {
        return Err(Error::input(format!("k = {} must lie in [n/2, n] = [{}, {}]", p.k, p.n as f64 / 2.0, p.n)));
    }
    if p.alpha == 0 {
        return Err(Error::input("alpha must be a positive integer"));
    }
    if p.h > p.n {
        return Err(Error::input(format!("h = {} exceeds n = {}", p.h, p.n)));
    }
    Ok(())
}

fn bound_ratio(p: &ConditionParams, bound: &CoefficientBound) -> Result<BigRational> {
    match bound {
        CoefficientBound::Exact(dk) => Ok(rat(dk.clone(), binomial(p.n, p.k))),
        CoefficientBound::UniversalVertex => {
            if p.h == 0 || p.k == 0 {
                return Err(Error::input("the universal-vertex bound C(n-1, k-1) needs h >= 1 and k >= 1"));
            }
            Ok(rat(p.k, p.n))
        }
    }
}

/// Tail-decrease condition: `d_k > (n^2 C(n-α-1, k) + α C(n-h, k)) / (2k+1-n)`
/// for `k in [n/2, n]`. When it holds, `d_k >= d_{k+1} >= ...`.
pub fn check_mode_condition(p: ConditionParams, bound: &CoefficientBound) -> Result<ConditionVerdict> {
    validate_common(&p)?;
    let n_sq = big(p.n) * big(p.n);
    let far = binomial_ratio(p.n as i128 - p.alpha as i128 - 1, p.n, p.k);
    let near = binomial_ratio((p.n - p.h) as i128, p.n, p.k);
    let rhs = (BigRational::from_integer(n_sq) * far + BigRational::from_integer(big(p.alpha)) * near)
        / BigRational::from_integer(big(2 * p.k + 1 - p.n));
    let lhs = bound_ratio(&p, bound)?;
    Ok(ConditionVerdict { params: p, holds: lhs > rhs, lhs, rhs })
}

/// Concavity condition: `d_k > (n^3 C(n-α-1, k) + 2α^2 C(n-h, k)) / (k+1)` for
/// `k in [n/2, n/2 + sqrt(n)/4]`. When it holds, `2d_{l+1} > d_l + d_{l+2}`
/// throughout `[k, n/2 + sqrt(n)/4]`.
pub fn check_concavity_condition(p: ConditionParams, bound: &CoefficientBound) -> Result<ConditionVerdict> {
    validate_common(&p)?;
    if !in_concavity_range(p.n, p.k) {
        return Err(Error::input(format!("k = {} lies outside [n/2, n/2 + sqrt(n)/4] for n = {}", p.k, p.n)));
    }
    let n_cubed = big(p.n).pow(3);
    let far = binomial_ratio(p.n as i128 - p.alpha as i128 - 1, p.n, p.k);
    let near = binomial_ratio((p.n - p.h) as i128, p.n, p.k);
    let two_alpha_sq = big(2) * big(p.alpha) * big(p.alpha);
    let rhs = (BigRational::from_integer(n_cubed) * far + BigRational::from_integer(two_alpha_sq) * near)
        / BigRational::from_integer(big(p.k + 1));
    let lhs = bound_ratio(&p, bound)?;
    Ok(ConditionVerdict { params: p, holds: lhs > rhs, lhs, rhs })
}

/// `ceil(n/2 + log2 n)`: the least `m` with `2m - n >= ceil(log2(n^2))`.
pub fn ceil_half_plus_log2(n: u64) -> u64 {
    let e = ceil_log2(&(BigUint::from(n) * BigUint::from(n)));
    (n + e).div_ceil(2)
}

/// `floor(c * log2 n)` as the bit length of `n^c` minus one.
pub fn floor_multiple_log2(n: u64, c: u32) -> u64 {
    floor_log2(&BigUint::from(n).pow(c))
}

/// Parameters bounding the mode for a graph with a universal vertex:
/// `k = ceil(n/2 + log2 n) + 1`, `α = floor(2 log2 n)`, `h = 1`.
pub fn mode_proof_params(n: u64) -> ConditionParams {
    ConditionParams { n, h: 1, k: ceil_half_plus_log2(n) + 1, alpha: floor_multiple_log2(n, 2) }
}

/// Parameters certifying concavity for a graph with a universal vertex:
/// `k = ceil(n/2)`, `α = floor(3 log2 n)`, `h = 1`.
pub fn concavity_proof_params(n: u64) -> ConditionParams {
    ConditionParams { n, h: 1, k: n.div_ceil(2), alpha: floor_multiple_log2(n, 3) }
}

/// One inequality in the lower-bound chain for the universal-vertex construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Link {
    pub name: &'static str,
    /// The `k` this instance was evaluated at; `None` for `k`-independent links.
    pub k: Option<u64>,
    pub relation: Relation,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    AtLeast,
    AtMost,
    Greater,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::AtLeast => ">=",
            Relation::AtMost => "<=",
            Relation::Greater => ">",
        }
    }
}

impl Link {
    pub fn holds(&self) -> bool {
        match self.relation {
            Relation::AtLeast => self.lhs >= self.rhs,
            Relation::AtMost => self.lhs <= self.rhs,
            Relation::Greater => self.lhs > self.rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionReport {
    pub n: u64,
    /// Base degree `2 floor(log2(4n)/2) + 2`.
    pub degree: u64,
    /// `n >= 2^20`, the size from which the construction is claimed.
    pub in_claimed_range: bool,
    /// False when `n` is too small for the chain to make sense.
    pub applicable: bool,
    /// Integers in `[n/2, n/2 + log2(n)/999]`.
    pub ks: Vec<u64>,
    pub links: Vec<Link>,
}

impl ConstructionReport {
    pub fn all_hold(&self) -> bool {
        self.applicable && self.links.iter().all(Link::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Link> {
        self.links.iter().filter(|l| !l.holds())
    }
}

/// Integers `k` with `n/2 <= k <= n/2 + log2(n)/999`, i.e. `2k >= n` and
/// `999(2k - n) <= log2(n^2)`.
pub fn construction_ks(n: u64) -> Vec<u64> {
    let log_sq = floor_log2(&(BigUint::from(n) * BigUint::from(n)));
    let max_excess = log_sq / 999;
    let first = n.div_ceil(2);
    (first..=n).take_while(|&k| 2 * k - n <= max_excess).collect()
}

fn pow2(e: u64) -> BigRational {
    BigRational::from_integer(BigInt::one() << e)
}

/// Evaluates every inequality in the construction's lower-bound chain for each
/// `k` in range, exactly:
///
/// 1. `C(n-2d, k) / C(n-d-1, k) <= 2^{-(d-1)}`
/// 2. `1 - (n-2) 2^{-(d-1)} >= 1/2`
/// 3. `C(n-d-1, k) / C(n, k) >= ((n-k-d-1)/(n-d))^{d+1}`
/// 4. `((n-k-d-1)/(n-d))^{d+1} >= 2^{-(d+2)}`
/// 5. `2^{-(d+2)} >= 1/(64n)`
/// 6. `((n-k-d-1)/(n-d))^{d+1} >= 1/(64n)`
/// 7. `((n-1)/2) (d+1) / (64n) > 2k + 1 - n`
pub fn check_construction_bound(n: u64) -> ConstructionReport {
    let d = construction_degree(n.max(1));
    let ks = construction_ks(n.max(1));
    let mut report = ConstructionReport {
        n,
        degree: d,
        in_claimed_range: n >= 1 << 20,
        applicable: false,
        ks: ks.clone(),
        links: Vec::new(),
    };
    let max_k = ks.iter().copied().max().unwrap_or(n);
    if n < 2 || 2 * d > n || max_k + d + 1 >= n {
        return report;
    }
    report.applicable = true;

    let half = rat(1, 2);
    let inv_64n = rat(1, 64 * n as u128);
    let two_pow_neg = |e: u64| pow2(e).recip();

    report.links.push(Link {
        name: "exclusion_factor",
        k: None,
        relation: Relation::AtLeast,
        lhs: BigRational::one() - BigRational::from_integer(big(n - 2)) * two_pow_neg(d - 1),
        rhs: half.clone(),
    });
    report.links.push(Link {
        name: "power_of_two_floor",
        k: None,
        relation: Relation::AtLeast,
        lhs: two_pow_neg(d + 2),
        rhs: inv_64n.clone(),
    });

    for &k in &ks {
        let pair_miss = binomial_ratio(n as i128 - 2 * d as i128, n, k);
        let single_miss = binomial_ratio((n - d - 1) as i128, n, k);
        let tail = if single_miss.is_zero() { BigRational::zero() } else { &pair_miss / &single_miss };
        report.links.push(Link {
            name: "pair_miss_ratio",
            k: Some(k),
            relation: Relation::AtMost,
            lhs: tail,
            rhs: two_pow_neg(d - 1),
        });

        let base = rat(n - k - d - 1, n - d);
        let power = num_traits::pow(base, (d + 1) as usize);
        report.links.push(Link {
            name: "binomial_product",
            k: Some(k),
            relation: Relation::AtLeast,
            lhs: single_miss,
            rhs: power.clone(),
        });
        report.links.push(Link {
            name: "power_vs_power_of_two",
            k: Some(k),
            relation: Relation::AtLeast,
            lhs: power.clone(),
            rhs: two_pow_neg(d + 2),
        });
        report.links.push(Link {
            name: "power_vs_inverse_64n",
            k: Some(k),
            relation: Relation::AtLeast,
            lhs: power,
            rhs: inv_64n.clone(),
        });
        report.links.push(Link {
            name: "final_comparison",
            k: Some(k),
            relation: Relation::Greater,
            lhs: rat(big(n - 1) * big(d + 1), big(2) * big(64) * big(n)),
            rhs: BigRational::from_integer(big(2 * k + 1 - n)),
        });
    }
    report
}

/// Decimal approximation for display only.
pub fn approx(r: &BigRational) -> f64 {
    if let Some(x) = r.to_f64().filter(|x| x.is_finite() && *x != 0.0) {
        return x;
    }
    if r.is_zero() {
        return 0.0;
    }
    // scale through logarithms when numerator and denominator overflow f64
    let (num, den) = (r.numer().abs(), r.denom().clone());
    let shift = num.bits().max(den.bits()).saturating_sub(900);
    let x = (num >> shift).to_f64().unwrap_or(f64::NAN) / (den >> shift).to_f64().unwrap_or(f64::NAN);
    if r.is_negative() {
        -x
    } else {
        x
    }
}
