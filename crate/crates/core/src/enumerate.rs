//! Exhaustive subset enumeration: dominating-set counts by size, the
//! classification of `k`-subsets by the vertices they leave undominated, and
//! the single-vertex and vertex-pair domination counts used by the identities.
//!
//! The enumerator walks the binary include/exclude tree over vertices
//! `0..n` and carries the covered set `N(S)` down the recursion, so extending
//! `S` by `v` costs one OR with the precomputed mask `N[v]`. The first few
//! levels of the tree are expanded into independent prefixes which are
//! evaluated (possibly in parallel) and merged by addition, so results never
//! depend on the worker count.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::binomial::PascalTable;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MASK_BITS};

pub const DEFAULT_LIMIT: usize = 32;
pub const HARD_LIMIT: usize = MASK_BITS;

/// Below this size a single thread finishes faster than a pool can start.
const PARALLEL_MIN_N: usize = 20;
const MAX_PREFIX_DEPTH: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    /// Largest `n` accepted; capped at [`HARD_LIMIT`].
    pub limit: usize,
    /// Worker threads; 1 runs on the calling thread.
    pub workers: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { limit: DEFAULT_LIMIT, workers: std::thread::available_parallelism().map_or(1, |n| n.get()) }
    }
}

impl EnumOptions {
    pub fn sequential() -> Self {
        EnumOptions { workers: 1, ..Default::default() }
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    fn admit(&self, g: &Graph) -> Result<()> {
        let limit = self.limit.min(HARD_LIMIT);
        if g.n() > limit {
            Err(Error::Capacity { n: g.n(), limit })
        } else {
            Ok(())
        }
    }
}

/// Coefficients `d_0, ..., d_n` of the domination polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoefficientVector {
    coeffs: Vec<BigUint>,
}

impl CoefficientVector {
    pub fn new(coeffs: Vec<BigUint>) -> Self {
        assert!(!coeffs.is_empty(), "a coefficient vector has at least d_0");
        CoefficientVector { coeffs }
    }

    pub fn from_u64s(values: &[u64]) -> Self {
        CoefficientVector::new(values.iter().map(|&v| BigUint::from(v)).collect())
    }

    /// Vertex count, i.e. the largest index.
    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn get(&self, k: usize) -> &BigUint {
        &self.coeffs[k]
    }

    pub fn as_slice(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn into_inner(self) -> Vec<BigUint> {
        self.coeffs
    }
}

/// Exact coefficients of `D(G, x)` with default options.
pub fn domination_polynomial(g: &Graph) -> Result<CoefficientVector> {
    domination_polynomial_with(g, &EnumOptions::default())
}

struct Masks {
    n: usize,
    full: u64,
    closed: Vec<u64>,
    /// `dead[i]`: vertices whose whole closed neighborhood lies in `0..i`;
    /// once the walk passes `i`, these can no longer become dominated.
    dead: Vec<u64>,
}

impl Masks {
    fn new(g: &Graph) -> Result<Self> {
        let closed = g.closed_masks()?;
        let n = g.n();
        let mut dead = vec![0u64; n + 1];
        for (v, &m) in closed.iter().enumerate() {
            let top = VertexSet(m).max().expect("closed neighborhood contains v");
            for d in dead.iter_mut().skip(top + 1) {
                *d |= 1 << v;
            }
        }
        Ok(Masks { n, full: g.vertex_set().bits(), closed, dead })
    }
}

#[derive(Clone, Copy)]
struct Prefix {
    covered: u64,
    size: usize,
}

fn prefix_depth(n: usize, workers: usize) -> usize {
    if workers <= 1 || n < PARALLEL_MIN_N {
        0
    } else {
        n.min(MAX_PREFIX_DEPTH)
    }
}

fn prefixes(m: &Masks, depth: usize) -> Vec<Prefix> {
    (0u64..1 << depth)
        .map(|choice| {
            let mut covered = 0;
            for v in VertexSet(choice).iter() {
                covered |= m.closed[v];
            }
            Prefix { covered, size: choice.count_ones() as usize }
        })
        .collect()
}

fn run<T, F>(workers: usize, tasks: &[Prefix], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Prefix) -> T + Sync + Send,
{
    if workers <= 1 || tasks.len() <= 1 {
        return tasks.iter().map(|&t| f(t)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build().expect("thread pool");
    pool.install(|| tasks.par_iter().map(|&t| f(t)).collect())
}

struct PolyWalk<'a> {
    m: &'a Masks,
    pascal: &'a PascalTable,
    counts: Vec<u64>,
}

impl PolyWalk<'_> {
    fn walk(&mut self, i: usize, covered: u64, size: usize) {
        if covered == self.m.full {
            // every extension by vertices i..n dominates
            for (j, c) in self.pascal.row(self.m.n - i).iter().enumerate() {
                self.counts[size + j] += c;
            }
            return;
        }
        if i == self.m.n || !covered & self.m.dead[i] != 0 {
            return;
        }
        self.walk(i + 1, covered | self.m.closed[i], size + 1);
        self.walk(i + 1, covered, size);
    }
}

/// Exact coefficients of `D(G, x)`.
pub fn domination_polynomial_with(g: &Graph, opts: &EnumOptions) -> Result<CoefficientVector> {
    opts.admit(g)?;
    let m = Masks::new(g)?;
    let pascal = PascalTable::new(m.n);
    let depth = prefix_depth(m.n, opts.workers);
    let tasks = prefixes(&m, depth);
    let partials = run(opts.workers, &tasks, |p| {
        let mut w = PolyWalk { m: &m, pascal: &pascal, counts: vec![0; m.n + 1] };
        w.walk(depth, p.covered, p.size);
        w.counts
    });
    let mut total = vec![0u64; m.n + 1];
    for part in partials {
        for (t, c) in total.iter_mut().zip(part) {
            *t += c;
        }
    }
    Ok(CoefficientVector::new(total.into_iter().map(BigUint::from).collect()))
}

/// `E_k^T` for one `k`: how many `k`-subsets leave exactly `T` undominated.
/// Keys with zero count are absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EStatistics {
    pub k: usize,
    pub table: BTreeMap<VertexSet, u64>,
}

impl EStatistics {
    /// `E_k^T`, zero for absent keys.
    pub fn get(&self, t: VertexSet) -> u64 {
        self.table.get(&t).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.table.values().map(|&c| c as u128).sum()
    }

    /// Entries with nonempty undominated set.
    pub fn nonempty(&self) -> impl Iterator<Item = (VertexSet, u64)> + '_ {
        self.table.iter().filter(|(t, _)| !t.is_empty()).map(|(&t, &c)| (t, c))
    }
}

fn merge_tables(into: &mut HashMap<u64, u64>, from: HashMap<u64, u64>) {
    for (t, c) in from {
        *into.entry(t).or_insert(0) += c;
    }
}

fn finish(k: usize, table: HashMap<u64, u64>) -> EStatistics {
    EStatistics { k, table: table.into_iter().map(|(t, c)| (VertexSet(t), c)).collect() }
}

struct FixedSizeWalk<'a> {
    m: &'a Masks,
    table: HashMap<u64, u64>,
}

impl FixedSizeWalk<'_> {
    fn walk(&mut self, i: usize, covered: u64, remaining: usize) {
        if remaining == 0 {
            *self.table.entry(self.m.full & !covered).or_insert(0) += 1;
            return;
        }
        if self.m.n - i < remaining {
            return;
        }
        self.walk(i + 1, covered | self.m.closed[i], remaining - 1);
        self.walk(i + 1, covered, remaining);
    }
}

pub fn e_statistics(g: &Graph, k: usize) -> Result<EStatistics> {
    e_statistics_with(g, k, &EnumOptions::default())
}

/// Classifies every `k`-subset `S` by `V \ N(S)`.
pub fn e_statistics_with(g: &Graph, k: usize, opts: &EnumOptions) -> Result<EStatistics> {
    opts.admit(g)?;
    if k > g.n() {
        return Err(Error::input(format!("k = {k} exceeds n = {}", g.n())));
    }
    let m = Masks::new(g)?;
    let depth = prefix_depth(m.n, opts.workers);
    let tasks: Vec<Prefix> = prefixes(&m, depth).into_iter().filter(|p| p.size <= k).collect();
    let partials = run(opts.workers, &tasks, |p| {
        let mut w = FixedSizeWalk { m: &m, table: HashMap::new() };
        w.walk(depth, p.covered, k - p.size);
        w.table
    });
    let mut table = HashMap::new();
    for part in partials {
        merge_tables(&mut table, part);
    }
    Ok(finish(k, table))
}

struct AllSizesWalk<'a> {
    m: &'a Masks,
    tables: Vec<HashMap<u64, u64>>,
}

impl AllSizesWalk<'_> {
    fn walk(&mut self, i: usize, covered: u64, size: usize) {
        if i == self.m.n {
            *self.tables[size].entry(self.m.full & !covered).or_insert(0) += 1;
            return;
        }
        self.walk(i + 1, covered | self.m.closed[i], size + 1);
        self.walk(i + 1, covered, size);
    }
}

/// `E_k^T` for every `k = 0..=n` in one pass over all `2^n` subsets.
pub fn e_statistics_all(g: &Graph, opts: &EnumOptions) -> Result<Vec<EStatistics>> {
    opts.admit(g)?;
    let m = Masks::new(g)?;
    let depth = prefix_depth(m.n, opts.workers);
    let tasks = prefixes(&m, depth);
    let partials = run(opts.workers, &tasks, |p| {
        let mut w = AllSizesWalk { m: &m, tables: vec![HashMap::new(); m.n + 1] };
        w.walk(depth, p.covered, p.size);
        w.tables
    });
    let mut tables = vec![HashMap::new(); m.n + 1];
    for part in partials {
        for (into, from) in tables.iter_mut().zip(part) {
            merge_tables(into, from);
        }
    }
    Ok(tables.into_iter().enumerate().map(|(k, t)| finish(k, t)).collect())
}

/// Single-vertex and vertex-pair domination counts over one graph.
///
/// - `dominators(T)`: vertices `v` with `T ⊆ N[v]`;
/// - `split(S, T)`: vertices dominating `S \ T` whose closed neighborhood misses `T`;
/// - `pairs(S)`: ordered pairs `(u1, u2)` where neither `N[u1]` nor `N[u2]`
///   contains `S` but their union does.
///
/// These methods do not validate their arguments; see the free functions.
#[derive(Debug, Clone)]
pub struct DominationCounts {
    closed: Vec<u64>,
}

impl DominationCounts {
    pub fn new(g: &Graph) -> Result<Self> {
        Ok(DominationCounts { closed: g.closed_masks()? })
    }

    pub fn dominators(&self, t: VertexSet) -> u64 {
        self.closed.iter().filter(|&&c| t.bits() & !c == 0).count() as u64
    }

    pub fn split(&self, s: VertexSet, t: VertexSet) -> u64 {
        let rest = s.difference(t).bits();
        self.closed.iter().filter(|&&c| rest & !c == 0 && c & t.bits() == 0).count() as u64
    }

    pub fn pairs(&self, s: VertexSet) -> u64 {
        let s = s.bits();
        let partial: Vec<u64> = self.closed.iter().copied().filter(|&c| s & !c != 0).collect();
        let mut count = 0;
        for &a in &partial {
            for &b in &partial {
                if s & !(a | b) == 0 {
                    count += 1;
                }
            }
        }
        count
    }
}

/// `D(T)`: number of vertices whose closed neighborhood contains `t`.
pub fn dominator_count(g: &Graph, t: VertexSet) -> Result<u64> {
    g.check_set(t)?;
    if t.is_empty() {
        return Err(Error::input("dominator count is defined for nonempty sets only"));
    }
    Ok(DominationCounts::new(g)?.dominators(t))
}

/// `D(S:T)` for `∅ ≠ T ⊊ S`.
pub fn split_count(g: &Graph, s: VertexSet, t: VertexSet) -> Result<u64> {
    g.check_set(s)?;
    g.check_set(t)?;
    if t.is_empty() || t == s || !t.is_subset(s) {
        return Err(Error::input("split count needs a nonempty proper subset T of S"));
    }
    Ok(DominationCounts::new(g)?.split(s, t))
}

/// `D'(S)`: ordered pairs of non-dominating vertices that jointly dominate `s`.
pub fn pair_count(g: &Graph, s: VertexSet) -> Result<u64> {
    g.check_set(s)?;
    if s.is_empty() {
        return Err(Error::input("pair count is defined for nonempty sets only"));
    }
    Ok(DominationCounts::new(g)?.pairs(s))
}
