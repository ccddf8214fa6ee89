use domination::checks::{
    concavity_bound, concavity_bound_ks, growth_identity, pair_identity, undominated_recurrence, IdentityReport,
};
use domination::enumerate::{domination_polynomial_with, e_statistics_all, e_statistics_with, DominationCounts};
use domination::{Graph, VertexSet};
use serde_json::{json, Value};

use crate::compute::enum_options;
use crate::input::GraphArgs;
use crate::report::{int, ints, rational, Failure, Outcome, RunReport};
use crate::Context;

/// Largest `n` for which `dprime` checks every nonempty `S` by default; the
/// work grows as `3^n`.
const ALL_SETS_MAX_N: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Check {
    /// `(k+1)(d_{k+1} - d_k) = Σ E_k^T D(T) - (2k+1-n) d_k` for every k.
    #[value(name = "growth", alias = "2.2")]
    Growth,
    /// The undominated-set recurrence for every k and T.
    #[value(name = "e-rec", alias = "recurrence")]
    Recurrence,
    /// `Σ D(S:T) D(T) = D(S)|N(S)| - D(S)^2 + D'(S)` for every nonempty S.
    #[value(name = "dprime", alias = "pairs")]
    Pairs,
    /// The second-difference lower bound for k in [n/2, n/2 + sqrt(n)/4].
    #[value(name = "concavity-bound", alias = "2.4")]
    ConcavityBound,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::Growth => "growth",
            Check::Recurrence => "e-rec",
            Check::Pairs => "dprime",
            Check::ConcavityBound => "concavity-bound",
        }
    }
}

#[derive(clap::Args)]
pub struct Args {
    #[command(flatten)]
    graph: GraphArgs,

    /// Which identity or inequality to check.
    #[arg(long = "lemma", value_enum)]
    check: Check,

    /// Restrict to one k (growth, e-rec, concavity-bound).
    #[arg(long)]
    k: Option<usize>,

    /// Restrict dprime to one S, given as comma-separated vertices.
    #[arg(long)]
    set: Option<String>,

    /// Largest n accepted for enumeration (at most 64).
    #[arg(long)]
    limit: Option<usize>,
}

fn identity(r: &IdentityReport) -> [(&'static str, Value); 3] {
    [("lhs", int(&r.lhs)), ("rhs", int(&r.rhs)), ("holds", json!(r.holds()))]
}

fn entry(key: (&'static str, Value), rest: impl IntoIterator<Item = (&'static str, Value)>) -> Value {
    crate::report::object(std::iter::once(key).chain(rest))
}

fn vertices(s: VertexSet) -> Value {
    ints(s.iter())
}

fn parse_set(g: &Graph, text: &str) -> Result<VertexSet, Failure> {
    let mut set = VertexSet::EMPTY;
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part.parse().map_err(|_| Failure::usage(format!("`{part}` is not a vertex index")))?;
        if v >= g.n() {
            return Err(Failure::usage(format!("vertex {v} out of range for n = {}", g.n())));
        }
        set = set.union(VertexSet::singleton(v));
    }
    if set.is_empty() {
        return Err(Failure::usage("--set must name at least one vertex"));
    }
    Ok(set)
}

fn check_k(k: Option<usize>, allowed: &[usize], n: usize) -> Result<Vec<usize>, Failure> {
    match k {
        None => Ok(allowed.to_vec()),
        Some(k) if allowed.contains(&k) => Ok(vec![k]),
        Some(k) => Err(Failure::usage(format!("k = {k} is not valid for n = {n}; valid k: {allowed:?}"))),
    }
}

pub fn run(ctx: &Context, args: Args) -> Result<Outcome, Failure> {
    let (g, input) = args.graph.resolve()?;
    let opts = enum_options(ctx, args.limit);
    let n = g.n();
    let params = json!({
        "check": args.check.name(),
        "k": args.k.map_or(Value::Null, int),
        "set": args.set.clone().map_or(Value::Null, Value::String),
    });
    let report = RunReport::start("verify", input, params);
    let all_ks: Vec<usize> = (0..n).collect();

    let entries: Vec<Value> = match args.check {
        Check::Growth => {
            let ks = check_k(args.k, &all_ks, n)?;
            let d = domination_polynomial_with(&g, &opts)?;
            let counts = DominationCounts::new(&g)?;
            let mut out = Vec::new();
            for k in ks {
                let stats = e_statistics_with(&g, k, &opts)?;
                out.push(entry(("k", int(k)), identity(&growth_identity(n, k, &d, &stats, &counts))));
            }
            out
        }
        Check::Recurrence => {
            let ks = check_k(args.k, &all_ks, n)?;
            let all = e_statistics_all(&g, &opts)?;
            let counts = DominationCounts::new(&g)?;
            ks.into_iter()
                .flat_map(|k| {
                    undominated_recurrence(&g, k, &all[k], &all[k + 1], &counts).into_iter().map(move |r| (k, r))
                })
                .map(|(k, r)| {
                    let mut fields = vec![("t", vertices(r.t))];
                    fields.extend(identity(&r.identity));
                    entry(("k", int(k)), fields)
                })
                .collect()
        }
        Check::Pairs => {
            let counts = DominationCounts::new(&g)?;
            let sets: Vec<VertexSet> = match &args.set {
                Some(text) => vec![parse_set(&g, text)?],
                None if n <= ALL_SETS_MAX_N => (1..1u64 << n).map(VertexSet).collect(),
                None => {
                    return Err(Failure::usage(format!(
                        "checking every S is limited to n <= {ALL_SETS_MAX_N}; pass --set for n = {n}"
                    )))
                }
            };
            sets.into_iter()
                .map(|s| {
                    let r = pair_identity(&g, s, &counts);
                    entry(("s", vertices(s)), [("pairs", int(counts.pairs(s)))].into_iter().chain(identity(&r)))
                })
                .collect()
        }
        Check::ConcavityBound => {
            let allowed = concavity_bound_ks(n);
            if allowed.is_empty() {
                return Err(Failure::usage(format!("no k in [n/2, n/2 + sqrt(n)/4] with k + 2 <= n for n = {n}")));
            }
            let ks = check_k(args.k, &allowed, n)?;
            let d = domination_polynomial_with(&g, &opts)?;
            let counts = DominationCounts::new(&g)?;
            let mut out = Vec::new();
            for k in ks {
                let stats = e_statistics_with(&g, k, &opts)?;
                let r = concavity_bound(k, &d, &stats, &counts);
                out.push(entry(
                    ("k", int(k)),
                    [
                        ("lhs", rational(&r.lhs)),
                        ("rhs", rational(&r.rhs)),
                        ("holds", json!(r.holds())),
                        ("coefficient_step_holds", json!(r.step_holds)),
                    ],
                ));
            }
            out
        }
    };

    let failures = entries.iter().filter(|e| e["holds"] == json!(false)).count();
    let results = json!({
        "checked": int(entries.len()),
        "failures": int(failures),
        "all_hold": failures == 0,
        "instances": entries,
    });
    Ok(report.finish(results, failures == 0))
}
