use domination::sampling::{compare_coefficients, estimate_rk_with, Estimate, SampleOptions};
use serde_json::{json, Value};

use crate::input::GraphArgs;
use crate::report::{int, Failure, Outcome, RunReport};
use crate::Context;

#[derive(clap::Args)]
pub struct Args {
    #[command(flatten)]
    graph: GraphArgs,

    /// Subset size.
    #[arg(long)]
    k: usize,

    /// Number of uniform k-subsets drawn.
    #[arg(long, default_value_t = 10_000)]
    samples: u64,

    /// Confidence level of the Clopper–Pearson interval.
    #[arg(long, default_value_t = 0.95)]
    level: f64,

    /// Also compare d_k with d_{k+1}, splitting the sample budget between them.
    #[arg(long)]
    compare: bool,
}

fn estimate(e: &Estimate) -> Value {
    json!({
        "k": int(e.k),
        "samples": int(e.samples),
        "hits": int(e.hits),
        "seed": int(e.seed),
        "level": e.level,
        "point": format!("{}/{}", e.hits, e.samples),
        "point_approx": e.point_f64(),
        "ci_low": e.ci_low,
        "ci_high": e.ci_high,
    })
}

/// `--seed` seeds the sampling stream here; a gnp graph takes `--graph-seed`.
pub fn run(ctx: &Context, mut args: Args) -> Result<Outcome, Failure> {
    args.graph.seed_is_sampling = true;
    let sample_seed = args.graph.seed.unwrap_or(0);
    let (g, input) = args.graph.resolve()?;
    let parameters = json!({
        "k": int(args.k),
        "samples": int(args.samples),
        "seed": int(sample_seed),
        "level": args.level,
        "compare": args.compare,
    });
    let report = RunReport::start("sample", input, parameters);
    let opts = SampleOptions { workers: ctx.workers };
    let e = estimate_rk_with(&g, args.k, args.samples, sample_seed, args.level, &opts)?;
    let mut results = json!({ "estimate": estimate(&e) });
    if args.compare {
        let c = compare_coefficients(&g, args.k, args.samples, sample_seed, args.level, &opts)?;
        results["comparison"] = json!({
            "verdict": c.verdict.as_str(),
            "lower": estimate(&c.lower),
            "upper": estimate(&c.upper),
        });
    }
    Ok(report.finish(results, true))
}
