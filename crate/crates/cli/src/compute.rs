use domination::analysis::{analyze, mode_bounds_check, mode_is_central, ratio_sequence, total};
use domination::enumerate::{domination_polynomial_with, EnumOptions};
use domination::CoefficientVector;
use serde_json::{json, Value};

use crate::input::GraphArgs;
use crate::report::{int, ints, object, Failure, Outcome, RunReport};
use crate::Context;

#[derive(clap::Args)]
pub struct Args {
    #[command(flatten)]
    graph: GraphArgs,

    /// Emit `k,d_k` rows instead of a report.
    #[arg(long)]
    csv: bool,

    /// Largest n accepted for enumeration (at most 64).
    #[arg(long)]
    limit: Option<usize>,
}

pub fn enum_options(ctx: &Context, limit: Option<usize>) -> EnumOptions {
    let opts = EnumOptions::default().with_workers(ctx.workers);
    match limit {
        Some(l) => opts.with_limit(l),
        None => opts,
    }
}

/// Coefficients, analysis and normalized ratios as report fields.
pub fn describe(d: &CoefficientVector, universal_vertices: usize) -> Value {
    let n = d.n();
    let rep = analyze(d);
    let ratios = ratio_sequence(d);
    let violation = rep
        .first_violation
        .as_ref()
        .map(|v| json!({ "index": int(v.index), "triple": ints([&v.triple.0, &v.triple.1, &v.triple.2]) }));
    object([
        ("coefficients", ints(d.as_slice())),
        ("total", int(total(d))),
        (
            "analysis",
            object([
                ("unimodal", json!(rep.unimodal)),
                ("mode", rep.mode.map_or(Value::Null, int)),
                ("mode_central", json!(rep.mode.is_some_and(|m| mode_is_central(m, n)))),
                ("mode_in_window", json!(mode_bounds_check(d, n))),
                ("first_violation", violation.unwrap_or(Value::Null)),
                ("concavity_window", ints(&rep.concavity_window)),
                ("ratio_monotone", json!(rep.ratio_monotone)),
            ]),
        ),
        ("ratios", Value::Array(ratios.ratios.iter().map(int).collect())),
        ("universal_vertices", int(universal_vertices)),
    ])
}

pub fn run(ctx: &Context, args: Args) -> Result<Outcome, Failure> {
    let (g, input) = args.graph.resolve()?;
    let opts = enum_options(ctx, args.limit);
    let params = json!({ "csv": args.csv, "limit": int(opts.limit) });
    let report = RunReport::start("compute", input, params);
    let d = domination_polynomial_with(&g, &opts)?;
    let mut outcome = report.finish(describe(&d, g.universal_vertex_count()), true);
    if args.csv {
        let mut csv = String::from("k,d_k\n");
        for (k, c) in d.as_slice().iter().enumerate() {
            csv.push_str(&format!("{k},{c}\n"));
        }
        outcome.csv = Some(csv);
    }
    Ok(outcome)
}
