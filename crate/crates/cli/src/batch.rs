//! Streaming analysis of newline-delimited graph6 records.
//!
//! Records are read in blocks, each block is enumerated in parallel and the
//! results are emitted in input order.

use std::io::BufRead;

use domination::analysis::{analyze, mode_bounds_check, mode_is_central};
use domination::enumerate::{domination_polynomial_with, EnumOptions};
use domination::{parse_graph6, Error};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::compute::enum_options;
use crate::report::{int, ints, Failure, Outcome, RunReport};
use crate::Context;

const BLOCK: usize = 1024;

#[derive(clap::Args)]
pub struct Args {
    /// Fail unless every checked graph has a unimodal polynomial.
    #[arg(long)]
    assert_unimodal: bool,

    /// Fail unless every checked graph is unimodal with mode in [n/2, n/2 + log2 n + 2].
    #[arg(long)]
    assert_mode_window: bool,

    /// Fail unless every checked graph is unimodal with mode floor(n/2) or ceil(n/2).
    #[arg(long)]
    assert_central_mode: bool,

    /// Apply assertions only to graphs with at least one universal vertex.
    #[arg(long)]
    universal_only: bool,

    /// Report unreadable records and continue instead of stopping at the first.
    #[arg(long)]
    keep_going: bool,

    /// Largest n accepted for enumeration (at most 64).
    #[arg(long)]
    limit: Option<usize>,
}

struct Record {
    line: usize,
    text: String,
}

enum Verdict {
    Checked { entry: Value, failed: Vec<&'static str> },
    Error { entry: Value, error: Error },
}

fn process(record: &Record, args: &Args, opts: &EnumOptions) -> Verdict {
    let analyse = || -> Result<(Value, Vec<&'static str>), Error> {
        let g = parse_graph6(&record.text)?;
        let d = domination_polynomial_with(&g, opts)?;
        let rep = analyze(&d);
        let n = g.n();
        let universal = g.universal_vertex_count();
        let asserted = !args.universal_only || universal > 0;
        let mut failed = Vec::new();
        if asserted {
            if args.assert_unimodal && !rep.unimodal {
                failed.push("unimodal");
            }
            if args.assert_mode_window && !mode_bounds_check(&d, n) {
                failed.push("mode_window");
            }
            if args.assert_central_mode && !rep.mode.is_some_and(|m| mode_is_central(m, n)) {
                failed.push("central_mode");
            }
        }
        let entry = json!({
            "line": int(record.line),
            "graph6": record.text,
            "vertices": int(n),
            "universal_vertices": int(universal),
            "coefficients": ints(d.as_slice()),
            "unimodal": rep.unimodal,
            "mode": rep.mode.map_or(Value::Null, int),
            "asserted": asserted,
            "failed": failed,
        });
        Ok((entry, failed))
    };
    match analyse() {
        Ok((entry, failed)) => Verdict::Checked { entry, failed },
        Err(error) => Verdict::Error {
            entry: json!({ "line": int(record.line), "graph6": record.text, "error": error.to_string() }),
            error,
        },
    }
}

pub fn run(ctx: &Context, args: Args) -> Result<Outcome, Failure> {
    let opts = enum_options(ctx, args.limit);
    let parameters = json!({
        "assert_unimodal": args.assert_unimodal,
        "assert_mode_window": args.assert_mode_window,
        "assert_central_mode": args.assert_central_mode,
        "universal_only": args.universal_only,
        "keep_going": args.keep_going,
        "limit": int(opts.limit),
    });
    let report = RunReport::start("batch", json!({ "source": "stdin" }), parameters);
    // enumeration of each graph stays sequential; records are the unit of parallelism
    let per_graph = EnumOptions { workers: 1, ..opts };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(ctx.workers)
        .build()
        .map_err(|e| Failure::usage(format!("cannot start worker pool: {e}")))?;

    let stdin = std::io::stdin();
    let mut lines = stdin.lock().lines().enumerate();
    let (mut entries, mut errors) = (Vec::new(), Vec::new());
    let (mut graphs, mut asserted, mut assertion_failures) = (0u64, 0u64, 0u64);
    let mut first_error: Option<Error> = None;

    'stream: loop {
        let mut block = Vec::with_capacity(BLOCK);
        for (i, line) in lines.by_ref() {
            let line = line.map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
            let text = line.trim();
            if text.is_empty() {
                continue;
            }
            block.push(Record { line: i + 1, text: text.to_string() });
            if block.len() == BLOCK {
                break;
            }
        }
        if block.is_empty() {
            break;
        }
        let verdicts: Vec<Verdict> = pool.install(|| block.par_iter().map(|r| process(r, &args, &per_graph)).collect());
        for (record, verdict) in block.iter().zip(verdicts) {
            match verdict {
                Verdict::Checked { entry, failed } => {
                    graphs += 1;
                    asserted += entry["asserted"].as_bool().unwrap_or(false) as u64;
                    if !failed.is_empty() {
                        assertion_failures += 1;
                        eprintln!("assertion failed ({}) at line {}: {}", failed.join(", "), record.line, record.text);
                    }
                    entries.push(entry);
                }
                Verdict::Error { entry, error } => {
                    eprintln!("line {}: {error}", record.line);
                    errors.push(entry);
                    first_error.get_or_insert(error);
                    if !args.keep_going {
                        break 'stream;
                    }
                }
            }
        }
    }

    if let (Some(error), false) = (&first_error, args.keep_going) {
        return Err(Failure::Domain(error.clone()));
    }
    let results = json!({
        "graphs": int(graphs),
        "asserted": int(asserted),
        "assertion_failures": int(assertion_failures),
        "errors": errors,
        "records": entries,
    });
    let mut outcome = report.finish(results, assertion_failures == 0);
    if let Some(error) = first_error {
        // a report is still printed, but the exit code reflects the unreadable input
        outcome.forced_exit = Some(Failure::Domain(error).exit_code());
    }
    Ok(outcome)
}
