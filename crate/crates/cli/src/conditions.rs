use domination::checks::{
    check_concavity_condition, check_construction_bound, check_mode_condition, concavity_proof_params,
    mode_proof_params, CoefficientBound, ConditionParams, ConditionVerdict,
};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::report::{int, ints, rational, Failure, Outcome, RunReport};

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Condition {
    /// `d_k > (n^2 C(n-α-1, k) + α C(n-h, k)) / (2k+1-n)`: coefficients decrease from k on.
    #[value(name = "tail", alias = "1.4")]
    Tail,
    /// `d_k > (n^3 C(n-α-1, k) + 2α^2 C(n-h, k)) / (k+1)`: strict concavity from k on.
    #[value(name = "concavity", alias = "1.5")]
    Concavity,
    /// The lower-bound chain for the regular girth-5 base plus a universal vertex.
    #[value(name = "construction")]
    Construction,
}

impl Condition {
    fn name(self) -> &'static str {
        match self {
            Condition::Tail => "tail",
            Condition::Concavity => "concavity",
            Condition::Construction => "construction",
        }
    }
}

#[derive(clap::Args)]
pub struct Args {
    /// Which condition to evaluate.
    #[arg(long = "theorem", value_enum)]
    condition: Condition,

    /// Number of vertices.
    #[arg(long)]
    n: u64,

    /// Number of universal vertices (at least 1 for the universal-vertex bound).
    #[arg(long, default_value_t = 1)]
    h: u64,

    #[arg(long)]
    k: Option<u64>,

    #[arg(long)]
    alpha: Option<u64>,

    /// Lower bound on d_k as a decimal integer; defaults to C(n-1, k-1), which
    /// every graph with a universal vertex attains.
    #[arg(long)]
    dk: Option<String>,

    /// Derive k and alpha from n: k = ceil(n/2 + log2 n) + 1, alpha = floor(2 log2 n)
    /// for tail; k = ceil(n/2), alpha = floor(3 log2 n) for concavity.
    #[arg(long)]
    auto_params: bool,
}

fn params(args: &Args) -> Result<ConditionParams, Failure> {
    if args.auto_params {
        let auto = match args.condition {
            Condition::Tail => mode_proof_params(args.n),
            _ => concavity_proof_params(args.n),
        };
        return Ok(ConditionParams { h: args.h, ..auto });
    }
    let missing = |flag: &str| Failure::usage(format!("{flag} is required unless --auto-params is given"));
    Ok(ConditionParams {
        n: args.n,
        h: args.h,
        k: args.k.ok_or_else(|| missing("--k"))?,
        alpha: args.alpha.ok_or_else(|| missing("--alpha"))?,
    })
}

fn verdict(v: &ConditionVerdict, bound: &str) -> Value {
    json!({
        "n": int(v.params.n),
        "h": int(v.params.h),
        "k": int(v.params.k),
        "alpha": int(v.params.alpha),
        "dk_bound": bound,
        "holds": v.holds,
        "lhs_over_binomial": rational(&v.lhs),
        "rhs_over_binomial": rational(&v.rhs),
    })
}

pub fn run(args: Args) -> Result<Outcome, Failure> {
    let parameters = json!({
        "theorem": args.condition.name(),
        "n": int(args.n),
        "h": int(args.h),
        "k": args.k.map_or(Value::Null, int),
        "alpha": args.alpha.map_or(Value::Null, int),
        "dk": args.dk.clone().map_or(Value::Null, Value::String),
        "auto_params": args.auto_params,
    });
    let input = json!({ "source": "parameters" });

    if args.condition == Condition::Construction {
        let report = RunReport::start("check-theorem", input, parameters);
        let chain = check_construction_bound(args.n);
        let links: Vec<Value> = chain
            .links
            .iter()
            .map(|l| {
                json!({
                    "name": l.name,
                    "k": l.k.map_or(Value::Null, int),
                    "relation": l.relation.symbol(),
                    "lhs": rational(&l.lhs),
                    "rhs": rational(&l.rhs),
                    "holds": l.holds(),
                })
            })
            .collect();
        let results = json!({
            "n": int(chain.n),
            "degree": int(chain.degree),
            "in_claimed_range": chain.in_claimed_range,
            "applicable": chain.applicable,
            "ks": ints(&chain.ks),
            "links": links,
            "failures": chain.failures().map(|l| l.name).collect::<Vec<_>>(),
            "holds": chain.all_hold(),
        });
        let holds = chain.all_hold();
        return Ok(report.finish(results, holds));
    }

    let p = params(&args)?;
    let (bound, label) = match &args.dk {
        Some(text) => {
            let dk: BigUint = text
                .parse()
                .map_err(|_| Failure::usage(format!("--dk must be a nonnegative decimal integer, got `{text}`")))?;
            (CoefficientBound::Exact(dk), "given")
        }
        None => (CoefficientBound::UniversalVertex, "C(n-1, k-1)"),
    };
    let report = RunReport::start("check-theorem", input, parameters);
    let v = match args.condition {
        Condition::Tail => check_mode_condition(p, &bound)?,
        _ => check_concavity_condition(p, &bound)?,
    };
    let holds = v.holds;
    Ok(report.finish(verdict(&v, label), holds))
}
