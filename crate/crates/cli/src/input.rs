//! Resolving the graph a command operates on.

use std::io::Read;

use clap::Args;
use domination::generate::{generate, Family, FamilyName};
use domination::{parse_edgelist, parse_graph6, write_graph6, Graph};
use serde_json::{Map, Value};

use crate::report::{int, Failure};

/// One graph from `--g6`, `--edgelist`, `--family` or, failing those, stdin
/// (a single graph6 record or an edge list beginning with `n <count>`).
#[derive(Args, Debug, Clone)]
pub struct GraphArgs {
    /// Graph in graph6 format.
    #[arg(long, conflicts_with_all = ["edgelist", "family"])]
    pub g6: Option<String>,

    /// Path to an edge list: a header `n <count>` then one `u v` pair per line.
    #[arg(long, conflicts_with = "family")]
    pub edgelist: Option<std::path::PathBuf>,

    /// Named family: complete, path, cycle, star, empty, petersen, gnp,
    /// join_universal, construction.
    #[arg(long)]
    pub family: Option<String>,

    /// Vertex count for sized families.
    #[arg(long)]
    pub n: Option<usize>,

    /// Edge probability for gnp.
    #[arg(long)]
    pub p: Option<f64>,

    /// Seed for gnp (for `sample`, the seed of the sampling stream instead).
    #[arg(long)]
    pub seed: Option<u64>,

    /// Seed for gnp; takes precedence over --seed.
    #[arg(long)]
    pub graph_seed: Option<u64>,

    /// Set by commands that use --seed for their own randomness.
    #[arg(skip)]
    pub seed_is_sampling: bool,

    /// Base family for join_universal and construction.
    #[arg(long)]
    pub base: Option<String>,

    /// Vertex count of the base family.
    #[arg(long)]
    pub base_n: Option<usize>,

    /// Number of universal vertices added by join_universal.
    #[arg(long)]
    pub count: Option<usize>,
}

fn family_name(name: &str) -> Result<FamilyName, Failure> {
    name.parse::<FamilyName>().map_err(|_| {
        let known: Vec<&str> = FamilyName::ALL.iter().map(|f| f.as_str()).collect();
        Failure::usage(format!("unknown family `{name}`; expected one of {}", known.join(", ")))
    })
}

fn required<T: Copy>(value: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::usage(format!("family `{family}` needs {flag}")))
}

impl GraphArgs {
    fn gnp_seed(&self) -> u64 {
        let shared = if self.seed_is_sampling { None } else { self.seed };
        self.graph_seed.or(shared).unwrap_or(0)
    }

    /// A parameterless family (no joins) of size `n`.
    fn simple_family(&self, name: FamilyName, n: Option<usize>, flag: &str) -> Result<Family, Failure> {
        let label = name.as_str();
        Ok(match name {
            FamilyName::Complete => Family::Complete { n: required(n, flag, label)? },
            FamilyName::Path => Family::Path { n: required(n, flag, label)? },
            FamilyName::Cycle => Family::Cycle { n: required(n, flag, label)? },
            FamilyName::Star => Family::Star { n: required(n, flag, label)? },
            FamilyName::Empty => Family::Empty { n: required(n, flag, label)? },
            FamilyName::Petersen => Family::Petersen,
            FamilyName::Gnp => {
                Family::Gnp { n: required(n, flag, label)?, p: required(self.p, "--p", label)?, seed: self.gnp_seed() }
            }
            FamilyName::JoinUniversal | FamilyName::Construction => {
                return Err(Failure::usage(format!("`{label}` cannot be used as a base family")))
            }
        })
    }

    fn family(&self, name: &str) -> Result<(Family, Map<String, Value>), Failure> {
        let name = family_name(name)?;
        let mut params = Map::new();
        params.insert("family".into(), Value::String(name.as_str().into()));
        let base = |default: Option<FamilyName>| -> Result<(Family, FamilyName), Failure> {
            let base_name = match (&self.base, default) {
                (Some(b), _) => family_name(b)?,
                (None, Some(d)) => d,
                (None, None) => return Err(Failure::usage(format!("family `{name}` needs --base"))),
            };
            Ok((self.simple_family(base_name, self.base_n, "--base-n")?, base_name))
        };
        let family = match name {
            FamilyName::JoinUniversal => {
                let (b, base_name) = base(None)?;
                let count = self.count.unwrap_or(1);
                params.insert("base".into(), Value::String(base_name.as_str().into()));
                params.insert("count".into(), int(count));
                Family::JoinUniversal { base: Box::new(b), count }
            }
            FamilyName::Construction => {
                let (b, base_name) = base(Some(FamilyName::Petersen))?;
                params.insert("base".into(), Value::String(base_name.as_str().into()));
                Family::Construction { base: Box::new(b) }
            }
            simple => self.simple_family(simple, self.n, "--n")?,
        };
        for (key, value) in [("base_n", self.base_n), ("n", self.n)] {
            if let Some(v) = value {
                params.insert(key.into(), int(v));
            }
        }
        if let Some(p) = self.p {
            params.insert("p".into(), Value::String(p.to_string()));
        }
        if self.graph_seed.is_some() || (!self.seed_is_sampling && self.seed.is_some()) {
            params.insert("seed".into(), int(self.gnp_seed()));
        }
        Ok((family, params))
    }

    /// The graph and a JSON descriptor of where it came from.
    pub fn resolve(&self) -> Result<(Graph, Value), Failure> {
        let mut descriptor = Map::new();
        let graph = if let Some(g6) = &self.g6 {
            descriptor.insert("source".into(), "graph6".into());
            parse_graph6(g6)?
        } else if let Some(path) = &self.edgelist {
            descriptor.insert("source".into(), "edgelist".into());
            descriptor.insert("path".into(), Value::String(path.display().to_string()));
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
            parse_edgelist(&text)?
        } else if let Some(name) = &self.family {
            let (family, params) = self.family(name)?;
            descriptor.insert("source".into(), "family".into());
            descriptor.extend(params);
            generate(&family)?
        } else {
            descriptor.insert("source".into(), "stdin".into());
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
            parse_single(&text)?
        };
        descriptor.insert("vertices".into(), int(graph.n()));
        descriptor.insert("edges".into(), int(graph.edge_count()));
        descriptor.insert("graph6".into(), Value::String(write_graph6(&graph)));
        Ok((graph, Value::Object(descriptor)))
    }
}

/// One graph from text: an edge list if it starts with an `n` header or a
/// comment, otherwise exactly one graph6 record.
pub fn parse_single(text: &str) -> Result<Graph, Failure> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        None => Err(Failure::usage("no graph given: pass --g6, --edgelist, --family or a graph on stdin")),
        Some(line) if line.starts_with("n ") || line.starts_with('#') || line == "n" => Ok(parse_edgelist(text)?),
        Some(line) => {
            let records = text.lines().filter(|l| !l.trim().is_empty()).count();
            if records > 1 {
                return Err(Failure::usage(format!(
                    "expected one graph6 record on stdin, found {records}; use `batch`"
                )));
            }
            Ok(parse_graph6(line)?)
        }
    }
}
