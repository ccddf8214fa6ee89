//! Deterministic graph families, the universal-vertex join, and girth.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng;

/// Named graph families accepted by [`generate`].
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Complete {
        n: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// `K_{1,n-1}` with the center at index 0.
    Star {
        n: usize,
    },
    /// `n` isolated vertices.
    Empty {
        n: usize,
    },
    Petersen,
    /// Erdős–Rényi `G(n, p)`; see [`gnp`] for the sampling procedure.
    Gnp {
        n: usize,
        p: f64,
        seed: u64,
    },
    /// `base` joined with `count` new universal vertices (appended last).
    JoinUniversal {
        base: Box<Family>,
        count: usize,
    },
    /// A regular girth-5 base plus one universal vertex; see [`construction_graph`].
    Construction {
        base: Box<Family>,
    },
}

/// Family names without parameters, as used on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyName {
    Complete,
    Path,
    Cycle,
    Star,
    Empty,
    Petersen,
    Gnp,
    JoinUniversal,
    Construction,
}

impl FamilyName {
    pub const ALL: [FamilyName; 9] = [
        FamilyName::Complete,
        FamilyName::Path,
        FamilyName::Cycle,
        FamilyName::Star,
        FamilyName::Empty,
        FamilyName::Petersen,
        FamilyName::Gnp,
        FamilyName::JoinUniversal,
        FamilyName::Construction,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyName::Complete => "complete",
            FamilyName::Path => "path",
            FamilyName::Cycle => "cycle",
            FamilyName::Star => "star",
            FamilyName::Empty => "empty",
            FamilyName::Petersen => "petersen",
            FamilyName::Gnp => "gnp",
            FamilyName::JoinUniversal => "join_universal",
            FamilyName::Construction => "construction",
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyName::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::input(format!("unknown graph family `{s}`")))
    }
}

/// Builds a member of a named family. Output depends only on the arguments.
pub fn generate(family: &Family) -> Result<Graph> {
    match family {
        Family::Complete { n } => Graph::from_edges(*n, (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v)))),
        Family::Path { n } => Graph::from_edges(*n, (1..*n).map(|v| (v - 1, v))),
        Family::Cycle { n } => {
            if *n < 3 {
                return Err(Error::input(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::from_edges(*n, (0..*n).map(|v| (v, (v + 1) % n)))
        }
        Family::Star { n } => {
            if *n == 0 {
                return Err(Error::input("star needs n >= 1"));
            }
            Graph::from_edges(*n, (1..*n).map(|v| (0, v)))
        }
        Family::Empty { n } => Ok(Graph::empty(*n)),
        Family::Petersen => petersen(),
        Family::Gnp { n, p, seed } => gnp(*n, *p, *seed),
        Family::JoinUniversal { base, count } => Ok(join_universal(&generate(base)?, *count)),
        Family::Construction { base } => construction_graph(&generate(base)?),
    }
}

/// The Petersen graph: outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram.
pub fn petersen() -> Result<Graph> {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner))
}

/// `G(n, p)` sampled with SplitMix64 seeded by `seed`: pairs `(u, v)`, `u < v`,
/// are visited in lexicographic order and each consumes one draw; the edge is
/// present iff the 53-bit draw is below `floor(p * 2^53)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::input(format!("edge probability must lie in [0, 1], got {p}")));
    }
    let threshold = rng::bernoulli_threshold(p);
    let mut stream = rng::stream(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng::draw53(&mut stream) < threshold {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Adds `count` universal vertices with indices `n..n + count`.
pub fn join_universal(base: &Graph, count: usize) -> Graph {
    let n = base.n();
    let total = n + count;
    let new_edges = (n..total).flat_map(|u| (0..u).map(move |v| (v, u)));
    Graph::from_edges(total, base.edges().chain(new_edges)).expect("join of a valid graph is valid")
}

/// Validates that `base` is regular with girth at least 5, then adds one
/// universal vertex.
pub fn construction_graph(base: &Graph) -> Result<Graph> {
    if let Err((v, deg, d)) = base.regular_degree() {
        return Err(Error::Precondition(format!(
            "base is not regular: vertex {v} has degree {deg}, vertex 0 has degree {d}"
        )));
    }
    if let Some(cycle) = shortest_cycle(base) {
        if cycle.len() < 5 {
            return Err(Error::Precondition(format!("base has girth {} < 5: cycle {:?}", cycle.len(), cycle)));
        }
    }
    Ok(join_universal(base, 1))
}

/// Base degree used by the universal-vertex construction on `n` total
/// vertices: `2 * floor(log2(4n) / 2) + 2`, computed with integer bit lengths.
pub fn construction_degree(n: u64) -> u64 {
    assert!(n >= 1);
    let log_floor = 63 - (4 * n).leading_zeros() as u64;
    2 * (log_floor / 2) + 2
}

/// Length of a shortest cycle, or `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    shortest_cycle(g).map(|c| c.len())
}

/// A shortest cycle as a vertex sequence, found by breadth-first search from
/// every vertex.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            // any cycle closed from here has length >= 2 * dist[u]
            if best.as_ref().is_some_and(|c| 2 * dist[u] >= c.len()) {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    if best.as_ref().is_none_or(|c| len < c.len()) {
                        best = Some(close_cycle(&parent, u, w));
                    }
                }
            }
        }
    }
    best
}

fn close_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let climb = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path.reverse();
        path
    };
    let (pu, pw) = (climb(u), climb(w));
    let common = pu.iter().zip(&pw).take_while(|(a, b)| a == b).count();
    let mut cycle: Vec<usize> = pu[common - 1..].to_vec();
    cycle.extend(pw[common..].iter().rev());
    cycle
}
