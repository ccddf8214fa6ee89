#![allow(dead_code)]

use domination::generate::gnp;
use domination::Graph;

/// Every labeled graph on `n` vertices, indexed by its edge mask over the
/// pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

/// Seed-fixed random graphs: graph `i` has `n` drawn from `sizes` and edge
/// probability from a fixed ladder.
pub fn random_graphs(count: usize, sizes: std::ops::RangeInclusive<usize>, seed: u64) -> Vec<Graph> {
    const PS: [f64; 5] = [0.15, 0.3, 0.5, 0.7, 0.85];
    let span = sizes.end() - sizes.start() + 1;
    (0..count)
        .map(|i| {
            let n = sizes.start() + (i * 7 + seed as usize) % span;
            gnp(n, PS[i % PS.len()], seed.wrapping_mul(1_000_003).wrapping_add(i as u64)).unwrap()
        })
        .collect()
}

/// Counts dominating sets by size from scratch: for every subset, every vertex
/// is checked for membership or an adjacent member using adjacency lists only.
pub fn naive_domination_counts(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut d = vec![0u64; n + 1];
    for mask in 0u64..1 << n {
        let member = |v: usize| mask >> v & 1 == 1;
        let dominating = (0..n).all(|v| member(v) || g.neighbors(v).iter().any(|&u| member(u)));
        if dominating {
            d[mask.count_ones() as usize] += 1;
        }
    }
    d
}

pub fn to_u64s(c: &domination::CoefficientVector) -> Vec<u64> {
    c.as_slice().iter().map(|x| u64::try_from(x).unwrap()).collect()
}
