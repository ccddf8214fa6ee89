//! Acceptance suite: one test per criterion. Each test prints a single
//! `criterion N: PASS|FAIL` line with its measurements before asserting.

mod common;

use std::time::{Duration, Instant};

use domination::analysis::{analyze, mode_is_central, ratio_sequence};
use domination::binomial::binomial;
use domination::checks::{
    check_concavity_condition, check_construction_bound, check_mode_condition, concavity_proof_params,
    mode_proof_params, pair_identity, undominated_recurrence, verify_growth_identity_all, CoefficientBound,
};
use domination::enumerate::{domination_polynomial_with, e_statistics_all, DominationCounts, EnumOptions};
use domination::generate::{generate, gnp, join_universal, petersen, Family};
use domination::rng::derive_seed;
use domination::sampling::{estimate_rk_with, SampleOptions};
use domination::{Graph, VertexSet};
use num_bigint::BigUint;
use num_rational::BigRational;

use common::{all_labeled_graphs, naive_domination_counts, random_graphs, to_u64s};

fn seq() -> EnumOptions {
    EnumOptions::sequential()
}

fn verdict(criterion: u32, pass: bool, detail: impl std::fmt::Display) -> bool {
    println!("criterion {criterion}: {} {detail}", if pass { "PASS" } else { "FAIL" });
    pass
}

fn oracle_suite() -> Vec<Graph> {
    random_graphs(500, 1..=12, 1)
}

fn growth_suite() -> impl Iterator<Item = Graph> {
    (1..=6).flat_map(all_labeled_graphs).chain(random_graphs(200, 7..=10, 2))
}

fn recurrence_suite() -> impl Iterator<Item = Graph> {
    (1..=5).flat_map(all_labeled_graphs).chain(random_graphs(100, 1..=8, 3))
}

/// 1000 random `(g, S)` pairs with nonempty `S`.
fn random_pairs() -> Vec<(Graph, VertexSet)> {
    random_graphs(1000, 1..=10, 4)
        .into_iter()
        .enumerate()
        .map(|(i, g)| {
            let full = g.vertex_set().bits();
            let bits = derive_seed(4, i as u64) & full;
            (g, VertexSet(if bits == 0 { full } else { bits }))
        })
        .collect()
}

#[test]
fn criterion_01_coefficients_match_naive_oracle() {
    let start = Instant::now();
    let graphs = oracle_suite();
    let mismatches = graphs
        .iter()
        .filter(|g| to_u64s(&domination_polynomial_with(g, &seq()).unwrap()) != naive_domination_counts(g))
        .count();
    let elapsed = start.elapsed();
    let pass = mismatches == 0 && elapsed < Duration::from_secs(60);
    assert!(verdict(1, pass, format!("{} graphs, {mismatches} mismatches, {elapsed:.2?}", graphs.len())));
}

#[test]
fn criterion_02_growth_identity() {
    let start = Instant::now();
    let (mut graphs, mut instances, mut failures) = (0u64, 0u64, 0u64);
    for g in growth_suite() {
        graphs += 1;
        for r in verify_growth_identity_all(&g, &seq()).unwrap() {
            instances += 1;
            failures += !r.holds() as u64;
        }
    }
    let elapsed = start.elapsed();
    let pass = failures == 0 && graphs == 1 + 2 + 8 + 64 + 1024 + 32768 + 200 && elapsed < Duration::from_secs(300);
    assert!(verdict(
        2,
        pass,
        format!("{graphs} graphs, {instances} (G, k) instances, {failures} failures, {elapsed:.2?}")
    ));
}

#[test]
fn criterion_03_undominated_recurrence() {
    let (mut graphs, mut instances, mut failures) = (0u64, 0u64, 0u64);
    for g in recurrence_suite() {
        graphs += 1;
        let all = e_statistics_all(&g, &seq()).unwrap();
        let counts = DominationCounts::new(&g).unwrap();
        for k in 0..g.n() {
            for r in undominated_recurrence(&g, k, &all[k], &all[k + 1], &counts) {
                instances += 1;
                failures += !r.identity.holds() as u64;
            }
        }
    }
    let pass = failures == 0 && graphs == 1 + 2 + 8 + 64 + 1024 + 100;
    assert!(verdict(3, pass, format!("{graphs} graphs, {instances} (G, k, T) instances, {failures} failures")));
}

#[test]
fn criterion_04_pair_identity() {
    let (mut instances, mut failures) = (0u64, 0u64);
    for g in (1..=5).flat_map(all_labeled_graphs) {
        let counts = DominationCounts::new(&g).unwrap();
        for bits in 1..1u64 << g.n() {
            instances += 1;
            failures += !pair_identity(&g, VertexSet(bits), &counts).holds() as u64;
        }
    }
    let pairs = random_pairs();
    for (g, s) in &pairs {
        let counts = DominationCounts::new(g).unwrap();
        instances += 1;
        failures += !pair_identity(g, *s, &counts).holds() as u64;
    }
    let pass = failures == 0 && pairs.len() == 1000;
    assert!(verdict(4, pass, format!("{instances} (G, S) instances, {failures} failures")));
}

#[test]
fn criterion_05_ratio_monotonicity() {
    let mut graphs = oracle_suite();
    graphs.extend(growth_suite());
    graphs.extend(recurrence_suite());
    graphs.extend(random_pairs().into_iter().map(|(g, _)| g));
    let failures = graphs
        .iter()
        .filter(|g| !ratio_sequence(&domination_polynomial_with(g, &seq()).unwrap()).non_decreasing)
        .count();
    assert!(verdict(5, failures == 0, format!("{} graphs, {failures} non-monotone", graphs.len())));
}

#[test]
fn criterion_06_universal_vertex_graphs_unimodal_with_central_mode() {
    let start = Instant::now();
    let with_universal = (1..=6).flat_map(all_labeled_graphs).filter(|g| g.universal_vertex_count() > 0);
    let joined = all_labeled_graphs(6).map(|base| join_universal(&base, 1));
    let (mut graphs, mut not_unimodal, mut off_centre) = (0u64, 0u64, 0u64);
    let mut example = None;
    for g in with_universal.chain(joined) {
        graphs += 1;
        let d = domination_polynomial_with(&g, &seq()).unwrap();
        match analyze(&d).mode {
            None => not_unimodal += 1,
            Some(m) if !mode_is_central(m, g.n()) => {
                off_centre += 1;
                example.get_or_insert_with(|| (g.n(), m, to_u64s(&d)));
            }
            Some(_) => {}
        }
    }
    let elapsed = start.elapsed();
    let pass = not_unimodal == 0 && off_centre == 0 && elapsed < Duration::from_secs(300);
    let detail = format!(
        "{graphs} graphs, {not_unimodal} not unimodal, {off_centre} with mode outside {{floor(n/2), floor((n+1)/2)}}, \
         first: {example:?} (n, mode, coefficients), {elapsed:.2?}"
    );
    assert!(verdict(6, pass, detail));
}

#[test]
fn criterion_07_tail_and_concavity_conditions_at_8192() {
    let start = Instant::now();
    let n = 8192;
    let mode = mode_proof_params(n);
    let exact = CoefficientBound::Exact(binomial(n - 1, mode.k - 1));
    let mode_exact = check_mode_condition(mode, &exact).unwrap();
    let mode_universal = check_mode_condition(mode, &CoefficientBound::UniversalVertex).unwrap();
    let concave = concavity_proof_params(n);
    let concave_exact =
        check_concavity_condition(concave, &CoefficientBound::Exact(binomial(n - 1, concave.k - 1))).unwrap();
    let concave_universal = check_concavity_condition(concave, &CoefficientBound::UniversalVertex).unwrap();
    let elapsed = start.elapsed();
    let all = [&mode_exact, &mode_universal, &concave_exact, &concave_universal];
    let pass = all.iter().all(|v| v.holds) && elapsed < Duration::from_secs(5);
    let detail = format!(
        "tail (k={}, alpha={}) holds={}, concavity (k={}, alpha={}) holds={}, {elapsed:.2?}",
        mode.k,
        mode.alpha,
        mode_exact.holds && mode_universal.holds,
        concave.k,
        concave.alpha,
        concave_exact.holds && concave_universal.holds
    );
    assert!(verdict(7, pass, detail));
}

#[test]
fn criterion_08_construction_chain_at_2_pow_20() {
    let start = Instant::now();
    let report = check_construction_bound(1 << 20);
    let elapsed = start.elapsed();
    let failed: Vec<String> = report
        .failures()
        .map(|l| {
            format!(
                "{} at k={:?} ({:.4} {} {:.4})",
                l.name,
                l.k,
                domination::checks::approx(&l.lhs),
                l.relation.symbol(),
                domination::checks::approx(&l.rhs)
            )
        })
        .collect();
    let pass = report.all_hold() && !report.ks.is_empty() && elapsed < Duration::from_secs(10);
    let detail = format!(
        "d={}, ks={:?}, {} links, failing: {failed:?}, {elapsed:.2?}",
        report.degree,
        report.ks,
        report.links.len()
    );
    assert!(verdict(8, pass, detail));
}

#[test]
fn criterion_09_construction_modes_at_desk_scale() {
    let cases = [
        (
            "petersen+K1",
            join_universal(&petersen().unwrap(), 1),
            vec![0, 1, 10, 55, 195, 402, 452, 330, 165, 55, 11, 1],
            6,
        ),
        ("C5+K1", join_universal(&generate(&Family::Cycle { n: 5 }).unwrap(), 1), vec![0, 1, 10, 20, 15, 6, 1], 3),
    ];
    let mut pass = true;
    let mut detail = Vec::new();
    for (name, g, frozen, frozen_mode) in cases {
        let d = domination_polynomial_with(&g, &seq()).unwrap();
        let coeffs = to_u64s(&d);
        let rep = analyze(&d);
        let above_half = rep.mode.is_some_and(|m| 2 * m >= g.n());
        pass &= rep.unimodal
            && coeffs == frozen
            && coeffs == naive_domination_counts(&g)
            && rep.mode == Some(frozen_mode)
            && above_half;
        detail.push(format!("{name}: n={} mode={:?} (n/2={})", g.n(), rep.mode, g.n() as f64 / 2.0));
    }
    assert!(verdict(9, pass, detail.join("; ")));
}

#[test]
fn criterion_10_parallel_and_sequential_enumeration() {
    let g = gnp(26, 0.3, 2024).unwrap();
    let start = Instant::now();
    let parallel = domination_polynomial_with(&g, &EnumOptions::default().with_workers(8)).unwrap();
    let parallel_time = start.elapsed();
    let start = Instant::now();
    let sequential = domination_polynomial_with(&g, &seq()).unwrap();
    let sequential_time = start.elapsed();
    let render =
        |c: &domination::CoefficientVector| c.as_slice().iter().map(BigUint::to_string).collect::<Vec<_>>().join(",");
    let identical = render(&parallel) == render(&sequential);
    let pass = identical && parallel_time < Duration::from_secs(60) && sequential_time < Duration::from_secs(480);
    let detail = format!(
        "G(26, 0.3) seed 2024 with {} edges: 8 workers {parallel_time:.2?}, 1 worker {sequential_time:.2?}, identical={identical}",
        g.edge_count()
    );
    assert!(verdict(10, pass, detail));
}

#[test]
fn criterion_11_sampling_interval_coverage() {
    let g = generate(&Family::Star { n: 100 }).unwrap();
    let (k, samples, level) = (10, 2000, 0.95);
    let truth = BigRational::new(binomial(99, 9).into(), binomial(100, 10).into());
    assert_eq!(truth, BigRational::new(1.into(), 10.into()));
    let opts = SampleOptions::default();
    let covered =
        (0..200u64).filter(|&seed| estimate_rk_with(&g, k, samples, seed, level, &opts).unwrap().covers(0.1)).count();
    let pass = covered * 10 >= 200 * 9;
    assert!(verdict(11, pass, format!("{covered}/200 intervals cover r_10 = 1/10 ({samples} samples each)")));
}
