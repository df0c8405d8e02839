//! The end-to-end verification suite: eleven independently runnable
//! criteria covering the solver, the variant relations, the transports,
//! the path-free recursion, the hardness gadget, and the interval
//! bounds. Shared between the acceptance test target and the CLI.

use std::time::Instant;

use rayon::prelude::*;

use crate::bounds::{bounds, ceil_sqrt, LowerRule};
use crate::burn::{validate, BurningSequence};
use crate::error::Result as CrateResult;
use crate::gadget::{
    build_gadget, caterpillar_preimage, certificate_sequence, solve_distinct_3partition,
    verify_gadget_structure, ThreePartitionInstance,
};
use crate::generate;
use crate::graph::Graph;
use crate::induced::longest_induced_path;
use crate::interval::verify_interval_model;
use crate::pathcycle::{path_cycle_sequence, PathOrCycle};
use crate::pkfree::{pkfree_horizon_bound, pkfree_sequence};
use crate::solver::{burning_number_exact, burning_number_oracle, BurnOutcome, Budget};
use crate::transform::{line_graph, spike_graph, total_graph};
use crate::variants::{
    edge_burning_number, line_seq_from_vertex_seq, total_burning_number,
    total_seq_from_vertex_seq, vertex_seq_from_line_seq, vertex_seq_from_total_seq, Chooser,
};

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    /// Base seed for every corpus; fixed default keeps runs reproducible.
    pub seed: u64,
    /// Budget applied to each individual solver call.
    pub budget: Budget,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0xB1A2_C0DE, budget: Budget::UNLIMITED }
    }
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub millis: u128,
}

type Check<T> = std::result::Result<T, String>;

fn ck<T>(r: CrateResult<T>) -> Check<T> {
    r.map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check<()> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(name: &'static str, body: impl FnOnce() -> Check<String>) -> CriterionResult {
    let started = Instant::now();
    let (pass, detail) = match body() {
        Ok(detail) => (true, detail),
        Err(detail) => (false, detail),
    };
    CriterionResult { name, pass, detail, millis: started.elapsed().as_millis() }
}

fn exact_with_witness(g: &Graph, budget: Budget) -> Check<(usize, BurningSequence)> {
    match ck(burning_number_exact(g, budget))?.outcome {
        BurnOutcome::Exact { k, witness } => Ok((k, witness)),
        BurnOutcome::Exhausted { lower, upper } => {
            Err(format!("solver budget exhausted with bracket [{lower}, {upper}]"))
        }
    }
}

fn exact(g: &Graph, budget: Budget) -> Check<usize> {
    exact_with_witness(g, budget).map(|(k, _)| k)
}

/// Seeded connected graphs with n cycling over [n_lo, n_hi].
pub fn corpus_connected(count: usize, n_lo: usize, n_hi: usize, seed: u64) -> Vec<Graph> {
    (0..count)
        .map(|i| {
            let n = n_lo + i % (n_hi - n_lo + 1);
            generate::random_connected(n, seed ^ (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
                .expect("generator parameters are valid")
        })
        .collect()
}

/// Seeded random trees with n cycling over [n_lo, n_hi].
pub fn corpus_trees(count: usize, n_lo: usize, n_hi: usize, seed: u64) -> Vec<Graph> {
    (0..count)
        .map(|i| {
            let n = n_lo + i % (n_hi - n_lo + 1);
            generate::random_tree(n, seed ^ (i as u64).wrapping_mul(0xD1B5_4A32_D192_ED03))
                .expect("generator parameters are valid")
        })
        .collect()
}

/// Closed-form sequences hit ceil(sqrt(n)) on paths and cycles, and the
/// solver confirms that value exactly on the small end of both families.
pub fn path_cycle_square_root_law(cfg: &SuiteConfig) -> CriterionResult {
    run("path_cycle_square_root_law", || {
        for n in 1..=100usize {
            let want = ceil_sqrt(n);
            let seq = ck(path_cycle_sequence(n, PathOrCycle::Path))?;
            ensure(seq.horizon() == want, || format!("path {n}: horizon {}", seq.horizon()))?;
            let g = ck(generate::path(n))?;
            ensure(ck(validate(&g, &seq))?, || format!("path {n}: sequence invalid"))?;
            if n >= 3 {
                let seq = ck(path_cycle_sequence(n, PathOrCycle::Cycle))?;
                ensure(seq.horizon() == want, || format!("cycle {n}: horizon {}", seq.horizon()))?;
                let g = ck(generate::cycle(n))?;
                ensure(ck(validate(&g, &seq))?, || format!("cycle {n}: sequence invalid"))?;
            }
        }
        (1..=36usize).collect::<Vec<_>>().par_iter().try_for_each(|&n| -> Check<()> {
            let k = exact(&ck(generate::path(n))?, cfg.budget)?;
            ensure(k == ceil_sqrt(n), || format!("path {n}: exact {k}"))?;
            if n >= 3 {
                let k = exact(&ck(generate::cycle(n))?, cfg.budget)?;
                ensure(k == ceil_sqrt(n), || format!("cycle {n}: exact {k}"))?;
            }
            Ok(())
        })?;
        Ok("constructive law on n <= 100, solver-exact on n <= 36".into())
    })
}

/// The pruning solver and the definition-level brute force agree on a
/// corpus of connected graphs within the oracle guard.
pub fn solver_matches_oracle(cfg: &SuiteConfig) -> CriterionResult {
    run("solver_matches_oracle", || {
        let corpus = corpus_connected(200, 1, 12, cfg.seed ^ 0x02);
        corpus.par_iter().enumerate().try_for_each(|(i, g)| {
            let slow = ck(burning_number_oracle(g))?;
            let (fast, witness) = exact_with_witness(g, cfg.budget)?;
            ensure(slow == fast, || format!("graph {i}: oracle {slow} vs solver {fast}"))?;
            ensure(ck(validate(g, &witness))?, || format!("graph {i}: witness invalid"))
        })?;
        Ok("200 seeded graphs, n in 1..=12".into())
    })
}

/// Burning the line graph costs at most one step either way, with both
/// extremes realized.
pub fn edge_burning_within_one(cfg: &SuiteConfig) -> CriterionResult {
    run("edge_burning_within_one", || {
        let corpus = corpus_connected(120, 2, 12, cfg.seed ^ 0x03);
        let mut deltas = corpus
            .par_iter()
            .enumerate()
            .map(|(i, g)| {
                let b = exact(g, cfg.budget)?;
                let r = ck(edge_burning_number(g, cfg.budget))?;
                let bl = r
                    .solved
                    .outcome
                    .exact()
                    .ok_or_else(|| format!("graph {i}: line solve exhausted"))?;
                ensure(b.saturating_sub(1) <= bl && bl <= b + 1, || {
                    format!("graph {i}: b={b} but line value {bl}")
                })?;
                Ok(bl as isize - b as isize)
            })
            .collect::<Check<Vec<isize>>>()?;
        // Named extremes: a long path loses a step, a big clique gains one.
        let p5 = ck(generate::path(5))?;
        let low = ck(edge_burning_number(&p5, cfg.budget))?.solved.outcome.exact();
        ensure(low == Some(2) && exact(&p5, cfg.budget)? == 3, || "P5 extreme broke".into())?;
        let k5 = ck(generate::complete(5))?;
        let high = ck(edge_burning_number(&k5, cfg.budget))?.solved.outcome.exact();
        ensure(high == Some(3) && exact(&k5, cfg.budget)? == 2, || "K5 extreme broke".into())?;
        deltas.sort_unstable();
        deltas.dedup();
        Ok(format!("120 graphs, deltas seen {deltas:?} plus both extremes"))
    })
}

/// On trees the line graph never burns slower than the tree itself.
pub fn tree_edge_burning_at_most_vertex(cfg: &SuiteConfig) -> CriterionResult {
    run("tree_edge_burning_at_most_vertex", || {
        let corpus = corpus_trees(120, 2, 14, cfg.seed ^ 0x04);
        corpus.par_iter().enumerate().try_for_each(|(i, g)| {
            let b = exact(g, cfg.budget)?;
            let bl = ck(edge_burning_number(g, cfg.budget))?
                .solved
                .outcome
                .exact()
                .ok_or_else(|| format!("tree {i}: line solve exhausted"))?;
            ensure(bl <= b, || format!("tree {i}: line value {bl} above vertex value {b}"))
        })?;
        Ok("120 seeded trees, n in 2..=14".into())
    })
}

/// The total graph burns no faster than the graph and at most one step
/// slower.
pub fn total_burning_sandwich(cfg: &SuiteConfig) -> CriterionResult {
    run("total_burning_sandwich", || {
        let corpus = corpus_connected(120, 1, 10, cfg.seed ^ 0x05);
        corpus.par_iter().enumerate().try_for_each(|(i, g)| {
            let b = exact(g, cfg.budget)?;
            let bt = ck(total_burning_number(g, cfg.budget))?
                .solved
                .outcome
                .exact()
                .ok_or_else(|| format!("graph {i}: total solve exhausted"))?;
            ensure(b <= bt && bt <= b + 1, || format!("graph {i}: b={b}, total {bt}"))
        })?;
        Ok("120 seeded graphs, n in 1..=10".into())
    })
}

/// Hanging a pendant on every vertex makes the total graph cost exactly
/// one extra step.
pub fn spiked_total_equals_plus_one(cfg: &SuiteConfig) -> CriterionResult {
    run("spiked_total_equals_plus_one", || {
        let corpus = corpus_connected(60, 1, 7, cfg.seed ^ 0x06);
        corpus.par_iter().enumerate().try_for_each(|(i, g)| {
            let b = exact(g, cfg.budget)?;
            let (sp, _) = ck(spike_graph(g))?;
            let bst = ck(total_burning_number(&sp, cfg.budget))?
                .solved
                .outcome
                .exact()
                .ok_or_else(|| format!("graph {i}: spiked total solve exhausted"))?;
            ensure(bst == b + 1, || format!("graph {i}: b={b} but spiked total {bst}"))
        })?;
        Ok("60 seeded graphs, n in 1..=7".into())
    })
}

/// All four transports re-validate at their stated horizons for every
/// exact witness, under both choosers.
pub fn sequence_transforms_sound(cfg: &SuiteConfig) -> CriterionResult {
    run("sequence_transforms_sound", || {
        let line_corpus = corpus_connected(120, 2, 12, cfg.seed ^ 0x03);
        line_corpus.par_iter().enumerate().try_for_each(|(i, g)| -> Check<()> {
            let (k, w) = exact_with_witness(g, cfg.budget)?;
            let (lg, _) = ck(line_graph(g))?;
            let (kl, wl) = exact_with_witness(&lg, cfg.budget)?;
            for seed in [None, Some(cfg.seed ^ i as u64)] {
                let mut chooser = seed.map_or(Chooser::lowest(), Chooser::seeded);
                let up = ck(line_seq_from_vertex_seq(g, &w, &mut chooser))?;
                ensure(up.horizon() == k + 1, || format!("graph {i}: line lift horizon"))?;
                ensure(ck(validate(&lg, &up))?, || format!("graph {i}: line lift invalid"))?;
                let down = ck(vertex_seq_from_line_seq(g, &wl, &mut chooser))?;
                ensure(down.horizon() == kl + 1, || format!("graph {i}: line drop horizon"))?;
                ensure(ck(validate(g, &down))?, || format!("graph {i}: line drop invalid"))?;
            }
            Ok(())
        })?;
        let total_corpus = corpus_connected(120, 1, 10, cfg.seed ^ 0x05);
        total_corpus.par_iter().enumerate().try_for_each(|(i, g)| -> Check<()> {
            let (k, w) = exact_with_witness(g, cfg.budget)?;
            let (tg, _) = ck(total_graph(g))?;
            let (kt, wt) = exact_with_witness(&tg, cfg.budget)?;
            for seed in [None, Some(cfg.seed ^ i as u64)] {
                let mut chooser = seed.map_or(Chooser::lowest(), Chooser::seeded);
                let up = ck(total_seq_from_vertex_seq(g, &w, &mut chooser))?;
                ensure(up.horizon() == k + 1, || format!("graph {i}: total lift horizon"))?;
                ensure(ck(validate(&tg, &up))?, || format!("graph {i}: total lift invalid"))?;
                let down = ck(vertex_seq_from_total_seq(g, &wt, &mut chooser))?;
                ensure(down.horizon() == kt, || format!("graph {i}: total drop horizon"))?;
                ensure(ck(validate(g, &down))?, || format!("graph {i}: total drop invalid"))?;
            }
            Ok(())
        })?;
        Ok("240 graphs x 4 transports x 2 choosers".into())
    })
}

/// Graphs without an induced k-vertex path burn within ceil((k+1)/2)
/// steps via the dominating-set recursion; graphs with the path are
/// rejected.
pub fn path_free_recursion_bound(cfg: &SuiteConfig) -> CriterionResult {
    run("path_free_recursion_bound", || {
        let corpus = corpus_connected(80, 2, 14, cfg.seed ^ 0x08);
        let applied: usize = corpus
            .par_iter()
            .enumerate()
            .map(|(i, g)| {
                let mut used = 0usize;
                for k in 4..=8usize {
                    let found = longest_induced_path(g, k);
                    if found >= k {
                        ensure(pkfree_sequence(g, k).is_err(), || {
                            format!("graph {i}: k={k} accepted despite induced path")
                        })?;
                        continue;
                    }
                    let seq = ck(pkfree_sequence(g, k))?;
                    ensure(ck(validate(g, &seq))?, || format!("graph {i}: k={k} invalid"))?;
                    ensure(seq.horizon() <= pkfree_horizon_bound(k), || {
                        format!("graph {i}: k={k} horizon {}", seq.horizon())
                    })?;
                    used += 1;
                }
                Ok(used)
            })
            .collect::<Check<Vec<usize>>>()?
            .into_iter()
            .sum();
        ensure(applied > 0, || "corpus never exercised the recursion".into())?;

        // Tightness: the pendant biclique is 6-path-free, burns in 4
        // exactly; spiders are (2r)-path-free and burn in exactly r.
        let gt = ck(generate::pendant_biclique(4))?;
        let seq = ck(pkfree_sequence(&gt, 6))?;
        ensure(seq.horizon() == 4 && exact(&gt, cfg.budget)? == 4, || {
            "pendant biclique tightness broke".into()
        })?;
        for r in [3usize, 4] {
            let sp = ck(generate::spider(r))?;
            ensure(longest_induced_path(&sp, 2 * r) == 2 * r - 1, || {
                format!("spider {r}: unexpected induced path length")
            })?;
            let seq = ck(pkfree_sequence(&sp, 2 * r))?;
            ensure(seq.horizon() <= r + 1 && exact(&sp, cfg.budget)? == r, || {
                format!("spider {r}: horizon {} vs exact", seq.horizon())
            })?;
        }
        Ok(format!("{applied} corpus applications plus tight families"))
    })
}

const GADGET_INSTANCES: [[u64; 3]; 4] = [[4, 5, 6], [5, 6, 7], [6, 7, 8], [7, 8, 9]];

fn check_gadget_instance(elements: &[u64], expect_interval_rule: bool) -> Check<usize> {
    let inst = ck(ThreePartitionInstance::new(elements.to_vec()))?;
    let partition =
        solve_distinct_3partition(&inst).ok_or_else(|| format!("{elements:?}: no partition"))?;
    let (g, meta) = ck(build_gadget(&inst))?;
    let k = 2 * meta.m + 1;
    ensure(meta.spine_len == k * k, || format!("{elements:?}: spine {}", meta.spine_len))?;

    let report = verify_gadget_structure(&g, &meta);
    ensure(report.all_pass(), || format!("{elements:?}: structure {report:?}"))?;

    let seq = ck(certificate_sequence(&inst, &partition, &meta))?;
    ensure(seq.horizon() == k && seq.len() == k, || format!("{elements:?}: certificate shape"))?;
    ensure(ck(validate(&g, &seq))?, || format!("{elements:?}: certificate invalid"))?;

    let b = ck(bounds(&g, true))?;
    ensure(b.lower == k, || format!("{elements:?}: lower bound {} vs {k}", b.lower))?;
    let rule_ok = if expect_interval_rule {
        b.lower_rule == LowerRule::IntervalDiameter
    } else {
        b.lower_rule == LowerRule::BallCounting
    };
    ensure(rule_ok, || format!("{elements:?}: lower rule {:?}", b.lower_rule))?;

    let (tree, _map) = ck(caterpillar_preimage(&g, &meta))?;
    ensure(tree.is_tree() && (0..tree.n()).all(|v| tree.degree(v) <= 3), || {
        format!("{elements:?}: preimage not a caterpillar")
    })?;
    Ok(g.n())
}

/// Yes-instances produce gadgets whose structure verifies, whose
/// certificate meets the certified lower bound (so the burning number is
/// exactly 2m+1), and which are line graphs of caterpillars; malformed
/// and unsolvable instances are told apart.
pub fn hardness_gadget_structure(_cfg: &SuiteConfig) -> CriterionResult {
    run("hardness_gadget_structure", || {
        let sizes = GADGET_INSTANCES
            .par_iter()
            .map(|e| check_gadget_instance(e, false))
            .collect::<Check<Vec<usize>>>()?;
        // Large showcase instance: the ball-counting bound falls short
        // there, the interval-diameter bound takes over.
        let showcase = check_gadget_instance(&[10, 11, 12, 14, 15, 16], true)?;

        ensure(ThreePartitionInstance::new(vec![4, 5, 7]).is_err(), || {
            "malformed instance accepted".into()
        })?;
        let odd = ck(ThreePartitionInstance::new(vec![19, 21, 23, 25, 27, 29]))?;
        ensure(solve_distinct_3partition(&odd).is_none(), || {
            "parity-blocked instance reported solvable".into()
        })?;
        Ok(format!("gadget sizes {sizes:?} and showcase n={showcase}"))
    })
}

/// For verified interval models the burning number sits within the
/// diameter square-root window.
pub fn interval_diameter_bounds(cfg: &SuiteConfig) -> CriterionResult {
    run("interval_diameter_bounds", || {
        let mut cases: Vec<(Graph, crate::interval::IntervalModel, bool)> = Vec::new();
        for n in 1..=14usize {
            let g = ck(generate::path(n))?;
            let model = crate::interval::IntervalModel {
                intervals: (0..n as i64).map(|i| (i, i + 1)).collect(),
            };
            cases.push((g, model, true));
        }
        for (i, spine) in (4..=10usize).enumerate() {
            let seed = cfg.seed ^ 0x0A ^ (i as u64) << 8;
            let all: Vec<usize> = (0..spine - 1).collect();
            let teeth: Vec<usize> =
                all.into_iter().filter(|p| (seed >> (p % 60)) & 1 == 1).collect();
            let (g, model) = ck(generate::comb(spine, &teeth))?;
            cases.push((g, model, true));
        }
        for i in 0..20u64 {
            let n = 3 + (i as usize) % 12;
            let (g, model) = ck(generate::random_caterpillar(n, cfg.seed ^ 0x0A0A ^ i))?;
            cases.push((g, model, false));
        }

        cases.par_iter().enumerate().try_for_each(|(i, (g, model, proper))| {
            ensure(ck(verify_interval_model(g, model, *proper))?, || {
                format!("case {i}: model does not realize the graph")
            })?;
            let d = ck(crate::distance::diameter(g))?;
            let b = exact(g, cfg.budget)?;
            let root = ceil_sqrt(d + 1);
            ensure(root <= b && b <= root + 1, || {
                format!("case {i}: diameter {d}, burning {b}")
            })?;
            let certified = ck(bounds(g, true))?;
            ensure(certified.lower <= b && b <= certified.upper, || {
                format!("case {i}: bounds {certified:?} miss {b}")
            })
        })?;
        Ok(format!("{} interval-certified graphs", cases.len()))
    })
}

/// Spot check of the square-root conjecture: every connected graph seen
/// here with n <= 12 burns within ceil(sqrt(n)).
pub fn square_root_conjecture_spot_check(cfg: &SuiteConfig) -> CriterionResult {
    run("square_root_conjecture_spot_check", || {
        let mut corpus = corpus_connected(200, 1, 12, cfg.seed ^ 0x02);
        corpus.extend(corpus_connected(120, 2, 12, cfg.seed ^ 0x03));
        for n in 1..=12usize {
            corpus.push(ck(generate::path(n))?);
            if n >= 3 {
                corpus.push(ck(generate::cycle(n))?);
            }
        }
        corpus.push(ck(generate::star(11))?);
        corpus.push(ck(generate::complete(12))?);
        corpus.push(ck(generate::spider(3))?);
        let count = corpus.len();
        corpus.par_iter().enumerate().try_for_each(|(i, g)| {
            let b = exact(g, cfg.budget)?;
            ensure(b <= ceil_sqrt(g.n()), || {
                format!("graph {i} (n={}): burning number {b}", g.n())
            })
        })?;
        Ok(format!("{count} connected graphs within the square-root cap"))
    })
}

/// Every criterion in order.
pub fn run_all(cfg: &SuiteConfig) -> Vec<CriterionResult> {
    vec![
        path_cycle_square_root_law(cfg),
        solver_matches_oracle(cfg),
        edge_burning_within_one(cfg),
        tree_edge_burning_at_most_vertex(cfg),
        total_burning_sandwich(cfg),
        spiked_total_equals_plus_one(cfg),
        sequence_transforms_sound(cfg),
        path_free_recursion_bound(cfg),
        hardness_gadget_structure(cfg),
        interval_diameter_bounds(cfg),
        square_root_conjecture_spot_check(cfg),
    ]
}
