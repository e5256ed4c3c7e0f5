//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the process
//! exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use domgray::generators::{
    all_labeled_trees, cycle, cycle_with_pendant_paths, path, tree_from_prufer,
};
use domgray::lifting::{compute_j, lift};
use domgray::oracle::count_dominating_sets;
use domgray::{
    brgc, brute_force_hamilton_path, build_dominating_graph, filter_circular, hamilton_path_auto,
    hamilton_path_cycle, hamilton_path_tree, reduce_tree_to_base, verify_hamilton_path, Budget,
    CycleOutcome, Graph, HamPath, Method, Outcome, Reduction, SearchOptions, SearchOutcome,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5_eedd_09a7;

/// Order of `D(C_5)` obtained by deleting non-dominating strings from the
/// reflected Gray code, read column by column.
const C5_LISTING: [&str; 21] = [
    "00111", "00101", //
    "01101", "01111", "01110", "01010", "01011", "01001", //
    "11001", "11011", "11010", "11110", "11111", "11101", "11100", //
    "10100", "10101", "10111", "10110", "10010", "10011",
];

/// Parity-class tallies for every dominating graph built in criteria 1-4.
#[derive(Default)]
struct ParityTally {
    graphs: usize,
    equal_classes: Vec<String>,
}

impl ParityTally {
    fn record(&mut self, g: &Graph) -> Result<(), String> {
        let dg = build_dominating_graph(g).map_err(|e| e.to_string())?;
        let (even, odd) = dg.parity_classes();
        self.graphs += 1;
        if even == odd {
            self.equal_classes.push(format!("{:?}", g.to_document()));
        }
        Ok(())
    }
}

type Outcome1 = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    if n <= 2 {
        return path(n);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    tree_from_prufer(&seq).expect("valid Prüfer sequence")
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid graph")
}

/// Trees used by criteria 1 and 5: every labeled tree on up to 7 vertices and
/// 500 random trees for each size 8..=14.
fn criterion_trees() -> impl Iterator<Item = Graph> {
    let exhaustive = (1..=7).flat_map(all_labeled_trees);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let random = (8..=14).flat_map(move |n| {
        (0..500)
            .map(|_| random_tree(&mut rng, n))
            .collect::<Vec<_>>()
    });
    exhaustive.chain(random)
}

fn check_path(g: &Graph, p: &HamPath, what: &str) -> Result<(), String> {
    let report = verify_hamilton_path(g, p);
    ensure(report.passed(), || {
        format!(
            "{what}: verification failed on {:?}: {report:?}",
            g.to_document()
        )
    })
}

fn tree_theorem(tally: &mut ParityTally) -> Outcome1 {
    let start = Instant::now();
    let mut count = 0;
    for t in criterion_trees() {
        let p = hamilton_path_tree(&t).map_err(|e| e.to_string())?;
        check_path(&t, &p, "tree")?;
        tally.record(&t)?;
        count += 1;
    }
    let elapsed = start.elapsed();
    ensure(
        count == 1 + 1 + 3 + 16 + 125 + 1296 + 16807 + 7 * 500,
        || format!("unexpected tree count {count}"),
    )?;
    ensure(elapsed < Duration::from_secs(120), || {
        format!("took {elapsed:?}, limit 120s")
    })?;
    Ok(format!("{count} trees verified in {elapsed:.2?}"))
}

fn cycle_positive(tally: &mut ParityTally) -> Outcome1 {
    let start = Instant::now();
    for n in [3, 5, 6, 7, 9, 10, 11, 13, 14, 15, 17, 18] {
        let CycleOutcome::Path(p) = hamilton_path_cycle(n).map_err(|e| e.to_string())? else {
            return Err(format!("n={n}: reported non-existent"));
        };
        check_path(&cycle(n), &p, &format!("C_{n}"))?;
        tally.record(&cycle(n))?;
    }
    let CycleOutcome::Path(p5) = hamilton_path_cycle(5).map_err(|e| e.to_string())? else {
        return Err("n=5: reported non-existent".into());
    };
    let expected: String = C5_LISTING.iter().map(|s| format!("{s}\n")).collect();
    ensure(p5.to_binary_lines(5) == expected, || {
        format!("C_5 listing differs:\n{}", p5.to_binary_lines(5))
    })?;
    Ok(format!(
        "12 cycle lengths verified, C_5 listing matches, {:.2?}",
        start.elapsed()
    ))
}

fn cycle_negative() -> Outcome1 {
    for n in [4, 8, 12] {
        let filtered: HamPath = filter_circular(brgc(n).map_err(|e| e.to_string())?)
            .map(|s| s.set())
            .collect();
        ensure(filtered.first_non_gray_step().is_some(), || {
            format!("n={n}: filtered sequence unexpectedly has the single-bit property")
        })?;
        ensure(
            hamilton_path_cycle(n).map_err(|e| e.to_string())? == CycleOutcome::NonExistent,
            || format!("n={n}: expected NonExistent"),
        )?;
    }
    let start = Instant::now();
    let dg = build_dominating_graph(&cycle(4)).map_err(|e| e.to_string())?;
    ensure(dg.node_count() == 11, || {
        format!("D(C_4) has {} nodes", dg.node_count())
    })?;
    let pruned = brute_force_hamilton_path(&dg, SearchOptions::default());
    ensure(matches!(pruned, SearchOutcome::NotExists { .. }), || {
        format!("D(C_4) pruned search returned {pruned:?}")
    })?;
    // Plain backtracking, so non-existence does not rest on the pruning rules.
    let outcome = brute_force_hamilton_path(&dg, SearchOptions::plain(u64::MAX));
    let elapsed = start.elapsed();
    let SearchOutcome::NotExists { explored } = outcome else {
        return Err(format!("D(C_4) search returned {outcome:?}"));
    };
    ensure(elapsed < Duration::from_secs(1), || {
        format!("D(C_4) search took {elapsed:?}")
    })?;
    Ok(format!(
        "n=4,8,12 break the single-bit property; D(C_4) NotExists after {explored} unpruned expansions in {elapsed:.2?}"
    ))
}

fn cycle_negative_c8() -> Outcome1 {
    let dg = build_dominating_graph(&cycle(8)).map_err(|e| e.to_string())?;
    ensure(dg.node_count() == 131, || {
        format!("{} nodes", dg.node_count())
    })?;
    let start = Instant::now();
    // Settled by the parity classes (67 even, 64 odd) before any expansion.
    match brute_force_hamilton_path(&dg, SearchOptions::with_budget(u64::MAX)) {
        SearchOutcome::NotExists { explored } => Ok(format!(
            "parity classes settle D(C_8) after {explored} expansions in {:.2?}",
            start.elapsed()
        )),
        other => Err(format!("D(C_8) search returned {other:?}")),
    }
}

/// Every graph on `n` labeled vertices, one per edge subset of `K_n`.
fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let k = pairs.len();
    (0u32..(1 << k)).map(move |mask| {
        let edges: Vec<_> = (0..k)
            .filter(|b| mask & (1 << b) != 0)
            .map(|b| pairs[b])
            .collect();
        Graph::from_edges(n, &edges).expect("valid graph")
    })
}

fn brouwer_parity(tally: &mut ParityTally) -> Outcome1 {
    let start = Instant::now();
    let mut connected = 0;
    for n in 1..=6 {
        for g in all_graphs(n).filter(Graph::is_connected) {
            let count = count_dominating_sets(&g).map_err(|e| e.to_string())?;
            ensure(count % 2 == 1, || {
                format!("even count {count} for {:?}", g.to_document())
            })?;
            tally.record(&g)?;
            connected += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=12);
        let g = random_graph(&mut rng, n);
        let count = count_dominating_sets(&g).map_err(|e| e.to_string())?;
        ensure(count % 2 == 1, || {
            format!("even count {count} for {:?}", g.to_document())
        })?;
        tally.record(&g)?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}, limit 60s")
    })?;
    Ok(format!(
        "{connected} connected graphs (n<=6) and 1000 random graphs (n<=12) have odd counts, {elapsed:.2?}"
    ))
}

fn exact_counts() -> Outcome1 {
    let count = |g: &Graph| count_dominating_sets(g).map_err(|e| e.to_string());
    let paths: Vec<usize> = (1..=5).map(|n| count(&path(n))).collect::<Result<_, _>>()?;
    ensure(paths == [1, 3, 5, 9, 17], || {
        format!("|D(P_n)| = {paths:?}")
    })?;
    let cycles: Vec<usize> = (3..=8)
        .map(|n| count(&cycle(n)))
        .collect::<Result<_, _>>()?;
    ensure(cycles == [7, 11, 21, 39, 71, 131], || {
        format!("|D(C_n)| = {cycles:?}")
    })?;
    for n in 1..=5 {
        let p = hamilton_path_tree(&path(n)).map_err(|e| e.to_string())?;
        ensure(p.len() == paths[n - 1], || {
            format!("P_{n}: constructed path has {} steps", p.len())
        })?;
    }

    let mut op2_steps = 0;
    for t in criterion_trees() {
        let trace = reduce_tree_to_base(&t).map_err(|e| e.to_string())?;
        for (i, step) in trace.steps().iter().enumerate() {
            let Reduction::OpII { u, .. } = step.reduction else {
                continue;
            };
            let before = trace.graph_before(i);
            let j = compute_j(&step.graph, u).map_err(|e| e.to_string())?;
            let lhs = count(before)?;
            let rhs = 3 * count(&step.graph)? + 2 * j.len();
            ensure(lhs == rhs, || {
                format!(
                    "count law fails on {:?}: {lhs} != {rhs}",
                    before.to_document()
                )
            })?;
            op2_steps += 1;
        }
    }
    Ok(format!(
        "P_1..P_5 = {paths:?}, C_3..C_8 = {cycles:?}, count law holds on {op2_steps} Operation II steps"
    ))
}

fn all_valid_reductions(g: &Graph) -> Vec<Reduction> {
    let act: Vec<usize> = g.active().iter().collect();
    let mut out = Vec::new();
    for &a in &act {
        for &b in &act {
            for &c in &act {
                for r in [
                    Reduction::OpI { u: a, v: b, x: c },
                    Reduction::OpII { u: a, v: b, w: c },
                ] {
                    if r.validate(g).is_ok() {
                        out.push(r);
                    }
                }
            }
        }
    }
    out
}

fn lifting_in_isolation() -> Outcome1 {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    let mut ops = [0usize; 2];
    for _ in 0..200 {
        let n = rng.gen_range(3..=10);
        let h = random_tree(&mut rng, n);
        let candidates = all_valid_reductions(&h);
        ensure(!candidates.is_empty(), || {
            format!("no reduction in {:?}", h.to_document())
        })?;
        let r = candidates[rng.gen_range(0..candidates.len())];
        let hprime = r.apply(&h).map_err(|e| e.to_string())?;
        let dg = build_dominating_graph(&hprime).map_err(|e| e.to_string())?;
        let SearchOutcome::Found { path: seed, .. } =
            brute_force_hamilton_path(&dg, SearchOptions::default())
        else {
            return Err(format!(
                "no path found for D(H') of {:?}",
                hprime.to_document()
            ));
        };
        check_path(&hprime, &seed, "oracle seed")?;
        let lifted = lift(&seed, &h, r, domgray::DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
        check_path(&h, &lifted, &format!("lift of {r:?}"))?;
        ops[usize::from(matches!(r, Reduction::OpII { .. }))] += 1;
    }
    Ok(format!(
        "200 instances verified ({} Operation I, {} Operation II)",
        ops[0], ops[1]
    ))
}

fn unicyclic_construction() -> Outcome1 {
    let mut graphs = 0;
    for m in [3, 5, 6, 7] {
        for mask in 0u32..(1 << m) {
            let attach: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
            let g = cycle_with_pendant_paths(m, &attach).map_err(|e| e.to_string())?;
            let out = hamilton_path_auto(&g, Budget::default()).map_err(|e| e.to_string())?;
            let expected = if attach.is_empty() {
                Method::Cycle
            } else {
                Method::Unicyclic
            };
            let Outcome::Path { path, method } = out else {
                return Err(format!("m={m}, attach={attach:?}: {out:?}"));
            };
            ensure(method == expected, || {
                format!("m={m}, attach={attach:?}: routed to {method}")
            })?;
            check_path(&g, &path, &format!("C_{m} with pendants at {attach:?}"))?;
            graphs += 1;
        }
    }
    Ok(format!("{graphs} unicyclic graphs verified"))
}

fn no_hamilton_cycle(tally: &ParityTally) -> Outcome1 {
    ensure(tally.graphs > 0, || "no graphs recorded".into())?;
    ensure(tally.equal_classes.is_empty(), || {
        format!("equal parity classes in {:?}", tally.equal_classes)
    })?;
    Ok(format!(
        "{} dominating graphs from criteria 1-4 have unequal parity classes",
        tally.graphs
    ))
}

fn run(id: &str, name: &str, f: impl FnOnce() -> Outcome1) -> bool {
    let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".to_string()));
    match result {
        Ok(detail) => {
            println!("[PASS] {id} {name}: {detail}");
            true
        }
        Err(detail) => {
            println!("[FAIL] {id} {name}: {detail}");
            false
        }
    }
}

fn main() -> ExitCode {
    let mut tally = ParityTally::default();
    let mut ok = true;
    ok &= run("1", "tree theorem", || tree_theorem(&mut tally));
    ok &= run("2", "cycle theorem, positive direction", || {
        cycle_positive(&mut tally)
    });
    ok &= run("3", "cycle theorem, negative direction", cycle_negative);
    ok &= run("3b", "D(C_8) has no Hamilton path", cycle_negative_c8);
    ok &= run("4", "odd number of dominating sets", || {
        brouwer_parity(&mut tally)
    });
    ok &= run("5", "exact counts", exact_counts);
    ok &= run("6", "lifting soundness in isolation", lifting_in_isolation);
    ok &= run("7", "unicyclic construction", unicyclic_construction);
    ok &= run("8", "no Hamilton cycle", || no_hamilton_cycle(&tally));
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
