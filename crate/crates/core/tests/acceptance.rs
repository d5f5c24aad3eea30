//! Acceptance suite: runs every acceptance criterion and prints one
//! PASS/FAIL line per criterion. Exits non-zero if any criterion fails.

use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use bcpc::cli::{verify_graph, Algorithm, VerifyReport};
use bcpc::gen::{blocks_chain, random_graph, write_graph};
use bcpc::oracle::{oracle_maximal_bicliques, OracleLimits};
use bcpc::{enumerate_maximal_bicliques, parse_edge_list, Biclique, BipartiteGraph, MbeOptions, VertexOrder};

const MIDDLE: &str = "1 1\n1 2\n1 3\n2 1\n2 2\n2 3\n2 4\n3 2\n3 3\n3 4\n";
const PROBS: [f64; 3] = [0.2, 0.4, 0.6];
const INSTANCES: u64 = 210;

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { passed: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { passed: false, detail: detail.into() }
}

/// Seeded random graphs with sides between 2 and 10.
fn instances() -> Vec<(u64, BipartiteGraph)> {
    (0..INSTANCES)
        .map(|seed| {
            let n_u = 2 + (seed % 9) as usize;
            let n_v = 2 + ((seed / 9) % 9) as usize;
            let p = PROBS[(seed % 3) as usize];
            (seed, random_graph(n_u, n_v, p, 0xACCE_0000 + seed))
        })
        .collect()
}

/// One verification report per instance and threshold pair.
struct Sweep {
    reports: Vec<(u64, usize, usize, VerifyReport)>,
    elapsed: Duration,
}

fn sweep(graphs: &[(u64, BipartiteGraph)]) -> Sweep {
    let start = Instant::now();
    let limits = OracleLimits::default();
    let mut reports = Vec::new();
    for (seed, g) in graphs {
        for alpha in 1..=3 {
            for beta in 1..=3 {
                let report = verify_graph(g, alpha, beta, &limits).expect("instance within oracle limits");
                reports.push((*seed, alpha, beta, report));
            }
        }
    }
    Sweep { reports, elapsed: start.elapsed() }
}

fn first_failing(sweep: &Sweep, select: impl Fn(&str) -> bool) -> Option<String> {
    for (seed, a, b, report) in &sweep.reports {
        for c in &report.checks {
            if select(&c.name) && !c.passed {
                return Some(format!("seed {seed} ({a},{b}) {}: {}", c.name, c.detail));
            }
        }
    }
    None
}

fn criterion_oracle_equivalence(sweep: &Sweep) -> Outcome {
    let runs = sweep.reports.len();
    if let Some(why) = first_failing(sweep, |n| n.ends_with("matches oracle")) {
        return fail(why);
    }
    let secs = sweep.elapsed.as_secs_f64();
    let detail = format!("{INSTANCES} graphs x 9 threshold pairs = {runs} runs, six algorithms each, {secs:.1}s");
    if secs < 60.0 {
        pass(detail)
    } else {
        fail(format!("{detail} (over the 60s budget)"))
    }
}

fn criterion_worked_example() -> Outcome {
    let g = parse_edge_list(MIDDLE, false).unwrap();
    let b1 = Biclique::new(vec![0, 1], vec![0, 1, 2]);
    let b2 = Biclique::new(vec![0, 1, 2], vec![1, 2]);
    let b3 = Biclique::new(vec![1, 2], vec![1, 2, 3]);
    let mut expect = vec![b1, b2, b3];
    expect.sort();
    for algo in Algorithm::ALL {
        let r = algo.run(&g, 2, 2);
        if r.partition() != vec![expect.clone()] {
            return fail(format!("{}: got {:?}", algo.name(), r.partition()));
        }
        if r.stats.n_biclique != 4 || r.stats.filtered != 3 {
            return fail(format!("{}: {} maximal, {} filtered", algo.name(), r.stats.n_biclique, r.stats.filtered));
        }
        let line = r.to_community_file(&g);
        if line != "1,2 | 1,2,3 ; 1,2,3 | 2,3 ; 2,3 | 2,3,4\n" {
            return fail(format!("{}: community file {line:?}", algo.name()));
        }
    }
    pass("one community {B1,B2,B3} from all six algorithms; ({u2},{v1..v4}) filtered out")
}

fn criterion_count_chain(sweep: &Sweep) -> Outcome {
    match first_failing(sweep, |n| n == "count chain") {
        Some(why) => fail(why),
        None => pass(format!("n_biclique >= pbcpc >= pbcpc_plus >= bcpc on {} runs", sweep.reports.len())),
    }
}

fn criterion_node_order(sweep: &Sweep) -> Outcome {
    match first_failing(sweep, |n| n == "tree node order") {
        Some(why) => fail(why),
        None => pass(format!("ab-p <= ab-m <= ab on {} runs", sweep.reports.len())),
    }
}

fn criterion_ab_counts(sweep: &Sweep) -> Outcome {
    if let Some(why) = first_failing(sweep, |n| n == "(α,β)-biclique count") {
        return fail(why);
    }
    let skipped = sweep
        .reports
        .iter()
        .flat_map(|r| &r.3.checks)
        .filter(|c| c.name == "(α,β)-biclique count" && c.detail.starts_with("skipped"))
        .count();
    if skipped > 0 {
        return fail(format!("{skipped} runs skipped the oracle count"));
    }
    let g = parse_edge_list(MIDDLE, false).unwrap();
    let n = bcpc::abenum::count_ab(&g, 2, 2);
    if n != 7 {
        return fail(format!("middle subgraph at (2,2): {n} instead of 7"));
    }
    pass(format!("matches the oracle on {} runs; middle subgraph at (2,2) has 7", sweep.reports.len()))
}

fn median_ms(mut f: impl FnMut()) -> f64 {
    let mut times: Vec<f64> = (0..5)
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed().as_secs_f64() * 1e3
        })
        .collect();
    times.sort_by(f64::total_cmp);
    times[times.len() / 2]
}

fn criterion_pruning_efficacy() -> Outcome {
    let g = blocks_chain(200, 6, 2);
    let basic = bcpc::detect_ab_basic(&g, 2, 2);
    let pruned = bcpc::detect_ab_p(&g, 2, 2);
    let mbag = bcpc::detect_mbag(&g, 2, 2);
    if pruned.partition() != mbag.partition() || basic.partition() != mbag.partition() {
        return fail("partitions differ on the block chain");
    }
    let n_basic = basic.stats.tree_nodes.unwrap();
    let n_pruned = pruned.stats.tree_nodes.unwrap();
    let ratio = n_basic as f64 / n_pruned as f64;
    let t_mbag = median_ms(|| drop(bcpc::detect_mbag(&g, 2, 2)));
    let t_pruned = median_ms(|| drop(bcpc::detect_ab_p(&g, 2, 2)));
    let detail = format!(
        "tree_nodes ab {n_basic} / ab-p {n_pruned} = {ratio:.1} (need >= 100); \
         wall ab-p {t_pruned:.1} ms vs mbag {t_mbag:.1} ms = {:.2}x (need <= 0.2x)",
        t_pruned / t_mbag
    );
    if ratio >= 100.0 && t_pruned * 5.0 <= t_mbag {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn criterion_determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let mut inputs = Vec::new();
    let middle = dir.path().join("middle.txt");
    fs::write(&middle, MIDDLE).unwrap();
    inputs.push(middle);
    let empty = dir.path().join("empty.txt");
    fs::write(&empty, "").unwrap();
    inputs.push(empty);
    let chain = dir.path().join("chain.txt");
    write_graph(&blocks_chain(6, 4, 1), fs::File::create(&chain).unwrap()).unwrap();
    inputs.push(chain);
    for seed in 0..7u64 {
        let path = dir.path().join(format!("random{seed}.txt"));
        write_graph(&random_graph(9, 8, PROBS[seed as usize % 3], 77 + seed), fs::File::create(&path).unwrap()).unwrap();
        inputs.push(path);
    }

    let exe = env!("CARGO_BIN_EXE_bcpc");
    let mut runs = 0;
    for input in &inputs {
        for algo in Algorithm::ALL {
            let mut seen: Option<(Vec<u8>, String)> = None;
            for rep in 0..3 {
                let out = dir.path().join(format!("out{rep}.txt"));
                let stats = dir.path().join(format!("stats{rep}.json"));
                let status = Command::new(exe)
                    .args(["detect", "--algo", algo.name(), "--alpha", "2", "--beta", "2", "--input"])
                    .arg(input)
                    .arg("--output")
                    .arg(&out)
                    .arg("--stats")
                    .arg(&stats)
                    .status()
                    .unwrap();
                if !status.success() {
                    return fail(format!("{} on {} exited with {status}", algo.name(), input.display()));
                }
                runs += 1;
                let communities = fs::read(&out).unwrap();
                let counters: String = fs::read_to_string(&stats)
                    .unwrap()
                    .lines()
                    .filter(|l| !l.contains("\"wall_ms\""))
                    .collect();
                match &seen {
                    None => seen = Some((communities, counters)),
                    Some((c, s)) if *c == communities && *s == counters => {}
                    Some(_) => return fail(format!("{} on {} differs between runs", algo.name(), input.display())),
                }
            }
        }
    }
    pass(format!(
        "{runs} detect runs over {} inputs; community files and counters byte-identical",
        inputs.len()
    ))
}

fn criterion_mbe(graphs: &[(u64, BipartiteGraph)]) -> Outcome {
    let limits = OracleLimits::default();
    let mut runs = 0;
    for (seed, g) in graphs {
        let expect = oracle_maximal_bicliques(g, &limits).unwrap();
        for pivot in [true, false] {
            for order in [VertexOrder::TwoHop, VertexOrder::ReversedTwoHop] {
                let opts = MbeOptions { pivot, order: order.clone(), ..Default::default() };
                let mut got = enumerate_maximal_bicliques(g, &opts).bicliques().to_vec();
                got.sort();
                runs += 1;
                if got != expect {
                    return fail(format!("seed {seed}, pivot {pivot}, order {order:?}"));
                }
            }
        }
    }
    pass(format!("{runs} enumerations equal the oracle (pivot on/off, forward/reversed order)"))
}

fn main() {
    let graphs = instances();
    let sweep = sweep(&graphs);
    let results = [
        ("1 oracle equivalence", criterion_oracle_equivalence(&sweep)),
        ("2 worked example", criterion_worked_example()),
        ("3 count chain", criterion_count_chain(&sweep)),
        ("4 enumeration-node ordering", criterion_node_order(&sweep)),
        ("5 (α,β)-biclique counts", criterion_ab_counts(&sweep)),
        ("6 pruning efficacy", criterion_pruning_efficacy()),
        ("7 determinism", criterion_determinism()),
        ("8 MBE correctness", criterion_mbe(&graphs)),
    ];
    let mut failed = 0;
    for (name, outcome) in &results {
        let tag = if outcome.passed { "PASS" } else { "FAIL" };
        println!("criterion {name}: {tag} - {}", outcome.detail);
        failed += usize::from(!outcome.passed);
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
