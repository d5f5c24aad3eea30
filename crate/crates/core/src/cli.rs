//! Command-line front end.

use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::abenum::{count_ab, detect_ab_basic, detect_ab_m, detect_ab_p};
use crate::bigraph::{load_edge_list, BipartiteGraph};
use crate::community::{biclique_dump, CommunityResult};
use crate::error::{Error, Result};
use crate::gen::{blocks_chain, random_graph, sample_edges, write_edges, write_graph};
use crate::mbag::detect_mbag;
use crate::mbe::{enumerate_maximal_bicliques, MbeOptions};
use crate::oracle::{oracle_bcpc, oracle_count_ab, OracleLimits};
use crate::pbcpc::{detect_pbcpc, detect_pbcpc_plus};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Mbag,
    Pbcpc,
    PbcpcPlus,
    Ab,
    AbM,
    AbP,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] =
        [Algorithm::Mbag, Algorithm::Pbcpc, Algorithm::PbcpcPlus, Algorithm::Ab, Algorithm::AbM, Algorithm::AbP];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Mbag => "mbag",
            Algorithm::Pbcpc => "pbcpc",
            Algorithm::PbcpcPlus => "pbcpc-plus",
            Algorithm::Ab => "ab",
            Algorithm::AbM => "ab-m",
            Algorithm::AbP => "ab-p",
        }
    }

    pub fn run(self, g: &BipartiteGraph, alpha: usize, beta: usize) -> CommunityResult {
        match self {
            Algorithm::Mbag => detect_mbag(g, alpha, beta),
            Algorithm::Pbcpc => detect_pbcpc(g, alpha, beta),
            Algorithm::PbcpcPlus => detect_pbcpc_plus(g, alpha, beta),
            Algorithm::Ab => detect_ab_basic(g, alpha, beta),
            Algorithm::AbM => detect_ab_m(g, alpha, beta),
            Algorithm::AbP => detect_ab_p(g, alpha, beta),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "bcpc", version, about = "Biclique percolation communities in bipartite graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Detect communities with one algorithm.
    Detect(DetectArgs),
    /// Cross-check all algorithms against the exhaustive oracle.
    Verify(VerifyArgs),
    /// Generate a synthetic edge list.
    Gen(GenArgs),
    /// Time algorithms over a grid of thresholds and write CSV.
    Bench(BenchArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Thresholds {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub alpha: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub beta: u32,
}

#[derive(Args, Debug)]
pub struct DetectArgs {
    #[arg(long, value_enum, default_value = "ab-p")]
    pub algo: Algorithm,
    #[command(flatten)]
    pub thresholds: Thresholds,
    #[arg(long)]
    pub input: PathBuf,
    /// Community file; required unless --count-ab is given.
    #[arg(long, required_unless_present = "count_ab")]
    pub output: Option<PathBuf>,
    /// Read the columns as (V, U).
    #[arg(long)]
    pub swap_sides: bool,
    /// Write run statistics as JSON.
    #[arg(long)]
    pub stats: Option<PathBuf>,
    /// Write every maximal biclique, one per line.
    #[arg(long)]
    pub dump_bicliques: Option<PathBuf>,
    /// Print the number of (α,β)-bicliques and skip detection.
    #[arg(long)]
    pub count_ab: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub thresholds: Thresholds,
    #[arg(long)]
    pub swap_sides: bool,
    /// Community file to compare against the computed communities.
    #[arg(long)]
    pub expected: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Random,
    Blocks,
    Sample,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: GenKind,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
    /// random: U-side size.
    #[arg(long)]
    pub n_u: Option<usize>,
    /// random: V-side size.
    #[arg(long)]
    pub n_v: Option<usize>,
    /// random: edge probability.
    #[arg(long)]
    pub p: Option<f64>,
    /// blocks: number of blocks.
    #[arg(long)]
    pub blocks: Option<usize>,
    /// blocks: vertices per side of each block.
    #[arg(long)]
    pub size: Option<usize>,
    /// blocks: vertices shared per side by consecutive blocks.
    #[arg(long)]
    pub overlap: Option<usize>,
    /// sample: edge list to sample from.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// sample: fraction of edges to keep.
    #[arg(long)]
    pub fraction: Option<f64>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_delimiter = ',', required = true)]
    pub alphas: Vec<usize>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub betas: Vec<usize>,
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    pub algos: Vec<Algorithm>,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub swap_sides: bool,
}

/// Parses `std::env::args` and runs the command.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command, &mut std::io::stdout().lock()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Runs one command, writing its report to `out`. Returns `Ok(false)` when a
/// verification fails.
pub fn run(command: Command, out: &mut dyn Write) -> Result<bool> {
    match command {
        Command::Detect(a) => cmd_detect(&a, out).map(|_| true),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Gen(a) => cmd_gen(&a).map(|_| true),
        Command::Bench(a) => cmd_bench(&a).map(|_| true),
    }
}

/// Adds the path to an I/O error message.
fn with_path(path: &Path) -> impl Fn(io::Error) -> Error + '_ {
    move |e| Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

pub fn read_graph(path: &Path, swap: bool) -> Result<BipartiteGraph> {
    let file = File::open(path).map_err(with_path(path))?;
    load_edge_list(BufReader::new(file), swap)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(with_path(path))
}

fn cmd_detect(a: &DetectArgs, out: &mut dyn Write) -> Result<()> {
    let g = read_graph(&a.input, a.swap_sides)?;
    let (alpha, beta) = (a.thresholds.alpha as usize, a.thresholds.beta as usize);
    if let Some(path) = &a.dump_bicliques {
        let tree = enumerate_maximal_bicliques(&g, &MbeOptions::default());
        write_file(path, &biclique_dump(&g, tree.bicliques()))?;
    }
    if a.count_ab {
        writeln!(out, "{}", count_ab(&g, alpha, beta))?;
        return Ok(());
    }
    let r = a.algo.run(&g, alpha, beta);
    if let Some(path) = &a.output {
        write_file(path, &r.to_community_file(&g))?;
    }
    if let Some(path) = &a.stats {
        write_file(path, &r.stats.to_json())?;
    }
    Ok(())
}

/// One named check of a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub results: Vec<(Algorithm, CommunityResult)>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }
}

/// Runs all six algorithms and the oracle and checks agreement, the
/// partial-community count chain and the enumeration-node ordering.
pub fn verify_graph(g: &BipartiteGraph, alpha: usize, beta: usize, limits: &OracleLimits) -> Result<VerifyReport> {
    let oracle = oracle_bcpc(g, alpha, beta, limits)?;
    let results: Vec<(Algorithm, CommunityResult)> =
        Algorithm::ALL.iter().map(|&algo| (algo, algo.run(g, alpha, beta))).collect();
    let mut report = VerifyReport { checks: Vec::new(), results };

    let mut agreement = Vec::new();
    for (algo, r) in &report.results {
        let same = r.partition() == oracle;
        agreement.push((algo.name(), same, r.community_count()));
    }
    for (name, same, count) in agreement {
        report.check(
            format!("{name} matches oracle"),
            same,
            format!("{count} communities, oracle {}", oracle.len()),
        );
    }

    let stat = |algo: Algorithm| &report.results.iter().find(|(a, _)| *a == algo).expect("ran").1.stats;
    let n_biclique = stat(Algorithm::Mbag).n_biclique;
    let filtered = stat(Algorithm::Mbag).filtered;
    let pbcpc = stat(Algorithm::Pbcpc).pbcpc.expect("pbcpc reports its count");
    let plus = stat(Algorithm::PbcpcPlus).pbcpc_plus.expect("pbcpc-plus reports its count");
    let bcpc = stat(Algorithm::Mbag).bcpc;
    let chain = n_biclique >= filtered && filtered >= pbcpc && pbcpc >= plus && plus >= bcpc;
    let nodes: Vec<u64> = [Algorithm::AbP, Algorithm::AbM, Algorithm::Ab]
        .iter()
        .map(|&a| stat(a).tree_nodes.expect("enumeration detectors report nodes"))
        .collect();
    let tests: Vec<u64> =
        [Algorithm::PbcpcPlus, Algorithm::Pbcpc, Algorithm::Mbag].iter().map(|&a| stat(a).adjacency_tests).collect();
    report.check(
        "count chain",
        chain,
        format!("n_biclique {n_biclique} >= filtered {filtered} >= pbcpc {pbcpc} >= pbcpc_plus {plus} >= bcpc {bcpc}"),
    );
    report.check(
        "tree node order",
        nodes[0] <= nodes[1] && nodes[1] <= nodes[2],
        format!("ab-p {} <= ab-m {} <= ab {}", nodes[0], nodes[1], nodes[2]),
    );
    report.check(
        "adjacency test order",
        tests[0] <= tests[1] && tests[1] <= tests[2],
        format!("pbcpc-plus {} <= pbcpc {} <= mbag {}", tests[0], tests[1], tests[2]),
    );
    match oracle_count_ab(g, alpha, beta, limits) {
        Ok(expect) => {
            let got = count_ab(g, alpha, beta);
            report.check("(α,β)-biclique count", got == expect, format!("enumerated {got}, oracle {expect}"));
        }
        Err(Error::OracleLimit(why)) => report.check("(α,β)-biclique count", true, format!("skipped: {why}")),
        Err(e) => return Err(e),
    }
    Ok(report)
}

/// Index and contents of the first differing line, if any.
pub fn first_difference(actual: &str, expected: &str) -> Option<(usize, String, String)> {
    let mut a = actual.lines();
    let mut e = expected.lines();
    let mut i = 1;
    loop {
        match (a.next(), e.next()) {
            (None, None) => return None,
            (x, y) if x == y => {}
            (x, y) => {
                return Some((i, x.unwrap_or("<none>").to_string(), y.unwrap_or("<none>").to_string()));
            }
        }
        i += 1;
    }
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<bool> {
    let g = read_graph(&a.input, a.swap_sides)?;
    let (alpha, beta) = (a.thresholds.alpha as usize, a.thresholds.beta as usize);
    let limits = OracleLimits::default();
    let mut report = match verify_graph(&g, alpha, beta, &limits) {
        Err(Error::OracleLimit(why)) => {
            return Err(Error::OracleLimit(format!(
                "{why}; verify is meant for small graphs, use `detect` or `gen --kind sample` to shrink the input"
            )))
        }
        r => r?,
    };
    if let Some(path) = &a.expected {
        let expected = fs::read_to_string(path).map_err(with_path(path))?;
        let actual = report.results[0].1.to_community_file(&g);
        let diff = first_difference(&actual, &expected);
        let detail = match &diff {
            None => "identical".to_string(),
            Some((line, got, want)) => format!("community {line} differs: computed `{got}`, expected `{want}`"),
        };
        report.check("expected communities", diff.is_none(), detail);
    }
    for c in &report.checks {
        writeln!(out, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
    }
    let ok = report.passed();
    writeln!(out, "{}", if ok { "PASS" } else { "FAIL" })?;
    Ok(ok)
}

fn need<T: Copy>(v: Option<T>, flag: &str, kind: &str) -> Result<T> {
    v.ok_or_else(|| Error::Config(format!("--{flag} is required for --kind {kind}")))
}

fn cmd_gen(a: &GenArgs) -> Result<()> {
    let file = File::create(&a.out).map_err(with_path(&a.out))?;
    let mut w = BufWriter::new(file);
    match a.kind {
        GenKind::Random => {
            let n_u = need(a.n_u, "n-u", "random")?;
            let n_v = need(a.n_v, "n-v", "random")?;
            let p = need(a.p, "p", "random")?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Config(format!("--p must lie in [0, 1], got {p}")));
            }
            write_graph(&random_graph(n_u, n_v, p, a.seed), &mut w)?;
        }
        GenKind::Blocks => {
            let blocks = need(a.blocks, "blocks", "blocks")?;
            let size = need(a.size, "size", "blocks")?;
            let overlap = a.overlap.unwrap_or(0);
            if size == 0 || overlap >= size {
                return Err(Error::Config(format!("need 0 <= overlap < size, got overlap {overlap}, size {size}")));
            }
            write_graph(&blocks_chain(blocks, size, overlap), &mut w)?;
        }
        GenKind::Sample => {
            let input = a.input.as_deref().ok_or_else(|| Error::Config("--input is required for --kind sample".into()))?;
            let fraction = need(a.fraction, "fraction", "sample")?;
            if !(0.0..=1.0).contains(&fraction) {
                return Err(Error::Config(format!("--fraction must lie in [0, 1], got {fraction}")));
            }
            let g = read_graph(input, false)?;
            write_edges(&sample_edges(&g, fraction, a.seed), &mut w)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct BenchRow {
    algo: Algorithm,
    alpha: usize,
    beta: usize,
    wall_ms: f64,
    tree_nodes: Option<u64>,
    bcpc: usize,
    n_biclique: usize,
    filtered: usize,
    pbcpc: Option<usize>,
    pbcpc_plus: Option<usize>,
    adjacency_tests: u64,
    unions: u64,
    mbe_nodes: u64,
}

fn cmd_bench(a: &BenchArgs) -> Result<()> {
    if a.alphas.iter().chain(&a.betas).any(|&t| t == 0) {
        return Err(Error::Config("thresholds must be at least 1".into()));
    }
    let g = read_graph(&a.input, a.swap_sides)?;
    let mut w = csv::Writer::from_writer(File::create(&a.out).map_err(with_path(&a.out))?);
    for &alpha in &a.alphas {
        for &beta in &a.betas {
            for &algo in &a.algos {
                let r = algo.run(&g, alpha, beta);
                let s = r.stats;
                w.serialize(BenchRow {
                    algo,
                    alpha,
                    beta,
                    wall_ms: s.wall_ms,
                    tree_nodes: s.tree_nodes,
                    bcpc: s.bcpc,
                    n_biclique: s.n_biclique,
                    filtered: s.filtered,
                    pbcpc: s.pbcpc,
                    pbcpc_plus: s.pbcpc_plus,
                    adjacency_tests: s.adjacency_tests,
                    unions: s.unions,
                    mbe_nodes: s.mbe_nodes,
                })
                .map_err(|e| Error::Config(format!("csv: {e}")))?;
            }
        }
    }
    w.flush()?;
    Ok(())
}
