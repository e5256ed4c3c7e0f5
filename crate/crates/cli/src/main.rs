use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use domgray::{
    build_dominating_graph, enumerate_dominating_sets, hamilton_path_cycle, hamilton_path_with,
    parity_check, reduce_tree_to_base, reduce_unicyclic, verify_hamilton_path, Budget,
    CycleOutcome, DomGraph, Error, Graph, HamPath, Method, Outcome,
};

const OK: u8 = 0;
const VERIFY_FAILED: u8 = 1;
const NONEXISTENT: u8 = 2;
const UNKNOWN: u8 = 3;
const USAGE: u8 = 64;
const BAD_INPUT: u8 = 65;
const SOFTWARE: u8 = 70;

/// Gray codes for the dominating sets of a graph.
///
/// Graph files hold one `u v` edge per line (`#` comments and blank lines are
/// ignored) or a JSON document `{"n": .., "edges": [[u, v], ..]}`. Pass `-`
/// to read from standard input. Sets are printed as binary strings
/// `x_0 x_1 ... x_{n-1}` with vertex 0 leftmost.
#[derive(Parser)]
#[command(name = "domgray", version)]
struct Cli {
    /// Node-expansion budget for the exhaustive search.
    #[arg(long, global = true, value_name = "N")]
    budget: Option<u64>,

    /// Reserved; nothing is randomized.
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the dominating sets, one per line, in increasing order.
    Enum { graph: PathBuf },
    /// Print the dominating graph D(H).
    Domgraph {
        graph: PathBuf,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print a Hamilton path of D(H), or NONEXISTENT / UNKNOWN.
    Path {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Print `{a,b}` vertex sets instead of binary strings.
        #[arg(long)]
        sets: bool,
    },
    /// Check that a path file lists every dominating set exactly once with
    /// single-vertex changes between neighbors.
    Verify { graph: PathBuf, path: PathBuf },
    /// Report the number of dominating sets and their parity classes.
    Parity { graph: PathBuf },
    /// Print the reduction trace of a tree or unicyclic graph as JSON.
    Reduce { graph: PathBuf },
    /// Print the Hamilton path of D(C_n) built from the reflected Gray code.
    Cycle {
        n: usize,
        /// Also verify the result against the dominating sets of C_n.
        #[arg(long)]
        certify: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Tree,
    Cycle,
    Unicyclic,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Tree => Method::Tree,
            MethodArg::Cycle => Method::Cycle,
            MethodArg::Unicyclic => Method::Unicyclic,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(USAGE),
            };
        }
    };
    if cli.seed.is_some() {
        eprintln!("warning: --seed has no effect, all commands are deterministic");
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let status = run(&cli, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match status {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            if is_broken_pipe(&e) {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<io::Error>()
        .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::ResourceLimit(_)) => UNKNOWN,
        Some(Error::ConstructionFailed(_)) => SOFTWARE,
        _ => BAD_INPUT,
    }
}

fn budget(cli: &Cli) -> Budget {
    let mut b = Budget::default();
    if let Some(search) = cli.budget {
        b.search = search;
    }
    b
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = read_input(path)?;
    Graph::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn run(cli: &Cli, out: &mut impl Write) -> anyhow::Result<u8> {
    match &cli.command {
        Command::Enum { graph } => {
            let g = load_graph(graph)?;
            for s in enumerate_dominating_sets(&g)? {
                writeln!(out, "{}", s.to_binary_string(g.n()))?;
            }
            Ok(OK)
        }
        Command::Domgraph { graph, dot, json } => {
            let g = load_graph(graph)?;
            let dg = build_dominating_graph(&g)?;
            if *dot {
                write!(out, "{}", dg.to_dot())?;
            } else if *json {
                serde_json::to_writer_pretty(&mut *out, &dg.to_document())?;
                writeln!(out)?;
            } else {
                write_edge_list(out, &dg)?;
            }
            Ok(OK)
        }
        Command::Path {
            graph,
            method,
            sets,
        } => {
            let g = load_graph(graph)?;
            match hamilton_path_with(&g, (*method).into(), budget(cli))? {
                Outcome::Path { path, .. } => {
                    write_path(out, &path, g.n(), *sets)?;
                    Ok(OK)
                }
                Outcome::NonExistent { .. } => {
                    writeln!(out, "NONEXISTENT")?;
                    Ok(NONEXISTENT)
                }
                Outcome::Unknown { explored } => {
                    writeln!(out, "UNKNOWN")?;
                    eprintln!("search budget exhausted after {explored} expansions");
                    Ok(UNKNOWN)
                }
            }
        }
        Command::Verify { graph, path } => {
            let g = load_graph(graph)?;
            let text = read_input(path)?;
            let p = HamPath::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
            verify(out, &g, &p)
        }
        Command::Parity { graph } => {
            let g = load_graph(graph)?;
            serde_json::to_writer_pretty(&mut *out, &parity_check(&g)?)?;
            writeln!(out)?;
            Ok(OK)
        }
        Command::Reduce { graph } => {
            let g = load_graph(graph)?;
            let trace = if g.is_tree() {
                reduce_tree_to_base(&g)?
            } else if g.is_unicyclic() {
                reduce_unicyclic(&g)?
            } else {
                anyhow::bail!(Error::InvalidInput(
                    "only trees and unicyclic graphs can be reduced".into()
                ));
            };
            serde_json::to_writer_pretty(&mut *out, &trace.to_document())?;
            writeln!(out)?;
            Ok(OK)
        }
        Command::Cycle { n, certify } => match hamilton_path_cycle(*n)? {
            CycleOutcome::NonExistent => {
                writeln!(out, "NONEXISTENT")?;
                Ok(NONEXISTENT)
            }
            CycleOutcome::Path(p) => {
                if *certify {
                    let g = domgray::generators::cycle(*n);
                    let report = verify_hamilton_path(&g, &p);
                    if !report.passed() {
                        anyhow::bail!(Error::ConstructionFailed(format!(
                            "path for C_{n} failed verification: {report:?}"
                        )));
                    }
                }
                write_path(out, &p, *n, false)?;
                Ok(OK)
            }
        },
    }
}

fn write_path(out: &mut impl Write, p: &HamPath, width: usize, sets: bool) -> io::Result<()> {
    for s in p.iter() {
        if sets {
            writeln!(out, "{s}")?;
        } else {
            writeln!(out, "{}", s.to_binary_string(width))?;
        }
    }
    Ok(())
}

/// One line per edge of `D(H)`, both ends as binary strings.
fn write_edge_list(out: &mut impl Write, dg: &DomGraph) -> io::Result<()> {
    let width = dg.host().n();
    for (i, j) in dg.edges() {
        writeln!(
            out,
            "{} {}",
            dg.nodes()[i].to_binary_string(width),
            dg.nodes()[j].to_binary_string(width)
        )?;
    }
    Ok(())
}

fn verify(out: &mut impl Write, g: &Graph, p: &HamPath) -> anyhow::Result<u8> {
    let report = verify_hamilton_path(g, p);
    if report.passed() {
        writeln!(out, "PASS {} steps", report.steps)?;
        return Ok(OK);
    }
    let reason = if let Some(i) = report.first_failure() {
        let what = if report.first_non_dominating == Some(i) {
            "not a dominating set"
        } else if report.first_repeat == Some(i) {
            "repeats an earlier step"
        } else {
            "next step does not differ in exactly one vertex"
        };
        format!("step {i}: {what}")
    } else {
        match report.expected_steps {
            Some(expected) => format!("{} steps, expected {expected}", report.steps),
            None => "too many vertices to count the dominating sets".to_string(),
        }
    };
    writeln!(out, "FAIL {reason}")?;
    Ok(VERIFY_FAILED)
}
