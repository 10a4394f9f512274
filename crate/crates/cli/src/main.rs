use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use countkernel::compositions::{exact_compose, exact_extract, sum_compose, ExactMetadata};
use countkernel::count::parse_count;
use countkernel::framework::{lookup, CountingInstance, Handle, LiftContext, OctToVcPpt, Problem};
use countkernel::graph::{parse_graph, GraphFile};
use countkernel::oracles::{
    count_min_st_cuts, count_minimal_vertex_covers, count_odd_cycle_transversals,
    count_vertex_covers, exact_treewidth, lp_vc_value, max_matching_size, random_graph,
};
use countkernel::suites::{self, SuiteConfig};
use countkernel::{Error, Execution, Graph, TerminalPair};

#[derive(Parser)]
#[command(name = "countkernel", version, about = "Counting kernels, compositions and transformations on graphs")]
struct Cli {
    /// Print a JSON report instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Run oracles and sweeps on a single thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count or evaluate by brute force.
    Oracle {
        problem: OracleKind,
        #[arg(long)]
        graph: PathBuf,
        /// Budget; falls back to the graph file's `k` record.
        #[arg(long)]
        k: Option<u64>,
    },
    /// Reduce an instance or lift a count through a kernel.
    Kernel {
        kind: KernelKind,
        #[command(subcommand)]
        action: KernelAction,
    },
    /// Compose minimum-cut instances.
    Compose {
        #[command(subcommand)]
        kind: ComposeKind,
    },
    /// Recover per-input counts from an exact composition's count.
    Extract {
        #[arg(long)]
        meta: PathBuf,
        #[arg(long)]
        count: String,
    },
    /// Apply a parameter-preserving transformation.
    Ppt {
        kind: PptKind,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        out: PathBuf,
        /// Where to write the lift context.
        #[arg(long)]
        context: Option<PathBuf>,
        /// Check that an odd cycle transversal source is nice.
        #[arg(long)]
        check_nice: bool,
    },
    /// Lift a count with any saved context.
    Lift {
        #[arg(long)]
        context: PathBuf,
        #[arg(long)]
        count: String,
    },
    /// Run oracle-backed property sweeps.
    Verify {
        suite: SuiteKind,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long, default_value_t = 4)]
        kmax: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// Generate graphs.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Vc,
    Minvc,
    Oct,
    Mincut,
    Matching,
    Lpvc,
    Tw,
}

#[derive(Clone, Copy, ValueEnum)]
enum KernelKind {
    Vc,
    Minvc,
}

impl KernelKind {
    fn handle(self) -> Result<Handle> {
        Ok(lookup(match self {
            KernelKind::Vc => "vc-kernel",
            KernelKind::Minvc => "minvc-kernel",
        })?)
    }

    fn problem(self) -> Problem {
        match self {
            KernelKind::Vc => Problem::VertexCover,
            KernelKind::Minvc => Problem::MinimalVertexCover,
        }
    }
}

#[derive(Subcommand)]
enum KernelAction {
    Reduce {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        context: PathBuf,
    },
    Lift {
        #[arg(long)]
        context: PathBuf,
        #[arg(long)]
        count: String,
    },
}

#[derive(Args)]
struct Inputs {
    /// Comma-separated graph files with terminal records.
    #[arg(long, value_delimiter = ',', required = true)]
    inputs: Vec<PathBuf>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Subcommand)]
enum ComposeKind {
    Sum {
        #[command(flatten)]
        io: Inputs,
    },
    Exact {
        #[command(flatten)]
        io: Inputs,
        #[arg(long)]
        meta: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PptKind {
    MincutOct,
    OctVc,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteKind {
    VcKernel,
    MinvcKernel,
    Sum,
    Exact,
    PptOct,
    PptVc,
    All,
}

impl SuiteKind {
    fn name(self) -> &'static str {
        match self {
            SuiteKind::VcKernel => "vc-kernel",
            SuiteKind::MinvcKernel => "minvc-kernel",
            SuiteKind::Sum => "sum",
            SuiteKind::Exact => "exact",
            SuiteKind::PptOct => "ppt-oct",
            SuiteKind::PptVc => "ppt-vc",
            SuiteKind::All => "all",
        }
    }
}

#[derive(Subcommand)]
enum GenKind {
    /// Erdős–Rényi G(n, p).
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Serialize)]
struct Check {
    name: String,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct RunReport {
    subcommand: String,
    inputs: BTreeMap<String, Value>,
    outputs: BTreeMap<String, Value>,
    elapsed_secs: f64,
    checks: Vec<Check>,
}

impl RunReport {
    fn new(subcommand: &str) -> Self {
        RunReport {
            subcommand: subcommand.to_string(),
            inputs: BTreeMap::new(),
            outputs: BTreeMap::new(),
            elapsed_secs: 0.0,
            checks: Vec::new(),
        }
    }

    fn input(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.inputs.insert(key.into(), json!(value));
        self
    }

    fn output(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.outputs.insert(key.into(), json!(value));
        self
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn render(&self) -> String {
        let plain = |v: &Value| match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        let mut lines = Vec::new();
        match self.outputs.get("value") {
            Some(v) if self.outputs.len() == 1 => lines.push(plain(v)),
            _ => lines.extend(self.outputs.iter().map(|(k, v)| format!("{k}: {}", plain(v)))),
        }
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            lines.push(format!("{verdict} {} {}", c.name, c.detail));
        }
        lines.join("\n")
    }
}

fn read_graph(path: &Path) -> Result<GraphFile> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_graph(path: &Path, file: &GraphFile) -> Result<()> {
    fs::write(path, file.to_text()).with_context(|| format!("writing {}", path.display()))
}

fn write_json(path: &Path, value: &impl Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}

fn budget(flag: Option<u64>, file: &GraphFile) -> Result<u64> {
    flag.or(file.k).ok_or_else(|| anyhow!(Error::Domain("no budget: pass --k or add a 'k' record".into())))
}

fn terminals(file: &GraphFile, path: &Path) -> Result<TerminalPair> {
    file.terminals
        .ok_or_else(|| anyhow!(Error::Domain(format!("{} has no 't' record", path.display()))))
}

fn instance_file(inst: &CountingInstance) -> GraphFile {
    GraphFile {
        graph: inst.graph.clone(),
        terminals: inst.terminals,
        k: Some(inst.k),
    }
}

fn describe(g: &Graph) -> Value {
    json!({ "n": g.n(), "m": g.m() })
}

fn lift_with(handle: &Handle, context: &Path, count: &str, report: &mut RunReport) -> Result<()> {
    let text = fs::read_to_string(context).with_context(|| format!("reading {}", context.display()))?;
    let ctx = LiftContext::from_json(&text)?;
    let count = parse_count(count)?;
    report.input("context", context).input("count", count.to_string());
    let lifted = handle.lift(&ctx, &count)?;
    report.output("value", lifted.to_string());
    Ok(())
}

fn run(cli: &Cli) -> Result<RunReport> {
    let exec = if cli.sequential { Execution::Sequential } else { Execution::default() };
    let mut report;
    match &cli.command {
        Command::Oracle { problem, graph, k } => {
            report = RunReport::new("oracle");
            let file = read_graph(graph)?;
            report.input("graph", graph);
            let g = &file.graph;
            let value = match problem {
                OracleKind::Vc | OracleKind::Minvc | OracleKind::Oct => {
                    let k = budget(*k, &file)?;
                    report.input("k", k);
                    let k = k as usize;
                    match problem {
                        OracleKind::Vc => count_vertex_covers(g, k)?,
                        OracleKind::Minvc => count_minimal_vertex_covers(g, k)?,
                        _ => count_odd_cycle_transversals(g, k)?,
                    }
                    .to_string()
                }
                OracleKind::Mincut => count_min_st_cuts(g, terminals(&file, graph)?)?.count.to_string(),
                OracleKind::Matching => max_matching_size(g)?.to_string(),
                OracleKind::Lpvc => lp_vc_value(g).to_string(),
                OracleKind::Tw => exact_treewidth(g)?.width.to_string(),
            };
            report.output("value", value);
        }
        Command::Kernel { kind, action } => {
            let handle = kind.handle()?;
            match action {
                KernelAction::Reduce { graph, k, out, context } => {
                    report = RunReport::new("kernel reduce");
                    let file = read_graph(graph)?;
                    let k = budget(*k, &file)?;
                    report.input("graph", graph).input("k", k);
                    let inst = CountingInstance::new(kind.problem(), file.graph, k);
                    let r = handle.reduce(&inst)?;
                    write_graph(out, &instance_file(&r.reduced))?;
                    write_json(context, &r.context)?;
                    report
                        .output("graph", out)
                        .output("context", context)
                        .output("reduced", describe(&r.reduced.graph))
                        .output("k", r.reduced.k);
                }
                KernelAction::Lift { context, count } => {
                    report = RunReport::new("kernel lift");
                    lift_with(&handle, context, count, &mut report)?;
                }
            }
        }
        Command::Compose { kind } => {
            let (io, meta) = match kind {
                ComposeKind::Sum { io } => (io, None),
                ComposeKind::Exact { io, meta } => (io, Some(meta)),
            };
            let mut instances = Vec::new();
            for path in &io.inputs {
                let file = read_graph(path)?;
                let st = terminals(&file, path)?;
                instances.push((file.graph, st));
            }
            let (graph, st, cut) = match meta {
                None => {
                    report = RunReport::new("compose sum");
                    let c = sum_compose(&instances)?;
                    (c.graph, c.terminals, c.cut_size as u64)
                }
                Some(meta) => {
                    report = RunReport::new("compose exact");
                    let c = exact_compose(&instances, None)?;
                    write_json(meta, &c.metadata)?;
                    report.output("meta", meta).output("decomposition_width", c.decomposition.width());
                    (c.graph, c.terminals, c.cut_size)
                }
            };
            report.input("inputs", &io.inputs);
            report.output("graph", &io.out).output("composed", describe(&graph)).output("k", cut);
            let file = GraphFile {
                graph,
                terminals: Some(st),
                k: Some(cut),
            };
            write_graph(&io.out, &file)?;
        }
        Command::Extract { meta, count } => {
            report = RunReport::new("extract");
            let text = fs::read_to_string(meta).with_context(|| format!("reading {}", meta.display()))?;
            let metadata: ExactMetadata = serde_json::from_str(&text).map_err(Error::from)?;
            let q = parse_count(count)?;
            report.input("meta", meta).input("count", q.to_string());
            let answers: Vec<String> = exact_extract(&metadata, &q)?.iter().map(|a| a.to_string()).collect();
            report.output("value", answers.join(","));
        }
        Command::Ppt { kind, graph, k, out, context, check_nice } => {
            report = RunReport::new("ppt");
            let file = read_graph(graph)?;
            report.input("graph", graph);
            let (handle, inst): (Handle, CountingInstance) = match kind {
                PptKind::MincutOct => {
                    let st = terminals(&file, graph)?;
                    (lookup("ppt-mincut-oct")?, CountingInstance::min_cut(file.graph, st)?)
                }
                PptKind::OctVc => {
                    let k = budget(*k, &file)?;
                    report.input("k", k);
                    let handle: Handle = std::sync::Arc::new(OctToVcPpt { check_nice: *check_nice });
                    (handle, CountingInstance::new(Problem::OddCycleTransversal, file.graph, k))
                }
            };
            let r = handle.reduce(&inst)?;
            write_graph(out, &instance_file(&r.reduced))?;
            report
                .output("graph", out)
                .output("transformed", describe(&r.reduced.graph))
                .output("k", r.reduced.k);
            if let Some(path) = context {
                write_json(path, &r.context)?;
                report.output("context", path);
            }
        }
        Command::Lift { context, count } => {
            report = RunReport::new("lift");
            let text = fs::read_to_string(context).with_context(|| format!("reading {}", context.display()))?;
            let ctx = LiftContext::from_json(&text)?;
            lift_with(&lookup(&ctx.compression)?, context, count, &mut report)?;
        }
        Command::Verify { suite, nmax, kmax, seed, trials } => {
            report = RunReport::new("verify");
            report
                .input("suite", suite.name())
                .input("nmax", nmax)
                .input("kmax", kmax)
                .input("seed", seed)
                .input("trials", trials);
            let cfg = SuiteConfig {
                nmax: *nmax,
                kmax: *kmax,
                seed: *seed,
                trials: *trials,
                exec,
            };
            for r in suites::run_named(suite.name(), &cfg)? {
                let mut detail = format!(
                    "checked {} skipped {} failed {} in {:.2}s",
                    r.checked,
                    r.skipped,
                    r.failed,
                    r.elapsed.as_secs_f64()
                );
                for f in &r.failures {
                    detail.push_str(&format!("\n  mismatch: {f}"));
                }
                report.checks.push(Check {
                    passed: r.passed(),
                    name: r.name,
                    detail,
                });
            }
        }
        Command::Gen { kind: GenKind::Gnp { n, p, seed, out } } => {
            report = RunReport::new("gen gnp");
            report.input("n", n).input("p", p).input("seed", seed);
            let g = random_graph(*n, *p, *seed)?;
            report.output("graph", out).output("generated", describe(&g));
            write_graph(out, &GraphFile::new(g))?;
        }
    }
    Ok(report)
}

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 3;
const EXIT_SIZE_GUARD: u8 = 4;

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.chain().find_map(|e| e.downcast_ref::<Error>()) {
        Some(e) if e.is_size_guard() => EXIT_SIZE_GUARD,
        _ => EXIT_INPUT,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(mut report) => {
            report.elapsed_secs = start.elapsed().as_secs_f64();
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                println!("{}", report.render());
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY_FAILED)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
