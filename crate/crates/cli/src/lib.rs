//! Command-line driver: `solve`, `oracle`, `verify`, `gen`, `bench`.
//!
//! [`run`] does all the work and returns the text it would print, so tests
//! can drive it without spawning a process. Exit codes: 0 success, 1 usage,
//! parse or precondition error, 2 verification failure, 3 negative circle.

use std::fmt::Write as _;
use std::fs;
use std::ops::Range;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use pathfn::error::EngineError;
use pathfn::verify::{
    check_property, check_tree_structure, compare_tree_to_oracle, oracle_min, parse_property, PropertyReport,
};
use pathfn::{
    eda, embfa, generate_random, parse_graph, serialize_graph, sta, Builtin, GenMode, GenParams, Gate, Graph,
    PathFunction, PathSystem, Property, RunStats, ShortestPathTree, Solution,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_NEGATIVE_CIRCLE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "pathfn", version, about = "Shortest paths under general path functions")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run an engine and print the tree.
    Solve(SolveArgs),
    /// Brute-force per-vertex minima over simple paths.
    Oracle(ProblemArgs),
    /// Compare an engine against the oracle and/or check properties.
    Verify(VerifyArgs),
    /// Write a random graph file to stdout.
    Gen(GenArgs),
    /// Count extend calls and time engines on random graphs.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Eda,
    Embfa,
    Sta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum System {
    Simple,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Against {
    Oracle,
}

#[derive(Args, Debug)]
struct FunctionArgs {
    /// classic, antirisk, blocked-cost or expected-cost.
    #[arg(long, default_value = "classic")]
    function: String,
    /// Blocking probability for blocked-cost and expected-cost.
    #[arg(long)]
    p: Option<f64>,
}

#[derive(Args, Debug)]
struct ProblemArgs {
    #[arg(long)]
    graph: String,
    #[arg(long, default_value_t = 0)]
    source: usize,
    #[command(flatten)]
    function: FunctionArgs,
    #[arg(long, value_enum, default_value = "simple")]
    system: System,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    #[arg(long, value_enum, default_value = "eda")]
    algorithm: Algorithm,
    /// Run even if the function does not declare the engine's requirements.
    #[arg(long)]
    force: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    solve: SolveArgs,
    #[arg(long, value_enum)]
    against: Option<Against>,
    /// Property to check; repeatable.
    #[arg(long)]
    property: Vec<String>,
    /// Enumeration bound for property checks.
    #[arg(long)]
    max_roads: Option<usize>,
    #[arg(long, default_value_t = pathfn::verify::TOLERANCE)]
    tolerance: f64,
}

#[derive(Args, Debug)]
struct Shape {
    #[arg(long)]
    m: Option<usize>,
    /// Weight range `LO:HI`.
    #[arg(long, default_value = "0:10")]
    weights: WeightRange,
    /// directed, undirected or conservative.
    #[arg(long, default_value = "directed")]
    mode: GenMode,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    shape: Shape,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Comma-separated vertex counts.
    #[arg(long, default_value = "20,40,80", value_delimiter = ',')]
    n: Vec<usize>,
    #[command(flatten)]
    shape: Shape,
    /// A single seed or a half-open range `A..B`.
    #[arg(long, default_value = "0..3")]
    seed: SeedRange,
    #[arg(long, value_enum, default_value = "eda")]
    algorithm: Algorithm,
    #[command(flatten)]
    function: FunctionArgs,
    #[arg(long, value_enum, default_value = "simple")]
    system: System,
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, Debug)]
struct WeightRange(f64, f64);

impl FromStr for WeightRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = s.split_once(':').ok_or("expected LO:HI")?;
        let lo: f64 = lo.trim().parse().map_err(|e| format!("bad LO: {e}"))?;
        let hi: f64 = hi.trim().parse().map_err(|e| format!("bad HI: {e}"))?;
        Ok(WeightRange(lo, hi))
    }
}

#[derive(Clone, Debug)]
struct SeedRange(Range<u64>);

impl FromStr for SeedRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("bad seed `{t}`: {e}"));
        match s.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b)?);
                if a >= b {
                    return Err(format!("empty seed range {s}"));
                }
                Ok(SeedRange(a..b))
            }
            None => {
                let a = num(s)?;
                Ok(SeedRange(a..a + 1))
            }
        }
    }
}

/// Exit code plus captured output.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        let code = match e {
            EngineError::NegativeCircle(_) => EXIT_NEGATIVE_CIRCLE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let mut out = String::new();
    let result = match cli.command {
        Command::Solve(a) => solve_cmd(&a, &mut out),
        Command::Oracle(a) => oracle_cmd(&a, &mut out),
        Command::Verify(a) => verify_cmd(&a, &mut out),
        Command::Gen(a) => gen_cmd(&a, &mut out),
        Command::Bench(a) => bench_cmd(&a, &mut out),
    };
    match result {
        Ok(code) => Outcome {
            code,
            stdout: out,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: out,
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn load_graph(path: &str) -> Result<Arc<Graph>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?;
    parse_graph(&text)
        .map(Arc::new)
        .map_err(|e| usage(format!("{path}: {e}")))
}

fn build_function(g: &Arc<Graph>, args: &FunctionArgs) -> Result<Box<dyn PathFunction>, Failure> {
    let builtin = Builtin::from_name(&args.function, args.p).map_err(usage)?;
    builtin.build(g).map_err(|e| usage(e.to_string()))
}

fn path_system(system: System, source: usize) -> PathSystem {
    match system {
        System::Simple => PathSystem::simple(source),
        System::All => PathSystem::all(source),
    }
}

struct Problem {
    graph: Arc<Graph>,
    function: Box<dyn PathFunction>,
    system: PathSystem,
}

fn load_problem(args: &ProblemArgs) -> Result<Problem, Failure> {
    let graph = load_graph(&args.graph)?;
    if args.source >= graph.n() {
        return Err(usage(format!("source {} is not a vertex of the graph", args.source)));
    }
    let function = build_function(&graph, &args.function)?;
    Ok(Problem {
        system: path_system(args.system, args.source),
        graph,
        function,
    })
}

fn gate(force: bool) -> Gate {
    if force {
        Gate::Forced
    } else {
        Gate::Checked
    }
}

fn run_engine(
    g: &Graph,
    system: PathSystem,
    f: &dyn PathFunction,
    algorithm: Algorithm,
    gate: Gate,
) -> Result<Solution, EngineError> {
    match algorithm {
        Algorithm::Eda => eda(g, system, f, gate),
        Algorithm::Embfa => embfa(g, system, f, gate),
        Algorithm::Sta => sta(g, system.source).map(|tree| Solution {
            tree,
            stats: RunStats::default(),
        }),
    }
}

fn solve_cmd(a: &SolveArgs, out: &mut String) -> Result<i32, Failure> {
    let pb = load_problem(&a.problem)?;
    let sol = run_engine(&pb.graph, pb.system, &*pb.function, a.algorithm, gate(a.force))?;
    out.push_str(&sol.tree.render(&pb.graph));
    writeln!(out, "{}", sol.stats.render()).unwrap();
    Ok(EXIT_OK)
}

fn oracle_cmd(a: &ProblemArgs, out: &mut String) -> Result<i32, Failure> {
    let pb = load_problem(a)?;
    if a.system == System::All {
        let declared = pb.function.declared().closure(pb.system.kind);
        if !declared.contains(Property::NoNegativeCircles) {
            return Err(usage(format!(
                "oracle over all paths needs a function without negative circles; `{}` does not declare it",
                pb.function.name()
            )));
        }
    }
    out.push_str(&oracle_min(&pb.graph, a.source, &*pb.function).render());
    Ok(EXIT_OK)
}

fn verify_cmd(a: &VerifyArgs, out: &mut String) -> Result<i32, Failure> {
    if !(a.tolerance.is_finite() && a.tolerance >= 0.0) {
        return Err(usage(format!("tolerance {} must be finite and nonnegative", a.tolerance)));
    }
    let properties = a
        .property
        .iter()
        .map(|name| parse_property(name).map_err(|e| usage(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let against = a.against.or(if properties.is_empty() { Some(Against::Oracle) } else { None });
    if against.is_some() && a.solve.algorithm == Algorithm::Sta {
        return Err(usage("sta populates no values; it cannot be compared with the oracle"));
    }

    let pb = load_problem(&a.solve.problem)?;
    let g = &*pb.graph;
    let f = &*pb.function;
    let mut reports: Vec<PropertyReport> = Vec::new();

    if against == Some(Against::Oracle) {
        let sol = run_engine(g, pb.system, f, a.solve.algorithm, gate(a.solve.force))?;
        reports.push(check_tree_structure(g, pb.system, Some(f), &sol.tree));
        reports.push(oracle_report(g, f, &sol.tree, a.tolerance)?);
    }
    for &p in &properties {
        let bound = a.max_roads.unwrap_or(match p {
            Property::NoNegativeCircles | Property::NoNonPositiveCircles => g.n() + 2,
            _ => g.n().saturating_sub(1),
        });
        reports.push(check_property(g, pb.system, f, p, bound));
    }

    for r in &reports {
        writeln!(out, "{r}").unwrap();
    }
    if reports.iter().all(PropertyReport::passed) {
        out.push_str("pass\n");
        Ok(EXIT_OK)
    } else {
        out.push_str("fail\n");
        Ok(EXIT_VERIFY)
    }
}

fn oracle_report(
    g: &Graph,
    f: &dyn PathFunction,
    tree: &ShortestPathTree,
    tolerance: f64,
) -> Result<PropertyReport, Failure> {
    let oracle = oracle_min(g, tree.source, f);
    compare_tree_to_oracle(tree, &oracle, tolerance).map_err(|e| usage(e.to_string()))
}

fn gen_params(n: usize, shape: &Shape, seed: u64) -> GenParams {
    GenParams {
        n,
        m: shape.m.unwrap_or(3 * n),
        weight_low: shape.weights.0,
        weight_high: shape.weights.1,
        mode: shape.mode,
        seed,
    }
}

fn gen_cmd(a: &GenArgs, out: &mut String) -> Result<i32, Failure> {
    let g = generate_random(&gen_params(a.n, &a.shape, a.seed)).map_err(|e| usage(e.to_string()))?;
    out.push_str(&serialize_graph(&g));
    Ok(EXIT_OK)
}

fn bench_cmd(a: &BenchArgs, out: &mut String) -> Result<i32, Failure> {
    if a.algorithm == Algorithm::Sta {
        return Err(usage("bench measures eda or embfa"));
    }
    for &n in &a.n {
        for seed in a.seed.0.clone() {
            let g = Arc::new(generate_random(&gen_params(n, &a.shape, seed)).map_err(|e| usage(e.to_string()))?);
            let f = build_function(&g, &a.function)?;
            let system = path_system(a.system, 0);
            let started = Instant::now();
            let sol = run_engine(&g, system, &*f, a.algorithm, gate(a.force))?;
            let elapsed = started.elapsed();
            let delta = g.max_degree();
            let budget = match a.algorithm {
                Algorithm::Embfa => n * g.m(),
                _ => delta * n * n,
            };
            let ratio = sol.stats.extend_calls as f64 / budget.max(1) as f64;
            writeln!(
                out,
                "n={n} m={} seed={seed} delta={delta} extend_calls={} budget={budget} ratio={ratio:.6} time_us={}",
                g.m(),
                sol.stats.extend_calls,
                elapsed.as_micros()
            )
            .unwrap();
        }
    }
    Ok(EXIT_OK)
}
