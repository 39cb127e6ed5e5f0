//! Command-line frontend for the fptcolor solvers.
//!
//! Exit codes: 0 = decided (YES or NO on stdout), 1 = usage error,
//! 2 = input error, 3 = internal verification failure.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fptcolor::equitable::solve_equitable_fpt_with_stats;
use fptcolor::generate::{gen_perturbed, gen_threshold, random_threshold_steps, ThresholdStep};
use fptcolor::graph::{Coloring, Graph};
use fptcolor::io::{
    parse_dimacs, parse_lists, parse_modulator, parse_precoloring, write_dimacs, write_lists,
    write_solution,
};
use fptcolor::listcolor::ListInstance;
use fptcolor::oracle::{oracle_equitable, oracle_independent_set, OracleBudget};
use fptcolor::precolor::{solve_precolor_with_stats, verify_solution, PrecolorInstance};
use fptcolor::recognize::{recognize_threshold, split_partition, ThresholdCertificate};
use fptcolor::{
    clique_modulator, is_proper, kernel_reject, solve_equitable_threshold, solve_list_split,
    threshold_modulator, verify_equitable, EquitableInstance, KernelDecision, TargetClass,
};

#[derive(Parser)]
#[command(
    name = "fptcolor",
    version,
    about = "Exact coloring solvers for threshold and split graphs",
    after_help = "Exit codes: 0 decided, 1 usage error, 2 input error, 3 internal verification failure."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recognize a threshold graph: construction sequence or forbidden witness
    Recognize {
        /// DIMACS .col graph file
        #[arg(long)]
        graph: PathBuf,
    },
    /// Search for a vertex set whose deletion lands in a target class
    Modulator {
        #[arg(long)]
        graph: PathBuf,
        /// Target class after deletion
        #[arg(long, value_enum)]
        class: ClassArg,
        /// Deletion budget
        #[arg(long)]
        k: usize,
    },
    /// Extend a precoloring to a proper r-coloring (clique-deletion parameter)
    SolvePre {
        #[arg(long)]
        graph: PathBuf,
        /// Modulator file (one 1-based vertex per line) or "auto"
        #[arg(long, default_value = "auto")]
        modulator: String,
        /// Budget for --modulator auto
        #[arg(long)]
        k: Option<usize>,
        /// Precoloring file: "<vertex> <color>" per line
        #[arg(long)]
        precolor: PathBuf,
        /// Color budget
        #[arg(long)]
        r: usize,
    },
    /// Equitable coloring with at most r colors
    SolveEquitable {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        r: usize,
        /// Modulator file or "auto" (requires --k); omit for threshold inputs
        #[arg(long)]
        modulator: Option<String>,
        /// Budget for --modulator auto
        #[arg(long)]
        k: Option<usize>,
        /// Insist on the polynomial threshold-graph solver
        #[arg(long)]
        threshold_only: bool,
    },
    /// List coloring on a split graph
    SolveList {
        #[arg(long)]
        graph: PathBuf,
        /// List file: "<vertex>: <colors...>" per line
        #[arg(long)]
        lists: PathBuf,
        /// Parameter bounding list contents and the clique side
        #[arg(long)]
        k: usize,
    },
    /// Emit the independent-set-to-list-coloring reduction
    Reduce {
        #[arg(long)]
        graph: PathBuf,
        /// Independent-set size to encode
        #[arg(long)]
        k: usize,
        /// Writes <prefix>.col and <prefix>.lists
        #[arg(long)]
        out_prefix: PathBuf,
    },
    /// Generate instances
    #[command(subcommand)]
    Gen(GenCommand),
    /// Exhaustive reference solvers (unstable; debugging only)
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Batch solver runs emitting line-delimited JSON reports
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Threshold,
    Clique,
}

#[derive(Subcommand)]
enum GenCommand {
    /// Threshold graph from a random or explicit construction sequence
    Threshold {
        /// Number of vertices (random sequence; ignored with --seq)
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Force a universal last vertex (connected result)
        #[arg(long)]
        connected: bool,
        /// Explicit sequence like IUIUU (I = isolated, U = universal)
        #[arg(long)]
        seq: Option<String>,
        /// Output .col path
        #[arg(long, short = 'o')]
        out: PathBuf,
    },
    /// Add fresh vertices to a base graph, keeping them as a modulator
    Perturbed {
        #[arg(long)]
        base: PathBuf,
        /// Number of fresh vertices
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0.5)]
        prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short = 'o')]
        out: PathBuf,
        /// Also write the fresh vertices as a modulator file
        #[arg(long)]
        modulator_out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Exhaustive precoloring extension
    Precolor {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        precolor: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 10)]
        max_vertices: usize,
    },
    /// Exhaustive equitable coloring
    Equitable {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 10)]
        max_vertices: usize,
    },
    /// Exhaustive list coloring
    List {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        lists: PathBuf,
        #[arg(long, default_value_t = 10)]
        max_vertices: usize,
    },
    /// Exhaustive independent set
    IndependentSet {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 10)]
        max_vertices: usize,
    },
}

#[derive(Args)]
struct BenchArgs {
    /// Instance family to run
    #[arg(long, value_enum)]
    family: Family,
    /// Instance sizes, comma separated (empty config emits an empty stream)
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    /// Modulator size
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Seeds, comma separated
    #[arg(long, value_delimiter = ',', default_value = "1")]
    seeds: Vec<u64>,
    /// Perturbation edge probability
    #[arg(long, default_value_t = 0.5)]
    prob: f64,
    /// Color budget rule: n or half
    #[arg(long, value_enum, default_value_t = RMode::N)]
    r_mode: RMode,
    /// Directory for solution files
    #[arg(long, default_value = "bench-out")]
    out_dir: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Perturbed threshold graphs solved by the fixed-parameter solver
    Equitable,
    /// Plain threshold graphs solved by the polynomial solver (k ignored)
    Threshold,
    /// Perturbed cliques with random precolorings
    Precolor,
}

#[derive(Clone, Copy, ValueEnum)]
enum RMode {
    N,
    Half,
}

#[derive(Serialize)]
struct RunReport<'a> {
    command: &'static str,
    family: &'a str,
    n: usize,
    k: usize,
    seed: u64,
    r: usize,
    status: &'a str,
    wall_ms: f64,
    /// Guess branches explored by the solver (0 for the polynomial path)
    branches: u64,
    solution_path: Option<String>,
}

enum AppError {
    Usage(String),
    Input(String),
    Internal(String),
}

impl AppError {
    fn code(&self) -> u8 {
        match self {
            AppError::Usage(_) => 1,
            AppError::Input(_) => 2,
            AppError::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            AppError::Usage(m) | AppError::Input(m) | AppError::Internal(m) => m,
        }
    }
}

fn input_err(e: impl std::fmt::Display) -> AppError {
    AppError::Input(e.to_string())
}

fn read_file(path: &Path) -> Result<String, AppError> {
    std::fs::read_to_string(path)
        .map_err(|e| AppError::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, AppError> {
    parse_dimacs(&read_file(path)?).map_err(input_err)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version as "errors" with successful exit
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), AppError> {
    match cli.command {
        Command::Recognize { graph } => {
            let g = load_graph(&graph)?;
            match recognize_threshold(&g) {
                ThresholdCertificate::Construction(steps) => {
                    println!("ACCEPT");
                    let mut line = String::from("construction:");
                    for (v, step) in steps {
                        let tag = match step {
                            ThresholdStep::Isolated => 'I',
                            ThresholdStep::Universal => 'U',
                        };
                        let _ = write!(line, " {}:{}", v + 1, tag);
                    }
                    println!("{line}");
                }
                ThresholdCertificate::Witness(w) => {
                    let [a, b, c, d] = w.vertices;
                    println!(
                        "REJECT witness: {} {} {} {} {}",
                        w.kind,
                        a + 1,
                        b + 1,
                        c + 1,
                        d + 1
                    );
                }
            }
            Ok(())
        }
        Command::Modulator { graph, class, k } => {
            let g = load_graph(&graph)?;
            let found = match class {
                ClassArg::Threshold => threshold_modulator(&g, k),
                ClassArg::Clique => clique_modulator(&g, k),
            };
            match found {
                Some(m) => {
                    for v in &m.vertices {
                        println!("{}", v + 1);
                    }
                }
                None => println!("NONE"),
            }
            Ok(())
        }
        Command::SolvePre {
            graph,
            modulator,
            k,
            precolor,
            r,
        } => {
            let g = load_graph(&graph)?;
            let x = resolve_modulator(&g, &modulator, k, TargetClass::Clique)?;
            let pre = parse_precoloring(&read_file(&precolor)?, &g).map_err(input_err)?;
            let inst = PrecolorInstance::new(g, x, r, pre).map_err(input_err)?;
            let (solution, _stats) = solve_precolor_with_stats(&inst);
            if let Some(c) = &solution {
                if !verify_solution(&inst, c) {
                    return Err(AppError::Internal(
                        "solution failed re-verification".into(),
                    ));
                }
            }
            print!("{}", write_solution(solution.as_ref()));
            Ok(())
        }
        Command::SolveEquitable {
            graph,
            r,
            modulator,
            k,
            threshold_only,
        } => {
            let g = load_graph(&graph)?;
            let solution = if threshold_only {
                solve_equitable_threshold(&g, r).map_err(input_err)?
            } else if let Some(spec) = modulator {
                let x = resolve_modulator(&g, &spec, k, TargetClass::Threshold)?;
                let inst = EquitableInstance::new(g.clone(), r, x.clone()).map_err(input_err)?;
                // size-based rejection applies when the threshold part keeps
                // a universal vertex
                let (sub, _) = g.remove_vertices(&x);
                if sub.has_universal_vertex()
                    && kernel_reject(g.vertex_count(), r, x.len()) == KernelDecision::No
                {
                    println!("STATUS NO (kernel)");
                    return Ok(());
                }
                let (solution, _stats) = solve_equitable_fpt_with_stats(&inst).map_err(input_err)?;
                solution
            } else if recognize_threshold(&g).is_accept() {
                solve_equitable_threshold(&g, r).map_err(input_err)?
            } else {
                return Err(AppError::Input(
                    "graph is not threshold; pass --modulator <file|auto>".into(),
                ));
            };
            if let Some(c) = &solution {
                if verify_equitable(&g, c, r) != Ok(true) {
                    return Err(AppError::Internal(
                        "solution failed re-verification".into(),
                    ));
                }
            }
            print!("{}", write_solution(solution.as_ref()));
            Ok(())
        }
        Command::SolveList { graph, lists, k } => {
            let g = load_graph(&graph)?;
            let lists = parse_lists(&read_file(&lists)?, &g).map_err(input_err)?;
            let partition = split_partition(&g)
                .ok_or_else(|| AppError::Input("graph is not a split graph".into()))?;
            let inst =
                ListInstance::new(g.clone(), partition, lists.clone(), k).map_err(input_err)?;
            if lists.max_color() > k {
                let palette: BTreeSet<usize> = inst
                    .partition()
                    .clique
                    .iter()
                    .flat_map(|&v| lists.list(v).iter().copied())
                    .collect();
                let cost = (palette.len() as f64).powi(inst.partition().clique.len() as i32);
                if cost > 1e9 {
                    eprintln!(
                        "warning: lists exceed [k]; clique enumeration may explore ~{cost:.1e} colorings"
                    );
                }
            }
            let solution = solve_list_split(&inst).map_err(input_err)?;
            if let Some(c) = &solution {
                if is_proper(&g, c) != Ok(true) || !lists.respects(c) {
                    return Err(AppError::Internal(
                        "solution failed re-verification".into(),
                    ));
                }
            }
            print!("{}", write_solution(solution.as_ref()));
            Ok(())
        }
        Command::Reduce {
            graph,
            k,
            out_prefix,
        } => {
            let g = load_graph(&graph)?;
            let red = fptcolor::reduce_is_to_listcolor(&g, k).map_err(input_err)?;
            if k == g.vertex_count() && g.edge_count() > 0 {
                eprintln!(
                    "warning: k equals the vertex count, so edge-vertex lists are empty; the instance is a NO and the list file will not re-parse"
                );
            }
            let col_path = out_prefix.with_extension("col");
            let list_path = out_prefix.with_extension("lists");
            std::fs::write(&col_path, write_dimacs(&red.graph))
                .map_err(|e| AppError::Input(format!("cannot write {}: {e}", col_path.display())))?;
            std::fs::write(&list_path, write_lists(&red.lists))
                .map_err(|e| AppError::Input(format!("cannot write {}: {e}", list_path.display())))?;
            println!("WROTE {} {}", col_path.display(), list_path.display());
            Ok(())
        }
        Command::Gen(cmd) => run_gen(cmd),
        Command::Oracle(cmd) => run_oracle(cmd),
        Command::Bench(args) => run_bench(args),
    }
}

/// Resolves "--modulator <file|auto>"; auto searches with the given budget.
fn resolve_modulator(
    g: &Graph,
    spec: &str,
    k: Option<usize>,
    target: TargetClass,
) -> Result<BTreeSet<usize>, AppError> {
    if spec == "auto" {
        let budget = k.ok_or_else(|| {
            AppError::Usage("--modulator auto requires --k <budget>".into())
        })?;
        let found = match target {
            TargetClass::Threshold => threshold_modulator(g, budget),
            TargetClass::Clique => clique_modulator(g, budget),
        };
        match found {
            Some(m) => Ok(m.vertices),
            None => Err(AppError::Input(format!(
                "no modulator of size at most {budget} exists"
            ))),
        }
    } else {
        parse_modulator(&read_file(Path::new(spec))?, g).map_err(input_err)
    }
}

fn run_gen(cmd: GenCommand) -> Result<(), AppError> {
    match cmd {
        GenCommand::Threshold {
            n,
            seed,
            connected,
            seq,
            out,
        } => {
            let steps: Vec<ThresholdStep> = match seq {
                Some(text) => text
                    .chars()
                    .map(|ch| match ch {
                        'I' | 'i' => Ok(ThresholdStep::Isolated),
                        'U' | 'u' => Ok(ThresholdStep::Universal),
                        other => Err(AppError::Usage(format!(
                            "bad sequence character '{other}' (use I or U)"
                        ))),
                    })
                    .collect::<Result<_, _>>()?,
                None => random_threshold_steps(n, seed, connected),
            };
            let g = gen_threshold(&steps).map_err(input_err)?;
            std::fs::write(&out, write_dimacs(&g))
                .map_err(|e| AppError::Input(format!("cannot write {}: {e}", out.display())))?;
            println!("WROTE {}", out.display());
            Ok(())
        }
        GenCommand::Perturbed {
            base,
            d,
            prob,
            seed,
            out,
            modulator_out,
        } => {
            if !(0.0..=1.0).contains(&prob) {
                return Err(AppError::Usage("--prob must be in [0, 1]".into()));
            }
            let base_graph = load_graph(&base)?;
            let (g, x) = gen_perturbed(&base_graph, d, prob, seed);
            std::fs::write(&out, write_dimacs(&g))
                .map_err(|e| AppError::Input(format!("cannot write {}: {e}", out.display())))?;
            let mut wrote = format!("WROTE {}", out.display());
            if let Some(mpath) = modulator_out {
                let body: String = x.iter().map(|v| format!("{}\n", v + 1)).collect();
                std::fs::write(&mpath, body).map_err(|e| {
                    AppError::Input(format!("cannot write {}: {e}", mpath.display()))
                })?;
                let _ = write!(wrote, " {}", mpath.display());
            }
            println!("{wrote}");
            Ok(())
        }
    }
}

fn run_oracle(cmd: OracleCommand) -> Result<(), AppError> {
    match cmd {
        OracleCommand::Precolor {
            graph,
            precolor,
            r,
            max_vertices,
        } => {
            let g = load_graph(&graph)?;
            let pre = parse_precoloring(&read_file(&precolor)?, &g).map_err(input_err)?;
            let budget = OracleBudget::with_max_vertices(max_vertices);
            // the raw extension search needs no modulator
            let solution =
                fptcolor::oracle::oracle_color_extension(&g, r, &pre, &budget).map_err(input_err)?;
            if let Some(c) = &solution {
                let extends = pre.iter().all(|(&v, &col)| c.get(v) == Some(col));
                if is_proper(&g, c) != Ok(true) || !extends || c.colors_used().len() > r {
                    return Err(AppError::Internal(
                        "oracle solution failed re-verification".into(),
                    ));
                }
            }
            print!("{}", write_solution(solution.as_ref()));
            Ok(())
        }
        OracleCommand::Equitable {
            graph,
            r,
            max_vertices,
        } => {
            let g = load_graph(&graph)?;
            let budget = OracleBudget::with_max_vertices(max_vertices);
            let solution = oracle_equitable(&g, r, &budget).map_err(input_err)?;
            if let Some(c) = &solution {
                if verify_equitable(&g, c, r) != Ok(true) {
                    return Err(AppError::Internal(
                        "oracle solution failed re-verification".into(),
                    ));
                }
            }
            print!("{}", write_solution(solution.as_ref()));
            Ok(())
        }
        OracleCommand::List {
            graph,
            lists,
            max_vertices,
        } => {
            let g = load_graph(&graph)?;
            let lists = parse_lists(&read_file(&lists)?, &g).map_err(input_err)?;
            let budget = OracleBudget::with_max_vertices(max_vertices);
            let solution =
                fptcolor::oracle::oracle_list_raw(&g, &lists, &budget).map_err(input_err)?;
            if let Some(c) = &solution {
                if is_proper(&g, c) != Ok(true) || !lists.respects(c) {
                    return Err(AppError::Internal(
                        "oracle solution failed re-verification".into(),
                    ));
                }
            }
            print!("{}", write_solution(solution.as_ref()));
            Ok(())
        }
        OracleCommand::IndependentSet {
            graph,
            k,
            max_vertices,
        } => {
            let g = load_graph(&graph)?;
            let budget = OracleBudget::with_max_vertices(max_vertices);
            match oracle_independent_set(&g, k, &budget).map_err(input_err)? {
                Some(set) => {
                    let vs: Vec<usize> = set.iter().copied().collect();
                    if set.len() != k || !g.is_independent_set(&vs) {
                        return Err(AppError::Internal(
                            "oracle witness failed re-verification".into(),
                        ));
                    }
                    println!("STATUS YES");
                    let line: Vec<String> = set.iter().map(|v| (v + 1).to_string()).collect();
                    println!("{}", line.join(" "));
                }
                None => println!("STATUS NO"),
            }
            Ok(())
        }
    }
}

fn run_bench(args: BenchArgs) -> Result<(), AppError> {
    std::fs::create_dir_all(&args.out_dir)
        .map_err(|e| AppError::Input(format!("cannot create {}: {e}", args.out_dir.display())))?;
    let family_name = match args.family {
        Family::Equitable => "equitable",
        Family::Threshold => "threshold",
        Family::Precolor => "precolor",
    };
    let mut index = 0usize;
    for &n in &args.n {
        for &seed in &args.seeds {
            let report = bench_one(&args, family_name, n, seed, index)?;
            let line = serde_json::to_string(&report)
                .map_err(|e| AppError::Internal(format!("report serialization failed: {e}")))?;
            println!("{line}");
            index += 1;
        }
    }
    Ok(())
}

fn bench_one<'a>(
    args: &BenchArgs,
    family: &'a str,
    n: usize,
    seed: u64,
    index: usize,
) -> Result<RunReport<'a>, AppError> {
    let r = match args.r_mode {
        RMode::N => n,
        RMode::Half => n.div_ceil(2),
    };
    let (status, wall_ms, branches, solution): (&str, f64, u64, Option<Coloring>) =
        match args.family {
            Family::Equitable => {
                let k = args.k.min(n.saturating_sub(1));
                let steps = random_threshold_steps(n - k, seed, true);
                let base = gen_threshold(&steps).map_err(input_err)?;
                let (g, x) = gen_perturbed(&base, k, args.prob, seed ^ 0x9e37);
                let inst = EquitableInstance::new(g.clone(), r, x).map_err(input_err)?;
                let start = Instant::now();
                let (solution, stats) =
                    solve_equitable_fpt_with_stats(&inst).map_err(input_err)?;
                let wall = start.elapsed().as_secs_f64() * 1e3;
                if let Some(c) = &solution {
                    if verify_equitable(&g, c, r) != Ok(true) {
                        return Err(AppError::Internal("bench solution failed checks".into()));
                    }
                }
                (
                    if solution.is_some() { "YES" } else { "NO" },
                    wall,
                    stats.states,
                    solution,
                )
            }
            Family::Threshold => {
                let steps = random_threshold_steps(n, seed, true);
                let g = gen_threshold(&steps).map_err(input_err)?;
                let start = Instant::now();
                let solution = solve_equitable_threshold(&g, r).map_err(input_err)?;
                let wall = start.elapsed().as_secs_f64() * 1e3;
                if let Some(c) = &solution {
                    if verify_equitable(&g, c, r) != Ok(true) {
                        return Err(AppError::Internal("bench solution failed checks".into()));
                    }
                }
                (
                    if solution.is_some() { "YES" } else { "NO" },
                    wall,
                    0,
                    solution,
                )
            }
            Family::Precolor => {
                let k = args.k.min(n.saturating_sub(1));
                let base = Graph::complete(n - k);
                let (g, x) = gen_perturbed(&base, k, args.prob, seed ^ 0x51f1);
                // precolor a third of the vertices greedily
                let mut pre = std::collections::BTreeMap::new();
                for v in (0..g.vertex_count()).step_by(3) {
                    let blocked: BTreeSet<usize> = g
                        .neighbors(v)
                        .iter()
                        .filter_map(|u| pre.get(u).copied())
                        .collect();
                    if let Some(c) = (1..=r).find(|c| !blocked.contains(c)) {
                        pre.insert(v, c);
                    }
                }
                let inst = PrecolorInstance::new(g, x, r, pre).map_err(input_err)?;
                let start = Instant::now();
                let (solution, stats) = solve_precolor_with_stats(&inst);
                let wall = start.elapsed().as_secs_f64() * 1e3;
                if let Some(c) = &solution {
                    if !verify_solution(&inst, c) {
                        return Err(AppError::Internal("bench solution failed checks".into()));
                    }
                }
                (
                    if solution.is_some() { "YES" } else { "NO" },
                    wall,
                    stats.branches,
                    solution,
                )
            }
        };

    let solution_path = match solution {
        Some(c) => {
            let path = args
                .out_dir
                .join(format!("{family}-{index:04}-n{n}-s{seed}.sol"));
            std::fs::write(&path, write_solution(Some(&c)))
                .map_err(|e| AppError::Input(format!("cannot write {}: {e}", path.display())))?;
            Some(path.display().to_string())
        }
        None => None,
    };
    Ok(RunReport {
        command: "bench",
        family,
        n,
        k: args.k,
        seed,
        r,
        status,
        wall_ms,
        branches,
        solution_path,
    })
}
