//! The `convex-domset` command line.
//!
//! Exit codes: 0 success, 1 infeasible, 2 usage error, 3 I/O or validation
//! error (including a solution that fails verification), 4 oracle mismatch.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::geometry::{Instance, Mode};
use crate::io::{
    gen_figure1, gen_random, render_svg, Family, GenParams, InstanceDocument, IoError, Law,
    SolutionDocument, SolverKind,
};
use crate::oracle::{self, OracleError};
use crate::solution::{Solution, SolveError};
use crate::unweighted_greedy::solve_unweighted_with;
use crate::weighted_dp::{solve_weighted_with, SolverConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

const WEIGHT_TOLERANCE: f64 = 1e-9;

#[derive(Parser, Debug)]
#[command(
    name = "convex-domset",
    version,
    about = "Dominating sets of disk graphs with convex-position centers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a random or large-disk instance.
    Gen(GenArgs),
    /// Solve an instance.
    Solve(SolveArgs),
    /// Check that a solution dominates its instance.
    Verify(VerifyArgs),
    /// Exhaustive search, optionally compared with the fast solvers.
    Oracle(OracleArgs),
    /// Time the solvers over a range of sizes.
    Bench(BenchArgs),
    /// Render an instance (and solution) as SVG.
    Plot(PlotArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "circle")]
    family: Family,
    #[arg(long, default_value = "uniform:0.5,1.5")]
    radius_law: Law,
    #[arg(long, default_value = "unit")]
    weight_law: Law,
    /// Large disk with alternating small disks instead of a random instance.
    #[arg(long)]
    figure1: bool,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct ModeArgs {
    #[arg(long, conflicts_with = "unweighted")]
    weighted: bool,
    #[arg(long)]
    unweighted: bool,
}

impl ModeArgs {
    fn mode(&self) -> Mode {
        if self.weighted {
            Mode::Weighted
        } else {
            Mode::Unweighted
        }
    }
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[command(flatten)]
    mode: ModeArgs,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    solution: PathBuf,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[command(flatten)]
    mode: ModeArgs,
    #[arg(long)]
    k: Option<usize>,
    /// Also run the matching solver and fail on disagreement.
    #[arg(long)]
    compare: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BenchSolver {
    Dp,
    Greedy,
    Both,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, default_value = "circle")]
    family: Family,
    #[arg(long, default_value = "uniform:0.5,1.5")]
    radius_law: Law,
    #[arg(long, default_value = "unit")]
    weight_law: Law,
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    repeats: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = BenchSolver::Both)]
    solver: BenchSolver,
    /// Size bound; the weighted solver defaults to 4.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    csv: PathBuf,
}

#[derive(Args, Debug)]
struct PlotArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    solution: Option<PathBuf>,
    #[arg(long)]
    out: PathBuf,
}

/// A failure carrying its exit code.
struct Exit(i32, String);

impl From<IoError> for Exit {
    fn from(e: IoError) -> Self {
        Exit(EXIT_INVALID, e.to_string())
    }
}

fn solver_config() -> SolverConfig {
    SolverConfig {
        check_invariants: false,
        ..SolverConfig::default()
    }
}

/// Parses `argv` (program name first), runs the subcommand and returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Solve(a) => solve(a),
        Command::Verify(a) => verify(a),
        Command::Oracle(a) => oracle_cmd(a),
        Command::Bench(a) => bench(a),
        Command::Plot(a) => plot(a),
    };
    match result {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            eprintln!("error: {msg}");
            code
        }
    }
}

fn load_instance(path: &Path, mode: Mode) -> Result<Instance, Exit> {
    Ok(InstanceDocument::load(path)?.to_instance(mode)?)
}

fn summary(sol: &Solution) -> String {
    format!(
        "size={} weight={} centers={:?} verified={}",
        sol.size, sol.weight, sol.centers, sol.verified
    )
}

fn run_solver(
    instance: &Instance,
    mode: Mode,
    k: Option<usize>,
) -> (usize, Result<Solution, SolveError>) {
    let n = instance.len();
    match mode {
        Mode::Weighted => {
            let k = k.unwrap_or(n);
            (k, solve_weighted_with(instance, k, solver_config()))
        }
        Mode::Unweighted => (
            k.unwrap_or(n),
            solve_unweighted_with(instance, k, solver_config()),
        ),
    }
}

fn solver_kind(mode: Mode) -> SolverKind {
    match mode {
        Mode::Weighted => SolverKind::Dp,
        Mode::Unweighted => SolverKind::Greedy,
    }
}

fn gen(a: GenArgs) -> Result<i32, Exit> {
    let doc = if a.figure1 {
        gen_figure1(a.n)?
    } else {
        gen_random(&GenParams {
            n: a.n,
            seed: a.seed,
            family: a.family,
            radius_law: a.radius_law,
            weight_law: a.weight_law,
        })?
    };
    doc.save(&a.out)?;
    println!("wrote {} points to {}", doc.points.len(), a.out.display());
    Ok(EXIT_OK)
}

fn solve(a: SolveArgs) -> Result<i32, Exit> {
    let mode = a.mode.mode();
    let instance = load_instance(&a.input, mode)?;
    let (k, result) = run_solver(&instance, mode, a.k);
    match result {
        Ok(sol) => {
            println!("{}", summary(&sol));
            if let Some(out) = &a.out {
                SolutionDocument::new(&sol, k, solver_kind(mode)).save(out)?;
            }
            Ok(EXIT_OK)
        }
        Err(SolveError::Infeasible { k }) => {
            println!("infeasible: no dominating set of size at most {k}");
            Ok(EXIT_INFEASIBLE)
        }
        Err(e @ SolveError::InvalidK { .. }) => Err(Exit(EXIT_USAGE, e.to_string())),
    }
}

fn verify(a: VerifyArgs) -> Result<i32, Exit> {
    let text = crate::io::document_text(&a.solution)?;
    let doc = SolutionDocument::from_json(&text)?;
    let instance = load_instance(&a.input, doc.mode)?;
    let doc = SolutionDocument::load(&a.solution, &instance)?;
    if doc.verified {
        println!(
            "verified: {} centers dominate all {} points",
            doc.centers.len(),
            instance.len()
        );
        Ok(EXIT_OK)
    } else {
        println!("not a dominating set");
        Ok(EXIT_INVALID)
    }
}

fn oracle_cmd(a: OracleArgs) -> Result<i32, Exit> {
    let mode = a.mode.mode();
    let instance = load_instance(&a.input, mode)?;
    let brute = match oracle::brute_force_min(&instance, mode, a.k) {
        Ok(sol) => Ok(sol),
        Err(OracleError::Infeasible { k }) => Err(k),
        Err(e @ OracleError::TooLarge { .. }) => return Err(Exit(EXIT_INVALID, e.to_string())),
    };
    match &brute {
        Ok(sol) => println!("brute: {}", summary(sol)),
        Err(k) => println!("brute: infeasible for k={k}"),
    }
    if a.compare {
        let (_, fast) = run_solver(&instance, mode, a.k);
        match &fast {
            Ok(sol) => println!("solver: {}", summary(sol)),
            Err(e) => println!("solver: {e}"),
        }
        let agree = match (&brute, &fast) {
            (Ok(b), Ok(f)) => {
                f.verified
                    && match mode {
                        Mode::Weighted => (b.weight - f.weight).abs() <= WEIGHT_TOLERANCE,
                        Mode::Unweighted => b.size == f.size,
                    }
            }
            (Err(_), Err(SolveError::Infeasible { .. })) => true,
            _ => false,
        };
        if !agree {
            println!("mismatch");
            return Ok(EXIT_MISMATCH);
        }
        println!("match");
    }
    Ok(if brute.is_ok() {
        EXIT_OK
    } else {
        EXIT_INFEASIBLE
    })
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let m = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[m]
    } else {
        (xs[m - 1] + xs[m]) / 2.0
    }
}

fn bench(a: BenchArgs) -> Result<i32, Exit> {
    if a.repeats == 0 {
        return Err(Exit(EXIT_USAGE, "--repeats must be positive".into()));
    }
    let mut csv = String::from("n,k,solver,millis,size_or_weight\n");
    let mut rows = 0;
    for &n in &a.sizes {
        let params = GenParams {
            n,
            seed: a.seed,
            family: a.family,
            radius_law: a.radius_law,
            weight_law: a.weight_law,
        };
        let mut modes = Vec::new();
        if a.solver != BenchSolver::Greedy {
            modes.push(Mode::Weighted);
        }
        if a.solver != BenchSolver::Dp {
            modes.push(Mode::Unweighted);
        }
        for mode in modes {
            let instance = gen_random(&params)?.to_instance(mode)?;
            let k = match mode {
                Mode::Weighted => Some(a.k.unwrap_or(4).min(n)),
                Mode::Unweighted => a.k,
            };
            let mut times = Vec::with_capacity(a.repeats);
            let mut outcome = String::new();
            let mut bound = 0;
            for _ in 0..a.repeats {
                let start = Instant::now();
                let (used, result) = run_solver(&instance, mode, k);
                times.push(start.elapsed().as_secs_f64() * 1e3);
                bound = used;
                outcome = match (mode, result) {
                    (Mode::Weighted, Ok(sol)) => sol.weight.to_string(),
                    (Mode::Unweighted, Ok(sol)) => sol.size.to_string(),
                    (_, Err(_)) => "infeasible".to_string(),
                };
            }
            let _ = writeln!(
                csv,
                "{n},{bound},{},{:.3},{outcome}",
                match mode {
                    Mode::Weighted => "dp",
                    Mode::Unweighted => "greedy",
                },
                median(times)
            );
            rows += 1;
        }
    }
    crate::io::write_text(&a.csv, &csv)?;
    println!("wrote {rows} rows to {}", a.csv.display());
    Ok(EXIT_OK)
}

fn plot(a: PlotArgs) -> Result<i32, Exit> {
    let doc = InstanceDocument::load(&a.input)?;
    let (instance, highlight) = match &a.solution {
        Some(path) => {
            let sol = SolutionDocument::from_json(&crate::io::document_text(path)?)?;
            let instance = doc.to_instance(sol.mode)?;
            let centers = sol.canonical_centers(&instance)?;
            (instance, centers)
        }
        None => (doc.to_instance(Mode::Unweighted)?, Vec::new()),
    };
    crate::io::write_text(&a.out, &render_svg(&instance, &highlight))?;
    println!("wrote {}", a.out.display());
    Ok(EXIT_OK)
}
