//! `symdio`: parametric solutions of symmetric homogeneous Diophantine
//! equations of odd degree.
//!
//! Exit status: 0 on certified success, 1 on usage or input errors, 2 when
//! the mathematics degenerates (the report names the failing stage).

mod emit;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use symdio::reduce;
use symdio::solution::ParametricSolution;
use symdio::verify::{self, CertifyOptions, Target, DEFAULT_BUDGET};
use symdio::waring::{self, WaringProblem};
use symdio::{rational, CertificateKind, Error, SymmetricForm};

#[derive(Debug, Parser)]
#[command(name = "symdio", version, about = "Certified parametric solutions of symmetric odd-degree equations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Symmetry, degree and power-sum decomposition of a form.
    Analyze(FormArgs),
    /// Solve F(x) = 0 with x1 + … + xN = 0.
    Solve(SolveArgs),
    /// Solve F(x) = q in 6·2^(n-4) variables.
    Waring(WaringArgs),
    /// Re-certify a solution file against a form.
    Verify(VerifyArgs),
    /// Fix some parameters of a solution to rationals and re-certify.
    Specialize(SpecializeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Args)]
struct FormArgs {
    /// Expression over x1..xN, a builtin (`diagonal:n:N`,
    /// `powersum-product:N:k1,k2,…`), or a path to a polynomial JSON file.
    #[arg(long)]
    form: String,
    /// Ambient variable count (default: the largest index used).
    #[arg(long)]
    nvars: Option<usize>,
    #[arg(long, value_enum, default_value_t = Emit::Text)]
    emit: Emit,
    /// Write the artifact here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest symbolic expansion attempted before sampling.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Specialize the result down to this many parameters.
    #[arg(long)]
    params: Option<usize>,
}

impl RunArgs {
    fn options(&self) -> CertifyOptions {
        CertifyOptions { budget: self.budget, seed: self.seed, ..CertifyOptions::default() }
    }
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    form: FormArgs,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Debug, Args)]
struct WaringArgs {
    #[command(flatten)]
    form: FormArgs,
    /// Right-hand side, `p/q` or an integer.
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    form: FormArgs,
    /// Solution JSON file.
    #[arg(long)]
    solution: PathBuf,
    /// Target value; defaults to the one recorded in the solution.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Debug, Args)]
struct SpecializeArgs {
    #[command(flatten)]
    form: FormArgs,
    #[arg(long)]
    solution: PathBuf,
    /// `name=value`, repeatable.
    #[arg(long = "assign", value_name = "NAME=VALUE")]
    assign: Vec<String>,
    #[command(flatten)]
    run: RunArgs,
}

/// Why a command did not succeed.
enum Failure {
    Usage(anyhow::Error),
    Math(Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast::<Error>() {
            Ok(err) if err.is_degeneracy() => Failure::Math(err),
            Ok(err) => Failure::Usage(err.into()),
            Err(e) => Failure::Usage(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from(anyhow::Error::from(e))
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (emit, out) = match &cli.command {
        Command::Analyze(f) => (f.emit, f.out.clone()),
        Command::Solve(a) => (a.form.emit, a.form.out.clone()),
        Command::Waring(a) => (a.form.emit, a.form.out.clone()),
        Command::Verify(a) => (a.form.emit, a.form.out.clone()),
        Command::Specialize(a) => (a.form.emit, a.form.out.clone()),
    };
    let waring_run = matches!(cli.command, Command::Waring(_));
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Math(e)) => {
            let report = emit::degeneracy_report(&e, emit, waring_run);
            if let Err(io) = emit::write_artifact(out.as_deref(), &report) {
                eprintln!("error: {io:#}");
            }
            eprintln!("{}: {e}", e.name());
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Analyze(args) => analyze(&args),
        Command::Solve(args) => solve(&args),
        Command::Waring(args) => run_waring(&args),
        Command::Verify(args) => verify_cmd(&args),
        Command::Specialize(args) => specialize_cmd(&args),
    }
}

fn analyze(args: &FormArgs) -> Outcome {
    let poly = source::load_poly(&args.form, args.nvars).map_err(Failure::Usage)?;
    let report = emit::analysis(&poly, args.emit);
    emit::write_artifact(args.out.as_deref(), &report).map_err(Failure::Usage)
}

fn load_form(args: &FormArgs) -> Result<SymmetricForm, Failure> {
    source::load_form(&args.form, args.nvars).map_err(Failure::Usage)
}

/// Optional specialization to `--params k`.
fn finish(form: &SymmetricForm, sol: ParametricSolution, run: &RunArgs) -> Result<ParametricSolution, Failure> {
    match run.params {
        Some(k) if k < sol.nparams() => {
            let assignments = verify::choose_assignments(&sol, k, run.seed)?;
            Ok(verify::specialize(form.poly(), &sol, &assignments, &run.options())?)
        }
        Some(k) if k > sol.nparams() => Err(Error::ParameterShortfall { needed: k, got: sol.nparams() }.into()),
        _ => Ok(sol),
    }
}

fn solve(args: &SolveArgs) -> Outcome {
    let form = load_form(&args.form)?;
    let sol = reduce::solve(&form, &args.run.options())?;
    let sol = finish(&form, sol, &args.run)?;
    emit::write_solution(&sol, args.form.emit, args.form.out.as_deref()).map_err(Failure::Usage)
}

fn run_waring(args: &WaringArgs) -> Outcome {
    let form = load_form(&args.form)?;
    let q = rational::parse(&args.q).map_err(|e| Failure::Usage(anyhow!("--q: {e}")))?;
    let prob = WaringProblem::new(form.clone(), q).map_err(|e| Failure::Usage(e.into()))?;
    let sol = waring::solve_waring(&prob, &args.run.options())?;
    let sol = finish(&form, sol, &args.run)?;
    emit::write_solution(&sol, args.form.emit, args.form.out.as_deref()).map_err(Failure::Usage)
}

fn read_solution(path: &std::path::Path) -> Result<ParametricSolution, Failure> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::Usage)?;
    ParametricSolution::from_json(&text).map_err(|e| Failure::Usage(anyhow!("{}: {e}", path.display())))
}

fn verify_cmd(args: &VerifyArgs) -> Outcome {
    let poly = source::load_poly(&args.form.form, args.form.nvars).map_err(Failure::Usage)?;
    let mut sol = read_solution(&args.solution)?;
    let target = match (&args.q, &sol.certificate) {
        (Some(q), _) => Target::Value(rational::parse(q).map_err(|e| Failure::Usage(anyhow!("--q: {e}")))?),
        (None, Some(c)) if c.kind == CertificateKind::Value => Target::Value(c.target()),
        _ => Target::Zero,
    };
    let cert = verify::certify(&poly, &sol, &target, &args.run.options())?;
    sol.certificate = Some(cert);
    emit::write_solution(&sol, args.form.emit, args.form.out.as_deref()).map_err(Failure::Usage)
}

fn specialize_cmd(args: &SpecializeArgs) -> Outcome {
    let form = load_form(&args.form)?;
    let sol = read_solution(&args.solution)?;
    let mut assignments = Vec::with_capacity(args.assign.len());
    for a in &args.assign {
        let (name, value) =
            a.split_once('=').ok_or_else(|| Failure::Usage(anyhow!("--assign expects NAME=VALUE, got {a:?}")))?;
        let value = rational::parse(value).map_err(|e| Failure::Usage(anyhow!("--assign {name}: {e}")))?;
        assignments.push((name.trim().to_string(), value));
    }
    let sol = verify::specialize(form.poly(), &sol, &assignments, &args.run.options())?;
    let sol = finish(&form, sol, &args.run)?;
    emit::write_solution(&sol, args.form.emit, args.form.out.as_deref()).map_err(Failure::Usage)
}
