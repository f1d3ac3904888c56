use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use symplectic_ice::Rational;
use symplectic_ice_cli::{eval_value, EvalArgs, EvalWhat, MeOp, SuiteId, SuiteSpec, ALL_SUITES};

#[derive(Parser)]
#[command(
    name = "symplectic-ice",
    about = "Exact verification suites and evaluation for the reflecting-boundary free-fermion six-vertex model",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one verification suite and report exact comparisons.
    Verify(VerifyArgs),
    /// Evaluate a single exact quantity from flags.
    Eval(EvalFlags),
    /// List the suite catalog.
    ListSuites,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite id (see list-suites).
    suite: String,
    /// Cap on the number of lattice sites M.
    #[arg(long)]
    m_max: Option<usize>,
    /// Cap on the particle/hole count N (or variable count where applicable).
    #[arg(long)]
    n_max: Option<usize>,
    /// Random points per enumerated configuration.
    #[arg(long)]
    trials: Option<usize>,
    /// 64-bit reproducibility seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit the report as JSON instead of the human-readable table.
    #[arg(long)]
    json: bool,
    /// Run against the deliberately corrupted weight table (negative control).
    #[arg(long, hide = true)]
    corrupt_weights: bool,
}

#[derive(Args)]
struct EvalFlags {
    /// One of: wavefunction, dual, sp, factorial-sp, me-closed, double-row-me.
    what: String,
    /// Number of lattice sites M.
    #[arg(long)]
    m: Option<usize>,
    /// Number of particles/holes N (cross-checked against the lists).
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated positions (particles for wavefunction, holes for dual).
    #[arg(long, value_delimiter = ',')]
    x: Option<Vec<usize>>,
    /// Comma-separated bra hole positions for matrix elements.
    #[arg(long, value_delimiter = ',')]
    xbar: Option<Vec<usize>>,
    /// Comma-separated ket hole positions for matrix elements.
    #[arg(long, value_delimiter = ',')]
    ybar: Option<Vec<usize>>,
    /// Comma-separated partition parts.
    #[arg(long, value_delimiter = ',')]
    lambda: Option<Vec<u32>>,
    /// Comma-separated spectral parameters (rationals like 2 or -5/3).
    #[arg(long, value_delimiter = ',')]
    z: Option<Vec<Rational>>,
    /// Deformation parameter t.
    #[arg(long)]
    t: Option<Rational>,
    /// Comma-separated shift parameters a0,a1,...
    #[arg(long, value_delimiter = ',')]
    alphas: Option<Vec<Rational>>,
    /// Single-row operator for me-closed: a, b, atilde, btilde.
    #[arg(long)]
    op: Option<MeOp>,
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run_verify(args: &VerifyArgs) -> ExitCode {
    let suite: SuiteId = match args.suite.parse() {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    let mut spec = SuiteSpec::new(suite);
    spec.seed = args.seed;
    if let Some(m) = args.m_max {
        spec.m_max = m;
    }
    if let Some(n) = args.n_max {
        spec.n_max = n;
    }
    if let Some(t) = args.trials {
        spec.trials = t;
    }
    let fixture = if args.corrupt_weights {
        symplectic_ice::lattice::WeightFixture::CorruptedFirstL
    } else {
        symplectic_ice::lattice::WeightFixture::Reference
    };
    match symplectic_ice_cli::run_suite_with_fixture(&spec, fixture) {
        Ok(report) => {
            if args.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.human());
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => usage_error(e),
    }
}

fn run_eval(flags: &EvalFlags) -> ExitCode {
    let what: EvalWhat = match flags.what.parse() {
        Ok(w) => w,
        Err(e) => return usage_error(e),
    };
    let args = EvalArgs {
        m: flags.m,
        n: flags.n,
        x: flags.x.clone(),
        xbar: flags.xbar.clone(),
        ybar: flags.ybar.clone(),
        lambda: flags.lambda.clone(),
        z: flags.z.clone(),
        t: flags.t.clone(),
        alphas: flags.alphas.clone(),
        op: flags.op,
    };
    match eval_value(what, &args) {
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => run_verify(&args),
        Command::Eval(flags) => run_eval(&flags),
        Command::ListSuites => {
            for id in ALL_SUITES {
                println!("{:<12} {}", id.as_str(), id.describe());
            }
            ExitCode::SUCCESS
        }
    }
}
