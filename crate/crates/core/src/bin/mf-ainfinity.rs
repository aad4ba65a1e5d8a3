use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use mf_ainfinity::report::to_canonical_json;
use mf_ainfinity::trees::{Engine, MuTable, Strategy, TransferOptions};
use mf_ainfinity::verify::{self, Suite, SuiteConfig};
use mf_ainfinity::{sod, Context, Error, Potential};

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INVARIANT: u8 = 3;

#[derive(Parser)]
#[command(name = "mf-ainfinity", version, about = "A-infinity minimal models of Koszul matrix factorizations")]
struct Cli {
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "MF_AINFINITY_THREADS", default_value_t = 0)]
    threads: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the artifact here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the table of transferred products.
    Transfer(TransferArgs),
    /// Run verification suites.
    Check(CheckArgs),
    /// Semiorthogonal decomposition numerology.
    #[command(subcommand)]
    Sod(SodCommand),
}

#[derive(Args)]
struct PotentialArgs {
    #[arg(long)]
    vars: usize,
    #[arg(long)]
    degree: u32,
    #[arg(long)]
    potential: String,
    /// Bivalent-vertex cap for the enumerated strategy at d = 2.
    #[arg(long, default_value_t = mf_ainfinity::conventions::DEFAULT_M_CAP)]
    m_cap: usize,
    #[arg(long, value_enum, default_value_t = StrategyArg::Memoized)]
    strategy: StrategyArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Memoized,
    Enumerated,
}

impl PotentialArgs {
    fn context(&self) -> Result<Context, Error> {
        Ok(Context::new(Potential::parse_with_degree(&self.potential, self.vars, self.degree)?))
    }

    fn options(&self) -> TransferOptions {
        TransferOptions {
            strategy: match self.strategy {
                StrategyArg::Memoized => Strategy::Memoized,
                StrategyArg::Enumerated => Strategy::Enumerated,
            },
            prune: true,
            m_cap: self.m_cap,
        }
    }
}

#[derive(Args)]
struct TransferArgs {
    #[command(flatten)]
    potential: PotentialArgs,
    /// Highest arity computed (default: the degree, at least 2).
    #[arg(long)]
    max_k: Option<usize>,
    /// Largest exterior degree of an input.
    #[arg(long, default_value_t = 1)]
    theta_cap: u32,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    potential: PotentialArgs,
    #[arg(long, value_enum)]
    suite: SuiteArg,
    #[arg(long)]
    sym_bound: Option<u32>,
    #[arg(long)]
    side_bound: Option<u32>,
    #[arg(long)]
    max_k: Option<usize>,
    #[arg(long)]
    theta_cap: Option<u32>,
    #[arg(long)]
    max_relation: Option<usize>,
    /// Check this table (as written by `transfer`) instead of computing one.
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Side,
    Factorization,
    Mu,
    Stasheff,
    All,
}

#[derive(Subcommand)]
enum SodCommand {
    /// Degree-d hypersurface in P^(N-1).
    Orlov {
        #[arg(long)]
        dim: i64,
        #[arg(long)]
        degree: i64,
    },
    /// Relative complete intersection.
    Relative {
        #[arg(long)]
        rank: i64,
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<i64>,
    },
    /// Lefschetz block widths.
    Lefschetz {
        #[arg(long)]
        rank: i64,
        #[arg(long)]
        degree: i64,
    },
    /// Veronese branch selection.
    Veronese {
        #[arg(long)]
        rank: i64,
        #[arg(long)]
        degree: i64,
        #[arg(long)]
        codim: i64,
    },
}

struct Output {
    format: Format,
    out: Option<PathBuf>,
}

impl Output {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> Result<(), ExitCode> {
        let body = match self.format {
            Format::Json => to_canonical_json(value) + "\n",
            Format::Text => text(),
        };
        match &self.out {
            Some(path) => fs::write(path, body).map_err(|e| {
                eprintln!("error: cannot write {}: {}", path.display(), e);
                ExitCode::from(EXIT_INPUT)
            }),
            None => {
                print!("{}", body);
                Ok(())
            }
        }
    }
}

fn input_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {}", e);
    ExitCode::from(EXIT_INPUT)
}

fn transfer(args: &TransferArgs, out: &Output) -> Result<ExitCode, ExitCode> {
    let ctx = args.potential.context().map_err(input_error)?;
    let max_k = args.max_k.unwrap_or(ctx.d() as usize).max(2);
    let engine = Engine::new(&ctx, args.potential.options());
    let table = MuTable::compute(&engine, max_k, args.theta_cap);
    out.emit(&table.to_wire(), || table.to_text())?;
    let invariants = [verify::check_minimality(&table), verify::check_grading_laws(&table)];
    if invariants.iter().all(|r| r.passed()) {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("{}", to_canonical_json(&invariants));
        Ok(ExitCode::from(EXIT_INVARIANT))
    }
}

fn check(args: &CheckArgs, out: &Output) -> Result<ExitCode, ExitCode> {
    let ctx = args.potential.context().map_err(input_error)?;
    let table = match &args.table {
        Some(path) => {
            let s = fs::read_to_string(path).map_err(|e| input_error(format!("{}: {}", path.display(), e)))?;
            Some(MuTable::from_json(&s).map_err(input_error)?)
        }
        None => None,
    };
    let suite = match args.suite {
        SuiteArg::Side => Suite::Side,
        SuiteArg::Factorization => Suite::Factorization,
        SuiteArg::Mu => Suite::Mu,
        SuiteArg::Stasheff => Suite::Stasheff,
        SuiteArg::All => Suite::All,
    };
    let cfg = SuiteConfig {
        sym_bound: args.sym_bound,
        side_bound: args.side_bound,
        max_k: args.max_k,
        theta_cap: args.theta_cap,
        max_relation: args.max_relation,
        options: args.potential.options(),
    };
    let report = verify::run_suite(&ctx, suite, &cfg, table.as_ref()).map_err(input_error)?;
    out.emit(&report, || report.to_text())?;
    Ok(if report.status.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    })
}

fn sod_command(cmd: &SodCommand, out: &Output) -> Result<ExitCode, ExitCode> {
    match cmd {
        SodCommand::Orlov { dim, degree } => {
            let d = sod::orlov_case(*dim, *degree).map_err(input_error)?;
            out.emit(&d, || d.to_text() + "\n")?;
        }
        SodCommand::Relative { rank, degrees } => {
            let d = sod::relative_ci(*rank, degrees).map_err(input_error)?;
            out.emit(&d, || d.to_text() + "\n")?;
        }
        SodCommand::Lefschetz { rank, degree } => {
            let s = sod::lefschetz_blocks(*rank, *degree).map_err(input_error)?;
            out.emit(&s, || format!("i = {}, k = {}, widths = {:?}\n", s.i, s.k, s.widths))?;
        }
        SodCommand::Veronese { rank, degree, codim } => {
            let v = sod::veronese_branch(*rank, *degree, *codim).map_err(input_error)?;
            out.emit(&v, || v.iter().map(|d| d.to_text() + "\n").collect())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
            return input_error(e);
        }
    }
    let out = Output {
        format: cli.format,
        out: cli.out.clone(),
    };
    let result = match &cli.command {
        Command::Transfer(a) => transfer(a, &out),
        Command::Check(a) => check(a, &out),
        Command::Sod(c) => sod_command(c, &out),
    };
    result.unwrap_or_else(|code| code)
}
