//! `oc`: exact counts of rational curves osculating a very ample hypersurface
//! of a product of projective spaces (or of a homogeneous space supplied via
//! a descriptor file).
//!
//! Exit codes: 0 success, 1 argument or input error, 2 resource budget
//! exceeded, 3 verification failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use osculating::cache;
use osculating::rational::format_rational;
use osculating::report::{
    table_csv, table_text, BreakdownReport, ComputeReport, GwReport, VerifyReport,
};
use osculating::verify;
use osculating::{extend_table, AmbientSpace, Budget, CurveClass, OcTable};

#[derive(Parser)]
#[command(
    name = "oc",
    version,
    about = "Exact osculating-curve counts on products of projective spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the count for a single curve class
    Compute(QueryArgs),
    /// Compute counts for every nonzero class below a maximum
    Table(QueryArgs),
    /// Show the leading term and every partition correction for a class
    Breakdown(QueryArgs),
    /// Recover the one-point invariant of a class from computed counts
    Gw(QueryArgs),
    /// Run the built-in value and oracle checks
    Verify(VerifyArgs),
}

#[derive(Args)]
struct QueryArgs {
    /// Projective factor dimensions, comma separated (e.g. 5,6)
    #[arg(long, value_name = "S1,...,ST", conflicts_with = "descriptor")]
    space: Option<String>,
    /// JSON descriptor of a generic homogeneous space
    #[arg(long, value_name = "PATH")]
    descriptor: Option<PathBuf>,
    /// Curve class coefficients, comma separated (e.g. 3,4)
    #[arg(long, value_name = "B1,...,BT")]
    beta: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Read and update a persistent value cache
    #[arg(long, value_name = "PATH")]
    cache: Option<PathBuf>,
    /// Abort after visiting this many partitions
    #[arg(long, value_name = "N")]
    max_partitions: Option<u64>,
    /// Abort when any value needs more than this many bits
    #[arg(long, value_name = "N")]
    max_bits: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Abort after visiting this many partitions
    #[arg(long, value_name = "N")]
    max_partitions: Option<u64>,
    /// Abort when any value needs more than this many bits
    #[arg(long, value_name = "N")]
    max_bits: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<osculating::Error> for Failure {
    fn from(err: osculating::Error) -> Self {
        Failure {
            code: if err.is_budget_exceeded() { 2 } else { 1 },
            message: err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err)
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) =>
        {
            let _ = err.print();
            return ExitCode::SUCCESS;
        }
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            if !failure.message.is_empty() {
                eprintln!("error: {}", failure.message);
            }
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Compute(args) => compute(&args),
        Command::Table(args) => table(&args),
        Command::Breakdown(args) => breakdown(&args),
        Command::Gw(args) => gw(&args),
        Command::Verify(args) => run_verify(&args),
    }
}

/// Everything validated before the engine sees it: space, class, dimension
/// agreement, cache compatibility.
struct Session {
    space: AmbientSpace,
    beta: CurveClass,
    budget: Budget,
    table: OcTable,
    cache_path: Option<PathBuf>,
}

impl Session {
    fn open(args: &QueryArgs) -> Result<Self, Failure> {
        let space = resolve_space(args)?;
        let beta: CurveClass = args
            .beta
            .parse()
            .map_err(|e: osculating::Error| Failure::usage(e.to_string()))?;
        if beta.len() != space.factor_count() {
            return Err(Failure::usage(format!(
                "--beta {} has {} components but the space has {} factors",
                args.beta,
                beta.len(),
                space.factor_count()
            )));
        }
        if beta.is_zero() {
            return Err(Failure::usage("--beta must be nonzero"));
        }
        if args.cache.is_some() && !space.is_product() {
            return Err(Failure::usage(
                "cache persistence requires a product space; drop --cache or --descriptor",
            ));
        }
        let table = match &args.cache {
            Some(path) if path.exists() => cache::load_table(path, &space)?,
            _ => OcTable::new(space.clone()),
        };
        Ok(Session {
            space,
            beta,
            budget: Budget {
                max_partitions: args.max_partitions,
                max_bits: args.max_bits,
            },
            table,
            cache_path: args.cache.clone(),
        })
    }

    fn persist(&self) -> Result<(), Failure> {
        if let Some(path) = &self.cache_path {
            cache::save_table(&self.table, path)?;
        }
        Ok(())
    }

    fn report_side_channels(&self) {
        if self.beta.has_zero_component() {
            eprintln!("note: class {} vanishes in some factor", self.beta);
        }
        if self.cache_path.is_some() {
            eprintln!("cache hits: {}", self.table.cache_hits());
        }
    }
}

fn resolve_space(args: &QueryArgs) -> Result<AmbientSpace, Failure> {
    match (&args.space, &args.descriptor) {
        (Some(dims), None) => {
            let dims: Vec<u32> = dims
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u32>()
                        .map_err(|e| Failure::usage(format!("--space {dims:?}: {e}")))
                })
                .collect::<Result<_, _>>()?;
            Ok(AmbientSpace::product(dims)?)
        }
        (None, Some(path)) => Ok(AmbientSpace::load_descriptor(path)?),
        (None, None) => Err(Failure::usage("one of --space or --descriptor is required")),
        (Some(_), Some(_)) => unreachable!("clap rejects the conflict"),
    }
}

fn compute(args: &QueryArgs) -> Result<(), Failure> {
    let mut session = Session::open(args)?;
    let value = session.table.osculating_count(&session.beta, &session.budget)?;
    session.persist()?;
    match args.format {
        Format::Text => {
            session.report_side_channels();
            println!("{}", format_rational(&value));
        }
        Format::Json => {
            let mut report = ComputeReport::new(&session.space, &session.beta, &value);
            if session.cache_path.is_some() {
                report.cache_hits = Some(session.table.cache_hits());
            }
            println!("{}", report.to_json());
        }
        Format::Csv => {
            println!("{}", csv_header(session.beta.len(), "oc"));
            println!("{},{}", session.beta, format_rational(&value));
        }
    }
    Ok(())
}

fn table(args: &QueryArgs) -> Result<(), Failure> {
    let mut session = Session::open(args)?;
    extend_table(&mut session.table, &session.beta, &session.budget)?;
    session.persist()?;
    match args.format {
        Format::Text => {
            session.report_side_channels();
            print!("{}", table_text(&session.table, &session.beta)?);
        }
        Format::Json => println!("{}", cache::table_to_json(&session.table)?),
        Format::Csv => print!("{}", table_csv(&session.table, &session.beta)?),
    }
    Ok(())
}

fn breakdown(args: &QueryArgs) -> Result<(), Failure> {
    let mut session = Session::open(args)?;
    let breakdown = session
        .table
        .contribution_breakdown(&session.beta, &session.budget)?;
    session.persist()?;
    match args.format {
        Format::Text => {
            session.report_side_channels();
            println!("space: {}", session.space);
            println!("beta: {}", session.beta);
            println!("contact constant: {}", breakdown.contact_constant);
            println!("leading term: {}", format_rational(&breakdown.leading_term));
            for correction in &breakdown.corrections {
                println!(
                    "correction {}: weight {}, product {}, total {}",
                    correction.partition,
                    format_rational(&correction.weight),
                    format_rational(&correction.product_term),
                    format_rational(&correction.total),
                );
            }
            println!("result: {}", format_rational(&breakdown.result));
        }
        Format::Json => {
            println!("{}", BreakdownReport::new(&session.space, &breakdown).to_json())
        }
        Format::Csv => {
            return Err(Failure::usage(
                "breakdown has no csv form; use --format text or json",
            ))
        }
    }
    Ok(())
}

fn gw(args: &QueryArgs) -> Result<(), Failure> {
    let mut session = Session::open(args)?;
    extend_table(&mut session.table, &session.beta, &session.budget)?;
    let value = session.table.invariant_from_counts(&session.beta)?;
    session.persist()?;
    match args.format {
        Format::Text => {
            session.report_side_channels();
            println!("{}", format_rational(&value));
        }
        Format::Json => {
            println!("{}", GwReport::new(&session.space, &session.beta, &value).to_json())
        }
        Format::Csv => {
            println!("{}", csv_header(session.beta.len(), "gw"));
            println!("{},{}", session.beta, format_rational(&value));
        }
    }
    Ok(())
}

fn csv_header(components: usize, value_column: &str) -> String {
    let mut header = String::new();
    for i in 1..=components {
        header.push_str(&format!("beta_{i},"));
    }
    header.push_str(value_column);
    header
}

fn run_verify(args: &VerifyArgs) -> Result<(), Failure> {
    let budget = Budget {
        max_partitions: args.max_partitions,
        max_bits: args.max_bits,
    };
    let checks = verify::run_all(&budget);
    let report = VerifyReport::new(checks);
    match args.format {
        Format::Text => {
            for check in &report.checks {
                if check.pass {
                    println!("PASS  {}", check.name);
                } else {
                    println!(
                        "FAIL  {}: expected {}, got {}",
                        check.name, check.expected, check.actual
                    );
                }
            }
            println!("{} passed, {} failed", report.passed, report.failed);
        }
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => {
            return Err(Failure::usage(
                "verify has no csv form; use --format text or json",
            ))
        }
    }
    if report.failed > 0 {
        return Err(Failure {
            code: 3,
            message: String::new(),
        });
    }
    Ok(())
}
