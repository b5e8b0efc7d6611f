//! `conormal`: evaluate weight functions, `Y_I`, Schubert and conormal classes
//! symbolically, and run the identity suites.

mod selftest;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use conormal::cohomology::{Grassmannian, SignConvention};
use conormal::combinatorics::SubsetIndex;
use conormal::tensor::{invert_y_transition, y_as_w_combo, y_coefficients, y_via_operators};
use conormal::verify::{exit_code, Engine, Selection, SignFault, Suite};
use conormal::weights::{poly_n, schur_delta, weight_w, weight_w_dual};
use conormal::{AlgebraError, Rational};

#[derive(Parser)]
#[command(
    name = "conormal",
    version,
    about = "Exact checks for conormal classes, weight functions and R-matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one object in canonical form (a polynomial, a fixed-point table
    /// or a row of coefficients).
    Eval(EvalArgs),
    /// Run identity suites and print one report line per (suite, k, n).
    Check(CheckArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Object {
    #[value(name = "W")]
    W,
    #[value(name = "Wdual")]
    Wdual,
    #[value(name = "Y")]
    Y,
    #[value(name = "N")]
    N,
    #[value(name = "Delta")]
    Delta,
    #[value(name = "kappa")]
    Kappa,
    #[value(name = "kappa_prime")]
    KappaPrime,
    #[value(name = "c")]
    C,
    #[value(name = "c_prime")]
    CPrime,
}

#[derive(clap::Args)]
struct EvalArgs {
    object: Object,
    /// Size of the subset; defaults to the size of `--I`.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: usize,
    /// The subset, e.g. `{2,4}` or `2,4`. An unquoted `{2,4}` that the shell
    /// brace-expands into `2 4` is accepted as well.
    #[arg(long = "I", value_name = "SUBSET", num_args = 1.., required = true)]
    subset: Vec<String>,
    /// For `Y`: print the combination of weight functions instead of the polynomial.
    #[arg(long = "as-W-combo")]
    as_w_combo: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    #[value(name = "json-lines")]
    JsonLines,
}

#[derive(clap::Args)]
struct CheckArgs {
    /// Suites to run (`all` for every suite).
    #[arg(value_name = "SUITE", default_value = "all")]
    suites: Vec<String>,
    /// Further suites, as an option.
    #[arg(long = "suite", value_name = "SUITE")]
    suite: Vec<String>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long = "k-max")]
    k_max: Option<usize>,
    /// Largest n; each suite has its own default.
    #[arg(long = "n-max")]
    n_max: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Also run a randomized self-test of the polynomial arithmetic with this
    /// seed. The identity suites themselves are exhaustive.
    #[arg(long)]
    seed: Option<u64>,
    /// Flip the sign of one subset (the bottom cell `{1..k}` if no subset is
    /// given) to check that the suites notice.
    #[arg(long = "inject-sign-fault", value_name = "SUBSET", num_args = 0..=1, default_missing_value = "bottom")]
    inject_sign_fault: Option<String>,
    /// Run instances that are skipped by default because of their cost.
    #[arg(long)]
    large: bool,
}

fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn algebra_error(e: AlgebraError) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        AlgebraError::DivisionNotExact { .. } => ExitCode::from(3),
        _ => ExitCode::from(1),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval(args) => eval(args),
        Command::Check(args) => check(args),
    }
}

fn eval(args: EvalArgs) -> ExitCode {
    let i = match SubsetIndex::parse(args.n, &args.subset.join(",")) {
        Ok(i) => i,
        Err(e) => return usage_error(e),
    };
    if let Some(k) = args.k {
        if k != i.k() {
            return usage_error(format!("--k {k} does not match the subset {i}"));
        }
    }
    match render(args.object, &i, args.as_w_combo) {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => algebra_error(e),
    }
}

fn render(object: Object, i: &SubsetIndex, as_w_combo: bool) -> conormal::Result<String> {
    let (k, n) = (i.k(), i.n());
    let grid = || Grassmannian::<Rational>::new(k, n, SignConvention::standard());
    let row = |entries: Vec<(SubsetIndex, Rational)>| {
        entries
            .into_iter()
            .map(|(j, c)| format!("{j}: {c}"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    Ok(match object {
        Object::W => weight_w::<Rational>(i)?.to_string(),
        Object::Wdual => weight_w_dual::<Rational>(i)?.to_string(),
        Object::Y if as_w_combo => y_as_w_combo::<Rational>(i)?,
        Object::Y => y_via_operators::<Rational>(i)?.to_string(),
        Object::N => poly_n::<Rational>(i).to_string(),
        Object::Delta => schur_delta::<Rational>(i)?.to_string(),
        Object::Kappa => grid()?.kappa(i)?.to_string(),
        Object::KappaPrime => grid()?.kappa_prime(i)?.to_string(),
        Object::C => row(y_coefficients::<Rational>(i)?.into_iter().collect()),
        Object::CPrime => {
            let m = invert_y_transition::<Rational>(k, n)?;
            let mut entries = vec![(i.clone(), Rational::from(1))];
            entries.extend(m.row(i));
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            row(entries)
        }
    })
}

fn parse_suites(args: &CheckArgs) -> Result<Vec<Suite>, String> {
    let mut out = Vec::new();
    for name in args.suites.iter().chain(&args.suite) {
        if name == "all" {
            out.extend(Suite::ALL);
        } else {
            out.push(name.parse()?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn check(args: CheckArgs) -> ExitCode {
    let suites = match parse_suites(&args) {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    if let (Some(k), Some(n)) = (args.k, args.n) {
        if k > n {
            return usage_error(format!("k = {k} exceeds n = {n}"));
        }
    }
    let fault = match args.inject_sign_fault.as_deref() {
        None => SignFault::None,
        Some("bottom") => SignFault::Bottom,
        Some(s) => match SubsetIndex::parse(usize::MAX - 1, s) {
            Ok(i) => SignFault::Subset(i.elements().to_vec()),
            Err(e) => return usage_error(e),
        },
    };
    if let Some(jobs) = args.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
        {
            return usage_error(e);
        }
    }
    let selection = Selection {
        k: args.k,
        n: args.n,
        k_max: args.k_max,
        n_max: args.n_max,
        large: args.large,
    };
    let engine = Engine::<Rational>::new(fault);
    let mut reports = Vec::new();
    if let Some(seed) = args.seed {
        reports.push(selftest::run(seed));
    }
    reports.extend(engine.run_all(&suites, &selection));
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for r in &reports {
        let line = match args.format {
            Format::Text => r.to_text(),
            Format::JsonLines => r.to_json(),
        };
        if writeln!(out, "{line}").is_err() {
            break;
        }
    }
    ExitCode::from(exit_code(&reports) as u8)
}
