mod report;

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use clutterlab::macaulay::{complete_lambda, extremal_clutter, extremal_lambda_profile, is_valid_lambda, lambda_max};
use clutterlab::{find_simplicial_order_with, io, Clutter, LambdaSequence, OracleLimits, SearchConfig};
use num_bigint::BigInt;
use serde_json::json;

use report::{tuple, Chordality, Report, Sections};

const EXIT_NOT_CHORDAL: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 64;

/// Chordal clutters: simplicial orders, f/h-vectors, Betti numbers and λ-sequences.
#[derive(Parser)]
#[command(name = "clutterlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide chordality and print a simplicial order, its multiset and λ.
    /// Exit code 0 chordal, 1 not chordal, 2 inconclusive, 64 bad input.
    Check {
        /// Clutter file (text or JSON), `-` for stdin
        file: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        json: bool,
    },
    /// f-vector, h-vector and Betti numbers of a chordal clutter.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        f: bool,
        #[arg(long)]
        h: bool,
        #[arg(long)]
        betti: bool,
        /// Recompute by face counting and Hochster's formula and compare.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        json: bool,
    },
    /// Bounds, profiles and validity of λ-sequences.
    Lambda {
        #[command(subcommand)]
        command: LambdaCommand,
        #[arg(long, global = true)]
        json: bool,
    },
    /// Write a clutter file.
    Generate {
        #[command(subcommand)]
        command: GenerateCommand,
        /// Output path; stdout when absent
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
        #[arg(long, global = true)]
        json: bool,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Give up after expanding this many clutters
    #[arg(long)]
    max_states: Option<usize>,
}

#[derive(Subcommand)]
enum LambdaCommand {
    /// Largest possible λ_i over chordal d-clutters on [n] other than the complete one.
    Max { n: usize, d: usize, i: usize },
    /// The full λ-sequence of the clutter attaining the bound at i.
    Profile { n: usize, d: usize, i: usize },
    /// λ of the complete d-clutter on [n].
    Complete { n: usize, d: usize },
    /// Whether a comma-separated λ_1,λ_2,... is realized by a chordal clutter.
    Validate { n: usize, d: usize, lambda: String },
}

#[derive(Subcommand)]
enum GenerateCommand {
    /// All d-subsets of [n].
    Complete { n: usize, d: usize },
    /// All d-subsets of [n] not inside [n-i].
    Extremal { n: usize, d: usize, i: usize },
}

enum Failure {
    Usage(String),
    Exit(u8),
}

impl From<clutterlab::Error> for Failure {
    fn from(e: clutterlab::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn oracle_limits() -> Result<OracleLimits, Failure> {
    match std::env::var("CLUTTERLAB_MAX_N") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(OracleLimits::uniform)
            .map_err(|_| Failure::Usage(format!("CLUTTERLAB_MAX_N must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(OracleLimits::default()),
    }
}

fn read_clutter(path: &Path) -> Result<Clutter, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
    };
    io::parse_clutter(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("report serializes"));
}

fn check_report(path: &Path, search: &SearchArgs) -> Result<(Clutter, Report), Failure> {
    let c = read_clutter(path)?;
    let outcome = find_simplicial_order_with(&c, &SearchConfig { max_states: search.max_states });
    let report = Report::check(&c, &outcome);
    Ok((c, report))
}

fn exit_for(chordal: Chordality) -> u8 {
    match chordal {
        Chordality::Chordal => 0,
        Chordality::NotChordal => EXIT_NOT_CHORDAL,
        Chordality::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn parse_lambda(n: usize, d: usize, text: &str) -> Result<LambdaSequence, Failure> {
    let body = text.trim().trim_start_matches('(').trim_end_matches(')');
    let entries = body
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<BigInt>().map_err(|_| Failure::Usage(format!("not an integer: {s:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LambdaSequence::new(n, d, entries))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Check { file, search, json } => {
            let (_, report) = check_report(&file, &search)?;
            if json {
                print_json(&report);
            } else {
                print!("{}", report.render());
            }
            Ok(exit_for(report.chordal))
        }
        Command::Invariants {
            file,
            f,
            h,
            betti,
            verify,
            search,
            json,
        } => {
            let limits = oracle_limits()?;
            let (c, mut report) = check_report(&file, &search)?;
            if report.chordal != Chordality::Chordal {
                eprintln!("clutterlab: the clutter is not known to be chordal; run `clutterlab check` for details");
                return Err(Failure::Exit(exit_for(report.chordal)));
            }
            let all = !(f || h || betti);
            let sections = Sections {
                f: f || all,
                h: h || all,
                betti: betti || all,
            };
            report.add_invariants(&c, sections)?;
            if verify {
                report.add_verification(&c, &limits)?;
            }
            if json {
                print_json(&report);
            } else {
                print!("{}", report.render());
            }
            let failed = report.verification.as_ref().is_some_and(|v| !v.all_passed);
            Ok(if failed { 1 } else { 0 })
        }
        Command::Lambda { command, json } => run_lambda(command, json),
        Command::Generate { command, output, json } => {
            let c = match command {
                GenerateCommand::Complete { n, d } => Clutter::complete(n, d)?,
                GenerateCommand::Extremal { n, d, i } => extremal_clutter(n, d, i)?,
            };
            let text = if json {
                format!("{}\n", io::to_json(&c))
            } else {
                io::to_text(&c)
            };
            match output {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(0)
        }
    }
}

fn run_lambda(command: LambdaCommand, json: bool) -> Result<u8, Failure> {
    match command {
        LambdaCommand::Max { n, d, i } => {
            let v = lambda_max(n, d, i)?;
            if json {
                print_json(&json!({"n": n, "d": d, "i": i, "lambda_max": clutterlab::serde_int::Int(v)}));
            } else {
                println!("{v}");
            }
        }
        LambdaCommand::Profile { n, d, i } => {
            let l = extremal_lambda_profile(n, d, i)?;
            if json {
                print_json(&json!({"n": n, "d": d, "i": i, "lambda": l}));
            } else {
                println!("{l}");
            }
        }
        LambdaCommand::Complete { n, d } => {
            let l = complete_lambda(n, d)?;
            if json {
                print_json(&json!({"n": n, "d": d, "lambda": l}));
            } else {
                println!("{l}");
            }
        }
        LambdaCommand::Validate { n, d, lambda } => {
            let l = parse_lambda(n, d, &lambda)?;
            let diag = is_valid_lambda(n, d, &l);
            if json {
                print_json(&json!({"n": n, "d": d, "lambda": l, "diagnosis": diag}));
            } else if diag.valid {
                println!("valid, l = {}", tuple(diag.lsequence.as_deref().unwrap_or_default()));
            } else {
                let extra = diag.lsequence.as_deref().map(|s| format!(" (l = {})", tuple(s))).unwrap_or_default();
                println!("invalid: {}{extra}", diag.problem.as_deref().unwrap_or("unknown reason"));
            }
            return Ok(if diag.valid { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Exit(code)) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("clutterlab: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
