//! Command-line front end.
//!
//! Exit codes: 0 success, 1 other failure (I/O, oracle budget), 2 parse
//! failure, 3 k out of range, 4 solver does not fit the instance.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use asymgon::io::{generate_instance, Instance, SolveRecord};
use asymgon::lattice::IntervalVector;
use asymgon::oracle::{oracle_solve_with_budget, DEFAULT_BUDGET};
use asymgon::rhythm::{decode_rhythm, encode_intervals};
use asymgon::svg::render_svg;
use asymgon::{solve, DiameterSet, Error, SolveOptions, SolverChoice};

#[derive(Parser)]
#[command(
    name = "asymgon",
    version,
    about = "Maximum-area asymmetric k-gons on circle diameters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance and print the result as JSON.
    Solve {
        instance: PathBuf,
        #[arg(long)]
        k: usize,
        /// auto, lattice, dp, oracle or fast
        #[arg(long, default_value = "auto")]
        solver: SolverChoice,
        /// Also write an SVG drawing of the result.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Subset budget for the oracle solver.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Write a random (or evenly spaced) instance.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        even: bool,
        /// Output file; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a result JSON file as SVG.
    Render {
        result: PathBuf,
        #[arg(long)]
        svg: PathBuf,
    },
    /// Convert between interval vectors and onset bit strings.
    Rhythm {
        #[command(subcommand)]
        action: RhythmAction,
    },
    /// Exhaustive search; also reports the unrestricted maximum.
    Oracle {
        instance: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
}

#[derive(Subcommand)]
enum RhythmAction {
    /// Interval vector (comma separated gaps) to bit string.
    Encode { gaps: String },
    /// Bit string to interval vector.
    Decode { bits: String },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::KOutOfRange { .. } => 3,
            Error::NotEvenlySpaced | Error::UnsupportedSolver { .. } => 4,
            Error::InvalidAngles(_) | Error::Rhythm(_) | Error::IntervalVector(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn parse_failure(message: String) -> Failure {
    Failure { code: 2, message }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: 1,
        message: format!("{}: {e}", path.display()),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| io_failure(path, e))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| io_failure(path, e))
}

fn load_instance(path: &Path) -> Result<DiameterSet, Failure> {
    let inst = Instance::parse(&read(path)?)
        .map_err(|e| parse_failure(format!("{}: {e}", path.display())))?;
    let loaded = inst.load()?;
    if loaded.normalized > 0 {
        eprintln!(
            "warning: {} angle(s) outside [0, pi) were reduced modulo pi",
            loaded.normalized
        );
    }
    Ok(loaded.diameters)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve {
            instance,
            k,
            solver,
            svg,
            threads,
            budget,
        } => {
            let ds = load_instance(&instance)?;
            let sol = solve(
                &ds,
                k,
                &SolveOptions {
                    solver,
                    threads: threads.max(1),
                    budget,
                },
            )?;
            let record = SolveRecord::new(&ds, &sol);
            if let Some(path) = svg {
                write(&path, &render_svg(&record)?)?;
            }
            print!("{}", record.to_json());
        }
        Command::Gen { n, seed, even, out } => {
            let text = generate_instance(n, seed, even)?.to_json();
            match out {
                Some(path) => write(&path, &text)?,
                None => print!("{text}"),
            }
        }
        Command::Render { result, svg } => {
            let record: SolveRecord = serde_json::from_str(&read(&result)?)
                .map_err(|e| parse_failure(format!("{}: {e}", result.display())))?;
            write(&svg, &render_svg(&record)?)?;
        }
        Command::Rhythm {
            action: RhythmAction::Encode { gaps },
        } => {
            let gaps = gaps
                .split(',')
                .map(|g| g.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| parse_failure(format!("gaps: {e}")))?;
            let m = gaps.iter().sum();
            let iv = IntervalVector::new(gaps, m)?;
            let out = json!({
                "m": m,
                "interval_vector": iv.gaps(),
                "bits": encode_intervals(&iv),
                "asymmetric": m % 2 == 0 && iv.is_asymmetric(),
            });
            println!("{out:#}");
        }
        Command::Rhythm {
            action: RhythmAction::Decode { bits },
        } => {
            let iv = decode_rhythm(&bits)?;
            let out = json!({
                "m": iv.m(),
                "interval_vector": iv.gaps(),
                "asymmetric": iv.m() % 2 == 0 && iv.is_asymmetric(),
            });
            println!("{out:#}");
        }
        Command::Oracle {
            instance,
            k,
            budget,
        } => {
            let ds = load_instance(&instance)?;
            let n = ds.n();
            if k < 3 || k >= n {
                return Err(Error::KOutOfRange { k, n, lo: 3 }.into());
            }
            let asym = oracle_solve_with_budget(&ds, k, true, budget)?;
            let any = oracle_solve_with_budget(&ds, k, false, budget)?;
            let mut out =
                serde_json::to_value(SolveRecord::new(&ds, &asym)).expect("record serializes");
            out["unrestricted_area"] = json!(asymgon::io::round_significant(any.area, 12));
            out["unrestricted_vertex_indices"] = json!(any.selection.indices());
            println!("{out:#}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // clap exits with status 2 on its own for malformed arguments.
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
