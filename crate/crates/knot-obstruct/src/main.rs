use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use knot_obstruct::alexander::{sum_alexander, sum_alexander_factored};
use knot_obstruct::obstruction::{obstruct, tau, verify_main_theorem, ObstructOptions};
use knot_obstruct::parse::parse;
use knot_obstruct::render::{signature_csv, signature_svg};
use knot_obstruct::report::JsonReport;
use knot_obstruct::seifert::DEFAULT_DEGENERACY_TOLERANCE;
use knot_obstruct::selftest::run_all;
use knot_obstruct::signature::{jump_spectrum, signature_function};
use knot_obstruct::KnotSum;

/// Concordance invariants of connected sums of torus knots, and the
/// obstruction to concordance with an L-space knot.
#[derive(Parser)]
#[command(name = "knot-obstruct", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander polynomial with its cyclotomic factorization
    Alex { expr: String },
    /// Concordance invariant tau
    Tau { expr: String },
    /// Signature jump spectrum, one angle per line
    Jumps { expr: String },
    /// Levine-Tristram signature as a step function of t in (0,1)
    Signature {
        expr: String,
        /// Write exact samples (breakpoints and interval midpoints) as CSV
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        /// Write a step plot of the window [0, 1/2] as SVG
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// Run the full obstruction pipeline and report the verdict
    Obstruct {
        expr: String,
        /// Emit the structured report as JSON
        #[arg(long)]
        json: bool,
        /// Skip the leading-terms refinement
        #[arg(long)]
        no_leading_terms: bool,
        /// Demand strictly alternating signs in the coefficient shape check
        #[arg(long)]
        strict_alternating: bool,
    },
    /// Sweep all positive sums in range and verify the expected verdicts
    Enumerate {
        /// Largest p considered (torus knots T(p,q) with p < q)
        #[arg(long, default_value_t = 7)]
        p_max: u32,
        /// Largest q considered
        #[arg(long, default_value_t = 7)]
        q_max: u32,
        /// Smallest number of summands
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        /// Largest number of summands
        #[arg(long, default_value_t = 3)]
        n_max: usize,
    },
    /// Run the built-in identity and oracle-equivalence suites
    Selftest,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn parse_expr(expr: &str) -> Result<KnotSum, ExitCode> {
    parse(expr).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Alex { expr } => {
            let sum = match parse_expr(&expr) {
                Ok(sum) => sum,
                Err(code) => return Ok(code),
            };
            println!("Delta = {}", sum_alexander(&sum));
            println!("      = {}", sum_alexander_factored(&sum));
        }
        Command::Tau { expr } => {
            let sum = match parse_expr(&expr) {
                Ok(sum) => sum,
                Err(code) => return Ok(code),
            };
            println!("{}", tau(&sum));
        }
        Command::Jumps { expr } => {
            let sum = match parse_expr(&expr) {
                Ok(sum) => sum,
                Err(code) => return Ok(code),
            };
            let spectrum = jump_spectrum(&sum);
            if spectrum.is_empty() {
                println!("no jumps");
            } else {
                let width = spectrum
                    .angles()
                    .map(|x| x.to_string().len())
                    .max()
                    .unwrap_or(0);
                for (x, jump) in spectrum.iter() {
                    println!("{:>width$}  {:+}", x.to_string(), jump);
                }
            }
        }
        Command::Signature { expr, csv, svg } => {
            let sum = match parse_expr(&expr) {
                Ok(sum) => sum,
                Err(code) => return Ok(code),
            };
            let f = signature_function(&sum);
            if let Some(path) = &csv {
                fs::write(path, signature_csv(&f))
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            if let Some(path) = &svg {
                fs::write(path, signature_svg(&f, &sum.to_string()))
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            if csv.is_none() && svg.is_none() {
                let breaks = f.breakpoints();
                let values = f.interval_values();
                for (i, v) in values.iter().enumerate() {
                    let lo = if i == 0 {
                        "0".to_string()
                    } else {
                        breaks[i - 1].to_string()
                    };
                    let hi = if i == breaks.len() {
                        "1".to_string()
                    } else {
                        breaks[i].to_string()
                    };
                    println!("t in ({lo}, {hi}): sigma = {v}");
                }
            }
        }
        Command::Obstruct {
            expr,
            json,
            no_leading_terms,
            strict_alternating,
        } => {
            let sum = match parse_expr(&expr) {
                Ok(sum) => sum,
                Err(code) => return Ok(code),
            };
            let options = ObstructOptions {
                leading_terms: !no_leading_terms,
                strict_alternating,
            };
            let report = obstruct(&sum, options);
            if json {
                println!("{}", JsonReport::new(&sum, &report).to_json());
            } else {
                println!("input: {sum}");
                println!("tau: {}", report.tau);
                println!("alexander: {}", report.alexander);
                println!("factorization: {}", report.factorization);
                if report.spectrum.is_empty() {
                    println!("jumps: none");
                } else {
                    println!("jumps:");
                    for (x, jump) in report.spectrum.iter() {
                        println!("  {x}: {jump:+}");
                    }
                }
                println!(
                    "forced factor: {} (degree {})",
                    report.forced_factor, report.forced_degree
                );
                println!("checks:");
                for check in &report.checks {
                    println!(
                        "  {:<16} {:<7} {}",
                        check.name,
                        check.outcome.to_string(),
                        check.reason
                    );
                }
                println!("verdict: {}", report.verdict);
            }
        }
        Command::Enumerate {
            p_max,
            q_max,
            n_min,
            n_max,
        } => {
            if n_min == 0 || n_min > n_max {
                eprintln!("error: need 1 <= n-min <= n-max");
                return Ok(ExitCode::from(2));
            }
            let sweep = verify_main_theorem(p_max, q_max, n_min..=n_max);
            println!("coprime pairs: {}", sweep.pairs);
            println!("sums checked: {}", sweep.sums_checked);
            println!("obstructed: {}", sweep.obstructed);
            println!("inconclusive: {}", sweep.inconclusive);
            if sweep.counterexamples.is_empty() {
                println!("counterexamples: none");
            } else {
                println!("counterexamples:");
                for line in &sweep.counterexamples {
                    println!("  {line}");
                }
                return Ok(ExitCode::from(1));
            }
        }
        Command::Selftest => {
            let tolerance = match std::env::var("KNOT_OBSTRUCT_TOLERANCE") {
                Ok(raw) => match raw.parse::<f64>() {
                    Ok(t) if t > 0.0 && t < 1.0 => t,
                    _ => {
                        eprintln!("error: KNOT_OBSTRUCT_TOLERANCE must be a number in (0, 1), got {raw:?}");
                        return Ok(ExitCode::from(2));
                    }
                },
                Err(_) => DEFAULT_DEGENERACY_TOLERANCE,
            };
            let mut failed = false;
            for suite in run_all(tolerance) {
                if suite.passed() {
                    println!("{:<24} {:>6} cases  ok", suite.name, suite.cases);
                } else {
                    failed = true;
                    println!(
                        "{:<24} {:>6} cases  FAILED ({})",
                        suite.name,
                        suite.cases,
                        suite.failures.len()
                    );
                    for failure in &suite.failures {
                        println!("    {failure}");
                    }
                }
            }
            if failed {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
