//! Command-line front end: parse one of the text formats, apply a library
//! operation, print the result in the same formats. `verify` runs the
//! exhaustive suites and emits a machine-readable report.
//!
//! Results go to standard output, diagnostics to standard error. Exit code 0
//! means success, 1 means a verification run found failures, 2 means the
//! input or invocation was unusable.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use laghist::bijections::{phi, phi_cap, rho1, rho1_inv, rho2};
use laghist::contfrac::{
    brute_force_jacobi, brute_force_mu, jacobi_moments, stieltjes_moments, CountingStatistic,
    JSchedule, MultiPoly, SSchedule,
};
use laghist::theta::{decode, encode};
use laghist::verify::{run_check, Check, VerificationReport};
use laghist::{CycleKind, LaguerreHistory, Permutation, StepKind};

/// Largest size accepted by the exhaustive and brute-force modes. Every such
/// mode enumerates all n! objects per size, and 11! is already ~40 million.
const SIZE_CEILING: usize = 10;

#[derive(Parser)]
#[command(
    name = "laghist",
    version,
    about = "Permutation statistics, the labeled-Motzkin-path codec, its rewrite maps, \
             and exhaustive verification",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every statistic set of a permutation, one per line
    Stats {
        /// Permutation as space-separated images; stdin when omitted or "-"
        input: Option<String>,
    },
    /// Encode a permutation as a labeled Motzkin path
    Encode {
        /// Permutation as space-separated images; stdin when omitted or "-"
        input: Option<String>,
        /// Also draw the path: heights as rows, step kinds and labels beneath
        #[arg(long)]
        render: bool,
    },
    /// Decode a labeled Motzkin path back to its permutation
    Decode {
        /// Path text (length line, then one line per step); stdin when omitted or "-"
        input: Option<String>,
    },
    /// Rewrite a path so its decode gains cycles where the input had antirecords
    Rho1 {
        /// Path text (length line, then one line per step); stdin when omitted or "-"
        input: Option<String>,
    },
    /// Invert the rho1 rewrite
    Rho1Inv {
        /// Path text (length line, then one line per step); stdin when omitted or "-"
        input: Option<String>,
    },
    /// Rewrite a path swapping the roles of cycles and antirecords; self-inverse
    Rho2 {
        /// Path text (length line, then one line per step); stdin when omitted or "-"
        input: Option<String>,
    },
    /// Conjugate rho1 by the codec: encode, rewrite, decode
    Phi {
        /// Permutation as space-separated images; stdin when omitted or "-"
        input: Option<String>,
    },
    /// Conjugate rho2 by the codec: encode, rewrite, decode
    Phicap {
        /// Permutation as space-separated images; stdin when omitted or "-"
        input: Option<String>,
    },
    /// Print moment polynomials, one block per degree from 0 to the order
    Cf {
        /// Which sequence to compute
        #[arg(long, value_enum, default_value = "stieltjes")]
        kind: CfKind,
        /// Largest degree to print (inclusive)
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// Run one exhaustive check (or all of them) for every size up to n-max
    Verify {
        /// One of: roundtrip, transport, theorem1, theorem2, rho1-bijection,
        /// rho2-involution, cf-stieltjes, cf-jacobi, all
        check: String,
        /// Largest object size to enumerate (inclusive)
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Worker threads to shard the enumeration across
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Report shape on standard output
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CfKind {
    /// Moments of the alternating two-variable ladder schedule (x, y, u, v)
    Stieltjes,
    /// Moments of the three-term schedule (x, y, z, w0)
    Jacobi,
    /// Exhaustive sum over permutations with the antirecord count leading
    BruteArec,
    /// Exhaustive sum over permutations with the cycle count leading
    BruteCyc,
    /// Exhaustive sum over permutations of x^cyc y^arec z^exc w0^rar
    BruteJacobi,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    /// One verdict line plus any failures, for reading
    Text,
    /// The full report as a single JSON object, for scripting
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Stats { input } => {
            let p = parse_perm(&read_input(input)?)?;
            print!("{}", stats_listing(&p));
            Ok(ExitCode::SUCCESS)
        }
        Command::Encode { input, render } => {
            let p = parse_perm(&read_input(input)?)?;
            let h = encode(&p);
            println!("{h}");
            if render {
                println!();
                print!("{}", render_path(&h));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decode { input } => {
            let h = parse_history(&read_input(input)?)?;
            println!("{}", decode(&h));
            Ok(ExitCode::SUCCESS)
        }
        Command::Rho1 { input } => history_command(input, rho1),
        Command::Rho1Inv { input } => history_command(input, rho1_inv),
        Command::Rho2 { input } => history_command(input, rho2),
        Command::Phi { input } => perm_command(input, phi),
        Command::Phicap { input } => perm_command(input, phi_cap),
        Command::Cf { kind, order } => {
            if order > SIZE_CEILING {
                return Err(format!(
                    "order {order} refused: the brute-force modes sum over all n! \
                     permutations per degree; the ceiling is {SIZE_CEILING}"
                ));
            }
            for (n, poly) in moment_table(kind, order).iter().enumerate() {
                if n > 0 {
                    println!();
                }
                println!("moment {n}");
                println!("{poly}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { check, n_max, workers, format } => {
            let Some(check) = Check::parse(&check) else {
                return Err(format!(
                    "unknown check {check:?}; expected one of roundtrip, transport, \
                     theorem1, theorem2, rho1-bijection, rho2-involution, cf-stieltjes, \
                     cf-jacobi, all"
                ));
            };
            if n_max > SIZE_CEILING {
                return Err(format!(
                    "n-max {n_max} refused: each suite enumerates all n! permutations \
                     or histories per size, which past {SIZE_CEILING} runs into the \
                     billions; the ceiling is {SIZE_CEILING}"
                ));
            }
            let report = run_check(check, n_max, workers);
            match format {
                ReportFormat::Json => println!(
                    "{}",
                    serde_json::to_string(&report)
                        .expect("reports are plain data and always serialize")
                ),
                ReportFormat::Text => print_text_report(&report),
            }
            Ok(if report.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

/// The positional argument itself, or all of standard input when it is
/// omitted or given as "-".
fn read_input(arg: Option<String>) -> Result<String, String> {
    match arg {
        Some(text) if text != "-" => Ok(text),
        _ => {
            let mut buffer = String::new();
            std::io::stdin()
                .read_to_string(&mut buffer)
                .map_err(|e| format!("reading standard input: {e}"))?;
            Ok(buffer)
        }
    }
}

fn parse_perm(text: &str) -> Result<Permutation, String> {
    Permutation::parse(text).map_err(|e| e.to_string())
}

fn parse_history(text: &str) -> Result<LaguerreHistory, String> {
    LaguerreHistory::parse(text).map_err(|e| e.to_string())
}

fn history_command(
    input: Option<String>,
    op: fn(&LaguerreHistory) -> LaguerreHistory,
) -> Result<ExitCode, String> {
    let h = parse_history(&read_input(input)?)?;
    println!("{}", op(&h));
    Ok(ExitCode::SUCCESS)
}

fn perm_command(
    input: Option<String>,
    op: fn(&Permutation) -> Permutation,
) -> Result<ExitCode, String> {
    let p = parse_perm(&read_input(input)?)?;
    println!("{}", op(&p));
    Ok(ExitCode::SUCCESS)
}

fn moment_table(kind: CfKind, order: usize) -> Vec<MultiPoly> {
    match kind {
        CfKind::Stieltjes => stieltjes_moments(&SSchedule::xyuv(), order),
        CfKind::Jacobi => jacobi_moments(&JSchedule::xyzw0(), order),
        CfKind::BruteArec => {
            (0..=order).map(|n| brute_force_mu(n, CountingStatistic::Arec)).collect()
        }
        CfKind::BruteCyc => {
            (0..=order).map(|n| brute_force_mu(n, CountingStatistic::Cyc)).collect()
        }
        CfKind::BruteJacobi => (0..=order).map(brute_force_jacobi).collect(),
    }
}

/// All fifteen statistic sets, ascending, as "name = v1 v2 ..." lines.
fn stats_listing(p: &Permutation) -> String {
    let profile = p.profile();
    let classes = p.classify();
    let cval = classes.positions_of(CycleKind::Cval);
    let cpeak = classes.positions_of(CycleKind::Cpeak);
    let cdrise = classes.positions_of(CycleKind::Cdrise);
    let cdfall = classes.positions_of(CycleKind::Cdfall);
    let fix = classes.positions_of(CycleKind::Fix);
    let rows: [(&str, &[usize]); 15] = [
        ("recp", &profile.recp),
        ("recl", &profile.recl),
        ("arecp", &profile.arecp),
        ("arecl", &profile.arecl),
        ("erecp", &profile.erecp),
        ("erecl", &profile.erecl),
        ("rar", &profile.rar),
        ("excp", &profile.excp),
        ("excl", &profile.excl),
        ("cyc", &profile.cyc),
        ("cval", &cval),
        ("cpeak", &cpeak),
        ("cdrise", &cdrise),
        ("cdfall", &cdfall),
        ("fix", &fix),
    ];
    let mut out = String::new();
    for (name, values) in rows {
        out.push_str(name);
        out.push_str(" =");
        for v in values {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    out
}

/// Draw the path with one row per height and one column per step: "/" where
/// the path rises into a row, "\" where it falls out of one, "-" for a level
/// step. The step kinds and both label rows are printed beneath the axis.
fn render_path(history: &LaguerreHistory) -> String {
    let n = history.n();
    let heights = history.heights();
    let max_h = heights.iter().copied().max().unwrap_or(0);

    let mut kinds = Vec::with_capacity(n);
    let mut xis = Vec::with_capacity(n);
    let mut etas = Vec::with_capacity(n);
    for i in 1..=n {
        kinds.push(history.step(i).as_str().to_string());
        let label = history.label(i);
        xis.push(label.xi.map_or("-".to_string(), |v| v.to_string()));
        etas.push(label.eta.map_or("-".to_string(), |v| v.to_string()));
    }
    let width =
        kinds.iter().chain(&xis).chain(&etas).map(String::len).max().unwrap_or(1);

    let mut out = String::new();
    for r in (0..=max_h).rev() {
        let mut line = format!("{r:>4} |");
        for i in 1..=n {
            let glyph = match history.step(i) {
                StepKind::U if heights[i] == r => "/",
                StepKind::D if heights[i - 1] == r => "\\",
                StepKind::La | StepKind::Lb | StepKind::Lc if heights[i - 1] == r => "-",
                _ => "",
            };
            line.push_str(&format!(" {glyph:>width$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    for (name, cells) in [("step", &kinds), ("xi", &xis), ("eta", &etas)] {
        let mut line = format!("{name:>4} |");
        for cell in cells {
            line.push_str(&format!(" {cell:>width$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn print_text_report(report: &VerificationReport) {
    let verdict = if report.passed { "passed" } else { "FAILED" };
    println!(
        "{}: {} ({} cases, n <= {}, {} failures, {} ms)",
        report.check_name,
        verdict,
        report.cases_run,
        report.n_range[1],
        report.failures.len(),
        report.elapsed_ms
    );
    for failure in &report.failures {
        println!("  input: {}", failure.input);
        println!("    expected: {}", failure.expected);
        println!("    actual:   {}", failure.actual);
    }
}
