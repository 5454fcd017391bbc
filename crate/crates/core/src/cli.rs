//! Command-line front end. Exit codes: 0 on success, 1 on usage or I/O
//! errors, 2 when `--strict` is set and a certificate check failed.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{load_suite, run_suite};
use crate::detectors::MinorOracleConfig;
use crate::error::{Error, Result};
use crate::generate::{generate, Kind, Pattern};
use crate::io::{parse_graph, serialize, Format};
use crate::report::{solve_instance, Algorithm, SolveOptions};

#[derive(Debug, Parser)]
#[command(
    name = "minorfree",
    version,
    about = "Exact maximum independent set in induced-minor-free graph classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve one instance and print its report as JSON.
    Solve(SolveArgs),
    /// Write a generated instance.
    Generate(GenerateArgs),
    /// Run a benchmark suite.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct Caps {
    /// Largest instance the exact oracle runs on.
    #[arg(long, env = "MINORFREE_ORACLE_CAP", default_value_t = crate::kernels::DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
    /// Largest host the induced-minor oracle runs on.
    #[arg(long, env = "MINORFREE_MINOR_CAP", default_value_t = 16)]
    minor_cap: usize,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    alg: Algorithm,
    #[arg(long, default_value_t = 1)]
    t: usize,
    #[arg(long = "in")]
    input: PathBuf,
    /// Defaults to DIMACS for `.col`/`.dimacs` files, edge list otherwise.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Cross-check the size against the exact oracle.
    #[arg(long)]
    verify: bool,
    /// Exit with status 2 if any certificate check fails.
    #[arg(long)]
    strict: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    json: Option<PathBuf>,
    #[command(flatten)]
    caps: Caps,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenKind {
    RandomGnp,
    Tree,
    Chordal,
    LongCycle,
    RandomBipartite,
    InClassRejection,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    kind: GenKind,
    #[arg(long)]
    n: usize,
    /// Edge probability (clique-keep probability for `chordal`).
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    /// Left side size for `random-bipartite`; defaults to half of `n`.
    #[arg(long)]
    left: Option<usize>,
    #[arg(long, value_enum, default_value = "friendship")]
    pattern: Pattern,
    #[arg(long, default_value_t = 1)]
    t: usize,
    #[arg(long, default_value_t = 10_000)]
    budget: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, env = "MINORFREE_MINOR_CAP", default_value_t = 16)]
    minor_cap: usize,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Suite name or path to a suite file.
    #[arg(long)]
    suite: String,
    /// Write the full JSON results here.
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    strict: bool,
    #[command(flatten)]
    caps: Caps,
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let shown = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{shown}");
                1
            } else {
                let _ = write!(out, "{shown}");
                0
            };
        }
    };
    let result = match cli.command {
        Command::Solve(a) => solve(a, out, err),
        Command::Generate(a) => generate_cmd(a, out, err),
        Command::Bench(a) => bench(a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn options(alg: Algorithm, t: usize, verify: bool, caps: &Caps) -> SolveOptions {
    SolveOptions {
        algorithm: alg,
        t,
        verify,
        oracle_cap: caps.oracle_cap,
        minor_cap: caps.minor_cap,
    }
}

fn solve(a: SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let format = a.format.unwrap_or_else(|| Format::from_path(&a.input));
    let g = parse_graph(&a.input, format)?;
    let name = a
        .input
        .file_name()
        .map_or_else(String::new, |s| s.to_string_lossy().into_owned());
    let report = solve_instance(&name, &g, &options(a.alg, a.t, a.verify, &a.caps))?;
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    match &a.json {
        Some(path) => {
            std::fs::write(path, json + "\n")?;
            writeln!(
                out,
                "{}: mis_size {} ({:?})",
                report.instance, report.mis_size, report.class_verified
            )?;
        }
        None => writeln!(out, "{json}")?,
    }
    for check in report
        .certificate_checks
        .iter()
        .filter(|c| c.status == crate::report::CheckStatus::Fail)
    {
        writeln!(err, "check failed: {} {}", check.name, check.detail)?;
    }
    Ok(if a.strict && report.has_failures() { 2 } else { 0 })
}

fn generate_cmd(a: GenerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let kind = match a.kind {
        GenKind::RandomGnp => Kind::RandomGnp { n: a.n, p: a.p },
        GenKind::Tree => Kind::Tree { n: a.n },
        GenKind::Chordal => Kind::Chordal { n: a.n, p: a.p },
        GenKind::LongCycle => Kind::LongCycle { n: a.n },
        GenKind::RandomBipartite => {
            let left = a.left.unwrap_or(a.n / 2);
            if left > a.n {
                return Err(Error::Config(format!("left side {left} larger than n = {}", a.n)));
            }
            Kind::RandomBipartite {
                left,
                right: a.n - left,
                p: a.p,
            }
        }
        GenKind::InClassRejection => Kind::InClassRejection {
            pattern: a.pattern,
            t: a.t,
            n: a.n,
            p: a.p,
            budget: a.budget,
            minor: MinorOracleConfig {
                max_host: a.minor_cap,
                ..MinorOracleConfig::default()
            },
        },
    };
    let generated = generate(&kind, a.seed)?;
    let text = serialize(&generated.graph, a.format);
    match &a.out {
        Some(path) => std::fs::write(path, text)?,
        None => write!(out, "{text}")?,
    }
    writeln!(
        err,
        "generated n={} m={} rejections={}",
        generated.graph.n(),
        generated.graph.m(),
        generated.rejections
    )?;
    Ok(0)
}

fn bench(a: BenchArgs, out: &mut dyn Write, _err: &mut dyn Write) -> Result<i32> {
    let suite = load_suite(&a.suite)?;
    let result = run_suite(&suite, &options(suite.algorithm, suite.t, false, &a.caps))?;
    writeln!(
        out,
        "{:<48} {:>5} {:>6} {:>5} {:>10}  class",
        "instance", "n", "m", "mis", "ms"
    )?;
    for r in &result.reports {
        let mark = if r.has_failures() { " FAIL" } else { "" };
        writeln!(
            out,
            "{:<48} {:>5} {:>6} {:>5} {:>10.2}  {:?}{mark}",
            r.instance, r.n, r.m, r.mis_size, r.elapsed_ms, r.class_verified
        )?;
    }
    writeln!(
        out,
        "{} instances, {} with failed checks",
        result.reports.len(),
        result.failures
    )?;
    if let Some(path) = &a.json {
        std::fs::write(
            path,
            serde_json::to_string_pretty(&result).expect("report serializes") + "\n",
        )?;
    }
    Ok(if a.strict && result.failures > 0 { 2 } else { 0 })
}
