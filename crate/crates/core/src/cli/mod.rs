//! Command-line front end. [`run`] takes the arguments and output streams
//! so that it can be driven from tests; the binary only forwards to it.
//!
//! Exit codes: 0 success or sat, 1 invalid certificate or infeasible
//! balancing, 2 error, 3 heuristic failure, 4 unsat.

mod survey;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::mpsc;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

pub use survey::{run_survey, survey_csv, SurveyConfig, SurveyRow};

use crate::balancing::{balance, BalanceOutcome, BalancingInstance};
use crate::error::{Error, Result};
use crate::exact_partition::{min_mono_cycle_partition_with, verify_certificate, CyclePartitionCertificate, PartitionResult, DEFAULT_MAX_N};
use crate::generators::{gen_extremal_a, gen_extremal_b, gen_random_min_degree, gen_sharpness, gen_three_colour};
use crate::graph::io::{graph_to_json, read_graph_file};
use crate::graph::{ColouredMultiGraph, BLUE, RED};
use crate::heuristic::{heuristic_partition, HeuristicOutcome};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::structure::{detect_extremal, find_components};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_HEURISTIC_FAILURE: i32 = 3;
pub const EXIT_UNSAT: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "monochrome", version, about = "Monochromatic cycle partitions of edge-coloured graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Partition a graph into at most k monochromatic cycles.
    Solve(SolveArgs),
    /// Verify a certificate against a graph.
    Check { graph: PathBuf, certificate: PathBuf },
    /// Solve a balancing instance on a host graph.
    Balance(BalanceArgs),
    /// Generate a construction as graph JSON.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Extremal colouring test and component selection.
    Analyze {
        graph: PathBuf,
        #[arg(long, value_parser = rational_arg)]
        gamma: Rational,
    },
    /// Sweep random instances and report one row per instance.
    Survey(SurveyArgs),
}

#[derive(Args, Debug)]
struct SolveArgs {
    graph: PathBuf,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, conflicts_with = "exact")]
    heuristic: bool,
    #[arg(long)]
    exact: bool,
    /// Seconds before giving up.
    #[arg(long)]
    timeout: Option<f64>,
    #[arg(long, value_parser = rational_arg, default_value = "1/48")]
    gamma: Rational,
    /// Largest n routed to the exact solver when no solver is forced.
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
}

#[derive(Args, Debug)]
struct BalanceArgs {
    host: PathBuf,
    /// Comma-separated vertex targets.
    #[arg(long, value_delimiter = ',', required = true)]
    targets: Vec<u64>,
    #[arg(long, value_parser = rational_arg, default_value = "1/2")]
    gamma: Rational,
    /// Treat a failed construction under the lemma's hypotheses as an error.
    #[arg(long)]
    strict: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InnerColour {
    Red,
    Blue,
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    Sharpness {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "red")]
        inner: InnerColour,
    },
    #[command(name = "three-colour")]
    ThreeColour {
        #[arg(long)]
        m: usize,
    },
    #[command(name = "extremal-a")]
    ExtremalA(ExtremalArgs),
    #[command(name = "extremal-b")]
    ExtremalB(ExtremalArgs),
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = rational_arg)]
        delta: Rational,
        /// Probability that an edge is red.
        #[arg(long, default_value_t = 0.5)]
        bias: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct ExtremalArgs {
    #[arg(long)]
    m: usize,
    #[arg(long, value_parser = rational_arg)]
    gamma: Rational,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SurveyFormat {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct SurveyArgs {
    #[arg(long)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    /// Instances per n.
    #[arg(long, default_value_t = 10)]
    samples: usize,
    #[arg(long, value_parser = rational_arg, default_value = "3/4")]
    delta: Rational,
    #[arg(long, default_value_t = 0.5)]
    bias: f64,
    #[arg(long, value_parser = rational_arg, default_value = "1/48")]
    gamma: Rational,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest k tried by the exact solver.
    #[arg(long, default_value_t = 4)]
    k_max: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
    /// Also run the heuristic on every instance.
    #[arg(long)]
    heuristic: bool,
    /// Report 0 in the millis column so reruns are byte-identical.
    #[arg(long)]
    no_timing: bool,
    #[arg(long, value_enum, default_value = "csv")]
    format: SurveyFormat,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn load(path: &Path) -> Result<ColouredMultiGraph> {
    read_graph_file(path)?.to_multigraph()
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Solve(a) => cmd_solve(&a, out),
        Command::Check { graph, certificate } => cmd_check(&graph, &certificate, out),
        Command::Balance(a) => cmd_balance(&a, out),
        Command::Gen(g) => cmd_gen(g, out),
        Command::Analyze { graph, gamma } => cmd_analyze(&graph, &gamma, out),
        Command::Survey(a) => cmd_survey(&a, out),
    }
}

enum SolveReport {
    Exact(PartitionResult),
    Heuristic(HeuristicOutcome),
}

fn cmd_solve(a: &SolveArgs, out: &mut dyn Write) -> Result<i32> {
    let g = load(&a.graph)?;
    let use_exact = a.exact || (!a.heuristic && g.n() <= a.max_n);
    let (k, gamma) = (a.k, a.gamma);
    let start = Instant::now();
    let (tx, rx) = mpsc::channel();
    let g2 = g.clone();
    let max_n = a.max_n.max(g.n());
    std::thread::spawn(move || {
        let r = if use_exact {
            min_mono_cycle_partition_with(&g2, k, max_n).map(SolveReport::Exact)
        } else {
            heuristic_partition(&g2, &gamma).map(SolveReport::Heuristic)
        };
        let _ = tx.send(r);
    });
    let report = match a.timeout {
        Some(s) => match rx.recv_timeout(Duration::from_secs_f64(s.max(0.0))) {
            Ok(r) => r?,
            Err(_) => return Err(Error::ConstructionFailed(format!("timed out after {s} s"))),
        },
        None => rx.recv().map_err(|_| Error::InternalContradiction("solver thread panicked".into()))??,
    };
    let millis = start.elapsed().as_millis() as u64;
    let (value, code) = match report {
        SolveReport::Exact(PartitionResult::Sat { k_star, certificate }) => (
            json!({"solver": "exact", "sat": true, "k": k, "k_star": k_star, "certificate": certificate, "millis": millis}),
            EXIT_OK,
        ),
        SolveReport::Exact(PartitionResult::Unsat { k_max }) => (
            json!({"solver": "exact", "sat": false, "k": k_max, "k_star": null, "millis": millis}),
            EXIT_UNSAT,
        ),
        SolveReport::Heuristic(HeuristicOutcome::Certificate { certificate, route }) if certificate.len() <= k => (
            json!({"solver": "heuristic", "sat": true, "k": k, "k_star": certificate.len(), "route": route, "certificate": certificate, "millis": millis}),
            EXIT_OK,
        ),
        SolveReport::Heuristic(HeuristicOutcome::Certificate { certificate, .. }) => (
            json!({"solver": "heuristic", "sat": null, "k": k, "failure": {"stage": "too_many_parts", "reason": format!("{} parts exceed k", certificate.len())}, "millis": millis}),
            EXIT_HEURISTIC_FAILURE,
        ),
        SolveReport::Heuristic(HeuristicOutcome::Failure { stage, reason }) => (
            json!({"solver": "heuristic", "sat": null, "k": k, "failure": {"stage": stage, "reason": reason}, "millis": millis}),
            EXIT_HEURISTIC_FAILURE,
        ),
    };
    writeln!(out, "{value}")?;
    Ok(code)
}

fn cmd_check(graph: &Path, cert: &Path, out: &mut dyn Write) -> Result<i32> {
    let g = load(graph)?;
    let c = read_certificate(&std::fs::read_to_string(cert)?)?;
    match verify_certificate(&g, &c) {
        Ok(()) => {
            writeln!(out, "{}", json!({"valid": true, "parts": c.len()}))?;
            Ok(EXIT_OK)
        }
        Err(v) => {
            writeln!(out, "{}", json!({"valid": false, "violation": v}))?;
            Ok(EXIT_INVALID)
        }
    }
}

/// A bare certificate, or the output of `solve` that wraps one.
fn read_certificate(text: &str) -> Result<CyclePartitionCertificate> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    match value.get("certificate") {
        Some(inner) if value.get("parts").is_none() => Ok(serde_json::from_value(inner.clone())?),
        _ => CyclePartitionCertificate::from_json(text),
    }
}

fn cmd_balance(a: &BalanceArgs, out: &mut dyn Write) -> Result<i32> {
    let host = load(&a.host)?.underlying();
    if a.targets.len() != host.n() {
        return Err(Error::PreconditionViolated(format!("{} targets for {} vertices", a.targets.len(), host.n())));
    }
    let inst = BalancingInstance::new(host, a.gamma, a.targets.clone());
    match balance(&inst, a.strict)? {
        BalanceOutcome::Balanced(s) => {
            writeln!(out, "{}", json!({"feasible": true, "solution": s.to_json_value()}))?;
            Ok(EXIT_OK)
        }
        BalanceOutcome::Infeasible(r) => {
            writeln!(out, "{}", json!({"feasible": false, "report": r}))?;
            Ok(EXIT_INVALID)
        }
    }
}

fn cmd_gen(cmd: GenCommand, out: &mut dyn Write) -> Result<i32> {
    let text = match cmd {
        GenCommand::Sharpness { m, inner } => {
            graph_to_json(gen_sharpness(m, if matches!(inner, InnerColour::Red) { RED } else { BLUE })?.colouring())
        }
        GenCommand::ThreeColour { m } => graph_to_json(gen_three_colour(m)?.colouring()),
        GenCommand::ExtremalA(e) => graph_to_json(gen_extremal_a(e.m, &e.gamma, e.seed)?.colouring()),
        GenCommand::ExtremalB(e) => graph_to_json(gen_extremal_b(e.m, &e.gamma, e.seed)?.colouring()),
        GenCommand::Random { n, delta, bias, seed } => graph_to_json(gen_random_min_degree(n, &delta, bias, seed)?.colouring()),
    };
    writeln!(out, "{text}")?;
    Ok(EXIT_OK)
}

fn cmd_analyze(graph: &Path, gamma: &Rational, out: &mut dyn Write) -> Result<i32> {
    let g = load(graph)?;
    let report = detect_extremal(&g, gamma);
    let components = match find_components(&g, gamma) {
        Ok(o) => serde_json::to_value(o).expect("serializable"),
        Err(e @ (Error::MinDegreeTooLow { .. } | Error::InternalContradiction(_))) => {
            json!({"outcome": "error", "kind": e.kind(), "message": e.to_string()})
        }
        Err(e) => return Err(e),
    };
    let value = json!({
        "n": g.n(),
        "min_degree": g.min_degree(),
        "gamma": format_rational(gamma),
        "kind": report.kind,
        "extremal": report,
        "components": components,
    });
    writeln!(out, "{value}")?;
    Ok(EXIT_OK)
}

fn cmd_survey(a: &SurveyArgs, out: &mut dyn Write) -> Result<i32> {
    if a.n_min > a.n_max {
        return Err(Error::PreconditionViolated("n-min exceeds n-max".into()));
    }
    let cfg = SurveyConfig {
        n_min: a.n_min,
        n_max: a.n_max,
        samples: a.samples,
        delta: a.delta,
        bias: a.bias,
        gamma: a.gamma,
        seed: a.seed,
        k_max: a.k_max,
        max_exact_n: a.max_n,
        heuristic: a.heuristic,
        timing: !a.no_timing,
    };
    let rows = if a.jobs == 0 {
        run_survey(&cfg)?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(a.jobs)
            .build()
            .map_err(|e| Error::PreconditionViolated(e.to_string()))?;
        pool.install(|| run_survey(&cfg))?
    };
    match a.format {
        SurveyFormat::Csv => write!(out, "{}", survey_csv(&rows, cfg.heuristic))?,
        SurveyFormat::Json => writeln!(out, "{}", serde_json::to_string(&rows).expect("serializable"))?,
    }
    Ok(EXIT_OK)
}
