//! Command-line front end: analyze single graphs or stdin batches, sweep
//! family parameter ranges, audit the recorded claims, list the built-in
//! fixtures. All configuration is flags; exit code 0 means every
//! requested check ran, 1 is an operational failure, 2 is reserved for
//! --strict runs that saw a REFUTED verdict or a discrepancy.

use std::io::Read;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cdg_core::audit::audit_paper_claims;
use cdg_core::exec::map_ordered;
use cdg_core::families::{fixture, FixtureId};
use cdg_core::formulas::Prediction;
use cdg_core::report::{
    analyze_input, run_sweep, DimensionReport, SweepFamily, SweepPlan, Verdict,
    DEFAULT_SWEEP_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "cdglab",
    version,
    about = "Exact dimension laboratory for clique-structured graph families"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Largest instance order a sweep may include.
    #[arg(long, global = true, default_value_t = DEFAULT_SWEEP_BUDGET, value_name = "N")]
    budget: usize,
    /// Exit with status 2 when any verdict is REFUTED or any report
    /// carries a discrepancy.
    #[arg(long, global = true)]
    strict: bool,
    /// Worker threads for sweeps, audits and batches; 0 uses all cores,
    /// 1 runs sequentially.
    #[arg(long, global = true, default_value_t = 0, value_name = "K")]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one graph given as a family spec (e.g. cocktail:6,
    /// fixture:FIG_DIAM3) or a graph6 string; '-' reads a newline-separated
    /// graph6 batch from stdin.
    Analyze { input: String },
    /// Evaluate a family over parameter ranges and adjudicate the formula
    /// prediction on every instance.
    Sweep {
        /// One of: cocktail, twoclique, diam3, lewis.
        family: String,
        /// Override a parameter range (repeatable), e.g. --range n=4..=8.
        #[arg(long, value_name = "KEY=LO..=HI")]
        range: Vec<String>,
    },
    /// Re-derive every recorded claim and emit a verdict with a
    /// machine-checkable certificate for each.
    Audit,
    /// Show the built-in fixture graphs.
    Fixtures {
        /// List id, order and description of each fixture.
        #[arg(long)]
        list: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(saw_refutation) => {
            if cli.strict && saw_refutation {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Runs the command; Ok(true) means some verdict was REFUTED or some
/// report carried a discrepancy.
fn run(cli: &Cli) -> Result<bool, String> {
    match &cli.command {
        Command::Analyze { input } => cmd_analyze(cli, input),
        Command::Sweep { family, range } => cmd_sweep(cli, family, range),
        Command::Audit => cmd_audit(cli),
        Command::Fixtures { .. } => cmd_fixtures(cli),
    }
}

const SUMMARY_HEADER: [&str; 7] = ["spec", "n", "dim", "adim", "base", "prediction", "verdict"];

/// Writes one line to stdout. A consumer hanging up early (head, a
/// closed pager) is a normal way for a run to end, not an error.
fn print_line(text: &str) -> Result<(), String> {
    use std::io::Write;
    match writeln!(std::io::stdout(), "{text}") {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(e.to_string()),
    }
}

fn csv_error(e: csv::Error) -> String {
    if let csv::ErrorKind::Io(io) = e.kind() {
        if io.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
    }
    e.to_string()
}

/// Renders a serializable value for a CSV cell: bare strings lose their
/// quotes, everything else is compact JSON.
fn json_cell<T: Serialize>(value: &T) -> String {
    match serde_json::to_value(value).expect("report types serialize") {
        serde_json::Value::String(s) => s,
        other => other.to_string(),
    }
}

fn count_cell(value: Option<usize>) -> String {
    value.map_or_else(String::new, |v| v.to_string())
}

/// One summary row per instance. Sweeps pass their adjudicated prediction;
/// plain analyses fall back to the report's own prediction list, with the
/// verdict derived from the discrepancy list.
fn summary_row(
    r: &DimensionReport,
    prediction: Option<&Prediction>,
    verdict: Option<Option<Verdict>>,
) -> [String; 7] {
    let prediction_cell = match prediction {
        Some(p) => format!("{}={}", p.source, p.value),
        None => r
            .predictions
            .iter()
            .map(|p| format!("{}={}", p.source, p.value))
            .collect::<Vec<_>>()
            .join(" "),
    };
    let verdict_cell = match verdict {
        Some(v) => v.map_or_else(String::new, |v| json_cell(&v)),
        None if r.predictions.is_empty() => String::new(),
        None => json_cell(&if r.discrepancies.is_empty() {
            Verdict::Confirmed
        } else {
            Verdict::Refuted
        }),
    };
    [
        r.id.clone(),
        r.n.to_string(),
        count_cell(r.oracle.metric_dim),
        count_cell(r.oracle.adjacency_dim),
        count_cell(r.oracle.base_size),
        prediction_cell,
        verdict_cell,
    ]
}

fn write_csv(rows: impl IntoIterator<Item = [String; 7]>) -> Result<(), String> {
    let mut w = csv::Writer::from_writer(std::io::stdout());
    w.write_record(SUMMARY_HEADER).map_err(csv_error)?;
    for row in rows {
        w.write_record(&row).map_err(csv_error)?;
    }
    w.flush().map_err(|e| csv_error(e.into()))
}

fn print_pretty<T: Serialize>(value: &T) -> Result<(), String> {
    print_line(&serde_json::to_string_pretty(value).map_err(|e| e.to_string())?)
}

fn cmd_analyze(cli: &Cli, input: &str) -> Result<bool, String> {
    let reports: Vec<DimensionReport> = if input == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|e| e.to_string())?;
        let lines: Vec<(usize, String)> = text
            .lines()
            .enumerate()
            .map(|(i, line)| (i + 1, line.trim().to_string()))
            .filter(|(_, line)| !line.is_empty())
            .collect();
        let analyzed = map_ordered(lines, cli.jobs, |(no, line)| (no, analyze_input(&line)));
        let mut reports = Vec::with_capacity(analyzed.len());
        for (no, outcome) in analyzed {
            reports.push(outcome.map_err(|e| format!("stdin line {no}: {e}"))?);
        }
        reports
    } else {
        vec![analyze_input(input).map_err(|e| e.to_string())?]
    };

    match cli.format {
        Format::Json if input == "-" => {
            // One compact object per line keeps batches pipeable.
            for r in &reports {
                print_line(&serde_json::to_string(r).map_err(|e| e.to_string())?)?;
            }
        }
        Format::Json => print_pretty(&reports[0])?,
        Format::Csv => write_csv(reports.iter().map(|r| summary_row(r, None, None)))?,
    }
    Ok(reports.iter().any(|r| !r.discrepancies.is_empty()))
}

fn parse_bound(text: &str) -> Result<usize, String> {
    text.trim().parse::<usize>().map_err(|_| format!("bad range bound '{text}'"))
}

fn parse_range(text: &str) -> Result<(usize, usize), String> {
    match text.split_once("..=") {
        Some((lo, hi)) => Ok((parse_bound(lo)?, parse_bound(hi)?)),
        None => {
            let v = parse_bound(text)?;
            Ok((v, v))
        }
    }
}

fn cmd_sweep(cli: &Cli, family: &str, ranges: &[String]) -> Result<bool, String> {
    let family = SweepFamily::from_str(family).map_err(|e| e.to_string())?;
    let mut plan = SweepPlan::new(family);
    for spec in ranges {
        let (key, bounds) = spec
            .split_once('=')
            .ok_or_else(|| format!("range '{spec}' is not of the form KEY=LO..=HI"))?;
        let (lo, hi) = parse_range(bounds)?;
        plan = plan.with_range(key.trim(), lo, hi).map_err(|e| e.to_string())?;
    }
    let result = run_sweep(&plan, cli.budget, cli.jobs).map_err(|e| e.to_string())?;

    match cli.format {
        Format::Json => print_pretty(&result)?,
        Format::Csv => write_csv(
            result
                .entries
                .iter()
                .map(|e| summary_row(&e.report, Some(&e.prediction), Some(e.verdict))),
        )?,
    }
    Ok(result
        .entries
        .iter()
        .any(|e| e.verdict == Some(Verdict::Refuted) || !e.report.discrepancies.is_empty()))
}

fn cmd_audit(cli: &Cli) -> Result<bool, String> {
    let checks = audit_paper_claims(cli.jobs);
    match cli.format {
        Format::Json => print_pretty(&checks)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["claim_ref", "input", "kind", "expected", "observed", "verdict"])
                .map_err(csv_error)?;
            for c in &checks {
                w.write_record([
                    c.claim_ref.clone(),
                    c.input.clone(),
                    json_cell(&c.kind),
                    json_cell(&c.expected),
                    json_cell(&c.observed),
                    json_cell(&c.verdict),
                ])
                .map_err(csv_error)?;
            }
            w.flush().map_err(|e| csv_error(e.into()))?;
        }
    }
    Ok(checks.iter().any(|c| c.verdict == Verdict::Refuted))
}

#[derive(Serialize)]
struct FixtureRow {
    id: &'static str,
    n: usize,
    description: &'static str,
}

fn cmd_fixtures(cli: &Cli) -> Result<bool, String> {
    let rows: Vec<FixtureRow> = FixtureId::ALL
        .into_iter()
        .map(|id| FixtureRow {
            id: id.name(),
            n: fixture(id).vertex_count(),
            description: id.description(),
        })
        .collect();
    match cli.format {
        Format::Json => print_pretty(&rows)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["id", "n", "description"]).map_err(csv_error)?;
            for r in &rows {
                w.write_record([r.id, &r.n.to_string(), r.description]).map_err(csv_error)?;
            }
            w.flush().map_err(|e| csv_error(e.into()))?;
        }
    }
    Ok(false)
}
