//! Command-line front end: prints sequence terms, runs the identity
//! verification engine, checks the generating function, evaluates the
//! banded determinants with optional entry overrides, and cross-checked
//! timing runs. Exit codes: 0 on success, 1 when an identity expected to
//! hold is refuted (or an untouched determinant mismatches), 2 on usage
//! errors, which are always detected before any computation starts.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bcj3::bcq::{bcj, bcu, bcv, Bc};
use bcj3::bench::{self, Strategy};
use bcj3::detmat::{bicomplex_spec, build_matrix, det_bicomplex};
use bcj3::identities::{self, GridParams, IdentityEntry, IdentityReport, Verdict};
use bcj3::sequences::{j3, u3, v3};

#[derive(Parser)]
#[command(name = "bcj3", version, about = "Exact bicomplex third-order Jacobsthal arithmetic")]
struct Cli {
    /// Output format for result rows.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Print terms of one of the six sequences.
    Gen {
        /// Sequence to print.
        #[arg(value_enum, ignore_case = true)]
        which: SequenceKind,
        /// Inclusive index range a..b.
        #[arg(long, value_parser = parse_range, default_value = "0..10")]
        range: RangeSpec,
    },
    /// Run identity checks and report proved / grid-verified / refuted.
    Verify {
        /// Comma-separated identity names; all when omitted.
        #[arg(long, value_delimiter = ',')]
        identities: Vec<String>,
        /// Upper bound of two-index grids.
        #[arg(long, default_value_t = 30)]
        grid: u64,
        /// Width of the second-index window in two-index grids.
        #[arg(long, default_value_t = 30)]
        gap: u64,
        /// Single-index range 0..b; must start at 0.
        #[arg(long, value_parser = parse_range)]
        range: Option<RangeSpec>,
    },
    /// Check the generating function and its partial-fraction form.
    Gf {
        /// Coefficient range 0..b; must start at 0.
        #[arg(long, value_parser = parse_range)]
        range: Option<RangeSpec>,
    },
    /// Evaluate the banded determinants against the sequence.
    Det {
        /// Inclusive index range a..b.
        #[arg(long, value_parser = parse_range, default_value = "0..12")]
        range: RangeSpec,
        /// Replace entry row,col,value (1-indexed) in every matrix.
        #[arg(long = "override-entry", value_parser = parse_override)]
        override_entry: Vec<OverrideSpec>,
    },
    /// Cross-check and time the term-computation strategies.
    Bench {
        /// Index range 0..b; must start at 0.
        #[arg(long, value_parser = parse_range, default_value = "0..100")]
        range: RangeSpec,
        /// Comma-separated strategies; all four when omitted.
        #[arg(long, value_delimiter = ',')]
        strategies: Vec<String>,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum SequenceKind {
    #[value(name = "J")]
    J,
    #[value(name = "V")]
    V,
    #[value(name = "U")]
    U,
    #[value(name = "BCJ")]
    Bcj,
    #[value(name = "BCV")]
    Bcv,
    #[value(name = "BCU")]
    Bcu,
}

#[derive(Clone)]
struct RangeSpec {
    start: u64,
    end: u64,
}

fn parse_range(text: &str) -> Result<RangeSpec, String> {
    let (start, end) = text
        .split_once("..")
        .ok_or_else(|| format!("expected a..b, got '{text}'"))?;
    let start: u64 = start
        .parse()
        .map_err(|_| format!("range start '{start}' is not a nonnegative integer"))?;
    let end: u64 = end
        .parse()
        .map_err(|_| format!("range end '{end}' is not a nonnegative integer"))?;
    if start > end {
        return Err(format!("range start {start} exceeds end {end}"));
    }
    Ok(RangeSpec { start, end })
}

#[derive(Clone)]
struct OverrideSpec {
    row: usize,
    col: usize,
    value: Bc,
}

fn parse_override(text: &str) -> Result<OverrideSpec, String> {
    let mut parts = text.splitn(3, ',');
    let mut next = |what: &str| {
        parts
            .next()
            .ok_or_else(|| format!("override '{text}' is missing its {what}"))
    };
    let row = next("row")?;
    let col = next("column")?;
    let value = next("value")?;
    let row: usize = row
        .parse()
        .map_err(|_| format!("override row '{row}' is not a positive integer"))?;
    let col: usize = col
        .parse()
        .map_err(|_| format!("override column '{col}' is not a positive integer"))?;
    let value: Bc = value
        .parse()
        .map_err(|e| format!("override value '{value}': {e}"))?;
    Ok(OverrideSpec { row, col, value })
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn csv_field(text: &str) -> String {
    if text.contains([',', '"', '\n']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

fn csv_line(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Serialize)]
struct ScalarRow {
    n: u64,
    value: String,
}

#[derive(Serialize)]
struct QuatRow {
    n: u64,
    w0: String,
    w1: String,
    w2: String,
    w3: String,
}

impl QuatRow {
    fn new(n: u64, value: &Bc) -> Self {
        QuatRow {
            n,
            w0: value.w0.to_string(),
            w1: value.w1.to_string(),
            w2: value.w2.to_string(),
            w3: value.w3.to_string(),
        }
    }
}

fn run_gen(which: SequenceKind, range: &RangeSpec, format: Format) -> ExitCode {
    let scalar = |name: &str, value: fn(u64) -> num_bigint::BigInt| {
        if format == Format::Csv {
            println!("n,value");
        }
        for n in range.start..=range.end {
            let value = value(n).to_string();
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string(&ScalarRow { n, value }).unwrap())
                }
                Format::Csv => println!("{}", csv_line(&[n.to_string(), value])),
                Format::Pretty => println!("{name}({n}) = {value}"),
            }
        }
    };
    let quat = |name: &str, value: fn(u64) -> Bc| {
        if format == Format::Csv {
            println!("n,w0,w1,w2,w3");
        }
        for n in range.start..=range.end {
            let term = value(n);
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string(&QuatRow::new(n, &term)).unwrap())
                }
                Format::Csv => {
                    let row = QuatRow::new(n, &term);
                    println!(
                        "{}",
                        csv_line(&[n.to_string(), row.w0, row.w1, row.w2, row.w3])
                    )
                }
                Format::Pretty => println!("{name}({n}) = {term}"),
            }
        }
    };
    match which {
        SequenceKind::J => scalar("J", j3),
        SequenceKind::V => scalar("V", v3),
        SequenceKind::U => scalar("U", u3),
        SequenceKind::Bcj => quat("BCJ", bcj),
        SequenceKind::Bcv => quat("BCV", bcv),
        SequenceKind::Bcu => quat("BCU", bcu),
    }
    ExitCode::SUCCESS
}

fn counterexample_text(report: &IdentityReport) -> String {
    report
        .counterexample
        .as_ref()
        .map(|at| {
            at.iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(";")
        })
        .unwrap_or_default()
}

fn emit_reports(reports: &[(&IdentityEntry, IdentityReport)], format: Format) {
    if format == Format::Csv {
        println!("name,verdict,bound,counterexample,lhs,rhs");
    }
    for (entry, report) in reports {
        match format {
            Format::Json => println!("{}", serde_json::to_string(report).unwrap()),
            Format::Csv => println!(
                "{}",
                csv_line(&[
                    report.name.clone(),
                    report.verdict.to_string(),
                    report.bound.clone(),
                    counterexample_text(report),
                    report.lhs.clone().unwrap_or_default(),
                    report.rhs.clone().unwrap_or_default(),
                ])
            ),
            Format::Pretty => {
                let note = match (entry.expected, report.verdict) {
                    (identities::Expected::Refuted, Verdict::Refuted) => " (as recorded)",
                    (identities::Expected::Refuted, _) => " (unexpectedly verified)",
                    _ => "",
                };
                println!("{}: {}{note} [{}]", report.name, report.verdict, report.bound);
                if let Some(at) = &report.counterexample {
                    let at = at
                        .iter()
                        .map(|(k, v)| format!("{k} = {v}"))
                        .collect::<Vec<_>>()
                        .join(", ");
                    println!("  counterexample: {at}");
                }
                if let Some(lhs) = &report.lhs {
                    println!("  lhs: {lhs}");
                }
                if let Some(rhs) = &report.rhs {
                    println!("  rhs: {rhs}");
                }
            }
        }
    }
    if format == Format::Pretty {
        let refuted = reports
            .iter()
            .filter(|(_, r)| r.verdict == Verdict::Refuted)
            .count();
        let proved = reports
            .iter()
            .filter(|(_, r)| r.verdict == Verdict::ProvedAllN)
            .count();
        let grid = reports.len() - refuted - proved;
        println!(
            "{} identities: {proved} proved for all n, {grid} grid-verified, {refuted} refuted",
            reports.len()
        );
    }
}

fn run_entries(
    entries: &[&'static IdentityEntry],
    params: &GridParams,
    format: Format,
) -> ExitCode {
    let reports: Vec<(&IdentityEntry, IdentityReport)> = entries
        .iter()
        .map(|entry| (*entry, (entry.run)(params)))
        .collect();
    emit_reports(&reports, format);
    let regression = reports
        .iter()
        .any(|(entry, report)| identities::is_regression(entry, report));
    if regression {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn run_verify(
    names: &[String],
    grid: u64,
    gap: u64,
    range: Option<&RangeSpec>,
    format: Format,
) -> ExitCode {
    let mut params = GridParams {
        grid_n: grid,
        gap,
        ..GridParams::default()
    };
    if let Some(range) = range {
        if range.start != 0 {
            return usage_error("verify --range must start at 0");
        }
        params.unary_n = range.end;
    }
    let entries: Vec<&'static IdentityEntry> = if names.is_empty() {
        identities::REGISTRY.iter().collect()
    } else {
        match identities::select(names) {
            Ok(entries) => entries,
            Err(unknown) => {
                return usage_error(&format!(
                    "unknown identity '{unknown}'; run with no --identities to see all names"
                ))
            }
        }
    };
    run_entries(&entries, &params, format)
}

fn run_gf(range: Option<&RangeSpec>, format: Format) -> ExitCode {
    let mut params = GridParams::default();
    if let Some(range) = range {
        if range.start != 0 {
            return usage_error("gf --range must start at 0");
        }
        params.series_n = range.end as usize + 1;
    }
    let entries: Vec<&'static IdentityEntry> = ["genfun", "partial_fractions"]
        .iter()
        .map(|name| identities::find(name).expect("registered"))
        .collect();
    run_entries(&entries, &params, format)
}

#[derive(Serialize)]
struct DetRow {
    n: u64,
    det: QuatRow,
    expected: QuatRow,
    matches: bool,
}

fn run_det(range: &RangeSpec, overrides: &[OverrideSpec], format: Format) -> ExitCode {
    let spec = bicomplex_spec();
    let overrides: Vec<(usize, usize, Bc)> = overrides
        .iter()
        .map(|o| (o.row, o.col, o.value.clone()))
        .collect();
    if format == Format::Csv {
        println!("n,det_w0,det_w1,det_w2,det_w3,expected_w0,expected_w1,expected_w2,expected_w3,matches");
    }
    let mut all_match = true;
    for n in range.start..=range.end {
        let matrix = match build_matrix(&spec, n, &overrides) {
            Ok(matrix) => matrix,
            Err(err) => return usage_error(&err.to_string()),
        };
        let det = det_bicomplex(&matrix);
        let expected = bcj(n);
        let matches = det == expected;
        all_match &= matches;
        match format {
            Format::Json => {
                let row = DetRow {
                    n,
                    det: QuatRow::new(n, &det),
                    expected: QuatRow::new(n, &expected),
                    matches,
                };
                println!("{}", serde_json::to_string(&row).unwrap());
            }
            Format::Csv => {
                let d = QuatRow::new(n, &det);
                let e = QuatRow::new(n, &expected);
                println!(
                    "{}",
                    csv_line(&[
                        n.to_string(),
                        d.w0,
                        d.w1,
                        d.w2,
                        d.w3,
                        e.w0,
                        e.w1,
                        e.w2,
                        e.w3,
                        matches.to_string(),
                    ])
                );
            }
            Format::Pretty => {
                if matches {
                    println!("det({n}) = {det} matches BCJ({n})");
                } else {
                    println!("det({n}) = {det} differs from BCJ({n}) = {expected}");
                }
            }
        }
    }
    // Planted overrides are probes: mismatches are the expected output.
    // An untouched matrix that mismatches means broken arithmetic.
    if all_match || !overrides.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_bench(range: &RangeSpec, strategy_names: &[String], format: Format) -> ExitCode {
    if range.start != 0 {
        return usage_error("bench --range must start at 0");
    }
    let strategies: Vec<Strategy> = if strategy_names.is_empty() {
        Strategy::ALL.to_vec()
    } else {
        let mut parsed = Vec::new();
        for name in strategy_names {
            match name.parse::<Strategy>() {
                Ok(strategy) => parsed.push(strategy),
                Err(message) => return usage_error(&message),
            }
        }
        parsed
    };
    let rows = match bench::run(range.end, &strategies) {
        Ok(rows) => rows,
        Err((strategy, n)) => {
            eprintln!("error: strategy {strategy} disagrees with the recurrence at n = {n}");
            return ExitCode::from(1);
        }
    };
    if format == Format::Csv {
        println!("strategy,terms,wall_ms,agree");
    }
    for row in &rows {
        match format {
            Format::Json => println!("{}", serde_json::to_string(row).unwrap()),
            Format::Csv => println!(
                "{}",
                csv_line(&[
                    row.strategy.to_string(),
                    row.terms.to_string(),
                    row.wall_ms.to_string(),
                    row.agree.to_string(),
                ])
            ),
            Format::Pretty => println!(
                "{}: {} terms in {} ms (cross-checked)",
                row.strategy, row.terms, row.wall_ms
            ),
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Gen { which, range } => run_gen(*which, range, cli.format),
        Command::Verify {
            identities,
            grid,
            gap,
            range,
        } => run_verify(identities, *grid, *gap, range.as_ref(), cli.format),
        Command::Gf { range } => run_gf(range.as_ref(), cli.format),
        Command::Det {
            range,
            override_entry,
        } => run_det(range, override_entry, cli.format),
        Command::Bench { range, strategies } => run_bench(range, strategies, cli.format),
    }
}
