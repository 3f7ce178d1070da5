//! Command-line front end for the `stoimenow` library.
//!
//! Exit codes: 0 when everything passes, 1 on a verification failure or a
//! rejected bijection input, 2 on usage and parse errors.

pub mod args;
pub mod report;
pub mod suites;

use std::io::{self, Write};

use num_bigint::BigInt;
use thiserror::Error;

use stoimenow::bijection::{matching_to_string, string_to_matching, AlphaBetaString};
use stoimenow::series::{
    gf_registry, listed_sequence_notes, Polynomial, RationalGF, MAX_ORDER, TABLE_ROWS,
};
use stoimenow::{
    count_table, enumerate_stoimenow, glue, omega, split, BijectionError, CountTable,
    EnumerateError, Matching, PatternSet, MAX_N,
};

use args::{
    BijectArgs, CheckArgs, Cli, Command, CountArgs, Format, GenArgs, OeisArgs, Op, SeriesArgs,
    Suite, TableArgs,
};
use report::{RowOutcome, VerificationReport};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Bijection(#[from] BijectionError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Bijection(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<EnumerateError> for CliError {
    fn from(e: EnumerateError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

/// Validated limits shared by all commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub n_max: usize,
    pub order: usize,
    pub workers: usize,
}

impl RunConfig {
    pub fn new(n_max: usize, order: usize, workers: usize) -> Result<Self, CliError> {
        if n_max > MAX_N {
            return Err(usage(format!("n = {n_max} exceeds the limit of {MAX_N}")));
        }
        if order > MAX_ORDER {
            return Err(usage(format!(
                "order {order} exceeds the limit of {MAX_ORDER}"
            )));
        }
        if workers == 0 {
            return Err(usage("--workers must be at least 1"));
        }
        Ok(RunConfig {
            n_max,
            order,
            workers,
        })
    }
}

/// Runs one command, writing to `out`. `Ok(false)` means a verification
/// failure (exit 1).
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<bool, CliError> {
    match cli.command {
        Command::Gen(a) => gen(a, out),
        Command::Count(a) => count(a, out),
        Command::Table(a) => table(a, out),
        Command::Series(a) => series(a, out),
        Command::Check(a) => check(a, out),
        Command::Biject(a) => biject(a, out),
        Command::Oeis(a) => oeis(a, out),
    }
}

fn parse_set(s: Option<&str>) -> Result<PatternSet, CliError> {
    match s {
        None => Ok(PatternSet::default()),
        Some(s) => s.parse().map_err(usage),
    }
}

fn reject_format(format: Format, allowed: &[Format], command: &str) -> Result<(), CliError> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(usage(
            format!("{command} does not support --format {format:?}").to_lowercase(),
        ))
    }
}

fn gen(a: GenArgs, out: &mut dyn Write) -> Result<bool, CliError> {
    reject_format(a.format, &[Format::Arcs, Format::Text, Format::Json], "gen")?;
    RunConfig::new(a.n, 0, 1)?;
    let set = parse_set(a.avoid.as_deref())?;
    let matchings = enumerate_stoimenow(a.n)?.filter(|m| set.avoided_by(m));
    if a.format == Format::Json {
        let all: Vec<Matching> = matchings.collect();
        writeln!(
            out,
            "{}",
            serde_json::to_string(&all).expect("matchings serialize")
        )?;
    } else {
        for m in matchings {
            writeln!(out, "{m}")?;
        }
    }
    Ok(true)
}

fn count(a: CountArgs, out: &mut dyn Write) -> Result<bool, CliError> {
    reject_format(
        a.format,
        &[Format::Text, Format::Csv, Format::Json],
        "count",
    )?;
    let set = parse_set(a.avoid.as_deref())?;
    let (lo, hi) = match (a.n, a.n_max) {
        (Some(n), _) => (n, n),
        (None, Some(m)) => (1, m),
        (None, None) => return Err(usage("count needs --n or --n-max")),
    };
    RunConfig::new(hi, 0, a.workers)?;
    let table = count_table(std::slice::from_ref(&set), hi, a.workers)?;
    let counts = &table.rows[0].counts;
    let selected = if lo == 0 {
        vec![1]
    } else {
        counts[lo - 1..].to_vec()
    };
    match a.format {
        Format::Text if a.n.is_some() => writeln!(out, "{}", selected[0])?,
        Format::Text => {
            let line: Vec<String> = selected.iter().map(u64::to_string).collect();
            writeln!(out, "{}", line.join(","))?;
        }
        Format::Csv => {
            writeln!(out, "patterns,n,count")?;
            for (i, c) in selected.iter().enumerate() {
                writeln!(out, "\"{}\",{},{}", set.canonical_name(), lo + i, c)?;
            }
        }
        _ => {
            let v = serde_json::json!({"patterns": set.canonical_name(), "from": lo, "counts": selected});
            writeln!(out, "{v}")?;
        }
    }
    Ok(true)
}

fn table_rows(specs: &[String]) -> Result<Vec<PatternSet>, CliError> {
    if specs.is_empty() {
        return Ok(TABLE_ROWS
            .iter()
            .map(|r| r.parse().expect("registry row"))
            .collect());
    }
    specs
        .iter()
        .flat_map(|s| s.split(';'))
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse().map_err(usage))
        .collect()
}

/// Brute-force counts against closed forms for each row.
pub fn table_report(
    rows: &[PatternSet],
    n_max: usize,
    workers: usize,
) -> Result<VerificationReport, CliError> {
    let mut entries = Vec::with_capacity(rows.len());
    for set in rows {
        let name = set.canonical_name();
        let entry = gf_registry()
            .get(name.as_str())
            .ok_or_else(|| usage(format!("no closed form registered for {name}")))?;
        entries.push((name, *entry));
    }
    let counted: CountTable = count_table(rows, n_max, workers)?;
    let outcomes = entries
        .into_iter()
        .zip(counted.rows)
        .map(|((name, entry), row)| {
            let coeffs = entry.gf.coefficients(n_max);
            let expected: Vec<String> = coeffs[1..].iter().map(BigInt::to_string).collect();
            let agree = row
                .counts
                .iter()
                .map(u64::to_string)
                .eq(expected.iter().cloned());
            let note = listed_sequence_notes(&name).map(|n| {
                format!(
                    "{n}; brute-force counts {} the closed form",
                    if agree { "follow" } else { "contradict" }
                )
            });
            RowOutcome {
                patterns: name,
                oeis: entry.oeis.map(str::to_string),
                expected,
                counted: row.counts,
                agree,
                note,
            }
        })
        .collect();
    Ok(VerificationReport::new(outcomes, Vec::new()))
}

fn emit_report(
    r: &VerificationReport,
    format: Format,
    out: &mut dyn Write,
) -> Result<bool, CliError> {
    let s = match format {
        Format::Csv => r.to_csv(),
        Format::Json => r.to_json(),
        _ => r.to_text(),
    };
    out.write_all(s.as_bytes())?;
    Ok(r.pass)
}

fn table(a: TableArgs, out: &mut dyn Write) -> Result<bool, CliError> {
    reject_format(
        a.format,
        &[Format::Text, Format::Csv, Format::Json],
        "table",
    )?;
    if a.n_max == 0 {
        return Err(usage("--n-max must be at least 1"));
    }
    RunConfig::new(a.n_max, 0, a.workers)?;
    let rows = table_rows(&a.rows)?;
    let r = table_report(&rows, a.n_max, a.workers)?;
    emit_report(&r, a.format, out)
}

fn parse_poly(s: &str) -> Result<Polynomial, CliError> {
    s.parse().map_err(usage)
}

fn series(a: SeriesArgs, out: &mut dyn Write) -> Result<bool, CliError> {
    reject_format(
        a.format,
        &[Format::Text, Format::Csv, Format::Json, Format::Bfile],
        "series",
    )?;
    RunConfig::new(0, a.order, 1)?;
    let gf = match (&a.name, &a.num, &a.den) {
        (Some(name), _, _) => {
            let set: PatternSet = name.parse().map_err(usage)?;
            gf_registry()
                .get(set.canonical_name().as_str())
                .map(|e| e.gf.clone())
                .ok_or_else(|| usage(format!("no closed form registered for {name}")))?
        }
        (None, Some(num), Some(den)) => {
            RationalGF::new(parse_poly(num)?, parse_poly(den)?).map_err(usage)?
        }
        _ => return Err(usage("series needs --name or both --num and --den")),
    };
    let coeffs = gf.coefficients(a.order);
    match a.format {
        Format::Csv => {
            writeln!(out, "n,coefficient")?;
            for (n, c) in coeffs.iter().enumerate() {
                writeln!(out, "{n},{c}")?;
            }
        }
        Format::Bfile => write_bfile(&coeffs, a.with_zero, out)?,
        Format::Json => {
            let v: Vec<String> = coeffs.iter().map(BigInt::to_string).collect();
            let j = serde_json::json!({"schema": report::SCHEMA, "gf": gf.to_string(), "coefficients": v});
            writeln!(out, "{j}")?;
        }
        _ => {
            let v: Vec<String> = coeffs.iter().map(BigInt::to_string).collect();
            writeln!(out, "{}", v.join(","))?;
        }
    }
    Ok(true)
}

/// `n a(n)` lines from `n = 1`, or from `n = 0` with `with_zero`.
pub fn write_bfile(coeffs: &[BigInt], with_zero: bool, out: &mut dyn Write) -> io::Result<()> {
    let start = usize::from(!with_zero);
    for (n, c) in coeffs.iter().enumerate().skip(start) {
        writeln!(out, "{n} {c}")?;
    }
    Ok(())
}

fn check(a: CheckArgs, out: &mut dyn Write) -> Result<bool, CliError> {
    reject_format(a.format, &[Format::Text, Format::Json], "check")?;
    let cfg = RunConfig::new(a.n_max, a.order, 1)?;
    let mut ids = Vec::new();
    let all = a.suite == Suite::All;
    if all || a.suite == Suite::HEq {
        ids.extend(suites::h_eq(cfg.order));
    }
    if all || a.suite == Suite::FCatalan {
        ids.extend(suites::f_catalan(cfg.order));
    }
    if all || a.suite == Suite::CaseSums {
        ids.extend(suites::case_sums(cfg.order));
    }
    if all || a.suite == Suite::Fibonacci {
        ids.extend(suites::fibonacci(cfg.order));
    }
    if all || a.suite == Suite::Omega {
        ids.extend(suites::omega_suite(cfg.n_max)?);
    }
    if all || a.suite == Suite::Bijections {
        ids.extend(suites::bijections(cfg.n_max)?);
    }
    emit_report(&VerificationReport::new(Vec::new(), ids), a.format, out)
}

fn parse_matching(s: &str) -> Result<Matching, CliError> {
    s.trim().parse().map_err(usage)
}

fn show_matching(m: &Matching) -> String {
    if m.is_empty() {
        "∅".to_string()
    } else {
        m.to_string()
    }
}

fn biject(a: BijectArgs, out: &mut dyn Write) -> Result<bool, CliError> {
    reject_format(a.format, &[Format::Text, Format::Json], "biject")?;
    let json = a.format == Format::Json;
    match a.op {
        Op::Glue => {
            let (l, r) = a
                .input
                .split_once('|')
                .ok_or_else(|| usage("glue expects \"M1 | M2\""))?;
            let m = glue(&parse_matching(l)?, &parse_matching(r)?)?;
            if json {
                writeln!(out, "{}", serde_json::to_string(&m).expect("serializes"))?;
            } else {
                writeln!(out, "{}", show_matching(&m))?;
            }
        }
        Op::Split => {
            let (m1, m2) = split(&parse_matching(&a.input)?)?;
            if json {
                writeln!(out, "{}", serde_json::json!({"m1": m1, "m2": m2}))?;
            } else {
                writeln!(out, "{} | {}", show_matching(&m1), show_matching(&m2))?;
            }
        }
        Op::String => {
            let w: AlphaBetaString = a.input.parse().map_err(usage)?;
            let m = string_to_matching(&w);
            if json {
                writeln!(out, "{}", serde_json::to_string(&m).expect("serializes"))?;
            } else {
                writeln!(out, "{m}")?;
            }
        }
        Op::Unstring => {
            let w = matching_to_string(&parse_matching(&a.input)?)?;
            if json {
                writeln!(out, "{}", serde_json::json!({"string": w.to_string()}))?;
            } else {
                writeln!(out, "{w}")?;
            }
        }
        Op::Omega => {
            let p = omega(&parse_matching(&a.input)?);
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&p.to_json()).expect("serializes")
                )?;
            } else if p.size() > 1 && p.is_chain() {
                writeln!(out, "chain of {}: {p}", p.size())?;
            } else {
                writeln!(out, "{p}")?;
            }
        }
    }
    Ok(true)
}

fn oeis(a: OeisArgs, out: &mut dyn Write) -> Result<bool, CliError> {
    RunConfig::new(0, a.order, 1)?;
    match a.name {
        Some(name) => {
            let set: PatternSet = name.parse().map_err(usage)?;
            let entry = gf_registry()
                .get(set.canonical_name().as_str())
                .ok_or_else(|| usage(format!("no closed form registered for {name}")))?;
            write_bfile(&entry.gf.coefficients(a.order), a.with_zero, out)?;
        }
        None => {
            for row in TABLE_ROWS.iter().chain(&["R3", "R4", "R5"]) {
                let e = gf_registry()[row];
                writeln!(out, "{row} {}", e.oeis.unwrap_or("new"))?;
            }
        }
    }
    Ok(true)
}
