//! `cwlift`: constructions, verification and bounds for q-ary constant-weight codes.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cwlift::bounds::{bound_report, exact_value};
use cwlift::codes::{read_code_file, verify_code, write_code, Code, SetSystem};
use cwlift::designs::{design_13_4, disjointify_with, steiner_triple_system, write_design, DisjointifyConfig};
use cwlift::lifting::{construct, ConstructOptions, SearchOptions, DEFAULT_BUDGET};
use cwlift::{Error, Report};

#[derive(Parser, Debug)]
#[command(name = "cwlift", version, about = "Constructions, verification and bounds for q-ary constant-weight codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Hill-climbing move cap for randomized searches.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Packing multiplicity for the random-symbol construction.
    #[arg(long, global = true)]
    lambda: Option<u64>,
    /// Packing strength for the d = w + 1 construction.
    #[arg(long, global = true)]
    t: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Every applicable bound on A_q(n, d, w).
    Bound { n: u64, d: u64, w: u64, q: u64 },
    /// Build and verify a code. Writes the code file to --out (report on stdout),
    /// or the code file to stdout and the report to stderr.
    Construct { n: usize, d: usize, w: usize, q: u16 },
    /// Re-verify a code file.
    Verify { file: PathBuf },
    /// Grid of exact values or brackets over n and q.
    Table {
        #[arg(default_value_t = 4)]
        d: u64,
        #[arg(default_value_t = 3)]
        w: u64,
        /// Length range, `a..b` inclusive.
        #[arg(long, default_value = "3..25", value_parser = parse_range)]
        n: RangeInclusive<u64>,
        /// Alphabet range, `a..b` inclusive.
        #[arg(long, default_value = "2..10", value_parser = parse_range)]
        q: RangeInclusive<u64>,
    },
    /// Search for s disjoint copies of a design: `sts:N`, `design13`, or
    /// `design13-triples` (copies share no triple).
    SearchDisjoint { family: String, s: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected `a..b`, got {s:?}"))?;
    let a: u64 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: u64 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

/// Failure carrying the process exit status.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Verification(_) => 1,
            Error::BudgetExhausted { .. } | Error::Partial { .. } => 3,
            _ => 2,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn bad(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Bound { n, d, w, q } => cmd_bound(cli, *n, *d, *w, *q),
        Command::Construct { n, d, w, q } => cmd_construct(cli, *n, *d, *w, *q),
        Command::Verify { file } => cmd_verify(cli, file),
        Command::Table { d, w, n, q } => cmd_table(cli, *d, *w, n.clone(), q.clone()),
        Command::SearchDisjoint { family, s } => cmd_search(cli, family, *s),
    }
}

fn opt_str(v: Option<u64>) -> String {
    v.map_or_else(|| "default".into(), |x| x.to_string())
}

fn header(cli: &Cli, what: &str) -> String {
    format!(
        "# cwlift {what} seed={} budget={} workers={} lambda={} t={}\n",
        cli.seed,
        cli.budget,
        cli.workers,
        opt_str(cli.lambda),
        opt_str(cli.t)
    )
}

fn config_json(cli: &Cli) -> Value {
    json!({
        "seed": cli.seed,
        "budget": cli.budget,
        "workers": cli.workers,
        "lambda": cli.lambda,
        "t": cli.t,
    })
}

fn emit(cli: &Cli, text: &str) -> CmdResult {
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| bad(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn cmd_bound(cli: &Cli, n: u64, d: u64, w: u64, q: u64) -> CmdResult {
    let what = format!("bound n={n} d={d} w={w} q={q}");
    let report: Report = bound_report(n, d, w, q)?;
    let text = match cli.format {
        Format::Text => header(cli, &what) + &report.to_text(),
        Format::Json => {
            let mut v = report.to_json();
            v["config"] = config_json(cli);
            pretty(&v)
        }
    };
    emit(cli, &text)
}

fn cmd_construct(cli: &Cli, n: usize, d: usize, w: usize, q: u16) -> CmdResult {
    let opts = ConstructOptions {
        search: SearchOptions { seed: cli.seed, budget: cli.budget, workers: cli.workers },
        lambda: cli.lambda,
        t: cli.t.map(|t| t as usize),
    };
    let (code, shortfall) = match construct(n, d, w, q, &opts) {
        Ok(c) => (c, None),
        Err(Error::Partial { partial, target }) => (*partial, Some(target)),
        Err(e) => return Err(e.into()),
    };
    let check = verify_code(&code);
    if !check.valid {
        return Err(Failure { code: 1, msg: format!("constructed code failed verification: {check:?}") });
    }
    let exact = exact_value::<i128>(n as u64, d as u64, w as u64, q as u64)?;
    let status = match (&exact, shortfall) {
        (_, Some(target)) => format!("partial, reached {} of {target}", code.len()),
        (Some(e), None) if e.value == code.len() as i128 => format!("exact, {}", e.provenance),
        (Some(e), None) => format!("lower bound, exact value {} ({})", e.value, e.provenance),
        (None, None) => "lower bound".to_string(),
    };
    let what = format!("construct n={n} d={d} w={w} q={q}");
    let report = match cli.format {
        Format::Text => {
            let mut s = header(cli, &what);
            let _ = writeln!(s, "size {}", code.len());
            let _ = writeln!(s, "provenance {}", code.provenance());
            let _ = writeln!(s, "min_distance {}", check.actual_min_distance);
            let _ = writeln!(s, "valid {}", check.valid);
            let _ = writeln!(s, "status {status}");
            s
        }
        Format::Json => pretty(&json!({
            "config": config_json(cli),
            "params": code.params(),
            "size": code.len(),
            "provenance": code.provenance(),
            "min_distance": check.actual_min_distance.value(),
            "valid": check.valid,
            "status": status,
        })),
    };
    let file = write_code(&code);
    match &cli.out {
        Some(path) => {
            std::fs::write(path, file).map_err(|e| bad(format!("{}: {e}", path.display())))?;
            print!("{report}");
        }
        None => {
            print!("{file}");
            eprint!("{report}");
        }
    }
    match shortfall {
        Some(target) => Err(Failure {
            code: 3,
            msg: format!("search budget exhausted: reached {} of {target} codewords", code.len()),
        }),
        None => Ok(()),
    }
}

fn cmd_verify(cli: &Cli, file: &PathBuf) -> CmdResult {
    let code: Code = read_code_file(file).map_err(|e| bad(format!("{}: {e}", file.display())))?;
    let r = verify_code(&code);
    let text = match cli.format {
        Format::Text => {
            let mut s = format!("# cwlift verify {}\n", file.display());
            let _ = writeln!(s, "params {}", r.params);
            let _ = writeln!(s, "size {}", r.size);
            let _ = writeln!(s, "min_distance {}", r.actual_min_distance);
            let _ = writeln!(s, "valid {}", r.valid);
            for &i in &r.weight_violations {
                let _ = writeln!(s, "weight word {i} [{}] has weight {}", code.words()[i], code.words()[i].weight());
            }
            for v in &r.distance_violations {
                let _ = writeln!(
                    s,
                    "pair {} {} [{}] [{}] distance {}",
                    v.first,
                    v.second,
                    code.words()[v.first],
                    code.words()[v.second],
                    v.distance
                );
            }
            s
        }
        Format::Json => pretty(&serde_json::to_value(&r).expect("report serializes")),
    };
    emit(cli, &text)?;
    if r.valid {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            msg: format!(
                "{} weight and {} distance violations",
                r.weight_violations.len(),
                r.distance_violations.len()
            ),
        })
    }
}

fn cmd_table(cli: &Cli, d: u64, w: u64, ns: RangeInclusive<u64>, qs: RangeInclusive<u64>) -> CmdResult {
    let what = format!("table d={d} w={w} n={}..{} q={}..{}", ns.start(), ns.end(), qs.start(), qs.end());
    let mut rows = Vec::new();
    for n in ns.clone() {
        let mut cells = Vec::new();
        for q in qs.clone() {
            cells.push(bound_report::<i128>(n, d, w, q)?);
        }
        rows.push((n, cells));
    }
    let text = match cli.format {
        Format::Text => {
            let mut s = header(cli, &what);
            s.push_str("# cells: exact value, or lower-upper\n");
            let _ = write!(s, "{:>4}", "n\\q");
            for q in qs.clone() {
                let _ = write!(s, " {q:>15}");
            }
            s.push('\n');
            for (n, cells) in &rows {
                let _ = write!(s, "{n:>4}");
                for r in cells {
                    let cell = match &r.exact {
                        Some(e) => e.value.to_string(),
                        None if r.best_lower == r.best_upper => r.best_upper.to_string(),
                        None => format!("{}-{}", r.best_lower, r.best_upper),
                    };
                    let _ = write!(s, " {cell:>15}");
                }
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let cells: Vec<Value> = rows
                .iter()
                .flat_map(|(_, cells)| cells.iter())
                .map(|r| {
                    json!({
                        "n": r.params.n,
                        "q": r.params.q,
                        "exact": r.exact.as_ref().map(|e| json!({"value": e.value.to_string(), "provenance": e.provenance})),
                        "best_lower": r.best_lower.to_string(),
                        "best_upper": r.best_upper.to_string(),
                    })
                })
                .collect();
            pretty(&json!({"config": config_json(cli), "d": d, "w": w, "cells": cells}))
        }
    };
    emit(cli, &text)
}

fn family(name: &str) -> Result<(SetSystem, Option<usize>), Failure> {
    if let Some(n) = name.strip_prefix("sts:") {
        let n: usize = n.parse().map_err(|e| bad(format!("sts order {n:?}: {e}")))?;
        return Ok((steiner_triple_system(n)?, None));
    }
    match name {
        "design13" => Ok((design_13_4()?, None)),
        "design13-triples" => Ok((design_13_4()?, Some(3))),
        _ => Err(bad(format!("unknown design family {name:?}; expected sts:N, design13 or design13-triples"))),
    }
}

fn cmd_search(cli: &Cli, name: &str, s: usize) -> CmdResult {
    let (system, key_size) = family(name)?;
    let cfg = DisjointifyConfig { workers: cli.workers, key_size, ..DisjointifyConfig::new(cli.seed, cli.budget) };
    let found = disjointify_with(&system, s, &cfg)?;
    let what = format!("search-disjoint family={name} s={s}");
    let text = match cli.format {
        Format::Text => {
            let mut out = header(cli, &what);
            let _ = writeln!(out, "moves {}", found.moves);
            let _ = writeln!(out, "restarts {}", found.restarts);
            let _ = writeln!(out, "guaranteed {}", found.guaranteed);
            for (i, sys) in found.systems.iter().enumerate() {
                let _ = writeln!(out, "# copy {i}");
                out.push_str(&write_design(sys, None));
            }
            out
        }
        Format::Json => pretty(&json!({
            "config": config_json(cli),
            "family": name,
            "s": s,
            "moves": found.moves,
            "restarts": found.restarts,
            "guaranteed": found.guaranteed,
            "permutations": found.permutations,
            "copies": found.systems.iter().map(|c| c.blocks().to_vec()).collect::<Vec<_>>(),
        })),
    };
    emit(cli, &text)
}
