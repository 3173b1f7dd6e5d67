use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use coxtrace::characters::{cell_decomposition, trace_report, Coefficient};
use coxtrace::error::Error;
use coxtrace::groups::{CoxeterDatum, CoxeterType};
use coxtrace::hecke::{
    dihedral_module_trace, hecke_coxeter_trace, seminormal_model, HeckeTraceRecord,
};
use coxtrace::noncrystal;
use coxtrace::verify::{run_suite, SuiteConfig};

/// Coxeter-element traces on irreducible representations of finite
/// Coxeter groups and their Hecke algebras.
#[derive(Parser, Debug)]
#[command(name = "coxtrace", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coxeter-element trace on every irreducible representation.
    Trace(GroupArgs),
    /// Traces grouped by two-sided cell.
    Cells(GroupArgs),
    /// Traces of T_w on Hecke modules (type A up to rank 6, or I2(m)).
    Hecke(GroupArgs),
    /// Cells and Coxeter traces of the dihedral group I2(m).
    Dihedral {
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the full invariant suite.
    Verify {
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print one line per check.
        #[arg(short, long)]
        verbose: bool,
    },
}

#[derive(Args, Debug)]
struct GroupArgs {
    /// A, B, D, E6, E7, E8, F4, G2, H3, H4 or I2.
    #[arg(long = "type")]
    group_type: String,
    #[arg(long)]
    rank: Option<usize>,
    /// Order of the product of the two generators, for I2.
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EmptyInput(_)
            | Error::InvalidInput(_)
            | Error::InvalidLabel(_)
            | Error::InvalidOrder(_)
            | Error::InvalidCell(_)
            | Error::Capability(_)
            | Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

impl GroupArgs {
    fn datum(&self) -> Result<CoxeterDatum, Failure> {
        let family = if self.group_type == "I2" {
            let m = self
                .m
                .ok_or_else(|| Failure::Usage("type I2 needs --m".into()))?;
            CoxeterType::I2(m)
        } else {
            self.group_type.parse::<CoxeterType>()?
        };
        let rank = match (self.rank, family.fixed_rank()) {
            (Some(r), _) => r,
            (None, Some(r)) => r,
            (None, None) => return Err(Failure::Usage(format!("type {family} needs --rank"))),
        };
        Ok(CoxeterDatum::new(family, rank)?)
    }
}

fn render(format: Format, json: Value, csv: String, text: String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&json).expect("JSON values serialize") + "\n",
        Format::Csv => csv,
        Format::Text => text,
    }
}

fn hecke_line(rec: &HeckeTraceRecord) -> String {
    let mut coeff = Coefficient::Cyclotomic(rec.trace_at_1.clone()).to_string();
    if coeff.contains(' ') {
        coeff = format!("({coeff})");
    }
    match rec.m {
        None => format!("{}: 0\n", rec.label),
        Some(0) => format!("{}: {coeff}\n", rec.label),
        Some(m) => format!("{}: {coeff} v^{m}\n", rec.label),
    }
}

fn hecke_records(datum: &CoxeterDatum) -> Result<Vec<HeckeTraceRecord>, Failure> {
    match datum.family() {
        CoxeterType::A => {
            let n = datum.rank() + 1;
            let order = datum.natural_order();
            let mut out = Vec::new();
            for lam in coxtrace::combinatorics::Partition::all(n) {
                out.push(hecke_coxeter_trace(&seminormal_model(n, &lam)?, &order)?);
            }
            Ok(out)
        }
        CoxeterType::I2(m) => Ok(noncrystal::labels(m)?
            .iter()
            .map(|l| dihedral_module_trace(m, l))
            .collect::<Result<_, _>>()?),
        other => Err(Failure::Usage(format!(
            "Hecke models are available for type A and I2 only, not {other}"
        ))),
    }
}

fn hecke_output(records: &[HeckeTraceRecord], format: Format) -> String {
    let json = Value::Array(records.iter().map(HeckeTraceRecord::to_json).collect());
    let mut csv = String::from("label,coefficient,exponent\n");
    for r in records {
        let exp = r.m.map(|m| m.to_string()).unwrap_or_default();
        let coeff = Coefficient::Cyclotomic(r.trace_at_1.clone());
        csv.push_str(&format!("\"{}\",\"{coeff}\",{exp}\n", r.label));
    }
    let text: String = records.iter().map(hecke_line).collect();
    render(format, json, csv, text)
}

fn dihedral_output(m: u32, format: Format) -> Result<String, Failure> {
    let dec = noncrystal::dihedral_cell_decomposition(m)?;
    let mut traces = Vec::new();
    for label in noncrystal::labels(m)? {
        let tr = Coefficient::Cyclotomic(noncrystal::dihedral_coxeter_trace(m, &label)?);
        traces.push((label.to_string(), tr));
    }
    let json = json!({
        "m": m,
        "traces": traces.iter().map(|(l, t)| json!({"label": l, "trace": t.to_json()})).collect::<Vec<_>>(),
        "cells": dec.to_json()["cells"].clone(),
    });
    let mut csv = String::from("label,trace\n");
    for (l, t) in &traces {
        csv.push_str(&format!("\"{l}\",\"{t}\"\n"));
    }
    let mut text = format!("I2({m}) h={m}\n");
    for (l, t) in &traces {
        text.push_str(&format!("{l}: {t}\n"));
    }
    text.push_str(&dec.to_text());
    Ok(render(format, json, csv, text))
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Trace(args) => {
            let r = trace_report(&args.datum()?)?;
            Ok(render(args.format, r.to_json(), r.to_csv(), r.to_text()))
        }
        Command::Cells(args) => {
            let d = cell_decomposition(&args.datum()?)?;
            Ok(render(args.format, d.to_json(), d.to_csv(), d.to_text()))
        }
        Command::Hecke(args) => {
            let records = hecke_records(&args.datum()?)?;
            Ok(hecke_output(&records, args.format))
        }
        Command::Dihedral { m, format } => dihedral_output(m, format),
        Command::Verify {
            all,
            max_rank,
            seed,
            verbose,
        } => {
            if !all {
                return Err(Failure::Usage("verify currently requires --all".into()));
            }
            let report = run_suite(&SuiteConfig {
                max_rank,
                seed,
                ..SuiteConfig::default()
            });
            let mut out = String::new();
            let mut failures = String::new();
            for o in &report.outcomes {
                let status = if o.passed { "ok" } else { "FAILED" };
                let line = format!("{status:6} {} ({} ms): {}\n", o.name, o.millis, o.detail);
                if !o.passed {
                    failures.push_str(&line);
                }
                if verbose || !o.passed {
                    out.push_str(&line);
                }
            }
            if !failures.is_empty() {
                return Err(Failure::Check(failures.trim_end().to_string()));
            }
            out.push_str(&format!("all {} checks passed\n", report.outcomes.len()));
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
