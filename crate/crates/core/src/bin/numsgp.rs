use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use numsgp::cli::query::{self, Record};
use numsgp::cli::report::{self, Summary};
use numsgp::cli::sweep::{self, Family, SweepConfig, Tally};
use numsgp::{EvalMode, NumericalSemigroup};

/// Numerical semigroups: Apery sets, Frobenius numbers, e1 and sweeps
/// checking closed formulas against brute force.
#[derive(Parser, Debug)]
#[command(name = "numsgp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct Gens {
    /// Minimal generators, e.g. `5 6 8`.
    #[arg(required = true, allow_negative_numbers = true)]
    generators: Vec<i64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Everything about one semigroup.
    Info(Gens),
    /// Apery set with respect to a base element (default: the multiplicity).
    Apery {
        #[command(flatten)]
        gens: Gens,
        #[arg(long)]
        base: Option<i64>,
    },
    /// Frobenius number.
    Frobenius(Gens),
    /// Genus and gaps.
    Genus(Gens),
    /// First Hilbert coefficient by all three methods.
    E1(Gens),
    /// Herzog matrix exponents of a non-symmetric 3-generated semigroup.
    Herzog(Gens),
    /// Cohen-Macaulayness of the associated graded ring.
    Cm(Gens),
    /// Sweep a family, comparing closed forms with the oracles.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    family: Family,
    /// Largest multiplicity-like parameter `a` (or `n1`).
    #[arg(long)]
    a_max: Option<i64>,
    /// Largest gap parameter `d`.
    #[arg(long)]
    d_max: Option<i64>,
    /// Largest generator (herzog, e1-methods, max-embdim).
    #[arg(long)]
    gen_max: Option<i64>,
    /// Evaluate formulas outside their preconditions too.
    #[arg(long)]
    permissive: bool,
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn open_out(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn emit_record(cli: &Cli, record: &Record) -> Result<(), Failure> {
    let mut out = open_out(&cli.out)?;
    match cli.format {
        Format::Table => record.write_table(&mut out)?,
        Format::Json => record.write_json(&mut out)?,
        Format::Csv => record.write_csv(&mut out)?,
    }
    out.flush()?;
    Ok(())
}

fn write_summary<W: Write>(mut out: W, family: Family, tally: &Tally) -> io::Result<()> {
    writeln!(out, "family {}", family.name())?;
    writeln!(
        out,
        "{:<24} {:>9} {:>9} {:>9} {:>10} {:>9}",
        "formula", "rows", "evaluated", "matched", "mismatches", "anomalies"
    )?;
    let line = |out: &mut W, name: &str, s: &Summary| {
        writeln!(
            out,
            "{:<24} {:>9} {:>9} {:>9} {:>10} {:>9}",
            name, s.rows, s.evaluated, s.matched, s.mismatches, s.anomalies
        )
    };
    for (id, s) in &tally.by_formula {
        line(&mut out, id, s)?;
    }
    line(&mut out, "total", &tally.total())?;
    for row in &tally.mismatch_samples {
        writeln!(
            out,
            "mismatch {} {:?}: formula {:?}, oracle {:?}",
            row.formula_id, row.generators, row.formula_value, row.oracle_value
        )?;
    }
    for row in &tally.anomaly_samples {
        writeln!(
            out,
            "anomaly {} {:?}: {}",
            row.formula_id,
            row.generators,
            row.anomaly.as_deref().unwrap_or_default()
        )?;
    }
    Ok(())
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Result<(), Failure> {
    for (flag, v) in [
        ("--a-max", args.a_max),
        ("--d-max", args.d_max),
        ("--gen-max", args.gen_max),
    ] {
        if let Some(v) = v {
            if v < 1 || v > numsgp::semigroup::generator_cap() {
                return Err(Failure::Usage(format!("{flag} {v} is out of range")));
            }
        }
    }
    let cfg = SweepConfig {
        a_max: args.a_max,
        d_max: args.d_max,
        gen_max: args.gen_max,
        mode: if args.permissive {
            EvalMode::Permissive
        } else {
            EvalMode::Strict
        },
    };
    let summary = match cli.format {
        Format::Table => {
            let tally = sweep::tally(args.family, &cfg);
            let mut out = open_out(&cli.out)?;
            write_summary(&mut out, args.family, &tally)?;
            out.flush()?;
            tally.total()
        }
        Format::Json | Format::Csv => {
            let report = sweep::run(args.family, &cfg);
            let mut out = open_out(&cli.out)?;
            if cli.format == Format::Json {
                report::write_json(&report.rows, &mut out)?;
            } else {
                report::write_csv(&report.rows, &mut out)?;
            }
            out.flush()?;
            let s = report.summary();
            eprintln!(
                "{}: {} rows, {} evaluated, {} mismatches, {} anomalies",
                args.family.name(),
                s.rows,
                s.evaluated,
                s.mismatches,
                s.anomalies
            );
            s
        }
    };
    if summary.mismatches > 0 {
        Err(Failure::Mismatch)
    } else {
        Ok(())
    }
}

fn semigroup(gens: &Gens) -> Result<NumericalSemigroup, Failure> {
    Ok(NumericalSemigroup::new(&gens.generators)?)
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let record = match &cli.command {
        Command::Info(g) => query::info(&semigroup(g)?)?,
        Command::Apery { gens, base } => query::apery(&semigroup(gens)?, *base)?,
        Command::Frobenius(g) => query::frobenius(&semigroup(g)?),
        Command::Genus(g) => query::genus(&semigroup(g)?),
        Command::E1(g) => query::e1(&semigroup(g)?)?,
        Command::Herzog(g) => query::herzog(&semigroup(g)?)?,
        Command::Cm(g) => query::cm(&semigroup(g)?)?,
        Command::Verify(args) => return verify(cli, args),
    };
    emit_record(cli, &record)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
