//! `valspec`: valuation spectra of binomial and multinomial rows.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

mod bench;
mod output;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_rational::BigRational;
use valspec::oracle::DEFAULT_BUDGET;
use valspec::padic::Prime;
use valspec::spectra::{cpk_row, spectrum, spectrum_normalized, SpectrumQuery};

use output::{to_csv, OutputRecord, Spectrum};

const BUDGET_ENV: &str = "VALSPEC_ORACLE_BUDGET";

#[derive(Parser)]
#[command(
    name = "valspec",
    version,
    about = "Exact p-adic valuation spectra of binomial and multinomial rows"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Triangle {
    Cpk,
}

#[derive(Subcommand)]
enum Command {
    /// Print T_{p,k}(n, x) for one n.
    Spectrum {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_parser = parse_big)]
        n: BigUint,
        /// Evaluate at an exact rational such as `-1` or `1/2` (repeatable).
        #[arg(long = "eval", value_parser = parse_rational, allow_hyphen_values = true)]
        evals: Vec<BigRational>,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
        /// Divide by the Fine count (binomial rows only).
        #[arg(long)]
        normalized: bool,
    },
    /// Print spectra for a range of n, or the c_{p,k} triangle.
    Table {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_parser = parse_big)]
        from: Option<BigUint>,
        #[arg(long, value_parser = parse_big)]
        to: Option<BigUint>,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
        #[arg(long, value_enum)]
        triangle: Option<Triangle>,
        /// Last triangle row (k = 0..=rows).
        #[arg(long, default_value_t = 4)]
        rows: usize,
    },
    /// Run a verification sweep.
    Verify {
        #[arg(long, value_enum, default_value_t = verify::Suite::All)]
        suite: verify::Suite,
        /// Largest n (largest tuple total for the lemma suite).
        #[arg(long, default_value_t = 100)]
        limit: u64,
        #[arg(long, value_delimiter = ',')]
        p: Vec<u64>,
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
    },
    /// Time the matrix product against enumeration.
    Bench {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_delimiter = ',', default_value = "10,100,1000")]
        digits: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_big(s: &str) -> Result<BigUint, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("expected a non-negative integer, got {s:?}"))
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("expected an exact rational like 3, -1 or 1/2, got {s:?}"))
}

/// A usage or input problem: reported on stderr, exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn oracle_budget() -> Result<u64, UsageError> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            UsageError(format!(
                "{BUDGET_ENV} must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn compute(q: &SpectrumQuery, normalized: bool) -> Result<Spectrum, UsageError> {
    if normalized {
        Ok(Spectrum::Rat(spectrum_normalized(q)?))
    } else {
        Ok(Spectrum::Int(spectrum(q)))
    }
}

fn cmd_spectrum(
    p: u64,
    k: usize,
    n: BigUint,
    evals: &[BigRational],
    format: Format,
    normalized: bool,
) -> Result<ExitCode, UsageError> {
    let q = SpectrumQuery::new(Prime::new(p)?, k, n)?;
    let spec = compute(&q, normalized)?;
    let record = OutputRecord::new(q.n(), p, k, &spec, evals);
    match format {
        Format::Pretty => {
            println!("{}", spec.pretty());
            for (x, v) in record.evaluations.iter().flatten() {
                println!("x = {x}: {v}");
            }
        }
        Format::Json => println!("{}", record.to_json()),
        Format::Csv => {
            if !evals.is_empty() {
                eprintln!("note: evaluations are not part of the CSV layout; use --format json");
            }
            print!("{}", to_csv(&[record]));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(
    p: u64,
    k: usize,
    from: Option<BigUint>,
    to: Option<BigUint>,
    format: Format,
    triangle: Option<Triangle>,
    rows: usize,
) -> Result<ExitCode, UsageError> {
    let prime = Prime::new(p)?;
    if let Some(Triangle::Cpk) = triangle {
        for k in 0..=rows {
            let row: Vec<String> = cpk_row(prime, k).iter().map(ToString::to_string).collect();
            println!("{}", row.join(" "));
        }
        return Ok(ExitCode::SUCCESS);
    }
    let (Some(from), Some(to)) = (from, to) else {
        return Err(UsageError(
            "table needs --from and --to (or --triangle cpk)".into(),
        ));
    };
    if from > to {
        return Err(UsageError(format!("--from {from} exceeds --to {to}")));
    }
    let width = to.to_string().len();
    let mut records = Vec::new();
    let mut n = from;
    while n <= to {
        let q = SpectrumQuery::new(prime, k, n.clone())?;
        let spec = Spectrum::Int(spectrum(&q));
        match format {
            Format::Pretty => println!("{:>width$} | {}", n, spec.pretty()),
            Format::Json => println!("{}", OutputRecord::new(&n, p, k, &spec, &[]).to_json()),
            Format::Csv => records.push(OutputRecord::new(&n, p, k, &spec, &[])),
        }
        n += 1u32;
    }
    if format == Format::Csv {
        print!("{}", to_csv(&records));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    suite: verify::Suite,
    limit: u64,
    p: &[u64],
    k: &[usize],
) -> Result<ExitCode, UsageError> {
    let primes = p
        .iter()
        .map(|&p| Prime::new(p))
        .collect::<Result<Vec<_>, _>>()?;
    if k.contains(&0) {
        return Err(UsageError("k must be at least 1".into()));
    }
    let plan = verify::Plan {
        limit,
        primes,
        ks: k.to_vec(),
        budget: oracle_budget()?,
    };
    let suites = if suite == verify::Suite::All {
        verify::ALL.to_vec()
    } else {
        vec![suite]
    };
    let mut total = 0;
    for s in suites {
        match verify::run(s, &plan) {
            Ok(count) => {
                if suite == verify::Suite::All {
                    println!("{}: {count} checks passed", s.name());
                }
                total += count;
            }
            Err(verify::Outcome::Failed(failure)) => {
                println!("FAIL {failure}");
                return Ok(ExitCode::from(1));
            }
            Err(verify::Outcome::Error(e)) => return Err(e.into()),
        }
    }
    println!("{total} checks passed");
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(
    p: u64,
    k: usize,
    digits: &[usize],
    trials: usize,
    seed: u64,
) -> Result<ExitCode, UsageError> {
    let prime = Prime::new(p)?;
    if k == 0 {
        return Err(UsageError("k must be at least 1".into()));
    }
    let rows = bench::run(prime, k, digits, trials, seed, oracle_budget()?);
    print!("{}", bench::to_csv(&rows));
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Spectrum {
            p,
            k,
            n,
            evals,
            format,
            normalized,
        } => cmd_spectrum(p, k, n, &evals, format, normalized),
        Command::Table {
            p,
            k,
            from,
            to,
            format,
            triangle,
            rows,
        } => cmd_table(p, k, from, to, format, triangle, rows),
        Command::Verify { suite, limit, p, k } => cmd_verify(suite, limit, &p, &k),
        Command::Bench {
            p,
            k,
            digits,
            trials,
            seed,
        } => cmd_bench(p, k, &digits, trials, seed),
    };
    result.unwrap_or_else(|UsageError(msg)| {
        eprintln!("error: {msg}");
        ExitCode::from(2)
    })
}
