//! Command-line front end: count tables, series coefficients, the full
//! cross-route verification suite, and a diff of the diagonal sequence
//! against a cached OEIS b-file.

mod bfile;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use smotzkin::genfun::{f_series, g_series, phi_series, psi_series, ternary_tree_series};
use smotzkin::recurrence::{ab_tables, cd_tables, smotzkin_count};
use smotzkin::verify::{run_crosscheck, CrosscheckConfig};
use smotzkin::{FamilyTag, ORACLE_MAX_N};

use output::Format;

/// Exit codes shared with the integration tests.
pub const EXIT_VERIFICATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CACHE_MISS: u8 = 3;
pub const EXIT_PARSE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "smotzkin",
    about = "Exact S-Motzkin path enumeration: tables, series, cross-checks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    A,
    B,
    C,
    D,
}

impl From<FamilyArg> for FamilyTag {
    fn from(f: FamilyArg) -> FamilyTag {
        match f {
            FamilyArg::A => FamilyTag::A,
            FamilyArg::B => FamilyTag::B,
            FamilyArg::C => FamilyTag::C,
            FamilyArg::D => FamilyTag::D,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    F,
    G,
    Phi,
    Psi,
    T,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the nonzero entries (n, k, count) of one counting family.
    Table {
        /// Counting family: a/b (forward), c/d (reverse).
        #[arg(long)]
        family: FamilyArg,
        /// Largest path length n.
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Emit the nonzero coefficients of a generating function.
    Series {
        /// Which series: f/g/phi/psi (in z, indexed by k) or t (in x).
        #[arg(value_enum)]
        which: SeriesKind,
        /// Family index k (ignored for t).
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Truncation order.
        #[arg(long, default_value_t = 30)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run every cross-route verification group and report pass/fail.
    Crosscheck {
        /// Row bound for the DP / series / closed-form comparisons.
        #[arg(long = "n-max", default_value_t = 40)]
        n_max: usize,
        /// Row bound for the exhaustive oracle (hard limit 16).
        #[arg(long = "oracle-bound", default_value_t = 10)]
        oracle_bound: usize,
        /// Corrupt one DP entry first, to demonstrate fault detection.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Compare the diagonal counts against a cached OEIS b-file.
    OeisDiff {
        /// Sequence id, e.g. A001764.
        #[arg(long = "seq-id", default_value = "A001764")]
        seq_id: String,
        /// Compare terms for m = 0..=n_max.
        #[arg(long = "n-max", default_value_t = 20)]
        n_max: u64,
        /// Directory holding b-files named like b001764.txt.
        #[arg(long = "cache-dir", default_value = ".")]
        cache_dir: PathBuf,
        /// Fetch the b-file from oeis.org into the cache when missing.
        #[arg(long = "allow-fetch")]
        allow_fetch: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn new(code: u8, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Table { family, n_max, format } => cmd_table(family.into(), n_max, format),
        Command::Series { which, k, order, format } => cmd_series(which, k, order, format),
        Command::Crosscheck { n_max, oracle_bound, inject_fault } => {
            cmd_crosscheck(n_max, oracle_bound, inject_fault)
        }
        Command::OeisDiff { seq_id, n_max, cache_dir, allow_fetch } => {
            cmd_oeis_diff(&seq_id, n_max, &cache_dir, allow_fetch)
        }
    }
}

fn cmd_table(family: FamilyTag, n_max: usize, format: Format) -> Result<(), CliError> {
    let table = match family {
        FamilyTag::A => ab_tables(n_max).0,
        FamilyTag::B => ab_tables(n_max).1,
        FamilyTag::C => cd_tables(n_max).0,
        FamilyTag::D => cd_tables(n_max).1,
    };
    let mut rows = Vec::new();
    for n in 0..=n_max {
        for k in 0..=n {
            let count = table.get(n, k);
            if count != num_bigint::BigInt::ZERO {
                rows.push((n, k, count.to_string()));
            }
        }
    }
    output::emit_table(&rows, format);
    Ok(())
}

fn cmd_series(which: SeriesKind, k: usize, order: usize, format: Format) -> Result<(), CliError> {
    let series = match which {
        SeriesKind::F => f_series(k, order),
        SeriesKind::G => g_series(k, order),
        SeriesKind::Phi => phi_series(k, order),
        SeriesKind::Psi => psi_series(k, order),
        SeriesKind::T => Ok(ternary_tree_series(order)),
    }
    .map_err(|e| CliError::new(EXIT_USAGE, e.to_string()))?;
    let pairs: Vec<(usize, String)> = series
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| (e, c.to_string()))
        .collect();
    output::emit_series(&pairs, format);
    Ok(())
}

fn cmd_crosscheck(n_max: usize, oracle_bound: usize, inject_fault: bool) -> Result<(), CliError> {
    if oracle_bound > ORACLE_MAX_N {
        return Err(CliError::new(
            EXIT_USAGE,
            format!("--oracle-bound {oracle_bound} exceeds the hard limit {ORACLE_MAX_N}"),
        ));
    }
    let cfg = CrosscheckConfig { n_max, oracle_bound, inject_fault, ..CrosscheckConfig::default() };
    let outcomes = run_crosscheck(&cfg)
        .map_err(|e| CliError::new(EXIT_USAGE, e.to_string()))?;
    let mut first_failure = None;
    for o in &outcomes {
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("{status} {} ({} comparisons) {}", o.name, o.compared, o.detail);
        if !o.pass && first_failure.is_none() {
            first_failure = Some(o);
        }
    }
    match first_failure {
        None => {
            println!("crosscheck: all {} groups passed", outcomes.len());
            Ok(())
        }
        Some(o) => Err(CliError::new(
            EXIT_VERIFICATION,
            format!("crosscheck failed at {}: {}", o.name, o.detail),
        )),
    }
}

fn cmd_oeis_diff(
    seq_id: &str,
    n_max: u64,
    cache_dir: &std::path::Path,
    allow_fetch: bool,
) -> Result<(), CliError> {
    let file = bfile::cache_path(cache_dir, seq_id)
        .map_err(|e| CliError::new(EXIT_USAGE, e))?;
    if !file.exists() {
        if !allow_fetch {
            return Err(CliError::new(
                EXIT_CACHE_MISS,
                format!(
                    "b-file {} not cached and fetching is disabled (pass --allow-fetch)",
                    file.display()
                ),
            ));
        }
        bfile::fetch(seq_id, &file).map_err(|e| CliError::new(EXIT_CACHE_MISS, e))?;
        println!("fetched {}", file.display());
    }
    let content = std::fs::read_to_string(&file)
        .map_err(|e| CliError::new(EXIT_PARSE, format!("{}: {e}", file.display())))?;
    let values = bfile::parse(&content).map_err(|e| CliError::new(EXIT_PARSE, e))?;

    for m in 0..=n_max {
        let ours = smotzkin_count(m);
        match values.get(&(m as i64)) {
            None => {
                return Err(CliError::new(
                    EXIT_PARSE,
                    format!("b-file has no entry for index {m}"),
                ));
            }
            Some(reference) if *reference != ours => {
                return Err(CliError::new(
                    EXIT_VERIFICATION,
                    format!("mismatch at m={m}: ours={ours} b-file={reference}"),
                ));
            }
            Some(_) => {}
        }
    }
    println!("oeis-diff {seq_id}: full agreement for m <= {n_max}");
    Ok(())
}
