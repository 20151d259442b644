//! `asmlab`: exact enumeration of alternating sign matrices, named
//! determinant families, and the verification suites, from the command
//! line.
//!
//! Every invocation emits a single document — JSON by default, plain text
//! where documented. Output is byte-for-byte deterministic for a fixed
//! subcommand, arguments, and seed; wall-clock data is therefore opt-in
//! (`--timings`) and excluded from the default output. `ASMLAB_THREADS`
//! caps the worker-thread count of the enumeration walks.
//!
//! Exit codes: 0 when the requested work succeeds (for `verify` and
//! `conjecture`: every check passed), 1 when a verification check fails
//! (the first failing report is repeated on stderr), 2 for usage errors
//! such as an order above the supported ceiling.

mod suites;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::traits::ToPrimitive;
use serde::Serialize;

use asmlab::asm::{count_closed_form, gen_fun};
use asmlab::decomp::{conjecture_check, kuperberg_b};
use asmlab::ice::{brute_zn, ik_zn, ik_zn_uv, SpectralParams};
use asmlab::identities::{
    matrix_aigner, matrix_aigner_at_i, matrix_behrend_t, matrix_c, matrix_j, matrix_k_cleared,
    matrix_l, matrix_l_gauss, matrix_m, matrix_m_prime, matrix_r, matrix_t_minus, matrix_t_plus,
};
use asmlab::ring::{fmt_rat, rat, Rat, Ring, SqMatrix};
use asmlab::sample::rng_for;
use asmlab::symfunc::zn_via_lascoux;

use suites::{run_suite, Suite, DEEP_CEILING, DEFAULT_CEILING};

const DEFAULT_SEED: u64 = 42;

/// Largest order the brute-force weighted sum is willing to walk.
const BRUTE_CEILING: usize = 6;

#[derive(Parser)]
#[command(
    name = "asmlab",
    version,
    about = "Exact arithmetic for refined enumeration of alternating sign matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of alternating sign matrices of order n (closed form).
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Triply refined generating function of order n, by exhaustive walk.
    Genfun {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Entries of one member of a named matrix family, as JSON.
    Matrix {
        /// Family name: Kcleared, R, M, Mprime, J, L, Tminus, Tplus,
        /// LGauss, Aigner, AignerAtI, BehrendT, or MatrixC.
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
        /// First endpoint weight (a rational like `4` or `-7/3`), used by
        /// the R, M, and Mprime families.
        #[arg(long, default_value = "4", value_parser = parse_rat)]
        phi: Rat,
        /// Second endpoint weight, used by the R, M, and Mprime families.
        #[arg(long, default_value = "9", value_parser = parse_rat)]
        psi: Rat,
    },
    /// Weighted-configuration partition function at one seeded random
    /// point, computed four independent ways.
    Partition {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Run a verification suite and report every check as JSON.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest order to verify; each check also clips to its own
        /// supported range.
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Raise the order ceiling from 7 to 9 (much slower).
        #[arg(long)]
        deep: bool,
        /// Attach wall-clock milliseconds to each report. Off by default
        /// because it breaks byte-for-byte output determinism.
        #[arg(long)]
        timings: bool,
    },
    /// Check the refined two-factor decomposition order by order and emit
    /// the computed refined factors.
    Conjecture {
        #[arg(long)]
        max_n: usize,
        /// Raise the order ceiling from 7 to 9 (much slower).
        #[arg(long)]
        deep: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    let int = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => Ok(rat(int(s)?, 1)),
        Some((numer, denom)) => {
            let d = int(denom)?;
            if d == 0 {
                return Err(format!("zero denominator: {s:?}"));
            }
            Ok(rat(int(numer)?, d))
        }
    }
}

// ---------------------------------------------------------------------------
// Output documents
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct CountDoc {
    n: usize,
    count: String,
}

#[derive(Serialize)]
struct GenfunDoc {
    n: usize,
    genfun: String,
}

/// Matrix entries serialize as plain integers when they fit in an `i64`
/// and as canonical strings (polynomials, rationals, Gaussian rationals,
/// oversized integers) otherwise.
#[derive(Serialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Str(String),
}

#[derive(Serialize)]
struct MatrixDoc {
    name: String,
    n: usize,
    entries: Vec<Vec<Entry>>,
}

#[derive(Serialize)]
struct PartitionDoc {
    n: usize,
    seed: u64,
    a: Vec<String>,
    b: Vec<String>,
    q: String,
    z_brute: String,
    z_ik: String,
    z_ik_uv: String,
    z_lascoux: String,
    agree: bool,
}

#[derive(Serialize)]
struct VerifyDoc {
    suite: &'static str,
    max_n: usize,
    seed: u64,
    deep: bool,
    pass: bool,
    reports: Vec<suites::ReportDoc>,
}

#[derive(Serialize)]
struct ConjectureEntry {
    n: usize,
    pass: bool,
    b_index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    b_poly: Option<String>,
    coeffs_nonnegative: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

#[derive(Serialize)]
struct ConjectureDoc {
    max_n: usize,
    deep: bool,
    pass: bool,
    outcomes: Vec<ConjectureEntry>,
}

/// Print one line to stdout, tolerating a reader that hung up early
/// (`asmlab ... | head` must not panic).
fn emit_line(line: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{line}");
}

fn emit<T: Serialize>(doc: &T) {
    emit_line(&serde_json::to_string_pretty(doc).expect("documents serialize"));
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn main() -> ExitCode {
    if let Err(message) = configure_threads() {
        return usage_error(&message);
    }
    match Cli::parse().command {
        Command::Count { n, format } => run_count(n, format),
        Command::Genfun { n, format } => run_genfun(n, format),
        Command::Matrix { name, n, phi, psi } => run_matrix(&name, n, &phi, &psi),
        Command::Partition { n, seed } => run_partition(n, seed),
        Command::Verify { suite, max_n, seed, deep, timings } => {
            run_verify(suite, max_n, seed, deep, timings)
        }
        Command::Conjecture { max_n, deep } => run_conjecture(max_n, deep),
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("ASMLAB_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| format!("ASMLAB_THREADS must be a positive integer, got {raw:?}"))?;
    if threads == 0 {
        return Err("ASMLAB_THREADS must be a positive integer, got 0".into());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| format!("could not configure the thread pool: {e}"))
}

fn run_count(n: usize, format: Format) -> ExitCode {
    if n == 0 {
        return usage_error("--n must be at least 1");
    }
    let count = count_closed_form(n).to_string();
    match format {
        Format::Text => emit_line(&count),
        Format::Json => emit(&CountDoc { n, count }),
    }
    ExitCode::SUCCESS
}

fn run_genfun(n: usize, format: Format) -> ExitCode {
    if n == 0 {
        return usage_error("--n must be at least 1");
    }
    if n > DEFAULT_CEILING {
        return usage_error(&format!(
            "exceeds ceiling: the generating-function walk stops at order {DEFAULT_CEILING}"
        ));
    }
    let genfun = gen_fun(n).to_string();
    match format {
        Format::Text => emit_line(&genfun),
        Format::Json => emit(&GenfunDoc { n, genfun }),
    }
    ExitCode::SUCCESS
}

fn string_entries<R: Ring + std::fmt::Display>(m: &SqMatrix<R>) -> Vec<Vec<Entry>> {
    m.rows_display()
        .into_iter()
        .map(|row| row.into_iter().map(Entry::Str).collect())
        .collect()
}

fn int_entries(m: &SqMatrix<num::BigInt>) -> Vec<Vec<Entry>> {
    let n = m.size();
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let v = m.entry(i, j);
                    v.to_i64().map(Entry::Int).unwrap_or_else(|| Entry::Str(v.to_string()))
                })
                .collect()
        })
        .collect()
}

fn rat_entries(m: &SqMatrix<Rat>) -> Vec<Vec<Entry>> {
    let n = m.size();
    (1..=n)
        .map(|i| (1..=n).map(|j| Entry::Str(fmt_rat(m.entry(i, j)))).collect())
        .collect()
}

fn matrix_entries(name: &str, n: usize, phi: &Rat, psi: &Rat) -> Result<Vec<Vec<Entry>>, String> {
    let entries = match name {
        "Kcleared" => string_entries(&matrix_k_cleared(n).map_err(|e| e.to_string())?),
        "R" => string_entries(&matrix_r(n, phi, psi).map_err(|e| e.to_string())?),
        "M" => string_entries(&matrix_m(n, phi, psi)),
        "Mprime" => string_entries(&matrix_m_prime(n, phi, psi)),
        "J" => string_entries(&matrix_j(n)),
        "L" => string_entries(&matrix_l(n)),
        "Tminus" => int_entries(&matrix_t_minus(n)),
        "Tplus" => int_entries(&matrix_t_plus(n)),
        "LGauss" => string_entries(&matrix_l_gauss(n)),
        "Aigner" => string_entries(&matrix_aigner(n)),
        "AignerAtI" => string_entries(&matrix_aigner_at_i(n)),
        "BehrendT" => int_entries(&matrix_behrend_t(n)),
        "MatrixC" => rat_entries(&matrix_c(n)),
        _ => return Err(format!("unknown matrix name {name:?}")),
    };
    Ok(entries)
}

fn run_matrix(name: &str, n: usize, phi: &Rat, psi: &Rat) -> ExitCode {
    if n == 0 {
        return usage_error("--n must be at least 1");
    }
    match matrix_entries(name, n, phi, psi) {
        Ok(entries) => {
            emit(&MatrixDoc { name: name.into(), n, entries });
            ExitCode::SUCCESS
        }
        Err(message) => usage_error(&message),
    }
}

fn run_partition(n: usize, seed: u64) -> ExitCode {
    if n == 0 {
        return usage_error("--n must be at least 1");
    }
    if n > BRUTE_CEILING {
        return usage_error(&format!(
            "exceeds ceiling: the brute-force weighted sum stops at order {BRUTE_CEILING}"
        ));
    }
    // Redraw until the squared alphabets of the factored-kernel route are
    // also generic; the draw index is part of the deterministic stream.
    let mut found = None;
    for iter in 0..500u64 {
        let mut rng = rng_for(seed, "partition", n as u64, iter);
        let candidate = SpectralParams::draw_generic(n, &mut rng);
        if let Ok(v) = zn_via_lascoux(&candidate) {
            found = Some((candidate, v));
            break;
        }
    }
    let Some((params, z_lascoux)) = found else {
        return usage_error("no generic draw in 500 attempts; try another --seed");
    };
    let z_brute = brute_zn(&params);
    let z_ik = ik_zn(&params).expect("draw is generic by construction");
    let z_ik_uv = ik_zn_uv(&params).expect("draw is generic by construction");
    let agree = z_ik == z_brute && z_ik_uv == z_brute && z_lascoux == z_brute;
    let doc = PartitionDoc {
        n,
        seed,
        a: (1..=n).map(|i| fmt_rat(params.a(i))).collect(),
        b: (1..=n).map(|j| fmt_rat(params.b(j))).collect(),
        q: fmt_rat(params.q()),
        z_brute: fmt_rat(&z_brute),
        z_ik: fmt_rat(&z_ik),
        z_ik_uv: fmt_rat(&z_ik_uv),
        z_lascoux: fmt_rat(&z_lascoux),
        agree,
    };
    emit(&doc);
    if agree {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: the four routes disagree at this point");
        ExitCode::from(1)
    }
}

fn run_verify(suite: Suite, max_n: usize, seed: u64, deep: bool, timings: bool) -> ExitCode {
    let ceiling = if deep { DEEP_CEILING } else { DEFAULT_CEILING };
    if max_n == 0 {
        return usage_error("--max-n must be at least 1");
    }
    if max_n > ceiling {
        return usage_error(&format!(
            "exceeds ceiling: --max-n {max_n} is above {ceiling} \
             (the limit is {DEFAULT_CEILING}, or {DEEP_CEILING} with --deep)"
        ));
    }
    let run = run_suite(suite, max_n, seed, deep, timings);
    let doc = VerifyDoc {
        suite: suite.name(),
        max_n,
        seed,
        deep,
        pass: run.pass,
        reports: run.reports,
    };
    emit(&doc);
    if doc.pass {
        ExitCode::SUCCESS
    } else {
        let first = doc.reports.iter().find(|r| !r.pass).expect("a failing report exists");
        eprintln!("{}", serde_json::to_string(first).expect("reports serialize"));
        ExitCode::from(1)
    }
}

fn run_conjecture(max_n: usize, deep: bool) -> ExitCode {
    let ceiling = if deep { DEEP_CEILING } else { DEFAULT_CEILING };
    if max_n < 2 {
        return usage_error("--max-n must be at least 2");
    }
    if max_n > ceiling {
        return usage_error(&format!(
            "exceeds ceiling: --max-n {max_n} is above {ceiling} \
             (the limit is {DEFAULT_CEILING}, or {DEEP_CEILING} with --deep)"
        ));
    }
    let table = match kuperberg_b(max_n) {
        Ok(table) => table,
        Err(e) => {
            eprintln!("error: factor table construction failed: {e}");
            return ExitCode::from(1);
        }
    };
    let outcomes: Vec<ConjectureEntry> = (2..=max_n)
        .map(|n| {
            let outcome = conjecture_check(&table, n);
            ConjectureEntry {
                n,
                pass: outcome.report.pass,
                b_index: outcome.b_index,
                b_poly: outcome.b_poly.map(|p| p.to_string()),
                coeffs_nonnegative: outcome.coeffs_nonnegative,
                witness: outcome.report.witness,
            }
        })
        .collect();
    let pass = outcomes.iter().all(|o| o.pass);
    let doc = ConjectureDoc { max_n, deep, pass, outcomes };
    emit(&doc);
    if pass {
        ExitCode::SUCCESS
    } else {
        let first = doc.outcomes.iter().find(|o| !o.pass).expect("a failing outcome exists");
        eprintln!("{}", serde_json::to_string(first).expect("outcomes serialize"));
        ExitCode::from(1)
    }
}
