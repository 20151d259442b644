//! Verification suite registry: which checks run at which orders, the
//! seeded sampled-point loops for the rational-function identities, and
//! the report plumbing behind the `verify` subcommand.
//!
//! Reports always appear in the same order for a given suite and ceiling —
//! check by check, order ascending — so two runs with the same arguments
//! and seed produce identical output.

use std::time::Instant;

use clap::ValueEnum;
use num::BigInt;
use serde::Serialize;

use asmlab::asm::{count_asms, count_closed_form, MAX_ENUM_ORDER};
use asmlab::decomp::{conjecture_check, factorization_check, kuperberg_b};
use asmlab::ice::{brute_zn, ik_zn, ik_zn_uv, SpectralParams};
use asmlab::identities::{
    aigner_check, cor_jrl_check, corollary12_check, delta_sigma_check, enum_identity_check,
    proof_chain_check, symmetry_check, theorem1_check, EnumVariant,
};
use asmlab::report::{CheckError, CheckReport};
use asmlab::ring::Rat;
use asmlab::sample::{draw_nonzero_rat, rng_for};
use asmlab::symfunc::{fq_direct, fq_factored, zn_via_lascoux};

/// Order ceiling for the enumeration-backed checks without `--deep`.
pub const DEFAULT_CEILING: usize = 7;

/// Order ceiling with `--deep` — the hard bound of the enumeration walk.
pub const DEEP_CEILING: usize = MAX_ENUM_ORDER;

/// Named groups of checks runnable from the command line.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Counting, the doubly refined determinant identity, its derivation
    /// chain, and the factorial determinant evaluation.
    Core,
    /// Determinant corollaries: inversion/reduction chain, palindromy,
    /// root-of-unity evaluations, comparison matrices, sign tables.
    Corollaries,
    /// Partition function vs determinant at seeded points.
    Ik,
    /// Factored kernel determinant and its partition-function route.
    Lascoux,
    /// Two-factor and refined decompositions of the generating function.
    Conjecture,
    /// Everything above, in that order.
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Corollaries => "corollaries",
            Suite::Ik => "ik",
            Suite::Lascoux => "lascoux",
            Suite::Conjecture => "conjecture",
            Suite::All => "all",
        }
    }
}

/// One check's outcome as it appears in the JSON report list.
#[derive(Serialize)]
pub struct ReportDoc {
    pub check: String,
    pub n: u32,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Wall-clock time, present only under `--timings` since it varies
    /// between runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

pub struct SuiteRun {
    pub pass: bool,
    pub reports: Vec<ReportDoc>,
}

struct Recorder {
    timings: bool,
    reports: Vec<ReportDoc>,
}

impl Recorder {
    fn run(&mut self, check: impl FnOnce() -> CheckReport) {
        let started = Instant::now();
        let report = check();
        let elapsed_ms = self.timings.then(|| started.elapsed().as_millis());
        self.reports.push(ReportDoc {
            check: report.check,
            n: report.n,
            pass: report.pass,
            witness: report.witness,
            elapsed_ms,
        });
    }
}

/// Run every check of `suite` up to `max_n` (each check also clips to its
/// own supported range) and collect the reports in deterministic order.
pub fn run_suite(suite: Suite, max_n: usize, seed: u64, deep: bool, timings: bool) -> SuiteRun {
    let mut rec = Recorder { timings, reports: Vec::new() };
    let enum_cap = if deep { DEEP_CEILING } else { DEFAULT_CEILING };
    match suite {
        Suite::Core => core_suite(&mut rec, max_n, seed, enum_cap),
        Suite::Corollaries => corollaries_suite(&mut rec, max_n),
        Suite::Ik => ik_suite(&mut rec, max_n, seed),
        Suite::Lascoux => lascoux_suite(&mut rec, max_n, seed),
        Suite::Conjecture => conjecture_suite(&mut rec, max_n, enum_cap),
        Suite::All => {
            core_suite(&mut rec, max_n, seed, enum_cap);
            corollaries_suite(&mut rec, max_n);
            ik_suite(&mut rec, max_n, seed);
            lascoux_suite(&mut rec, max_n, seed);
            conjecture_suite(&mut rec, max_n, enum_cap);
        }
    }
    let pass = rec.reports.iter().all(|r| r.pass);
    SuiteRun { pass, reports: rec.reports }
}

fn core_suite(rec: &mut Recorder, max_n: usize, seed: u64, enum_cap: usize) {
    for n in 1..=max_n.min(enum_cap) {
        rec.run(|| counting_check(n));
    }
    for n in 2..=max_n.min(5) {
        rec.run(|| {
            theorem1_check(n).unwrap_or_else(|e| CheckReport::fail("theorem1", n as u32, e.to_string()))
        });
    }
    for n in 2..=max_n.min(3) {
        rec.run(|| chain_sampled_check(n, seed));
    }
    for n in 1..=max_n.min(8) {
        rec.run(|| corollary12_check(n));
    }
}

fn corollaries_suite(rec: &mut Recorder, max_n: usize) {
    for n in 1..=max_n.min(5) {
        rec.run(|| cor_jrl_check(n));
    }
    for n in 1..=max_n.min(6) {
        rec.run(|| symmetry_check(n));
    }
    for n in 1..=max_n.min(7) {
        rec.run(|| enum_identity_check(EnumVariant::One, n));
    }
    for n in 1..=max_n.min(8) {
        rec.run(|| enum_identity_check(EnumVariant::Two, n));
    }
    for n in 1..=max_n.min(7) {
        rec.run(|| enum_identity_check(EnumVariant::Three, n));
    }
    for n in 1..=max_n.min(6) {
        rec.run(|| aigner_check(n));
    }
    rec.run(|| delta_sigma_check(12));
}

fn ik_suite(rec: &mut Recorder, max_n: usize, seed: u64) {
    for n in 1..=max_n.min(4) {
        rec.run(|| ik_sampled_check(n, seed));
    }
}

fn lascoux_suite(rec: &mut Recorder, max_n: usize, seed: u64) {
    for n in 1..=max_n.min(4) {
        rec.run(|| fq_sampled_check(n, seed));
    }
    for n in 2..=max_n.min(3) {
        rec.run(|| lascoux_sampled_check(n, seed));
    }
}

fn conjecture_suite(rec: &mut Recorder, max_n: usize, enum_cap: usize) {
    let cap = max_n.min(enum_cap);
    if cap < 2 {
        return;
    }
    match kuperberg_b(cap) {
        Err(e) => rec.run(|| {
            CheckReport::fail("factorization", 0, format!("factor table construction: {e}"))
        }),
        Ok(table) => {
            for n in 2..=cap {
                rec.run(|| factorization_check(&table, n));
            }
            for n in 2..=cap {
                rec.run(|| conjecture_check(&table, n).report);
            }
        }
    }
}

/// Exhaustive walk count vs the closed-form product.
fn counting_check(n: usize) -> CheckReport {
    let walked = BigInt::from(count_asms(n));
    let closed = count_closed_form(n);
    CheckReport::from_witness(
        "counting",
        n as u32,
        (walked != closed).then(|| format!("walk total {walked} vs closed form {closed}")),
    )
}

/// Brute-force weighted sum vs both determinant parameterizations at 20
/// seeded generic points.
fn ik_sampled_check(n: usize, seed: u64) -> CheckReport {
    for iter in 0..20u64 {
        let mut rng = rng_for(seed, "verify-ik", n as u64, iter);
        let params = SpectralParams::draw_generic(n, &mut rng);
        let brute = brute_zn(&params);
        let failed = |side: &str, err: String| {
            CheckReport::fail("ik", n as u32, format!("sample {iter}, {side}: {err}"))
        };
        match ik_zn(&params) {
            Ok(v) if v == brute => {}
            Ok(v) => return failed("bracket form", format!("{v} vs weighted sum {brute}")),
            Err(e) => return failed("bracket form", e.to_string()),
        }
        match ik_zn_uv(&params) {
            Ok(v) if v == brute => {}
            Ok(v) => return failed("difference form", format!("{v} vs weighted sum {brute}")),
            Err(e) => return failed("difference form", e.to_string()),
        }
    }
    CheckReport::pass("ik", n as u32)
}

/// Direct kernel determinant vs its factored triangular form at 20 seeded
/// points; draws that land on the excluded locus are redrawn.
fn fq_sampled_check(n: usize, seed: u64) -> CheckReport {
    let mut done = 0u64;
    for iter in 0..500u64 {
        if done == 20 {
            break;
        }
        let mut rng = rng_for(seed, "verify-fq", n as u64, iter);
        let v: Vec<Rat> = (0..n).map(|_| draw_nonzero_rat(&mut rng)).collect();
        let u: Vec<Rat> = (0..n).map(|_| draw_nonzero_rat(&mut rng)).collect();
        let q = draw_nonzero_rat(&mut rng);
        let (direct, factored) = match (fq_direct(&v, &u, &q), fq_factored(&v, &u, &q)) {
            (Ok(d), Ok(f)) => (d, f),
            _ => continue,
        };
        if direct != factored {
            return CheckReport::fail(
                "fq",
                n as u32,
                format!("draw {iter}: direct {direct} vs factored {factored}"),
            );
        }
        done += 1;
    }
    CheckReport::from_witness(
        "fq",
        n as u32,
        (done < 20).then(|| format!("only {done} generic draws in 500 attempts")),
    )
}

/// Factored-kernel route to the partition function vs the determinant
/// route at 10 seeded generic points.
fn lascoux_sampled_check(n: usize, seed: u64) -> CheckReport {
    let mut done = 0u64;
    for iter in 0..500u64 {
        if done == 10 {
            break;
        }
        let mut rng = rng_for(seed, "verify-lascoux", n as u64, iter);
        let params = SpectralParams::draw_generic(n, &mut rng);
        // The squared alphabets can collide even when the draw itself is
        // generic; redraw in that case.
        let via_kernel = match zn_via_lascoux(&params) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let via_det = match ik_zn(&params) {
            Ok(v) => v,
            Err(e) => return CheckReport::fail("lascoux-zn", n as u32, e.to_string()),
        };
        if via_kernel != via_det {
            return CheckReport::fail(
                "lascoux-zn",
                n as u32,
                format!("draw {iter}: kernel route {via_kernel} vs determinant route {via_det}"),
            );
        }
        done += 1;
    }
    CheckReport::from_witness(
        "lascoux-zn",
        n as u32,
        (done < 10).then(|| format!("only {done} generic draws in 500 attempts")),
    )
}

/// The full derivation chain at 3 seeded generic parameter triples.
fn chain_sampled_check(n: usize, seed: u64) -> CheckReport {
    let mut done = 0u64;
    for iter in 0..200u64 {
        if done == 3 {
            break;
        }
        let mut rng = rng_for(seed, "verify-chain", n as u64, iter);
        let r = draw_nonzero_rat(&mut rng);
        let s = draw_nonzero_rat(&mut rng);
        let t = draw_nonzero_rat(&mut rng);
        match proof_chain_check(n, &r, &s, &t) {
            Ok(report) if report.pass => done += 1,
            Ok(report) => return report,
            Err(CheckError::DegenerateParams(_)) => continue,
            Err(e) => return CheckReport::fail("proof-chain", n as u32, e.to_string()),
        }
    }
    CheckReport::from_witness(
        "proof-chain",
        n as u32,
        (done < 3).then(|| format!("only {done} generic draws in 200 attempts")),
    )
}
