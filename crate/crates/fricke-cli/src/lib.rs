//! Output payloads and text rendering for the fricke command line tool.
//!
//! Every subcommand builds one serializable payload and prints either its
//! JSON form or its text form. The text form is a pure function of the
//! payload, so parsing the JSON output and re-rendering text reproduces the
//! text output byte for byte. Integer coefficients travel as decimal strings
//! to keep arbitrary precision values exact in JSON.

use fricke_core::identities::IdentityOutcome;
use fricke_core::verify::VerificationReport;
use fricke_core::Witness;
use serde::{Deserialize, Serialize};

/// First point of disagreement carried by failing checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessOut {
    pub index: usize,
    pub expected: String,
    pub actual: String,
}

impl From<&Witness> for WitnessOut {
    fn from(w: &Witness) -> Self {
        WitnessOut {
            index: w.index,
            expected: w.expected.clone(),
            actual: w.actual.clone(),
        }
    }
}

/// One verification report record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportOut {
    pub subject: String,
    pub prime: Option<u64>,
    pub level: Option<u64>,
    pub verdict: String,
    pub witness: Option<WitnessOut>,
    pub coeffs: Vec<String>,
}

impl From<&VerificationReport> for ReportOut {
    fn from(r: &VerificationReport) -> Self {
        ReportOut {
            subject: r.subject.clone(),
            prime: r.prime,
            level: r.level,
            verdict: r.verdict.as_str().to_string(),
            witness: r.witness.as_ref().map(WitnessOut::from),
            coeffs: r.coeffs.clone(),
        }
    }
}

/// One irreducible factor with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorOut {
    pub poly: String,
    pub power: usize,
}

/// Payload of the ss subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SsOut {
    pub prime: u64,
    pub seed: u64,
    pub degree: usize,
    pub coeffs: Vec<String>,
    pub factors: Vec<FactorOut>,
    pub display: String,
}

/// Payload of the star subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarOut {
    pub level: u64,
    pub prime: u64,
    pub method: String,
    pub seed: u64,
    pub degree: usize,
    pub coeffs: Vec<String>,
    pub factors: Vec<FactorOut>,
    pub display: String,
}

/// Payload of the split subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitOut {
    pub level: u64,
    pub bound: u64,
    pub computed_primes: Vec<u64>,
    pub conventional_primes: Vec<u64>,
    pub annotation: Option<String>,
}

/// Payload of the monster subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonsterOut {
    pub bound: u64,
    pub primes: Vec<u64>,
    pub annotation: String,
}

/// One identity or pipeline step outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepOut {
    pub id: String,
    pub group: String,
    pub verdict: String,
    pub witness: Option<WitnessOut>,
    pub coeffs: Vec<String>,
}

impl From<&IdentityOutcome> for StepOut {
    fn from(o: &IdentityOutcome) -> Self {
        StepOut {
            id: o.id.to_string(),
            group: o.group.to_string(),
            verdict: if o.pass { "pass" } else { "fail" }.to_string(),
            witness: o.witness.as_ref().map(WitnessOut::from),
            coeffs: o.coeffs.clone(),
        }
    }
}

/// Payload of the class-verify subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassOut {
    pub disc: i64,
    pub alt: bool,
    pub steps: Vec<StepOut>,
}

/// Payload of the isogeny subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsogenyOut {
    pub level: u64,
    pub prime: u64,
    pub trials: usize,
    pub seed: u64,
    pub report: ReportOut,
}

fn witness_suffix(w: &Option<WitnessOut>) -> String {
    match w {
        Some(w) => format!(
            " (witness {}: expected {}, got {})",
            w.index, w.expected, w.actual
        ),
        None => String::new(),
    }
}

/// One text line for a report record.
pub fn report_line(r: &ReportOut) -> String {
    format!("{}: {}{}", r.subject, r.verdict, witness_suffix(&r.witness))
}

fn verdict_counts<'a, I: Iterator<Item = &'a str>>(verdicts: I) -> (usize, usize, usize) {
    let (mut p, mut f, mut s) = (0, 0, 0);
    for v in verdicts {
        match v {
            "pass" => p += 1,
            "fail" => f += 1,
            _ => s += 1,
        }
    }
    (p, f, s)
}

pub fn render_ss(o: &SsOut) -> String {
    o.display.clone()
}

pub fn render_star(o: &StarOut) -> String {
    o.display.clone()
}

pub fn render_verify(reports: &[ReportOut]) -> String {
    let mut lines: Vec<String> = reports.iter().map(report_line).collect();
    let (p, f, s) = verdict_counts(reports.iter().map(|r| r.verdict.as_str()));
    lines.push(format!("summary: {p} pass, {f} fail, {s} skipped"));
    lines.join("\n")
}

fn prime_list(primes: &[u64]) -> String {
    if primes.is_empty() {
        "(none)".to_string()
    } else {
        primes
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn render_split(o: &SplitOut) -> String {
    let mut lines = vec![
        format!(
            "computed split primes for level {} up to {}: {}",
            o.level,
            o.bound,
            prime_list(&o.computed_primes)
        ),
        format!(
            "split by convention: {}",
            prime_list(&o.conventional_primes)
        ),
    ];
    if let Some(a) = &o.annotation {
        lines.push(a.clone());
    }
    lines.join("\n")
}

pub fn render_monster(o: &MonsterOut) -> String {
    format!(
        "supersingular primes up to {}: {}\n{}",
        o.bound,
        prime_list(&o.primes),
        o.annotation
    )
}

fn step_line(s: &StepOut) -> String {
    format!("{}: {}{}", s.id, s.verdict, witness_suffix(&s.witness))
}

pub fn render_class(o: &ClassOut) -> String {
    let mut lines: Vec<String> = o.steps.iter().map(step_line).collect();
    let ok = o.steps.iter().all(|s| s.verdict == "pass");
    lines.push(format!(
        "class pipeline for discriminant {}: {}",
        o.disc,
        if ok { "pass" } else { "fail" }
    ));
    lines.join("\n")
}

pub fn render_identities(steps: &[StepOut]) -> String {
    let mut lines: Vec<String> = steps.iter().map(step_line).collect();
    let (p, f, _) = verdict_counts(steps.iter().map(|s| s.verdict.as_str()));
    lines.push(format!("summary: {p} pass, {f} fail"));
    lines.join("\n")
}

pub fn render_isogeny(o: &IsogenyOut) -> String {
    format!(
        "{}: {} ({} trials, seed {}){}",
        o.report.subject,
        o.report.verdict,
        o.trials,
        o.seed,
        witness_suffix(&o.report.witness)
    )
}
