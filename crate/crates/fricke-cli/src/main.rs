//! Command line driver. Each subcommand computes its payload through
//! fricke-core, then prints either the text rendering or pretty JSON.
//! Results go to stdout, errors to stderr. Exit codes: 0 all checks pass,
//! 1 at least one verification failure, 2 usage or domain error.

use clap::{Parser, Subcommand, ValueEnum};
use fricke_cli::{
    render_class, render_identities, render_isogeny, render_monster, render_split, render_ss,
    render_star, render_verify, ClassOut, FactorOut, IsogenyOut, MonsterOut, ReportOut, SplitOut,
    SsOut, StarOut, StepOut,
};
use fricke_core::engine::{fricke_ss, ss_poly, Method};
use fricke_core::factor::{factor, render_factored, FactoredPoly};
use fricke_core::field::PrimeField;
use fricke_core::verify::Verifier;
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "fricke",
    version,
    about = "supersingular polynomials and their Fricke group analogues, verified exactly"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    /// Multiply Y minus b(j) over the supersingular j-invariants.
    Roots,
    /// Read the polynomial off the congruence side factors.
    Theorem,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the supersingular polynomial of a prime, factored over F_p.
    Ss {
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Print the Fricke supersingular polynomial of a level in {2, 3, 5, 7}.
    Star {
        #[arg(long)]
        level: u64,
        #[arg(long)]
        prime: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Roots)]
        method: MethodArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Verify the factorization congruence for every prime in a range.
    Verify {
        /// Level to check, or "all" for every level.
        #[arg(long, value_parser = ["2", "3", "5", "7", "all"])]
        level: String,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// List the primes whose Fricke polynomial splits into linear factors.
    Split {
        #[arg(long)]
        level: u64,
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        json: bool,
    },
    /// List the primes whose supersingular polynomial splits over F_p.
    Monster {
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        json: bool,
    },
    /// Recompute a class polynomial resultant pipeline and compare.
    ClassVerify {
        /// Discriminant, -100 or -196.
        #[arg(long, allow_hyphen_values = true)]
        disc: i64,
        /// Use the alternative elimination route.
        #[arg(long)]
        alt: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run the full catalog of exact identity checks.
    Identities {
        #[arg(long)]
        json: bool,
    },
    /// Spot-check the isogeny parametrization on random curve points.
    Isogeny {
        #[arg(long)]
        level: u64,
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.cmd) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    };
    std::process::exit(code);
}

fn emit<T: Serialize>(json: bool, payload: &T, text: impl FnOnce(&T) -> String) {
    if json {
        println!("{}", serde_json::to_string_pretty(payload).expect("serializable payload"));
    } else {
        println!("{}", text(payload));
    }
}

fn factor_list(fac: &FactoredPoly<PrimeField>, var: &str) -> Vec<FactorOut> {
    fac.factors
        .iter()
        .map(|(g, e)| FactorOut {
            poly: g.display(var),
            power: *e,
        })
        .collect()
}

fn split_annotation(level: u64) -> Option<String> {
    match level {
        5 => Some(
            "together with the conventional primes these divide the order of the Harada-Norton group HN"
                .to_string(),
        ),
        7 => Some(
            "together with the conventional primes these divide the order of the Held group He"
                .to_string(),
        ),
        _ => None,
    }
}

fn run(cmd: Cmd) -> Result<i32, String> {
    match cmd {
        Cmd::Ss { prime, seed, json } => {
            let f = ss_poly(prime).map_err(|e| e.to_string())?;
            let fac = factor(&f, seed);
            let payload = SsOut {
                prime,
                seed,
                degree: f.deg0(),
                coeffs: f.coeff_strings(),
                factors: factor_list(&fac, "x"),
                display: render_factored(&fac, "x"),
            };
            emit(json, &payload, render_ss);
            Ok(0)
        }
        Cmd::Star {
            level,
            prime,
            method,
            seed,
            json,
        } => {
            let (m, name) = match method {
                MethodArg::Roots => (Method::Roots, "roots"),
                MethodArg::Theorem => (Method::Theorem, "theorem"),
            };
            let f = fricke_ss(level, prime, m, seed).map_err(|e| e.to_string())?;
            let fac = factor(&f, seed);
            let payload = StarOut {
                level,
                prime,
                method: name.to_string(),
                seed,
                degree: f.deg0(),
                coeffs: f.coeff_strings(),
                factors: factor_list(&fac, "Y"),
                display: render_factored(&fac, "Y"),
            };
            emit(json, &payload, render_star);
            Ok(0)
        }
        Cmd::Verify {
            level,
            from,
            to,
            seed,
            json,
        } => {
            let levels: Vec<u64> = if level == "all" {
                vec![2, 3, 5, 7]
            } else {
                vec![level.parse().expect("validated by clap")]
            };
            let v = Verifier::new(seed);
            let mut reports: Vec<ReportOut> = Vec::new();
            for n in levels {
                let sweep = v.sweep_congruence(n, from, to).map_err(|e| e.to_string())?;
                reports.extend(sweep.iter().map(ReportOut::from));
            }
            let failed = reports.iter().any(|r| r.verdict == "fail");
            emit(json, &reports, |r| render_verify(r));
            Ok(if failed { 1 } else { 0 })
        }
        Cmd::Split { level, bound, json } => {
            if bound < 5 {
                return Err("split bound must be at least 5".to_string());
            }
            let v = Verifier::new(0);
            let r = v.split_primes(level, bound).map_err(|e| e.to_string())?;
            let payload = SplitOut {
                level: r.level,
                bound: r.bound,
                computed_primes: r.computed_primes,
                conventional_primes: r.conventional_primes,
                annotation: split_annotation(level),
            };
            emit(json, &payload, render_split);
            Ok(0)
        }
        Cmd::Monster { bound, json } => {
            if bound < 2 {
                return Err("monster bound must be at least 2".to_string());
            }
            let v = Verifier::new(0);
            let primes = v.monster_split_primes(bound).map_err(|e| e.to_string())?;
            let payload = MonsterOut {
                bound,
                primes,
                annotation: "every prime in the list divides the order of the monster group"
                    .to_string(),
            };
            emit(json, &payload, render_monster);
            Ok(0)
        }
        Cmd::ClassVerify { disc, alt, json } => {
            let v = Verifier::new(0);
            let steps = v
                .verify_class_pipeline(disc, alt)
                .map_err(|e| e.to_string())?;
            let payload = ClassOut {
                disc,
                alt,
                steps: steps.iter().map(StepOut::from).collect(),
            };
            let failed = payload.steps.iter().any(|s| s.verdict == "fail");
            emit(json, &payload, render_class);
            Ok(if failed { 1 } else { 0 })
        }
        Cmd::Identities { json } => {
            let v = Verifier::new(0);
            let steps: Vec<StepOut> = v.run_identity_suite().iter().map(StepOut::from).collect();
            let failed = steps.iter().any(|s| s.verdict == "fail");
            emit(json, &steps, |s| render_identities(s));
            Ok(if failed { 1 } else { 0 })
        }
        Cmd::Isogeny {
            level,
            prime,
            trials,
            seed,
            json,
        } => {
            if trials == 0 {
                return Err("trials must be at least 1".to_string());
            }
            let v = Verifier::new(seed);
            let report = v
                .isogeny_spot_check(level, prime, trials)
                .map_err(|e| e.to_string())?;
            let payload = IsogenyOut {
                level,
                prime,
                trials,
                seed,
                report: ReportOut::from(&report),
            };
            let failed = payload.report.verdict == "fail";
            emit(json, &payload, render_isogeny);
            Ok(if failed { 1 } else { 0 })
        }
    }
}
