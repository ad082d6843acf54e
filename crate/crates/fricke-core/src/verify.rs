//! Verification operations tying the engine together: congruence checks and
//! parallel sweeps, agreement of the two star constructions, split-prime
//! computations, class polynomial pipelines, the identity suite, and
//! randomized isogeny spot checks.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};
use std::thread;
use std::time::Instant;

use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use crate::arith::{is_prime, primes_in};
use crate::data::data;
use crate::engine::{
    self, check_level_prime, expected_star_degree, side_factors, ss_poly, star_from_j_set,
    WeierstrassCurve,
};
use crate::factor::{is_split_linear, roots_in_field};
use crate::field::{Field, PrimeField, PrimeModulus, QuadField};
use crate::identities::{self, IdentityOutcome, Side};
use crate::poly::Poly;
use crate::{Error, Result, Witness};

/// Outcome class of one verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// The statement does not apply (prime outside the admissible range).
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One verification outcome with everything a caller needs to render it.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    /// What was checked, e.g. "congruence5@p=23".
    pub subject: String,
    pub level: Option<u64>,
    pub prime: Option<u64>,
    pub verdict: Verdict,
    /// First disagreement when the verdict is fail.
    pub witness: Option<Witness>,
    /// Ascending decimal coefficients of the polynomial the check certifies.
    pub coeffs: Vec<String>,
    /// Wall-clock time spent on the computation.
    pub millis: u128,
}

impl VerificationReport {
    fn skipped(subject: String, level: u64, prime: u64) -> Self {
        VerificationReport {
            subject,
            level: Some(level),
            prime: Some(prime),
            verdict: Verdict::Skipped,
            witness: None,
            coeffs: Vec::new(),
            millis: 0,
        }
    }

    /// True unless the verdict is fail; skipped statements do not count
    /// against an all-pass run.
    pub fn ok(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

/// Split-prime computation result for one level.
#[derive(Debug, Clone)]
pub struct SplitPrimeResult {
    pub level: u64,
    pub bound: u64,
    /// Eligible primes whose star polynomial splits into linear factors,
    /// found by direct computation.
    pub computed_primes: Vec<u64>,
    /// Primes included by convention: 2, 3 and the level itself.
    pub conventional_primes: Vec<u64>,
}

fn poly_first_diff(a: &Poly<PrimeField>, b: &Poly<PrimeField>) -> Option<Witness> {
    for i in 0..=a.deg0().max(b.deg0()) {
        let (ca, cb) = (a.coeff(i), b.coeff(i));
        if ca != cb {
            return Some(Witness {
                index: i,
                expected: cb.to_string(),
                actual: ca.to_string(),
            });
        }
    }
    None
}

fn worker_count() -> usize {
    std::env::var("FRICKE_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&k| k >= 1)
        .unwrap_or_else(|| thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

/// Stateful runner that memoizes the supersingular lists and star
/// polynomials so sweeps over several levels share work per prime.
pub struct Verifier {
    seed: u64,
    jsets: Mutex<BTreeMap<u64, Arc<Vec<(u64, u64)>>>>,
    stars: Mutex<BTreeMap<(u64, u64), Poly<PrimeField>>>,
}

impl Verifier {
    pub fn new(seed: u64) -> Self {
        Verifier {
            seed,
            jsets: Mutex::new(BTreeMap::new()),
            stars: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Supersingular j-invariants of characteristic p, cached.
    pub fn j_set(&self, p: u64) -> Result<Arc<Vec<(u64, u64)>>> {
        if let Some(v) = self.jsets.lock().unwrap().get(&p) {
            return Ok(v.clone());
        }
        let v = Arc::new(engine::supersingular_j_set(p, self.seed)?);
        self.jsets.lock().unwrap().insert(p, v.clone());
        Ok(v)
    }

    /// ss_p^(N*) by root enumeration, cached per (level, prime).
    pub fn star(&self, n: u64, p: u64) -> Result<Poly<PrimeField>> {
        if let Some(s) = self.stars.lock().unwrap().get(&(n, p)) {
            return Ok(s.clone());
        }
        let js = self.j_set(p)?;
        let (_, star) = star_from_j_set(n, p, &js, self.seed)?;
        self.stars.lock().unwrap().insert((n, p), star.clone());
        Ok(star)
    }

    /// Check A_N(Y) Res_X(ss_p(X), R_N(X, Y)) = B_N(Y) ss_p^(N*)(Y)^2 over
    /// F_p, with the left side built from the closed form of ss_p and the
    /// right side from independent root enumeration.  Returns a skipped
    /// report for admissible-level primes outside the statement's range.
    pub fn verify_congruence(&self, n: u64, p: u64) -> Result<VerificationReport> {
        let lvl = data().level(n)?;
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut subject = format!("congruence{n}@p={p}");
        if check_level_prime(n, p).is_err() {
            return Ok(VerificationReport::skipped(subject, n, p));
        }
        if lvl.excluded.contains(&p) {
            subject.push_str("/direct");
        }
        let start = Instant::now();
        let ss = ss_poly(p)?;
        let res = engine::res_corr(n, &ss)?;
        let (a, b) = side_factors(n, p)?;
        let star = self.star(n, p)?;
        let lhs = a.mul(&res);
        let rhs = b.mul(&star.mul(&star));
        let witness = poly_first_diff(&lhs, &rhs);
        let verdict = if witness.is_none() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        Ok(VerificationReport {
            subject,
            level: Some(n),
            prime: Some(p),
            verdict,
            witness,
            coeffs: star.coeff_strings(),
            millis: start.elapsed().as_millis(),
        })
    }

    /// Verify the congruence for every prime in [pmin, pmax], in parallel,
    /// reports ordered by prime.  Primes where the statement does not apply
    /// come back skipped.
    pub fn sweep_congruence(&self, n: u64, pmin: u64, pmax: u64) -> Result<Vec<VerificationReport>> {
        data().level(n)?;
        let primes = primes_in(pmin, pmax);
        let idx = AtomicUsize::new(0);
        let out = Mutex::new(Vec::with_capacity(primes.len()));
        let workers = worker_count().min(primes.len().max(1));
        thread::scope(|s| -> Result<()> {
            let handles: Vec<_> = (0..workers)
                .map(|_| {
                    s.spawn(|| -> Result<()> {
                        loop {
                            let i = idx.fetch_add(1, Ordering::Relaxed);
                            let Some(&p) = primes.get(i) else {
                                return Ok(());
                            };
                            let rep = self.verify_congruence(n, p)?;
                            out.lock().unwrap().push(rep);
                        }
                    })
                })
                .collect();
            for h in handles {
                h.join().expect("verification worker panicked")?;
            }
            Ok(())
        })?;
        let mut reports = out.into_inner().unwrap();
        reports.sort_by_key(|r| r.prime);
        Ok(reports)
    }

    /// Check the root-enumeration and congruence-division constructions of
    /// ss_p^(N*) agree, and that the degree matches the character formula
    /// (plus the level 7 closed form).
    pub fn method_agreement(&self, n: u64, p: u64) -> Result<VerificationReport> {
        data().level(n)?;
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let subject = format!("star-methods{n}@p={p}");
        if check_level_prime(n, p).is_err() {
            return Ok(VerificationReport::skipped(subject, n, p));
        }
        let start = Instant::now();
        let by_roots = self.star(n, p)?;
        let by_theorem = engine::star_by_theorem(n, p)?;
        let mut witness = poly_first_diff(&by_roots, &by_theorem);
        if witness.is_none() {
            let want = expected_star_degree(n, p)?;
            let got = by_roots.deg0();
            if got != want {
                witness = Some(Witness {
                    index: got,
                    expected: format!("degree {want}"),
                    actual: format!("degree {got}"),
                });
            } else if n == 7 {
                let closed = engine::star7_degree_closed_form(p)?;
                if closed != want {
                    witness = Some(Witness {
                        index: want,
                        expected: format!("closed-form degree {closed}"),
                        actual: format!("degree {want}"),
                    });
                }
            }
        }
        let verdict = if witness.is_none() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        Ok(VerificationReport {
            subject,
            level: Some(n),
            prime: Some(p),
            verdict,
            witness,
            coeffs: by_roots.coeff_strings(),
            millis: start.elapsed().as_millis(),
        })
    }

    /// Primes up to the bound whose star polynomial splits into linear
    /// factors over F_p, each verified by direct computation, next to the
    /// conventional members 2, 3 and the level itself.
    pub fn split_primes(&self, n: u64, bound: u64) -> Result<SplitPrimeResult> {
        data().level(n)?;
        let mut conventional: Vec<u64> = [2, 3, n].into_iter().filter(|&q| q <= bound).collect();
        conventional.sort_unstable();
        conventional.dedup();
        let mut computed = Vec::new();
        for p in primes_in(5, bound) {
            if p == n {
                continue;
            }
            if is_split_linear(&self.star(n, p)?) {
                computed.push(p);
            }
        }
        Ok(SplitPrimeResult {
            level: n,
            bound,
            computed_primes: computed,
            conventional_primes: conventional,
        })
    }

    /// Primes p up to the bound whose supersingular polynomial splits into
    /// linear factors over F_p; 2 and 3 qualify by their stored constants.
    pub fn monster_split_primes(&self, bound: u64) -> Result<Vec<u64>> {
        let mut out = Vec::new();
        for p in primes_in(2, bound) {
            let split = if p < 5 {
                true
            } else {
                is_split_linear(&ss_poly(p)?)
            };
            if split {
                out.push(p);
            }
        }
        Ok(out)
    }

    /// Run the stored pipeline proving the class polynomial power identity
    /// for discriminant -100 or -196; alt selects the shorter -196 route.
    pub fn verify_class_pipeline(&self, disc: i64, alt: bool) -> Result<Vec<IdentityOutcome>> {
        let ids: &[&str] = match (disc, alt) {
            (-100, false) => &["quartic-level5-resultant", "f5-class100-power"],
            (-196, false) => &["quartic-level7-resultant", "f196-class196-power"],
            (-196, true) => &["p196-class196-power"],
            (-100, true) => {
                return Err(Error::Data(
                    "no alternate pipeline is stored for discriminant -100".into(),
                ))
            }
            _ => {
                return Err(Error::Data(format!(
                    "no stored pipeline for discriminant {disc}"
                )))
            }
        };
        let ds = data();
        Ok(identities::catalog()
            .iter()
            .filter(|e| ids.contains(&e.id))
            .map(|e| identities::run_entry(ds, e))
            .collect())
    }

    /// Run the whole identity catalog.
    pub fn run_identity_suite(&self) -> Vec<IdentityOutcome> {
        identities::run_all(data())
    }

    /// Draw random parameters and check the stored parametrizations: the
    /// curve pair's j-invariants match the stored fractions at every sample,
    /// and for the levels with an explicit point map, mapped points land on
    /// the image curve.  Deterministic in (level, prime, seed).
    pub fn isogeny_spot_check(&self, n: u64, p: u64, trials: usize) -> Result<VerificationReport> {
        let lvl = data().level(n)?;
        check_level_prime(n, p)?;
        let subject = format!("isogeny{n}@p={p}");
        let start = Instant::now();
        let f = PrimeField::new(PrimeModulus::new(p)?);
        let k2 = QuadField::new(PrimeModulus::new(p)?)?;
        let mut rng = ChaCha8Rng::seed_from_u64(
            self.seed
                .wrapping_mul(0x9e3779b97f4a7c15)
                .wrapping_add(n.wrapping_mul(0x100000001b3))
                .wrapping_add(p),
        );

        let locus = lvl.locus.reduce_mod(f);
        let dom: Vec<Poly<PrimeField>> = lvl.curve_dom.iter().map(|c| c.reduce_mod(f)).collect();
        let img: Vec<Poly<PrimeField>> = lvl.curve_img.iter().map(|c| c.reduce_mod(f)).collect();
        let fractions: Vec<(Poly<PrimeField>, Poly<PrimeField>)> = [Side::Dom, Side::Img]
            .into_iter()
            .map(|side| {
                let (num, den) = identities::level_j_fraction(lvl, side);
                (num.reduce_mod(f), den.reduce_mod(f))
            })
            .collect();

        let mut done = 0usize;
        let mut rejected = 0usize;
        let fail = |trial: usize, expected: String, actual: String| {
            Some(Witness {
                index: trial,
                expected,
                actual,
            })
        };
        let mut witness = None;
        'trials: while done < trials {
            if rejected > 64 * trials.max(4) {
                // The field is too small to supply admissible parameters.
                return Ok(VerificationReport::skipped(subject, n, p));
            }
            let t = f.sample(&mut rng);
            if locus.eval(t) == 0 || fractions.iter().any(|(_, den)| den.eval(t) == 0) {
                rejected += 1;
                continue;
            }
            let at = |polys: &[Poly<PrimeField>]| {
                [
                    polys[0].eval(t),
                    polys[1].eval(t),
                    polys[2].eval(t),
                    polys[3].eval(t),
                    polys[4].eval(t),
                ]
            };
            let dom_curve = WeierstrassCurve::new(f, at(&dom));
            let img_curve = WeierstrassCurve::new(f, at(&img));
            for (curve, (num, den), which) in [
                (&dom_curve, &fractions[0], "domain"),
                (&img_curve, &fractions[1], "image"),
            ] {
                let j = match curve.j_invariant() {
                    Ok(j) => j,
                    Err(_) => {
                        rejected += 1;
                        continue 'trials;
                    }
                };
                let want = f.div(num.eval(t), den.eval(t));
                if j != want {
                    witness = fail(
                        done,
                        format!("{which} j-invariant {want} at parameter {t}"),
                        j.to_string(),
                    );
                    break 'trials;
                }
            }

            if let Some(iso) = &lvl.iso {
                let te = k2.embed(t);
                let edom = WeierstrassCurve::new(k2, dom_curve.a.map(|c| k2.embed(c)));
                let eimg = WeierstrassCurve::new(k2, img_curve.a.map(|c| k2.embed(c)));
                let mut point = None;
                for _ in 0..64 {
                    let x = k2.sample(&mut rng);
                    if k2.is_zero(iso.u_den.eval_in(&k2, te, x))
                        || k2.is_zero(iso.v_den.eval_in(&k2, te, x))
                    {
                        continue;
                    }
                    let (q1, q0) = edom.y_quadratic(x);
                    let quad = Poly::new(k2, vec![q0, q1, k2.one()]);
                    let ys = roots_in_field(&quad, self.seed);
                    if let Some(&y) = ys.first() {
                        point = Some((x, y));
                        break;
                    }
                }
                let Some((x, y)) = point else {
                    rejected += 1;
                    continue 'trials;
                };
                debug_assert!(edom.is_on_curve(x, y));
                let u = k2.div(
                    iso.u_num.eval_in(&k2, te, x),
                    iso.u_den.eval_in(&k2, te, x),
                );
                let vnum = k2.add(
                    iso.v_y0.eval_in(&k2, te, x),
                    k2.mul(iso.v_y1.eval_in(&k2, te, x), y),
                );
                let v = k2.div(vnum, iso.v_den.eval_in(&k2, te, x));
                if !eimg.is_on_curve(u, v) {
                    witness = fail(
                        done,
                        format!("a point on the image curve at parameter {t}"),
                        format!("map image ({u:?}, {v:?}) off the curve"),
                    );
                    break 'trials;
                }
            }
            done += 1;
        }

        let verdict = if witness.is_none() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        Ok(VerificationReport {
            subject,
            level: Some(n),
            prime: Some(p),
            verdict,
            witness,
            coeffs: Vec::new(),
            millis: start.elapsed().as_millis(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn congruence_single_primes() {
        let v = Verifier::new(0);
        for (n, p) in [(5u64, 23u64), (7, 13), (2, 11), (3, 11), (5, 1009)] {
            let rep = v.verify_congruence(n, p).unwrap();
            assert_eq!(rep.verdict, Verdict::Pass, "congruence failed at ({n}, {p})");
            assert!(rep.witness.is_none());
            assert!(!rep.coeffs.is_empty());
        }
    }

    #[test]
    fn congruence_skips_and_errors() {
        let v = Verifier::new(0);
        let rep = v.verify_congruence(7, 7).unwrap();
        assert_eq!(rep.verdict, Verdict::Skipped);
        assert_eq!(rep.subject, "congruence7@p=7");
        let rep = v.verify_congruence(5, 3).unwrap();
        assert_eq!(rep.verdict, Verdict::Skipped);
        assert!(matches!(v.verify_congruence(5, 9), Err(Error::NotPrime(9))));
        assert!(matches!(v.verify_congruence(6, 11), Err(Error::BadLevel(6))));
    }

    #[test]
    fn sweep_orders_and_marks_direct_checks() {
        let v = Verifier::new(0);
        let reps = v.sweep_congruence(5, 5, 40).unwrap();
        let primes: Vec<u64> = reps.iter().filter_map(|r| r.prime).collect();
        assert_eq!(primes, vec![5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(reps.iter().all(|r| r.ok()));
        assert_eq!(reps[0].verdict, Verdict::Skipped);
        let excluded = data().level(5).unwrap().excluded.clone();
        for r in &reps[1..] {
            let p = r.prime.unwrap();
            assert_eq!(r.verdict, Verdict::Pass);
            assert_eq!(
                r.subject.ends_with("/direct"),
                excluded.contains(&p),
                "direct marking wrong at p={p}"
            );
        }
    }

    #[test]
    fn methods_and_degrees_agree() {
        let v = Verifier::new(0);
        for n in [2u64, 3, 5, 7] {
            for p in primes_in(5, 60) {
                let rep = v.method_agreement(n, p).unwrap();
                assert!(rep.ok(), "method disagreement at ({n}, {p})");
            }
        }
    }

    #[test]
    fn split_primes_small_levels() {
        let v = Verifier::new(0);
        let r5 = v.split_primes(5, 100).unwrap();
        assert_eq!(r5.computed_primes, vec![7, 11, 19]);
        assert_eq!(r5.conventional_primes, vec![2, 3, 5]);
        let r7 = v.split_primes(7, 100).unwrap();
        assert_eq!(r7.computed_primes, vec![5, 17]);
        assert_eq!(r7.conventional_primes, vec![2, 3, 7]);
    }

    #[test]
    fn monster_split_primes_to_200() {
        let v = Verifier::new(0);
        let got = v.monster_split_primes(200).unwrap();
        assert_eq!(
            got,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71]
        );
    }

    #[test]
    fn class_pipelines_pass() {
        let v = Verifier::new(0);
        for (disc, alt, len) in [(-100, false, 2usize), (-196, false, 2), (-196, true, 1)] {
            let outs = v.verify_class_pipeline(disc, alt).unwrap();
            assert_eq!(outs.len(), len);
            assert!(outs.iter().all(|o| o.pass));
        }
        assert!(v.verify_class_pipeline(-100, true).is_err());
        assert!(v.verify_class_pipeline(-8, false).is_err());
    }

    #[test]
    fn isogeny_spot_checks_pass() {
        let v = Verifier::new(0);
        for n in [2u64, 3, 5, 7] {
            let rep = v.isogeny_spot_check(n, 101, 25).unwrap();
            assert_eq!(rep.verdict, Verdict::Pass, "isogeny check failed at level {n}");
        }
        assert!(matches!(
            v.isogeny_spot_check(7, 7, 5),
            Err(Error::BadPrime { .. })
        ));
    }

    #[test]
    fn isogeny_checks_are_deterministic() {
        let a = Verifier::new(42).isogeny_spot_check(7, 1009, 10).unwrap();
        let b = Verifier::new(42).isogeny_spot_check(7, 1009, 10).unwrap();
        assert_eq!(a.verdict, b.verdict);
        assert_eq!(a.subject, b.subject);
    }
}
