//! End-to-end checks through the Verifier: congruence sweeps at every level,
//! agreement of the two Fricke computation methods, split prime scans, and
//! deterministic isogeny spot checks.

use fricke_core::engine::eligible;
use fricke_core::verify::{Verdict, Verifier};
use fricke_core::arith::primes_in;

#[test]
fn congruence_sweeps_pass_to_300() {
    let v = Verifier::new(0);
    for n in [2u64, 3, 5, 7] {
        let reports = v.sweep_congruence(n, 5, 300).unwrap();
        assert_eq!(reports.len(), primes_in(5, 300).len());
        for r in &reports {
            assert!(r.ok(), "{} failed", r.subject);
            assert_eq!(r.level, Some(n));
            let p = r.prime.unwrap();
            if p == n {
                assert_eq!(r.verdict, Verdict::Skipped, "p = {p} must be skipped");
            } else {
                assert_eq!(r.verdict, Verdict::Pass);
            }
        }
        let skips = reports
            .iter()
            .filter(|r| r.verdict == Verdict::Skipped)
            .count();
        assert_eq!(skips, if n >= 5 { 1 } else { 0 });
    }
}

#[test]
fn methods_agree_to_150() {
    let v = Verifier::new(9);
    for n in [2u64, 3, 5, 7] {
        for p in primes_in(5, 150) {
            if !eligible(n, p) {
                continue;
            }
            let r = v.method_agreement(n, p).unwrap();
            assert!(r.ok(), "{} failed", r.subject);
            assert_eq!(r.verdict, Verdict::Pass);
        }
    }
}

#[test]
fn split_prime_scans_are_consistent() {
    let v = Verifier::new(0);
    let five = v.split_primes(5, 300).unwrap();
    assert_eq!(five.computed_primes, vec![7, 11, 19]);
    assert_eq!(five.conventional_primes, vec![2, 3, 5]);
    let seven = v.split_primes(7, 300).unwrap();
    assert_eq!(seven.computed_primes, vec![5, 17]);
    assert_eq!(seven.conventional_primes, vec![2, 3, 7]);

    let monster = v.monster_split_primes(200).unwrap();
    assert_eq!(monster.len(), 15);
    assert!(monster.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn isogeny_spot_checks_pass_at_1009() {
    let v = Verifier::new(4);
    for n in [2u64, 3, 5, 7] {
        let r = v.isogeny_spot_check(n, 1009, 10).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{} failed", r.subject);
    }
}

#[test]
fn reports_carry_timing_and_subject_shape() {
    let v = Verifier::new(0);
    let r = v.verify_congruence(5, 23).unwrap();
    let direct = fricke_core::data::data()
        .level(5)
        .unwrap()
        .excluded
        .contains(&23);
    let want = if direct {
        "congruence5@p=23/direct"
    } else {
        "congruence5@p=23"
    };
    assert_eq!(r.subject, want);
    assert_eq!((r.level, r.prime), (Some(5), Some(23)));
    assert!(r.witness.is_none());
    assert!(!r.coeffs.is_empty());
}
