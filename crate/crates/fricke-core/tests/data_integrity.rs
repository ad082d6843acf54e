//! Integrity tests for the bundled constant table: the file hash is pinned,
//! the parser rejects malformed records, and the stored class polynomials
//! have the right degrees and the expected supersingular reduction behavior.

use fricke_core::data::{data, parse_records};
use fricke_core::engine::ss_poly;
use fricke_core::field::{PrimeField, PrimeModulus};
use fricke_core::arith::primes_in;
use sha2::{Digest, Sha256};

const CONSTANTS: &str = include_str!("../data/constants.txt");

#[test]
fn constant_table_hash_is_pinned() {
    let digest = Sha256::digest(CONSTANTS.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    assert_eq!(
        hex,
        "3a2ee539958bff2f3eee44fd445569258ecd3dd56cf4aec336dbb939d3b106b8",
        "data/constants.txt changed; review the edit and repin the hash"
    );
}

#[test]
fn parser_round_trips_and_counts_records() {
    let map = parse_records(CONSTANTS).unwrap();
    assert_eq!(map.len(), 139);
}

#[test]
fn parser_rejects_malformed_records() {
    let bad = [
        "lonely",                      // no separators
        "x : Y : 1 q 3",               // non-integer coefficient
        "x : : 12^",                   // broken factored integer
        "x : : 2^3*",                  // trailing factor separator
        " : Y : 1",                    // empty name
        "x : Y :",                     // empty payload
        "w : w,b : 1 ; 2 ; 3",         // curve record with wrong row count
        "x : Y : 1 2\nx : Y : 3 4",    // duplicate name
        "s : set : 2 3 five",          // non-integer set entry
    ];
    for text in bad {
        assert!(parse_records(text).is_err(), "accepted malformed {text:?}");
    }
}

#[test]
fn class_polynomial_degrees() {
    let ds = data();
    let expected = [
        (7u64, 1usize),
        (8, 1),
        (11, 1),
        (12, 1),
        (16, 1),
        (19, 1),
        (20, 2),
        (24, 2),
        (27, 1),
        (28, 1),
        (36, 2),
        (75, 2),
        (100, 2),
        (147, 2),
        (196, 4),
    ];
    let discs = ds.class_discs();
    assert_eq!(discs.len(), expected.len());
    for (d, deg) in expected {
        assert!(discs.contains(&d), "missing class polynomial for -{d}");
        let h = ds.class_poly(d);
        assert_eq!(h.deg0(), deg, "wrong degree for discriminant -{d}");
        assert_eq!(h.coeff(deg), 1u32.into(), "class polynomial not monic");
    }
}

#[test]
fn class_roots_become_supersingular_at_inert_primes() {
    // When -d is a quadratic nonresidue mod q, every root of the class
    // polynomial for -d reduces to a supersingular j-invariant mod q, so the
    // reduction divides the supersingular polynomial.
    let ds = data();
    for d in ds.class_discs() {
        let mut seen = 0;
        for q in primes_in(5, 2000) {
            let m = PrimeModulus::new(q).unwrap();
            if m.legendre(-(d as i64)) != -1 {
                continue;
            }
            let k = PrimeField::new(m);
            let h = ds.class_poly(d).reduce_mod(k.clone());
            if h.gcd(&h.derivative()).deg0() != 0 {
                continue; // repeated roots mod q; divisibility needs the squarefree case
            }
            let ss = ss_poly(q).unwrap();
            assert!(
                ss.rem(&h).is_zero(),
                "class roots for -{d} not supersingular mod {q}"
            );
            seen += 1;
            if seen == 12 {
                break;
            }
        }
        assert_eq!(seen, 12, "not enough inert primes found for -{d}");
    }
}
