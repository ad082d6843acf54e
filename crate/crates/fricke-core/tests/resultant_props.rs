//! Property tests for the integer resultant: the interpolation-based fast path
//! must agree with the Sylvester-determinant definition on random inputs, and
//! the standard algebraic identities must hold exactly.

use fricke_core::intpoly::IntPoly;
use fricke_core::resultant::{resultant_int, sylvester_resultant};
use num_bigint::BigInt;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

fn rand_intpoly(rng: &mut ChaCha8Rng, max_deg: usize, max_abs: i64) -> IntPoly {
    let deg = (rng.next_u64() as usize) % (max_deg + 1);
    let span = 2 * max_abs + 1;
    let mut c: Vec<i64> = (0..=deg)
        .map(|_| (rng.next_u64() % span as u64) as i64 - max_abs)
        .collect();
    if c[deg] == 0 {
        c[deg] = 1 + (rng.next_u64() % max_abs as u64) as i64;
    }
    IntPoly::from_i64(&c)
}

#[test]
fn fast_resultant_matches_sylvester_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e5);
    for trial in 0..1000 {
        let f = rand_intpoly(&mut rng, 6, 30);
        let g = rand_intpoly(&mut rng, 6, 30);
        let fast = resultant_int(&f, &g);
        let slow = sylvester_resultant(&f, &g);
        assert_eq!(fast, slow, "trial {trial}: f={f:?} g={g:?}");
    }
}

#[test]
fn resultant_swap_and_product_rules() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xab1);
    for _ in 0..200 {
        let f = rand_intpoly(&mut rng, 5, 20);
        let g = rand_intpoly(&mut rng, 5, 20);
        let h = rand_intpoly(&mut rng, 4, 20);

        // Res(f, g) = (-1)^(deg f * deg g) Res(g, f).
        let sign = if (f.deg0() * g.deg0()) % 2 == 1 { -1 } else { 1 };
        assert_eq!(
            resultant_int(&f, &g),
            resultant_int(&g, &f) * BigInt::from(sign)
        );

        // Res(f, g h) = Res(f, g) Res(f, h).
        let gh = g.mul(&h);
        assert_eq!(
            resultant_int(&f, &gh),
            resultant_int(&f, &g) * resultant_int(&f, &h)
        );
    }
}

#[test]
fn resultant_detects_common_roots() {
    // A shared linear factor forces the resultant to vanish.
    let mut rng = ChaCha8Rng::seed_from_u64(0x77);
    for _ in 0..100 {
        let a = (rng.next_u64() % 41) as i64 - 20;
        let common = IntPoly::linear(a);
        let f = rand_intpoly(&mut rng, 4, 15).mul(&common);
        let g = rand_intpoly(&mut rng, 4, 15).mul(&common);
        assert_eq!(resultant_int(&f, &g), BigInt::from(0));
    }
}
