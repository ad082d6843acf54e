//! Machine-word modular arithmetic, deterministic primality testing and the
//! Jacobi symbol.  Moduli are restricted to 62 bits so products fit in u128.

/// (a + b) mod m, assuming a, b < m.
#[inline]
pub fn addmod(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

/// (a - b) mod m, assuming a, b < m.
#[inline]
pub fn submod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + m - b
    }
}

/// (a * b) mod m via u128 widening.
#[inline]
pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// a^e mod m by binary exponentiation.
pub fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut r = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

/// Modular inverse of a mod m for gcd(a, m) = 1, by extended Euclid.
pub fn invmod(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    assert!(old_r.abs() == 1, "invmod of non-unit {a} mod {m}");
    let v = old_s * old_r.signum();
    (v.rem_euclid(m as i128)) as u64
}

/// Deterministic Miller-Rabin for all n < 2^64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    // This witness set decides primality for every n < 2^64.
    'wit: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'wit;
            }
        }
        return false;
    }
    true
}

/// Jacobi symbol (a / n) for odd n > 0; 0 when gcd(a, n) > 1.
pub fn jacobi(a: i64, n: u64) -> i32 {
    assert!(n & 1 == 1 && n > 0, "jacobi needs odd positive n");
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut t = 1i32;
    while a != 0 {
        while a & 1 == 0 {
            a >>= 1;
            if n % 8 == 3 || n % 8 == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// All primes in [lo, hi] by a sieve of Eratosthenes.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || hi < lo {
        return Vec::new();
    }
    let n = hi as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    if n >= 1 {
        sieve[1] = false;
    }
    let mut q = 2usize;
    while q * q <= n {
        if sieve[q] {
            let mut k = q * q;
            while k <= n {
                sieve[k] = false;
                k += q;
            }
        }
        q += 1;
    }
    (lo.max(2)..=hi).filter(|&v| sieve[v as usize]).collect()
}

/// Next prime strictly below n, for generating CRT moduli.
pub fn prev_prime(n: u64) -> u64 {
    let mut k = n - 1;
    if k % 2 == 0 {
        k -= 1;
    }
    while !is_prime(k) {
        k -= 2;
    }
    k
}
