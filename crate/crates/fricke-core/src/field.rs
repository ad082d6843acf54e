//! Prime fields F_p for p < 2^62 and their quadratic extensions F_p(sqrt c).
//!
//! Field contexts are small Copy values carried alongside element data, so a
//! polynomial over F_p^2 knows both p and the chosen non-residue c.

use crate::arith::{addmod, invmod, is_prime, jacobi, mulmod, submod};
use crate::{Error, Result};

/// A validated prime modulus below 2^62.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 62 {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Legendre symbol (a / p) in {-1, 0, 1}; p must be odd.
    pub fn legendre(self, a: i64) -> i32 {
        jacobi(a, self.0)
    }
}

/// Operations shared by F_p and F_p^2.  Elements are small Copy values whose
/// derived ordering (numeric, then lexicographic on coordinate pairs) is the
/// canonical ordering used for factor sorting and root deduplication.
pub trait Field: Copy + Eq {
    type El: Copy + Eq + Ord + std::hash::Hash + std::fmt::Debug;

    fn characteristic(&self) -> u64;
    /// Number of field elements (p or p^2).
    fn order(&self) -> u128;
    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn is_zero(&self, a: Self::El) -> bool {
        a == self.zero()
    }
    fn add(&self, a: Self::El, b: Self::El) -> Self::El;
    fn sub(&self, a: Self::El, b: Self::El) -> Self::El;
    fn neg(&self, a: Self::El) -> Self::El;
    fn mul(&self, a: Self::El, b: Self::El) -> Self::El;
    /// Multiplicative inverse; panics on zero (callers guard).
    fn inv(&self, a: Self::El) -> Self::El;
    fn from_u64(&self, x: u64) -> Self::El;
    fn from_i64(&self, x: i64) -> Self::El;
    /// Element coordinates as machine words, for content hashing.
    fn el_words(&self, a: Self::El) -> (u64, u64);

    /// Uniform random element.
    fn sample<R: rand_core::RngCore>(&self, rng: &mut R) -> Self::El;

    fn pow(&self, mut a: Self::El, mut e: u128) -> Self::El {
        let mut r = self.one();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    fn div(&self, a: Self::El, b: Self::El) -> Self::El {
        self.mul(a, self.inv(b))
    }
}

/// The prime field F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(m: PrimeModulus) -> Self {
        PrimeField { p: m.get() }
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type El = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn order(&self) -> u128 {
        self.p as u128
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        addmod(a, b, self.p)
    }
    fn sub(&self, a: u64, b: u64) -> u64 {
        submod(a, b, self.p)
    }
    fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        mulmod(a, b, self.p)
    }
    fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        invmod(a, self.p)
    }
    fn from_u64(&self, x: u64) -> u64 {
        x % self.p
    }
    fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }
    fn el_words(&self, a: u64) -> (u64, u64) {
        (a, 0)
    }
    fn sample<R: rand_core::RngCore>(&self, rng: &mut R) -> u64 {
        // Rejection below the largest multiple of p avoids modulo bias.
        let limit = u64::MAX - u64::MAX % self.p;
        loop {
            let v = rng.next_u64();
            if v < limit {
                return v % self.p;
            }
        }
    }
}

/// The quadratic extension F_p^2 = F_p[t] / (t^2 - c), elements a0 + a1 t.
///
/// The defining non-residue is canonical: c = p - 1 when p = 3 mod 4, else
/// the smallest positive quadratic non-residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadField {
    p: u64,
    c: u64,
}

impl QuadField {
    pub fn new(m: PrimeModulus) -> Result<Self> {
        let p = m.get();
        if p == 2 {
            return Err(Error::NoQuadraticExtension);
        }
        let c = if p % 4 == 3 {
            p - 1
        } else {
            (2..p)
                .find(|&a| jacobi(a as i64, p) == -1)
                .expect("odd prime fields have a non-residue")
        };
        Ok(QuadField { p, c })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// The c with t^2 = c.
    #[inline]
    pub fn nonresidue(&self) -> u64 {
        self.c
    }

    pub fn base(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    /// Embed an element of F_p.
    #[inline]
    pub fn embed(&self, a: u64) -> (u64, u64) {
        (a % self.p, 0)
    }

    /// The p-power Frobenius a0 + a1 t -> a0 - a1 t.
    #[inline]
    pub fn frobenius(&self, a: (u64, u64)) -> (u64, u64) {
        (a.0, if a.1 == 0 { 0 } else { self.p - a.1 })
    }

    #[inline]
    pub fn is_rational(&self, a: (u64, u64)) -> bool {
        a.1 == 0
    }

    /// Norm to F_p: a0^2 - c a1^2.
    #[inline]
    pub fn norm(&self, a: (u64, u64)) -> u64 {
        submod(
            mulmod(a.0, a.0, self.p),
            mulmod(self.c, mulmod(a.1, a.1, self.p), self.p),
            self.p,
        )
    }

    /// Trace to F_p: 2 a0.
    #[inline]
    pub fn trace(&self, a: (u64, u64)) -> u64 {
        addmod(a.0, a.0, self.p)
    }
}

impl Field for QuadField {
    type El = (u64, u64);

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn order(&self) -> u128 {
        (self.p as u128) * (self.p as u128)
    }
    fn zero(&self) -> (u64, u64) {
        (0, 0)
    }
    fn one(&self) -> (u64, u64) {
        (1, 0)
    }
    fn add(&self, a: (u64, u64), b: (u64, u64)) -> (u64, u64) {
        (addmod(a.0, b.0, self.p), addmod(a.1, b.1, self.p))
    }
    fn sub(&self, a: (u64, u64), b: (u64, u64)) -> (u64, u64) {
        (submod(a.0, b.0, self.p), submod(a.1, b.1, self.p))
    }
    fn neg(&self, a: (u64, u64)) -> (u64, u64) {
        (
            if a.0 == 0 { 0 } else { self.p - a.0 },
            if a.1 == 0 { 0 } else { self.p - a.1 },
        )
    }
    fn mul(&self, a: (u64, u64), b: (u64, u64)) -> (u64, u64) {
        let p = self.p;
        let r0 = addmod(
            mulmod(a.0, b.0, p),
            mulmod(self.c, mulmod(a.1, b.1, p), p),
            p,
        );
        let r1 = addmod(mulmod(a.0, b.1, p), mulmod(a.1, b.0, p), p);
        (r0, r1)
    }
    fn inv(&self, a: (u64, u64)) -> (u64, u64) {
        let n = self.norm(a);
        assert!(n != 0, "inverse of zero in F_{}^2", self.p);
        let ninv = invmod(n, self.p);
        (
            mulmod(a.0, ninv, self.p),
            if a.1 == 0 {
                0
            } else {
                mulmod(self.p - a.1, ninv, self.p)
            },
        )
    }
    fn from_u64(&self, x: u64) -> (u64, u64) {
        (x % self.p, 0)
    }
    fn from_i64(&self, x: i64) -> (u64, u64) {
        (x.rem_euclid(self.p as i64) as u64, 0)
    }
    fn el_words(&self, a: (u64, u64)) -> (u64, u64) {
        a
    }
    fn sample<R: rand_core::RngCore>(&self, rng: &mut R) -> (u64, u64) {
        let base = self.base();
        (base.sample(rng), base.sample(rng))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_validation() {
        assert!(PrimeModulus::new(2).is_ok());
        assert!(PrimeModulus::new(4611686018427387904).is_err());
        assert_eq!(PrimeModulus::new(91), Err(Error::NotPrime(91)));
        assert_eq!(PrimeModulus::new(0), Err(Error::NotPrime(0)));
    }

    #[test]
    fn canonical_nonresidues() {
        // p = 3 mod 4 takes c = -1; otherwise the least non-residue.
        for (p, c) in [(3u64, 2u64), (7, 6), (11, 10), (5, 2), (13, 2), (17, 3), (73, 5)] {
            let f = QuadField::new(PrimeModulus::new(p).unwrap()).unwrap();
            assert_eq!(f.nonresidue(), c, "p={p}");
            assert_eq!(jacobi(c as i64, p), -1);
        }
        assert!(QuadField::new(PrimeModulus::new(2).unwrap()).is_err());
    }

    #[test]
    fn quadratic_field_axioms() {
        let f = QuadField::new(PrimeModulus::new(101).unwrap()).unwrap();
        let a = (17u64, 64u64);
        let b = (99, 3);
        assert_eq!(f.mul(a, f.inv(a)), f.one());
        assert_eq!(f.mul(a, b), f.mul(b, a));
        assert_eq!(f.sub(f.add(a, b), b), a);
        // Frobenius is the identity exactly on the rational line.
        assert_eq!(f.frobenius((5, 0)), (5, 0));
        assert_eq!(f.frobenius(a), (17, 101 - 64));
        assert_eq!(f.pow(a, 101), f.frobenius(a));
        // Norm is multiplicative and matches a * frobenius(a).
        let n = f.mul(a, f.frobenius(a));
        assert_eq!(n, (f.norm(a), 0));
    }

    #[test]
    fn element_order_is_lexicographic() {
        let mut v = vec![(3u64, 1u64), (0, 2), (3, 0), (0, 0)];
        v.sort();
        assert_eq!(v, vec![(0, 0), (0, 2), (3, 0), (3, 1)]);
    }
}
