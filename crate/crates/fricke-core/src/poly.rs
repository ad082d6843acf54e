//! Dense univariate polynomials over a finite field, coefficients ascending.
//!
//! A polynomial carries its field context, so values over F_p and F_p^2 share
//! one implementation.  The zero polynomial has an empty coefficient vector.

use crate::field::{Field, PrimeField};
use crate::{Error, Result};
use num_bigint::BigUint;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<F: Field> {
    pub f: F,
    pub c: Vec<F::El>,
}

impl<F: Field> Poly<F> {
    pub fn new(f: F, mut c: Vec<F::El>) -> Self {
        while c.last().is_some_and(|&x| f.is_zero(x)) {
            c.pop();
        }
        Poly { f, c }
    }

    pub fn zero(f: F) -> Self {
        Poly { f, c: Vec::new() }
    }

    pub fn one(f: F) -> Self {
        Poly::new(f, vec![f.one()])
    }

    pub fn constant(f: F, a: F::El) -> Self {
        Poly::new(f, vec![a])
    }

    /// The monomial X.
    pub fn x(f: F) -> Self {
        Poly::new(f, vec![f.zero(), f.one()])
    }

    pub fn from_i64(f: F, coeffs: &[i64]) -> Self {
        Poly::new(f, coeffs.iter().map(|&v| f.from_i64(v)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    /// Degree with zero treated as 0, for size arithmetic.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> F::El {
        *self.c.last().expect("leading coefficient of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> F::El {
        self.c.get(i).copied().unwrap_or_else(|| self.f.zero())
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.lc() == self.f.one()
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = self.f;
        let n = self.c.len().max(other.c.len());
        let c = (0..n)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::new(f, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = self.f;
        let n = self.c.len().max(other.c.len());
        let c = (0..n)
            .map(|i| f.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::new(f, c)
    }

    pub fn neg(&self) -> Self {
        Poly::new(self.f, self.c.iter().map(|&a| self.f.neg(a)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = self.f;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut c = vec![f.zero(); self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, c)
    }

    pub fn mul_scalar(&self, s: F::El) -> Self {
        Poly::new(self.f, self.c.iter().map(|&a| self.f.mul(a, s)).collect())
    }

    /// Multiply by X^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![self.f.zero(); k];
        c.extend_from_slice(&self.c);
        Poly::new(self.f, c)
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut r = Poly::one(self.f);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        r
    }

    /// Euclidean division; panics if div is zero.
    pub fn divrem(&self, div: &Self) -> (Self, Self) {
        let f = self.f;
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.c.len() - 1;
        if self.c.len() <= dd && self.c.len() < div.c.len() {
            return (Poly::zero(f), self.clone());
        }
        let lcinv = f.inv(div.lc());
        let mut rem = self.c.clone();
        let mut quo = vec![f.zero(); rem.len().saturating_sub(dd)];
        let mut top = rem.len();
        while top > dd {
            let k = top - 1;
            let coef = rem[k];
            if !f.is_zero(coef) {
                let q = f.mul(coef, lcinv);
                quo[k - dd] = q;
                for (i, &dv) in div.c.iter().enumerate() {
                    rem[k - dd + i] = f.sub(rem[k - dd + i], f.mul(q, dv));
                }
            }
            top -= 1;
        }
        rem.truncate(dd);
        (Poly::new(f, quo), Poly::new(f, rem))
    }

    pub fn rem(&self, div: &Self) -> Self {
        self.divrem(div).1
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, div: &Self) -> Result<Self> {
        let (q, r) = self.divrem(div);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonExactDivision {
                num_deg: self.deg0(),
                den_deg: div.deg0(),
            })
        }
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scale to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.mul_scalar(self.f.inv(self.lc()))
    }

    pub fn eval(&self, x: F::El) -> F::El {
        let f = self.f;
        let mut acc = f.zero();
        for &a in self.c.iter().rev() {
            acc = f.add(f.mul(acc, x), a);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let f = self.f;
        if self.c.len() <= 1 {
            return Poly::zero(f);
        }
        let c = self.c[1..]
            .iter()
            .enumerate()
            .map(|(i, &a)| f.mul(f.from_u64(i as u64 + 1), a))
            .collect();
        Poly::new(f, c)
    }

    /// self * other reduced mod m.
    pub fn mulrem(&self, other: &Self, m: &Self) -> Self {
        self.mul(other).rem(m)
    }

    /// self^e mod m, with a big-integer exponent for Frobenius powers.
    pub fn powrem(&self, e: &BigUint, m: &Self) -> Self {
        let mut r = Poly::one(self.f);
        if e == &BigUint::from(0u32) {
            return r.rem(m);
        }
        let mut base = self.rem(m);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                r = r.mulrem(&base, m);
            }
            if i + 1 < bits {
                base = base.mulrem(&base, m);
            }
        }
        r
    }
}

impl Poly<PrimeField> {
    /// Render with terms in descending degree: coefficients in [0, p), zero
    /// terms skipped, unit coefficients omitted on variable terms.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for i in (0..self.c.len()).rev() {
            let a = self.c[i];
            if a == 0 {
                continue;
            }
            let vp = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let part = if i == 0 {
                format!("{a}")
            } else if a == 1 {
                vp
            } else {
                format!("{a}{vp}")
            };
            parts.push(part);
        }
        parts.join("+")
    }

    /// Coefficients (ascending) as decimal strings, for JSON payloads.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.c.iter().map(|a| a.to_string()).collect()
    }
}
