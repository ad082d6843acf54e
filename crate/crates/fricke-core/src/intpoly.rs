//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, ascending order, used for all exact rational-integer work.

use crate::field::{Field, PrimeField};
use crate::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    pub c: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        IntPoly { c }
    }

    pub fn zero() -> Self {
        IntPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::new(vec![BigInt::one()])
    }

    pub fn constant(a: BigInt) -> Self {
        IntPoly::new(vec![a])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// Monic linear polynomial X + a.
    pub fn linear(a: i64) -> Self {
        IntPoly::new(vec![BigInt::from(a), BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> &BigInt {
        self.c.last().expect("leading coefficient of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.c.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.lc().is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        IntPoly::new(self.c.iter().map(|a| -a).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }

    pub fn mul_scalar(&self, s: &BigInt) -> Self {
        IntPoly::new(self.c.iter().map(|a| a * s).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.c.iter().cloned());
        IntPoly::new(c)
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut r = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        r
    }

    /// Exact division over the integers; errors if any step fails to divide
    /// or a remainder is left.
    pub fn exact_div(&self, div: &Self) -> Result<Self> {
        assert!(!div.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let err = || Error::NonExactDivision {
            num_deg: self.deg0(),
            den_deg: div.deg0(),
        };
        if self.c.len() < div.c.len() {
            return Err(err());
        }
        let dd = div.c.len() - 1;
        let mut rem = self.c.clone();
        let mut quo = vec![BigInt::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let (q, r) = rem[k].div_rem(div.lc());
            if !r.is_zero() {
                return Err(err());
            }
            for (i, dv) in div.c.iter().enumerate() {
                let t = &q * dv;
                rem[k - dd + i] -= t;
            }
            quo[k - dd] = q;
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return Err(err());
        }
        Ok(IntPoly::new(quo))
    }

    /// Exact scalar division.
    pub fn exact_div_scalar(&self, s: &BigInt) -> Result<Self> {
        let mut c = Vec::with_capacity(self.c.len());
        for a in &self.c {
            let (q, r) = a.div_rem(s);
            if !r.is_zero() {
                return Err(Error::NonExactDivision {
                    num_deg: self.deg0(),
                    den_deg: 0,
                });
            }
            c.push(q);
        }
        Ok(IntPoly::new(c))
    }

    /// Pseudo-division: returns (q, r, k) with lc(div)^k * self = q * div + r
    /// and deg r < deg div.
    pub fn pseudo_divrem(&self, div: &Self) -> (Self, Self, usize) {
        assert!(!div.is_zero(), "pseudo-division by zero polynomial");
        let dd = div.c.len() - 1;
        let mut r = self.clone();
        let mut q = IntPoly::zero();
        let mut k = 0usize;
        let d = div.lc().clone();
        while !r.is_zero() && r.deg0() >= dd && r.c.len() >= div.c.len() {
            let s = IntPoly::new(vec![r.lc().clone()]).shift(r.deg0() - dd);
            q = q.mul_scalar(&d).add(&s);
            r = r.mul_scalar(&d).sub(&s.mul(div));
            k += 1;
        }
        (q, r, k)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Evaluate in any finite field after coefficient reduction.
    pub fn eval_in<F: Field>(&self, f: &F, x: F::El) -> F::El {
        let mut acc = f.zero();
        for a in self.c.iter().rev() {
            acc = f.add(f.mul(acc, x), reduce_bigint(f, a));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.c[1..]
                .iter()
                .enumerate()
                .map(|(i, a)| a * BigInt::from(i as u64 + 1))
                .collect(),
        )
    }

    /// Coefficient reduction mod p.
    pub fn reduce_mod(&self, f: PrimeField) -> crate::poly::Poly<PrimeField> {
        crate::poly::Poly::new(f, self.c.iter().map(|a| reduce_bigint(&f, a)).collect())
    }

    /// Sum of absolute coefficient values.
    pub fn norm1(&self) -> BigUint {
        self.c.iter().map(|a| a.abs().to_biguint().unwrap()).sum()
    }

    /// Sum of squared coefficients.
    pub fn norm2_sq(&self) -> BigUint {
        self.c
            .iter()
            .map(|a| (a * a).to_biguint().unwrap())
            .sum()
    }

    /// Signed rendering with descending terms, for witnesses and debugging.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for i in (0..self.c.len()).rev() {
            let a = &self.c[i];
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            if s.is_empty() {
                if a.is_negative() {
                    s.push('-');
                }
            } else if a.is_negative() {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let vp = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 || !mag.is_one() {
                s.push_str(&mag.to_string());
            }
            s.push_str(&vp);
        }
        s
    }
}

/// Reduce a big integer into any prime-characteristic field.
pub fn reduce_bigint<F: Field>(f: &F, a: &BigInt) -> F::El {
    let p = BigInt::from(f.characteristic());
    let r = a.mod_floor(&p);
    let digits = r.to_u64_digits().1;
    f.from_u64(if digits.is_empty() { 0 } else { digits[0] })
}
