//! Resultants and discriminants: Euclidean over finite fields, fraction-free
//! subresultant chains over rings, Sylvester determinants as an independent
//! oracle, and CRT reconstruction for exact integer and bivariate resultants.
//!
//! Convention throughout: Res(f, g) is the determinant of the Sylvester
//! matrix with the f-rows first, so Res(f, g) = lc(f)^deg(g) prod g(alpha)
//! over the roots alpha of f, and Res(f, g) = (-1)^(deg f deg g) Res(g, f).

use crate::arith::prev_prime;
use crate::bipoly::BiIntPoly;
use crate::field::{Field, PrimeField, PrimeModulus};
use crate::intpoly::IntPoly;
use crate::poly::Poly;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Euclidean resultant over a field.
pub fn resultant_field<F: Field>(f: &Poly<F>, g: &Poly<F>) -> F::El {
    let k = f.f;
    if f.is_zero() || g.is_zero() {
        return k.zero();
    }
    let (df, dg) = (f.deg0(), g.deg0());
    if df == 0 && dg == 0 {
        return k.one();
    }
    if df == 0 {
        return k.pow(f.lc(), dg as u128);
    }
    if dg == 0 {
        return k.pow(g.lc(), df as u128);
    }
    let mut a = f.clone();
    let mut b = g.clone();
    let mut res = k.one();
    let mut negate = false;
    loop {
        let (da, db) = (a.deg0(), b.deg0());
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.rem(&b);
        if r.is_zero() {
            if db == 0 {
                res = k.mul(res, k.pow(b.lc(), da as u128));
                break;
            }
            return k.zero();
        }
        let dr = r.deg0();
        res = k.mul(res, k.pow(b.lc(), (da - dr) as u128));
        a = b;
        b = r;
        if b.deg0() == 0 {
            res = k.mul(res, k.pow(b.lc(), a.deg0() as u128));
            break;
        }
    }
    if negate {
        k.neg(res)
    } else {
        res
    }
}

/// Discriminant over a field: (-1)^(m(m-1)/2) Res(f, f') / lc(f).
pub fn discriminant_field<F: Field>(f: &Poly<F>) -> F::El {
    let k = f.f;
    let m = f.degree().expect("discriminant of zero polynomial");
    assert!(m >= 1, "discriminant needs positive degree");
    let r = resultant_field(f, &f.derivative());
    let d = k.div(r, f.lc());
    if (m * (m - 1) / 2) % 2 == 1 {
        k.neg(d)
    } else {
        d
    }
}

/// Sylvester matrix of f and g (f-rows first), entries descending.
pub fn sylvester_matrix(f: &IntPoly, g: &IntPoly) -> Vec<Vec<BigInt>> {
    let (df, dg) = (f.deg0(), g.deg0());
    let n = df + dg;
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for i in 0..dg {
        for (k, a) in f.c.iter().rev().enumerate() {
            m[i][i + k] = a.clone();
        }
    }
    for i in 0..df {
        for (k, a) in g.c.iter().rev().enumerate() {
            m[dg + i][i + k] = a.clone();
        }
    }
    m
}

/// Exact integer determinant by Bareiss fraction-free elimination.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Resultant as a Sylvester determinant; the slow independent oracle.
pub fn sylvester_resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    bareiss_determinant(sylvester_matrix(f, g))
}

/// 62-bit primes for CRT reconstruction, descending from 2^62.
struct CrtPrimes {
    next: u64,
}

impl CrtPrimes {
    fn new() -> Self {
        CrtPrimes { next: 1 << 62 }
    }
}

impl Iterator for CrtPrimes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        let q = prev_prime(self.next);
        self.next = q;
        Some(q)
    }
}

/// Incremental CRT state keeping a symmetric-range representative.
struct CrtInt {
    m: BigInt,
    v: BigInt,
}

impl CrtInt {
    fn new() -> Self {
        CrtInt {
            m: BigInt::one(),
            v: BigInt::zero(),
        }
    }

    fn push(&mut self, q: u64, r: u64) {
        let qb = BigInt::from(q);
        let mq = (self.m.clone() % &qb + &qb) % &qb;
        let minv = crate::arith::invmod(mq.to_u64_digits().1.first().copied().unwrap_or(0), q);
        let vq = ((self.v.clone() % &qb + &qb) % &qb).to_u64_digits().1;
        let vq = vq.first().copied().unwrap_or(0);
        let t = crate::arith::mulmod(crate::arith::submod(r % q, vq % q, q), minv, q);
        self.v += &self.m * BigInt::from(t);
        self.m *= &qb;
        // Keep the symmetric representative in (-m/2, m/2].
        let half = &self.m >> 1;
        if self.v > half {
            self.v -= &self.m;
        }
    }
}

/// Exact integer resultant by CRT over word-size primes; the prime product
/// is grown past twice the Hadamard bound and two consecutive
/// reconstructions must agree.
pub fn resultant_int(f: &IntPoly, g: &IntPoly) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    let (df, dg) = (f.deg0(), g.deg0());
    if df == 0 && dg == 0 {
        return BigInt::one();
    }
    if df == 0 {
        return f.lc().pow(dg as u32);
    }
    if dg == 0 {
        return g.lc().pow(df as u32);
    }
    // |Res|^2 <= (sum f_i^2)^dg (sum g_i^2)^df by Hadamard.
    let bound_sq = BigUint::from(4u32)
        * f.norm2_sq().pow(dg as u32)
        * g.norm2_sq().pow(df as u32);
    let mut crt = CrtInt::new();
    let mut last: Option<BigInt> = None;
    for q in CrtPrimes::new() {
        let fld = PrimeField::new(PrimeModulus::new(q).unwrap());
        let fq = f.reduce_mod(fld);
        let gq = g.reduce_mod(fld);
        if fq.deg0() != df || gq.deg0() != dg {
            continue; // q divides a leading coefficient
        }
        crt.push(q, resultant_field(&fq, &gq));
        let stable = last.as_ref() == Some(&crt.v);
        last = Some(crt.v.clone());
        if stable && (&crt.m * &crt.m).to_biguint().unwrap() > bound_sq {
            return crt.v.clone();
        }
    }
    unreachable!("prime supply is unbounded")
}

/// Exact integer discriminant.
pub fn discriminant_int(f: &IntPoly) -> BigInt {
    let m = f.degree().expect("discriminant of zero polynomial");
    assert!(m >= 1, "discriminant needs positive degree");
    let r = resultant_int(f, &f.derivative());
    let (q, rem) = num_integer::Integer::div_rem(&r, f.lc());
    assert!(rem.is_zero(), "resultant of f and f' divisible by lc(f)");
    if (m * (m - 1) / 2) % 2 == 1 {
        -q
    } else {
        q
    }
}

/// Commutative ring with exact division, for subresultant chains.
pub trait Ring: Clone {
    type El: Clone + PartialEq + std::fmt::Debug;
    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn is_zero(&self, a: &Self::El) -> bool;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn neg(&self, a: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    /// Some(a / b) when b divides a exactly.
    fn exact_div(&self, a: &Self::El, b: &Self::El) -> Option<Self::El>;

    fn pow(&self, a: &Self::El, mut e: usize) -> Self::El {
        let mut base = a.clone();
        let mut r = self.one();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        r
    }
}

/// The ring of integers.
#[derive(Clone, Copy)]
pub struct IntRing;

impl Ring for IntRing {
    type El = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn exact_div(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        let (q, r) = num_integer::Integer::div_rem(a, b);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
}

/// The ring Z[Y] of integer polynomials.
#[derive(Clone, Copy)]
pub struct IntPolyRing;

impl Ring for IntPolyRing {
    type El = IntPoly;
    fn zero(&self) -> IntPoly {
        IntPoly::zero()
    }
    fn one(&self) -> IntPoly {
        IntPoly::one()
    }
    fn is_zero(&self, a: &IntPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &IntPoly, b: &IntPoly) -> IntPoly {
        a.add(b)
    }
    fn sub(&self, a: &IntPoly, b: &IntPoly) -> IntPoly {
        a.sub(b)
    }
    fn neg(&self, a: &IntPoly) -> IntPoly {
        a.neg()
    }
    fn mul(&self, a: &IntPoly, b: &IntPoly) -> IntPoly {
        a.mul(b)
    }
    fn exact_div(&self, a: &IntPoly, b: &IntPoly) -> Option<IntPoly> {
        a.exact_div(b).ok()
    }
}

/// The ring F_p[Y].
#[derive(Clone, Copy)]
pub struct ModPolyRing {
    pub f: PrimeField,
}

impl Ring for ModPolyRing {
    type El = Poly<PrimeField>;
    fn zero(&self) -> Poly<PrimeField> {
        Poly::zero(self.f)
    }
    fn one(&self) -> Poly<PrimeField> {
        Poly::one(self.f)
    }
    fn is_zero(&self, a: &Poly<PrimeField>) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Poly<PrimeField>, b: &Poly<PrimeField>) -> Poly<PrimeField> {
        a.add(b)
    }
    fn sub(&self, a: &Poly<PrimeField>, b: &Poly<PrimeField>) -> Poly<PrimeField> {
        a.sub(b)
    }
    fn neg(&self, a: &Poly<PrimeField>) -> Poly<PrimeField> {
        a.neg()
    }
    fn mul(&self, a: &Poly<PrimeField>, b: &Poly<PrimeField>) -> Poly<PrimeField> {
        a.mul(b)
    }
    fn exact_div(&self, a: &Poly<PrimeField>, b: &Poly<PrimeField>) -> Option<Poly<PrimeField>> {
        let (q, r) = a.divrem(b);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
}

fn rp_norm<R: Ring>(ring: &R, mut v: Vec<R::El>) -> Vec<R::El> {
    while v.last().is_some_and(|x| ring.is_zero(x)) {
        v.pop();
    }
    v
}

fn rp_deg<R: Ring>(v: &[R::El]) -> usize {
    v.len().saturating_sub(1)
}

fn rp_scale<R: Ring>(ring: &R, v: &[R::El], s: &R::El) -> Vec<R::El> {
    v.iter().map(|a| ring.mul(a, s)).collect()
}

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) f = q g + prem(f, g).
fn rp_pseudo_rem<R: Ring>(ring: &R, f: &[R::El], g: &[R::El]) -> Vec<R::El> {
    let dg = rp_deg::<R>(g);
    let d = g.last().expect("pseudo-remainder by zero").clone();
    let mut e = rp_deg::<R>(f) + 1 - dg;
    let mut r = f.to_vec();
    while !r.is_empty() && rp_deg::<R>(&r) >= dg && r.len() >= g.len() {
        let lr = r.last().unwrap().clone();
        let shift = rp_deg::<R>(&r) - dg;
        let mut nr: Vec<R::El> = rp_scale(ring, &r, &d);
        for (i, gc) in g.iter().enumerate() {
            nr[shift + i] = ring.sub(&nr[shift + i], &ring.mul(&lr, gc));
        }
        nr.pop();
        r = rp_norm(ring, nr);
        e -= 1;
    }
    let pad = ring.pow(&d, e);
    rp_norm(ring, rp_scale(ring, &r, &pad))
}

/// Resultant over a ring by the fraction-free subresultant chain.
pub fn subresultant_resultant<R: Ring>(ring: &R, f: &[R::El], g: &[R::El]) -> R::El {
    let f = rp_norm(ring, f.to_vec());
    let g = rp_norm(ring, g.to_vec());
    if f.is_empty() || g.is_empty() {
        return ring.zero();
    }
    let (df, dg) = (rp_deg::<R>(&f), rp_deg::<R>(&g));
    if df == 0 && dg == 0 {
        return ring.one();
    }
    if df == 0 {
        return ring.pow(&f[0], dg);
    }
    if dg == 0 {
        return ring.pow(&g[0], df);
    }
    let mut neg = false;
    let (mut a, mut b) = if df < dg {
        if df % 2 == 1 && dg % 2 == 1 {
            neg = !neg;
        }
        (g, f)
    } else {
        (f, g)
    };
    let mut gc = ring.one();
    let mut h = ring.one();
    loop {
        let (da, db) = (rp_deg::<R>(&a), rp_deg::<R>(&b));
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            neg = !neg;
        }
        let r = rp_pseudo_rem(ring, &a, &b);
        a = b;
        if r.is_empty() {
            return ring.zero();
        }
        let divisor = ring.mul(&gc, &ring.pow(&h, delta));
        let nb: Vec<R::El> = r
            .iter()
            .map(|x| {
                ring.exact_div(x, &divisor)
                    .expect("subresultant chain divisibility")
            })
            .collect();
        b = rp_norm(ring, nb);
        gc = a.last().unwrap().clone();
        if delta > 0 {
            let num = ring.pow(&gc, delta);
            let den = ring.pow(&h, delta - 1);
            h = ring
                .exact_div(&num, &den)
                .expect("subresultant h update divisibility");
        }
        if rp_deg::<R>(&b) == 0 {
            let da = rp_deg::<R>(&a);
            let num = ring.pow(&b[0], da);
            let den = ring.pow(&h, da - 1);
            let res = ring
                .exact_div(&num, &den)
                .expect("subresultant final divisibility");
            return if neg { ring.neg(&res) } else { res };
        }
    }
}

/// Lagrange interpolation through distinct points over F_p.
pub fn lagrange_interpolate(
    f: PrimeField,
    points: &[(u64, u64)],
) -> Poly<PrimeField> {
    let mut acc = Poly::zero(f);
    for (i, &(xi, yi)) in points.iter().enumerate() {
        if yi == 0 {
            continue;
        }
        let mut basis = Poly::one(f);
        let mut denom = f.one();
        for (j, &(xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&Poly::new(f, vec![f.neg(xj), f.one()]));
            denom = f.mul(denom, f.sub(xi, xj));
        }
        acc = acc.add(&basis.mul_scalar(f.mul(yi, f.inv(denom))));
    }
    acc
}

/// Degree bound for the resultant in the first variable.
fn bivar_res_degree_bound(f: &BiIntPoly, g: &BiIntPoly) -> usize {
    f.deg_x() * g.deg_y() + f.deg_y() * g.deg_x()
}

/// Specialize rows at y0 into a polynomial in X over F_p.
fn specialize_rows(f: PrimeField, rows: &[Poly<PrimeField>], y0: u64) -> Poly<PrimeField> {
    Poly::new(f, rows.iter().map(|r| r.eval(y0)).collect())
}

/// Resultant in the first variable of two bivariate polynomials over F_p by
/// evaluation at second-variable points and interpolation.  Returns None if
/// p is too small to supply enough good evaluation points.
pub fn resultant_bivar_modp_interp(
    f: PrimeField,
    rows_f: &[Poly<PrimeField>],
    rows_g: &[Poly<PrimeField>],
    bound: usize,
) -> Option<Poly<PrimeField>> {
    let lcf = rows_f.last()?.clone();
    let lcg = rows_g.last()?.clone();
    let mut pts = Vec::with_capacity(bound + 1);
    let mut y0 = 0u64;
    while pts.len() <= bound {
        if y0 >= f.p() {
            return None;
        }
        if lcf.eval(y0) != 0 && lcg.eval(y0) != 0 {
            let a = specialize_rows(f, rows_f, y0);
            let b = specialize_rows(f, rows_g, y0);
            pts.push((y0, resultant_field(&a, &b)));
        }
        y0 += 1;
    }
    Some(lagrange_interpolate(f, &pts))
}

/// Resultant in the first variable over F_p via the subresultant chain,
/// valid for every p.
pub fn resultant_bivar_modp_prs(
    f: PrimeField,
    rows_f: &[Poly<PrimeField>],
    rows_g: &[Poly<PrimeField>],
) -> Poly<PrimeField> {
    let ring = ModPolyRing { f };
    subresultant_resultant(&ring, rows_f, rows_g)
}

/// Resultant in the first variable over F_p, choosing interpolation when the
/// field is comfortably larger than the degree bound.
pub fn resultant_bivar_modp(
    f: PrimeField,
    rows_f: &[Poly<PrimeField>],
    rows_g: &[Poly<PrimeField>],
) -> Poly<PrimeField> {
    let rows_f = rows_f.to_vec();
    let rows_g = rows_g.to_vec();
    if rows_f.is_empty() || rows_g.is_empty() {
        return Poly::zero(f);
    }
    let dxf = rows_f.len() - 1;
    let dxg = rows_g.len() - 1;
    let dyf = rows_f.iter().map(|r| r.deg0()).max().unwrap();
    let dyg = rows_g.iter().map(|r| r.deg0()).max().unwrap();
    let bound = dxf * dyg + dyf * dxg;
    if (f.p() as usize) > 2 * (bound + dyf + dyg) + 4 {
        if let Some(r) = resultant_bivar_modp_interp(f, &rows_f, &rows_g, bound) {
            return r;
        }
    }
    resultant_bivar_modp_prs(f, &rows_f, &rows_g)
}

/// Exact resultant in the first variable of two bivariate integer
/// polynomials: per-prime evaluation and interpolation, merged by CRT.
pub fn resultant_bivar_int(f: &BiIntPoly, g: &BiIntPoly) -> IntPoly {
    if f.is_zero() || g.is_zero() {
        return IntPoly::zero();
    }
    if f.deg_x() == 0 && g.deg_x() == 0 {
        return IntPoly::one();
    }
    if f.deg_x() == 0 {
        return f.row(0).pow(g.deg_x());
    }
    if g.deg_x() == 0 {
        return g.row(0).pow(f.deg_x());
    }
    let bound = bivar_res_degree_bound(f, g);
    // Coefficient bound: each Sylvester entry contributes its whole 1-norm.
    let bound_sq = {
        let b = f.norm1().pow(g.deg_x() as u32) * g.norm1().pow(f.deg_x() as u32);
        BigUint::from(4u32) * &b * &b
    };
    let mut modulus = BigInt::one();
    let mut coeffs: Vec<CrtInt> = (0..=bound).map(|_| CrtInt::new()).collect();
    let mut last: Option<IntPoly> = None;
    for q in CrtPrimes::new() {
        let fld = PrimeField::new(PrimeModulus::new(q).unwrap());
        let rows_f = f.reduce_mod(fld);
        let rows_g = g.reduce_mod(fld);
        if rows_f.len() != f.deg_x() + 1
            || rows_g.len() != g.deg_x() + 1
            || rows_f.last().unwrap().is_zero()
            || rows_g.last().unwrap().is_zero()
        {
            continue; // q kills a leading row
        }
        let resq = match resultant_bivar_modp_interp(fld, &rows_f, &rows_g, bound) {
            Some(r) => r,
            None => resultant_bivar_modp_prs(fld, &rows_f, &rows_g),
        };
        for (i, c) in coeffs.iter_mut().enumerate() {
            c.push(q, resq.coeff(i));
        }
        modulus *= BigInt::from(q);
        let lifted = IntPoly::new(coeffs.iter().map(|c| c.v.clone()).collect());
        let stable = last.as_ref() == Some(&lifted);
        last = Some(lifted);
        if stable && (&modulus * &modulus).to_biguint().unwrap() > bound_sq {
            return last.unwrap();
        }
    }
    unreachable!("prime supply is unbounded")
}

/// Resultant in the second variable, via transposition.
pub fn resultant_bivar_int_y(f: &BiIntPoly, g: &BiIntPoly) -> IntPoly {
    resultant_bivar_int(&f.transpose(), &g.transpose())
}

/// Discriminant of a bivariate polynomial with respect to its first
/// variable: (-1)^(m(m-1)/2) Res_X(f, df/dX) / lc_X(f), exact over Z[Y].
pub fn discriminant_bivar_x(f: &BiIntPoly) -> IntPoly {
    let m = f.deg_x();
    assert!(m >= 1, "discriminant needs positive degree");
    let dfx = BiIntPoly::new(
        f.rows
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, r)| r.mul_scalar(&BigInt::from(i)))
            .collect(),
    );
    let r = resultant_bivar_int(f, &dfx);
    let q = r
        .exact_div(&f.row(m))
        .expect("resultant of f and f_X divisible by lc_X(f)");
    if (m * (m - 1) / 2) % 2 == 1 {
        q.neg()
    } else {
        q
    }
}

/// Discriminant with respect to the second variable.
pub fn discriminant_bivar_y(f: &BiIntPoly) -> IntPoly {
    discriminant_bivar_x(&f.transpose())
}
