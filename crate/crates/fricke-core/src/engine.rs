//! Supersingular polynomials and their Fricke-group analogues.
//!
//! The centerpiece is ss_p(X), the monic polynomial over F_p whose roots are
//! the supersingular j-invariants of characteristic p, built from a closed
//! binomial formula and cross-checkable against a Hasse-invariant oracle.
//! For each level N in {2, 3, 5, 7} the polynomial ss_p^(N*)(Y) is computed
//! two independent ways: by pushing the supersingular j-invariants through
//! the correspondence R_N and collecting the partner values, and by dividing
//! the resultant congruence and taking an exact square root.

use std::collections::BTreeSet;

use crate::arith::is_prime;
use crate::data::{self, CharSelector};
use crate::factor::{poly_exact_sqrt, roots_in_field};
use crate::field::{Field, PrimeField, PrimeModulus, QuadField};
use crate::intpoly::IntPoly;
use crate::poly::Poly;
use crate::{Error, Result};

/// Quadratic character exponents attached to a prime p >= 5.
///
/// delta = (1 - (-3/p))/2 and eps = (1 - (-4/p))/2; mu_N = (1 - (-N/p))/2
/// for N in {2, 5, 7}, undefined at p = N.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Characters {
    pub p: u64,
    pub delta: u32,
    pub eps: u32,
    pub mu2: Option<u32>,
    pub mu5: Option<u32>,
    pub mu7: Option<u32>,
}

impl Characters {
    /// The mu exponent belonging to level n, when defined.
    pub fn mu_level(&self, n: u64) -> Option<u32> {
        match n {
            2 => self.mu2,
            5 => self.mu5,
            7 => self.mu7,
            _ => None,
        }
    }
}

/// Character exponents of p; needs p prime and at least 5.
pub fn characters(p: u64) -> Result<Characters> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Err(Error::SmallPrime(p));
    }
    let m = PrimeModulus::new(p)?;
    let half = |s: i32| ((1 - s) / 2) as u32;
    let mu = |n: i64| {
        if p == n as u64 {
            None
        } else {
            Some(half(m.legendre(-n)))
        }
    };
    Ok(Characters {
        p,
        delta: half(m.legendre(-3)),
        eps: half(m.legendre(-4)),
        mu2: mu(2),
        mu5: mu(5),
        mu7: mu(7),
    })
}

/// Factorial tables for binomial coefficients mod p with arguments below p.
struct Binoms {
    f: PrimeField,
    fact: Vec<u64>,
    inv_fact: Vec<u64>,
}

impl Binoms {
    fn new(f: PrimeField, top: usize) -> Self {
        assert!((top as u64) < f.p(), "factorial arguments must stay below p");
        let mut fact = Vec::with_capacity(top + 1);
        fact.push(1);
        for i in 1..=top {
            fact.push(f.mul(fact[i - 1], f.from_u64(i as u64)));
        }
        let mut inv_fact = vec![0; top + 1];
        inv_fact[top] = f.inv(fact[top]);
        for i in (0..top).rev() {
            inv_fact[i] = f.mul(inv_fact[i + 1], f.from_u64(i as u64 + 1));
        }
        Binoms { f, fact, inv_fact }
    }

    fn choose(&self, n: usize, k: usize) -> u64 {
        if k > n {
            return 0;
        }
        self.f
            .mul(self.fact[n], self.f.mul(self.inv_fact[k], self.inv_fact[n - k]))
    }
}

/// The monic supersingular polynomial of p over F_p.
///
/// For p >= 5 this is X^delta (X-1728)^eps J(X) where J is the binomial sum
/// with k-th coefficient C(2n+eps, 2k+eps) C(2n-2k, n-k) (-432)^(n-k) in the
/// basis (X-1728)^k, n = floor(p/12).  For p in {2, 3} the unique
/// supersingular invariant is j = 0, so ss_p = X.
pub fn ss_poly(p: u64) -> Result<Poly<PrimeField>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let f = PrimeField::new(PrimeModulus::new(p)?);
    if p < 5 {
        return Ok(Poly::x(f));
    }
    let ch = characters(p)?;
    let n = (p / 12) as usize;
    let e = ch.eps as usize;
    let bin = Binoms::new(f, 2 * n + e);
    let m432 = f.from_i64(-432);
    let shift = Poly::from_i64(f, &[-1728, 1]);
    // Horner in (X - 1728), highest coefficient first.
    let mut j = Poly::zero(f);
    for k in (0..=n).rev() {
        let c = f.mul(
            f.mul(bin.choose(2 * n + e, 2 * k + e), bin.choose(2 * (n - k), n - k)),
            f.pow(m432, (n - k) as u128),
        );
        j = j.mul(&shift).add(&Poly::constant(f, c));
    }
    let mut ss = j;
    if ch.delta == 1 {
        ss = ss.mul(&Poly::x(f));
    }
    if ch.eps == 1 {
        ss = ss.mul(&shift);
    }
    debug_assert!(ss.is_monic());
    Ok(ss)
}

/// Degree of ss_p from character bookkeeping, without building it.
pub fn ss_degree(p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Ok(1);
    }
    let ch = characters(p)?;
    let d = ch.delta as u64;
    let e = ch.eps as u64;
    Ok(((p - 1 - 4 * d - 6 * e) / 12 + d + e) as usize)
}

/// The supersingular j-invariants of characteristic p as coordinates
/// (a0, a1) in F_p^2 = F_p[t]/(t^2 - c), sorted.
pub fn supersingular_j_set(p: u64, seed: u64) -> Result<Vec<(u64, u64)>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Ok(vec![(0, 0)]);
    }
    let k2 = QuadField::new(PrimeModulus::new(p)?)?;
    let ss = ss_poly(p)?;
    let lifted = Poly::new(k2, (0..=ss.deg0()).map(|i| k2.embed(ss.coeff(i))).collect());
    Ok(roots_in_field(&lifted, seed))
}

/// Supersingular j-invariants by the Hasse-invariant criterion, fully
/// independent of the closed form: j is supersingular iff the coefficient of
/// x^(p-1) in f(x)^((p-1)/2) vanishes for a curve y^2 = f(x) with invariant
/// j.  Uses the family y^2 = x^3 + 3kx + 2k with k = j/(1728-j), and
/// y^2 = x^3 + 1, y^2 = x^3 + x at the special points j = 0, 1728.  Walks
/// all of F_p^2, so it is desk scale only.
pub fn hasse_j_set(p: u64) -> Result<Vec<(u64, u64)>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Err(Error::SmallPrime(p));
    }
    assert!(p <= 2000, "the Hasse oracle scans all of F_p^2 and stops at p = 2000");
    let m = ((p - 1) / 2) as usize;
    let fp = PrimeField::new(PrimeModulus::new(p)?);
    let k2 = QuadField::new(PrimeModulus::new(p)?)?;
    // Coefficient of x^(p-1) in (x^3 + 3kx + 2k)^m, as a polynomial in k:
    // multinomial terms with a + b + c = m and 3a + b = 2m contribute
    // m!/(a! b! c!) 3^b 2^c k^(b+c) = (...) k^(m-a).
    let bin = Binoms::new(fp, m);
    let mut h = vec![0u64; m / 2 + 1];
    for a in m.div_ceil(2)..=(2 * m / 3) {
        let b = 2 * m - 3 * a;
        let c = 2 * a - m;
        let mult = fp.mul(bin.choose(m, a), bin.choose(m - a, b));
        let powers = fp.mul(
            fp.pow(fp.from_u64(3), b as u128),
            fp.pow(fp.from_u64(2), c as u128),
        );
        h[m - a] = fp.add(h[m - a], fp.mul(mult, powers));
    }
    let hpoly = Poly::new(k2, h.iter().map(|&v| k2.embed(v)).collect());
    let c1728 = k2.embed(1728 % p);
    let mut out = Vec::new();
    // j = 0 on y^2 = x^3 + 1: the x^(p-1) term needs 3 | p-1 and then has
    // coefficient C(m, (p-1)/3).
    let j0 = if (p - 1) % 3 == 0 {
        bin.choose(m, ((p - 1) / 3) as usize)
    } else {
        0
    };
    if j0 == 0 {
        out.push(k2.embed(0));
    }
    // j = 1728 on y^2 = x^3 + x: the term needs m even and then has
    // coefficient C(m, m/2).
    let j1728 = if m % 2 == 0 { bin.choose(m, m / 2) } else { 0 };
    if j1728 == 0 {
        out.push(c1728);
    }
    for a0 in 0..p {
        for a1 in 0..p {
            let j = (a0, a1);
            if j == (0, 0) || j == c1728 {
                continue;
            }
            let k = k2.mul(j, k2.inv(k2.sub(c1728, j)));
            if k2.is_zero(hpoly.eval(k)) {
                out.push(j);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Monic polynomial over F_p with the Hasse oracle's roots.
pub fn hasse_poly(p: u64) -> Result<Poly<PrimeField>> {
    let set = hasse_j_set(p)?;
    let k2 = QuadField::new(PrimeModulus::new(p)?)?;
    let mut prod = Poly::one(k2);
    for &j in &set {
        prod = prod.mul(&Poly::new(k2, vec![k2.neg(j), k2.one()]));
    }
    rationalize(&k2, &prod)
}

/// Coerce a polynomial over F_p^2 with rational coefficients down to F_p.
fn rationalize(k2: &QuadField, f: &Poly<QuadField>) -> Result<Poly<PrimeField>> {
    let mut c = Vec::with_capacity(f.c.len());
    for &co in &f.c {
        if !k2.is_rational(co) {
            return Err(Error::RationalityFailure);
        }
        c.push(co.0);
    }
    Ok(Poly::new(k2.base(), c))
}

/// Res_X(ss(X), R_N(X, Y)) over F_p.  R_N is monic quadratic in X, so the
/// resultant is the norm of ss evaluated at a root of X^2 - sX + t over
/// F_p[Y]: run Horner in the quotient ring, keeping values as a*X + b.
pub fn res_corr(n: u64, ss: &Poly<PrimeField>) -> Result<Poly<PrimeField>> {
    let lvl = data::data().level(n)?;
    debug_assert_eq!(lvl.corr.deg_x(), 2);
    let f = ss.f;
    let s = lvl.corr.row(1).neg().reduce_mod(f);
    let t = lvl.corr.row(0).reduce_mod(f);
    let mut a = Poly::zero(f);
    let mut b = Poly::zero(f);
    for i in (0..=ss.deg0()).rev() {
        let c = Poly::constant(f, ss.coeff(i));
        let na = a.mul(&s).add(&b);
        let nb = c.sub(&a.mul(&t));
        a = na;
        b = nb;
    }
    // Norm of a*X + b: a^2 t + a b s + b^2.
    Ok(a.mul(&a).mul(&t).add(&a.mul(&b).mul(&s)).add(&b.mul(&b)))
}

/// Validate that the level-n correspondence applies at the prime p.
pub fn check_level_prime(n: u64, p: u64) -> Result<()> {
    data::data().level(n)?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Err(Error::BadPrime {
            level: n as u8,
            p,
            why: "needs p >= 5",
        });
    }
    if p == n {
        return Err(Error::BadPrime {
            level: n as u8,
            p,
            why: "the prime must differ from the level",
        });
    }
    Ok(())
}

/// Does level n admit the prime p?
pub fn eligible(n: u64, p: u64) -> bool {
    check_level_prime(n, p).is_ok()
}

/// The congruence side factors (A, B) of level n reduced mod p.
pub fn side_factors(n: u64, p: u64) -> Result<(Poly<PrimeField>, Poly<PrimeField>)> {
    check_level_prime(n, p)?;
    let lvl = data::data().level(n)?;
    let ch = characters(p)?;
    let mu = ch.mu_level(n).unwrap_or(0);
    let f = PrimeField::new(PrimeModulus::new(p)?);
    let build = |side: &[(IntPoly, CharSelector)]| {
        let mut acc = Poly::one(f);
        for (poly, sel) in side {
            let e = sel.exponent(ch.delta, ch.eps, mu);
            if e > 0 {
                acc = acc.mul(&poly.reduce_mod(f).pow(e as usize));
            }
        }
        acc
    };
    Ok((build(&lvl.a_side), build(&lvl.b_side)))
}

/// How to compute ss_p^(N*).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Enumerate supersingular j over F_p^2 and collect the distinct
    /// correspondence partners.
    Roots,
    /// Divide the congruence A * Res_X(ss_p, R_N) by B and take the exact
    /// square root.
    Theorem,
}

/// ss_p^(N*)(Y), the monic polynomial over F_p whose roots are the Fricke
/// supersingular invariants of level n.
pub fn fricke_ss(n: u64, p: u64, method: Method, seed: u64) -> Result<Poly<PrimeField>> {
    match method {
        Method::Roots => Ok(star_by_roots(n, p, seed)?.1),
        Method::Theorem => star_by_theorem(n, p),
    }
}

/// ss_p^(N*) from the congruence identity.
pub fn star_by_theorem(n: u64, p: u64) -> Result<Poly<PrimeField>> {
    check_level_prime(n, p)?;
    let ss = ss_poly(p)?;
    let res = res_corr(n, &ss)?;
    let (a, b) = side_factors(n, p)?;
    let sq = a.mul(&res).exact_div(&b)?;
    poly_exact_sqrt(&sq)
}

/// ss_p^(N*) by enumerating supersingular j-invariants and solving
/// R_N(j, Y) = 0 over F_p^2; returns the collected partners as well.
pub fn star_by_roots(n: u64, p: u64, seed: u64) -> Result<(Vec<(u64, u64)>, Poly<PrimeField>)> {
    check_level_prime(n, p)?;
    let jset = supersingular_j_set(p, seed)?;
    star_from_j_set(n, p, &jset, seed)
}

/// Same as star_by_roots with the supersingular list already in hand, so
/// sweeps over several levels can share one list per prime.
pub fn star_from_j_set(
    n: u64,
    p: u64,
    jset: &[(u64, u64)],
    seed: u64,
) -> Result<(Vec<(u64, u64)>, Poly<PrimeField>)> {
    check_level_prime(n, p)?;
    let lvl = data::data().level(n)?;
    let k2 = QuadField::new(PrimeModulus::new(p)?)?;
    // Rows of R_N by X-degree, as Y-polynomials over F_p^2.
    let rows: Vec<Poly<QuadField>> = (0..=lvl.corr.deg_x())
        .map(|i| {
            let r = lvl.corr.row(i).reduce_mod(k2.base());
            Poly::new(k2, (0..=r.deg0()).map(|d| k2.embed(r.coeff(d))).collect())
        })
        .collect();
    let mut partners = BTreeSet::new();
    for &j in jset {
        let mut fj = Poly::zero(k2);
        let mut jpow = k2.one();
        for row in &rows {
            fj = fj.add(&row.mul_scalar(jpow));
            jpow = k2.mul(jpow, j);
        }
        for r in roots_in_field(&fj, seed) {
            partners.insert(r);
        }
    }
    let mut prod = Poly::one(k2);
    for &j in &partners {
        prod = prod.mul(&Poly::new(k2, vec![k2.neg(j), k2.one()]));
    }
    let star = rationalize(&k2, &prod)?;
    Ok((partners.into_iter().collect(), star))
}

/// Predicted degree of ss_p^(N*) from the congruence bookkeeping:
/// deg A + deg_Y(R_N) deg ss_p = deg B + 2 deg ss_p^(N*).
pub fn expected_star_degree(n: u64, p: u64) -> Result<usize> {
    check_level_prime(n, p)?;
    let lvl = data::data().level(n)?;
    let (a, b) = side_factors(n, p)?;
    let num = a.deg0() + lvl.corr.deg_y() * ss_degree(p)?;
    let den = b.deg0();
    assert!(
        num >= den && (num - den) % 2 == 0,
        "degree bookkeeping must balance"
    );
    Ok((num - den) / 2)
}

/// Closed form for deg ss_p^(7*): (p - (-3/p))/3 + mu_7.
pub fn star7_degree_closed_form(p: u64) -> Result<usize> {
    check_level_prime(7, p)?;
    let m = PrimeModulus::new(p)?;
    let leg = m.legendre(-3) as i64;
    let mu7 = (1 - m.legendre(-7) as i64) / 2;
    Ok(((p as i64 - leg) / 3 + mu7) as usize)
}

/// A Weierstrass curve with coefficient vector (a1, a2, a3, a4, a6).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeierstrassCurve<F: Field> {
    pub k: F,
    pub a: [F::El; 5],
}

impl<F: Field> WeierstrassCurve<F> {
    pub fn new(k: F, a: [F::El; 5]) -> Self {
        WeierstrassCurve { k, a }
    }

    pub fn from_i64(k: F, a: [i64; 5]) -> Self {
        let a = [
            k.from_i64(a[0]),
            k.from_i64(a[1]),
            k.from_i64(a[2]),
            k.from_i64(a[3]),
            k.from_i64(a[4]),
        ];
        WeierstrassCurve { k, a }
    }

    /// The invariants (b2, b4, b6, b8).
    pub fn b_invariants(&self) -> (F::El, F::El, F::El, F::El) {
        let k = self.k;
        let [a1, a2, a3, a4, a6] = self.a;
        let b2 = k.add(k.mul(a1, a1), k.mul(k.from_u64(4), a2));
        let b4 = k.add(k.mul(k.from_u64(2), a4), k.mul(a1, a3));
        let b6 = k.add(k.mul(a3, a3), k.mul(k.from_u64(4), a6));
        let b8 = {
            let t1 = k.mul(k.mul(a1, a1), a6);
            let t2 = k.mul(k.from_u64(4), k.mul(a2, a6));
            let t3 = k.mul(a1, k.mul(a3, a4));
            let t4 = k.mul(a2, k.mul(a3, a3));
            let t5 = k.mul(a4, a4);
            k.sub(k.add(k.add(t1, t2), t4), k.add(t3, t5))
        };
        (b2, b4, b6, b8)
    }

    pub fn c4(&self) -> F::El {
        let k = self.k;
        let (b2, b4, _, _) = self.b_invariants();
        k.sub(k.mul(b2, b2), k.mul(k.from_u64(24), b4))
    }

    pub fn c6(&self) -> F::El {
        let k = self.k;
        let (b2, b4, b6, _) = self.b_invariants();
        let cube = k.mul(k.mul(b2, b2), b2);
        k.sub(
            k.mul(k.from_u64(36), k.mul(b2, b4)),
            k.add(cube, k.mul(k.from_u64(216), b6)),
        )
    }

    pub fn discriminant(&self) -> F::El {
        let k = self.k;
        let (b2, b4, b6, b8) = self.b_invariants();
        let t1 = k.mul(k.mul(b2, b2), b8);
        let t2 = k.mul(k.from_u64(8), k.mul(k.mul(b4, b4), b4));
        let t3 = k.mul(k.from_u64(27), k.mul(b6, b6));
        let t4 = k.mul(k.from_u64(9), k.mul(b2, k.mul(b4, b6)));
        k.sub(t4, k.add(k.add(t1, t2), t3))
    }

    /// j = c4^3 / discriminant; the curve must be nonsingular.
    pub fn j_invariant(&self) -> Result<F::El> {
        let k = self.k;
        let d = self.discriminant();
        if k.is_zero(d) {
            return Err(Error::SingularCurve);
        }
        let c4 = self.c4();
        Ok(k.div(k.mul(k.mul(c4, c4), c4), d))
    }

    pub fn is_on_curve(&self, x: F::El, y: F::El) -> bool {
        let k = self.k;
        let [a1, a2, a3, a4, a6] = self.a;
        let lhs = k.add(k.mul(y, y), k.add(k.mul(a1, k.mul(x, y)), k.mul(a3, y)));
        let x2 = k.mul(x, x);
        let rhs = k.add(
            k.add(k.mul(x2, x), k.mul(a2, x2)),
            k.add(k.mul(a4, x), a6),
        );
        lhs == rhs
    }

    /// Coefficients (q1, q0) of the fiber quadratic y^2 + q1 y + q0 = 0
    /// over the point x.
    pub fn y_quadratic(&self, x: F::El) -> (F::El, F::El) {
        let k = self.k;
        let [a1, a2, a3, a4, a6] = self.a;
        let q1 = k.add(k.mul(a1, x), a3);
        let x2 = k.mul(x, x);
        let rhs = k.add(
            k.add(k.mul(x2, x), k.mul(a2, x2)),
            k.add(k.mul(a4, x), a6),
        );
        (q1, k.neg(rhs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes_in;
    use crate::resultant::resultant_bivar_modp;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(PrimeModulus::new(p).unwrap())
    }

    #[test]
    fn character_table_small_primes() {
        let c11 = characters(11).unwrap();
        assert_eq!((c11.delta, c11.eps), (1, 1));
        assert_eq!(c11.mu2, Some(0));
        assert_eq!(c11.mu5, Some(1));
        // -7 = 4 mod 11 is a square, so mu_7 vanishes at 11.
        assert_eq!(c11.mu7, Some(0));
        let c13 = characters(13).unwrap();
        assert_eq!((c13.delta, c13.eps, c13.mu5), (0, 0, Some(1)));
        let c7 = characters(7).unwrap();
        assert_eq!((c7.delta, c7.eps), (0, 1));
        assert_eq!(c7.mu2, Some(1));
        assert_eq!(c7.mu5, Some(0));
        assert_eq!(c7.mu7, None);
        assert_eq!(characters(3), Err(Error::SmallPrime(3)));
        assert_eq!(characters(9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn supersingular_polys_match_published_factorizations() {
        assert_eq!(ss_poly(2).unwrap(), Poly::x(fp(2)));
        assert_eq!(ss_poly(3).unwrap(), Poly::x(fp(3)));
        assert_eq!(ss_poly(5).unwrap(), Poly::x(fp(5)));
        assert_eq!(ss_poly(7).unwrap(), Poly::from_i64(fp(7), &[1, 1]));
        assert_eq!(ss_poly(11).unwrap(), Poly::from_i64(fp(11), &[0, 10, 1]));
        assert_eq!(ss_poly(13).unwrap(), Poly::from_i64(fp(13), &[8, 1]));
        // (x+29)(x^2+31x+31) expanded mod 37
        assert_eq!(ss_poly(37).unwrap(), Poly::from_i64(fp(37), &[11, 5, 23, 1]));
        // x(x+4)(x+20) mod 23
        let p23 = Poly::from_i64(fp(23), &[0, 1])
            .mul(&Poly::from_i64(fp(23), &[4, 1]))
            .mul(&Poly::from_i64(fp(23), &[20, 1]));
        assert_eq!(ss_poly(23).unwrap(), p23);
    }

    #[test]
    fn degree_formula_matches_construction() {
        for p in primes_in(5, 500) {
            assert_eq!(ss_poly(p).unwrap().deg0(), ss_degree(p).unwrap(), "p = {p}");
        }
    }

    #[test]
    fn hasse_oracle_agrees_with_closed_form() {
        for p in primes_in(5, 60) {
            assert_eq!(hasse_poly(p).unwrap(), ss_poly(p).unwrap(), "p = {p}");
        }
    }

    #[test]
    fn j_set_size_is_the_degree() {
        assert_eq!(supersingular_j_set(2, 0).unwrap(), vec![(0, 0)]);
        assert_eq!(supersingular_j_set(3, 0).unwrap(), vec![(0, 0)]);
        for p in [5u64, 13, 31, 101, 199] {
            let set = supersingular_j_set(p, 0).unwrap();
            assert_eq!(set.len(), ss_degree(p).unwrap(), "p = {p}");
        }
    }

    #[test]
    fn correspondence_resultant_matches_generic_algorithm() {
        let p = 101;
        let f = fp(p);
        let ss = ss_poly(p).unwrap();
        for n in [2u64, 3, 5, 7] {
            let corr = &data::data().level(n).unwrap().corr;
            let rows_ss: Vec<_> = (0..=ss.deg0())
                .map(|i| Poly::constant(f, ss.coeff(i)))
                .collect();
            let rows_corr = corr.reduce_mod(f);
            let generic = resultant_bivar_modp(f, &rows_ss, &rows_corr);
            assert_eq!(res_corr(n, &ss).unwrap(), generic, "level {n}");
        }
    }

    #[test]
    fn star_small_primes_match_tables() {
        // Level 3 at p = 5: ss_5 = X, partners of j = 0 are 0 and -192 = 3.
        let (js, star) = star_by_roots(3, 5, 0).unwrap();
        assert_eq!(js, vec![(0, 0), (3, 0)]);
        assert_eq!(star, Poly::from_i64(fp(5), &[0, 2, 1]));
        // Level 5 at p = 7: Y(Y+3).
        assert_eq!(
            fricke_ss(5, 7, Method::Roots, 0).unwrap(),
            Poly::from_i64(fp(7), &[0, 3, 1])
        );
        // Level 7 at p = 5: Y(Y+1)(Y+3).
        assert_eq!(
            fricke_ss(7, 5, Method::Roots, 0).unwrap(),
            Poly::from_i64(fp(5), &[0, 3, 4, 1])
        );
    }

    #[test]
    fn methods_agree_on_small_range() {
        for n in [2u64, 3, 5, 7] {
            for p in primes_in(5, 60) {
                if !eligible(n, p) {
                    continue;
                }
                let by_roots = fricke_ss(n, p, Method::Roots, 1).unwrap();
                let by_theorem = fricke_ss(n, p, Method::Theorem, 0).unwrap();
                assert_eq!(by_roots, by_theorem, "level {n}, p = {p}");
                assert_eq!(by_roots.deg0(), expected_star_degree(n, p).unwrap());
            }
        }
    }

    #[test]
    fn degree_bookkeeping_examples() {
        assert_eq!(expected_star_degree(7, 5).unwrap(), 3);
        assert_eq!(expected_star_degree(7, 13).unwrap(), 5);
        assert_eq!(expected_star_degree(5, 7).unwrap(), 2);
        for p in primes_in(5, 200) {
            if p == 7 {
                continue;
            }
            assert_eq!(
                star7_degree_closed_form(p).unwrap(),
                expected_star_degree(7, p).unwrap(),
                "p = {p}"
            );
        }
    }

    #[test]
    fn weierstrass_invariants() {
        let f = fp(1009);
        let e = WeierstrassCurve::from_i64(f, [0, 0, 0, 0, 1]);
        assert_eq!(e.discriminant(), f.from_i64(-432));
        assert_eq!(e.j_invariant().unwrap(), 0);
        assert!(e.is_on_curve(f.from_u64(2), f.from_u64(3)));
        let e2 = WeierstrassCurve::from_i64(f, [0, 0, 0, 1, 0]);
        assert_eq!(e2.j_invariant().unwrap(), f.from_u64(1728));
        let singular = WeierstrassCurve::from_i64(f, [0, 0, 0, 0, 0]);
        assert_eq!(singular.j_invariant(), Err(Error::SingularCurve));
        let (q1, q0) = e.y_quadratic(f.from_u64(3));
        assert_eq!((q1, q0), (0, f.from_i64(-28)));
    }

    #[test]
    fn bad_inputs_are_rejected() {
        assert_eq!(check_level_prime(6, 11), Err(Error::BadLevel(6)));
        assert!(matches!(
            check_level_prime(5, 5),
            Err(Error::BadPrime { level: 5, p: 5, .. })
        ));
        assert_eq!(check_level_prime(5, 4), Err(Error::NotPrime(4)));
        assert!(matches!(check_level_prime(5, 3), Err(Error::BadPrime { .. })));
        assert!(!eligible(7, 7));
        assert!(eligible(5, 7));
        assert!(matches!(
            fricke_ss(7, 7, Method::Roots, 0),
            Err(Error::BadPrime { .. })
        ));
    }
}
