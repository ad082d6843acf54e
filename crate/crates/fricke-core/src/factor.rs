//! Polynomial factorization over F_p and F_p^2: squarefree decomposition in
//! characteristic p, distinct-degree splitting, Cantor-Zassenhaus equal
//! degree splitting, root extraction and exact square roots.
//!
//! Randomized steps draw from a ChaCha8 stream seeded by (characteristic,
//! content hash of the input, user seed), so identical inputs and seeds give
//! byte-identical factorizations.

use crate::field::Field;
use crate::poly::Poly;
use crate::{Error, Result};
use num_bigint::BigUint;
use num_traits::One;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A unit times a product of monic factor powers, canonically ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredPoly<F: Field> {
    pub f: F,
    pub unit: F::El,
    pub factors: Vec<(Poly<F>, usize)>,
}

impl<F: Field> FactoredPoly<F> {
    /// Multiply back together; inverse of factor().
    pub fn product(&self) -> Poly<F> {
        let mut acc = Poly::constant(self.f, self.unit);
        for (p, m) in &self.factors {
            acc = acc.mul(&p.pow(*m));
        }
        acc
    }
}

/// FNV-1a over the coefficient words, mixing the degree in.
fn content_hash<F: Field>(f: &Poly<F>) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    let mut eat = |v: u64| {
        for b in v.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    };
    eat(f.c.len() as u64);
    for &a in &f.c {
        let (w0, w1) = f.f.el_words(a);
        eat(w0);
        eat(w1);
    }
    h
}

fn seeded_rng<F: Field>(f: &Poly<F>, seed: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&f.f.characteristic().to_le_bytes());
    key[8..16].copy_from_slice(&content_hash(f).to_le_bytes());
    key[16..24].copy_from_slice(&seed.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

/// p-th root of a polynomial whose derivative vanishes: every exponent is a
/// multiple of p, and coefficients map through the inverse Frobenius.
fn pth_root<F: Field>(f: &Poly<F>) -> Poly<F> {
    let k = f.f;
    let p = k.characteristic() as usize;
    let inv_frob_exp = k.order() / k.characteristic() as u128;
    let mut c = Vec::with_capacity(f.c.len() / p + 1);
    for i in (0..f.c.len()).step_by(p) {
        c.push(k.pow(f.c[i], inv_frob_exp));
    }
    Poly::new(k, c)
}

/// Squarefree decomposition of a monic polynomial in characteristic p:
/// pairwise coprime monic squarefree parts with multiplicities.
pub fn squarefree_decomposition<F: Field>(f: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let k = f.f;
    let p = k.characteristic() as usize;
    let mut out: Vec<(Poly<F>, usize)> = Vec::new();
    let mut stack = vec![(f.monic(), 1usize)];
    while let Some((g, mult)) = stack.pop() {
        if g.deg0() == 0 {
            continue;
        }
        let d = g.derivative();
        if d.is_zero() {
            stack.push((pth_root(&g), mult * p));
            continue;
        }
        let mut c = g.gcd(&d);
        let mut w = g.exact_div(&c).expect("gcd divides");
        let mut i = 1usize;
        while w.deg0() > 0 {
            let y = w.gcd(&c);
            let fac = w.exact_div(&y).expect("gcd divides");
            if fac.deg0() > 0 {
                out.push((fac, i * mult));
            }
            c = c.exact_div(&y).expect("gcd divides");
            w = y;
            i += 1;
        }
        if c.deg0() > 0 {
            stack.push((pth_root(&c), mult * p));
        }
    }
    out
}

/// Distinct-degree decomposition of a monic squarefree polynomial: pairs of
/// (product of irreducible factors of degree k, k).
fn distinct_degree<F: Field>(f: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let k = f.f;
    let q = BigUint::from(k.order());
    let mut rest = f.clone();
    let mut h = Poly::x(k).rem(&rest);
    let mut out = Vec::new();
    let mut d = 0usize;
    while rest.deg0() > 0 {
        d += 1;
        if 2 * d > rest.deg0() {
            let deg = rest.deg0();
            out.push((rest, deg));
            break;
        }
        h = h.powrem(&q, &rest);
        let split = h.sub(&Poly::x(k)).gcd(&rest);
        if split.deg0() > 0 {
            rest = rest.exact_div(&split).expect("gcd divides");
            h = h.rem(&rest);
            out.push((split, d));
        }
    }
    out
}

/// Equal-degree splitting by Cantor-Zassenhaus for odd field order; over the
/// 2-element field the (tiny) cases are split by exhaustive trial division.
fn equal_degree<F: Field>(
    f: &Poly<F>,
    d: usize,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Poly<F>>,
) {
    let k = f.f;
    if f.deg0() == d {
        out.push(f.monic());
        return;
    }
    if k.order() == 2 {
        split_over_f2(f, d, out);
        return;
    }
    let e = (BigUint::from(k.order()).pow(d as u32) - BigUint::one()) >> 1;
    loop {
        let c: Vec<F::El> = (0..f.deg0()).map(|_| k.sample(rng)).collect();
        let u = Poly::new(k, c);
        if u.deg0() == 0 {
            continue;
        }
        let w = u.powrem(&e, f);
        let g = w.sub(&Poly::one(k)).gcd(f);
        if g.deg0() > 0 && g.deg0() < f.deg0() {
            let h = f.exact_div(&g).expect("gcd divides");
            equal_degree(&g, d, rng, out);
            equal_degree(&h, d, rng, out);
            return;
        }
    }
}

/// Exhaustive equal-degree splitting over the field with two elements.
fn split_over_f2<F: Field>(f: &Poly<F>, d: usize, out: &mut Vec<Poly<F>>) {
    let k = f.f;
    let mut rest = f.monic();
    // Enumerate monic polynomials of degree d by binary counter.
    let mut mask = 0u64;
    while rest.deg0() > d {
        let mut c: Vec<F::El> = (0..d)
            .map(|i| {
                if mask >> i & 1 == 1 {
                    k.one()
                } else {
                    k.zero()
                }
            })
            .collect();
        c.push(k.one());
        let cand = Poly::new(k, c);
        while rest.rem(&cand).is_zero() {
            out.push(cand.clone());
            rest = rest.exact_div(&cand).expect("divides");
        }
        mask += 1;
        assert!(mask < 1 << d.min(63), "split over F_2 exhausted candidates");
    }
    if rest.deg0() == d {
        out.push(rest);
    }
}

/// Full factorization with canonical ordering: ascending degree, then the
/// coefficient sequence compared downward from the second-highest term.
pub fn factor<F: Field>(f: &Poly<F>, seed: u64) -> FactoredPoly<F> {
    let k = f.f;
    assert!(!f.is_zero(), "factorization of the zero polynomial");
    let unit = f.lc();
    let mut rng = seeded_rng(f, seed);
    let mut factors: Vec<(Poly<F>, usize)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&f.monic()) {
        for (prod, d) in distinct_degree(&part) {
            let mut irr = Vec::new();
            equal_degree(&prod, d, &mut rng, &mut irr);
            factors.extend(irr.into_iter().map(|g| (g, mult)));
        }
    }
    factors.sort_by(|(a, _), (b, _)| canonical_cmp(a, b));
    FactoredPoly { f: k, unit, factors }
}

/// Canonical factor order: degree first, then coefficients compared from the
/// second-highest degree downward by the element order.
pub fn canonical_cmp<F: Field>(a: &Poly<F>, b: &Poly<F>) -> std::cmp::Ordering {
    a.deg0().cmp(&b.deg0()).then_with(|| {
        for i in (0..a.deg0()).rev() {
            let o = a.coeff(i).cmp(&b.coeff(i));
            if o != std::cmp::Ordering::Equal {
                return o;
            }
        }
        std::cmp::Ordering::Equal
    })
}

/// All roots in the coefficient field, sorted by the element order.
pub fn roots_in_field<F: Field>(f: &Poly<F>, seed: u64) -> Vec<F::El> {
    let k = f.f;
    if f.deg0() == 0 {
        return Vec::new();
    }
    let mut rng = seeded_rng(f, seed);
    // Radical of the split-linear part: gcd with X^q - X.
    let work = f.monic();
    let xq = Poly::x(k).powrem(&BigUint::from(k.order()), &work);
    let lin = xq.sub(&Poly::x(k)).gcd(&work);
    if lin.deg0() == 0 {
        return Vec::new();
    }
    let mut irr = Vec::new();
    equal_degree(&lin, 1, &mut rng, &mut irr);
    let mut roots: Vec<F::El> = irr.iter().map(|g| k.neg(g.coeff(0))).collect();
    roots.sort();
    roots
}

/// Does the squarefree radical split into linear factors over the field?
pub fn is_split_linear<F: Field>(f: &Poly<F>) -> bool {
    let k = f.f;
    if f.is_zero() {
        return false;
    }
    if f.deg0() == 0 {
        return true;
    }
    let mut rad = Poly::one(k);
    for (part, _) in squarefree_decomposition(&f.monic()) {
        rad = rad.mul(&part);
    }
    let xq = Poly::x(k).powrem(&BigUint::from(k.order()), &rad);
    xq.sub(&Poly::x(k)).gcd(&rad).deg0() == rad.deg0()
}

/// Rabin irreducibility test.
pub fn is_irreducible<F: Field>(f: &Poly<F>) -> bool {
    let k = f.f;
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    let q = BigUint::from(k.order());
    let work = f.monic();
    // h_k = X^(q^k) mod f, built by iterating the q-power map.
    let mut h = Poly::x(k).powrem(&q, &work);
    let mut powers = vec![h.clone()];
    for _ in 1..d {
        h = h.powrem(&q, &work);
        powers.push(h.clone());
    }
    if powers[d - 1] != Poly::x(k).rem(&work) {
        return false;
    }
    let prime_divs = {
        let mut v = Vec::new();
        let mut m = d;
        let mut r = 2;
        while r * r <= m {
            if m % r == 0 {
                v.push(r);
                while m % r == 0 {
                    m /= r;
                }
            }
            r += 1;
        }
        if m > 1 {
            v.push(m);
        }
        v
    };
    for r in prime_divs {
        let g = powers[d / r - 1].sub(&Poly::x(k)).gcd(&work);
        if g.deg0() != 0 {
            return false;
        }
    }
    true
}

/// Exact square root of a monic even-degree polynomial.
pub fn poly_exact_sqrt<F: Field>(f: &Poly<F>) -> Result<Poly<F>> {
    let k = f.f;
    if k.characteristic() == 2 {
        return Err(Error::NotASquare);
    }
    if f.is_zero() {
        return Ok(f.clone());
    }
    let deg = f.deg0();
    if deg % 2 != 0 || !f.is_monic() {
        return Err(Error::NotASquare);
    }
    let n = deg / 2;
    let half = k.inv(k.from_u64(2));
    let mut s = vec![k.zero(); n + 1];
    s[n] = k.one();
    for i in (0..n).rev() {
        let mut conv = k.zero();
        for a in i + 1..n {
            let b = n + i - a;
            if b > i && b < n {
                conv = k.add(conv, k.mul(s[a], s[b]));
            }
        }
        s[i] = k.mul(k.sub(f.coeff(n + i), conv), half);
    }
    let s = Poly::new(k, s);
    if s.mul(&s) == *f {
        Ok(s)
    } else {
        Err(Error::NotASquare)
    }
}

/// Render a factorization over F_p in the table style: factors concatenated,
/// parenthesized unless a bare monomial or a lone unrepeated factor, with
/// multiplicities as trailing exponents.
pub fn render_factored(
    fp: &FactoredPoly<crate::field::PrimeField>,
    var: &str,
) -> String {
    let single = fp.factors.len() == 1;
    let mut s = String::new();
    if fp.unit != 1 {
        s.push_str(&fp.unit.to_string());
    }
    for (poly, mult) in &fp.factors {
        let bare = poly.deg0() == 1 && poly.coeff(0) == 0;
        let body = poly.display(var);
        let piece = if bare {
            var.to_string()
        } else if single && *mult == 1 && fp.unit == 1 {
            body
        } else {
            format!("({body})")
        };
        s.push_str(&piece);
        if *mult > 1 {
            s.push_str(&format!("^{mult}"));
        }
    }
    if fp.factors.is_empty() {
        s.push('1');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, PrimeModulus, QuadField};

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(PrimeModulus::new(p).unwrap())
    }

    #[test]
    fn factors_small_products() {
        let f = fp(13);
        let a = Poly::from_i64(f, &[2, 1]);
        let b = Poly::from_i64(f, &[5, 1]);
        let c = Poly::from_i64(f, &[2, 0, 1]); // irreducible mod 13
        let input = a.mul(&b).mul(&b).mul(&c).mul_scalar(3);
        let fac = factor(&input, 0);
        assert_eq!(fac.unit, 3);
        assert_eq!(
            fac.factors,
            vec![(a.clone(), 1), (b.clone(), 2), (c.clone(), 1)]
        );
        assert_eq!(fac.product(), input);
    }

    #[test]
    fn repeated_p_th_powers() {
        let f = fp(5);
        let a = Poly::from_i64(f, &[3, 1]);
        let input = a.pow(5);
        let fac = factor(&input, 0);
        assert_eq!(fac.factors, vec![(a, 5)]);
    }

    #[test]
    fn deterministic_under_seed() {
        let f = fp(101);
        let input = Poly::from_i64(f, &[7, 0, 3, 0, 0, 1, 2]);
        let one = factor(&input, 42);
        let two = factor(&input, 42);
        assert_eq!(one, two);
        let other_seed = factor(&input, 43);
        assert_eq!(one.product(), other_seed.product());
        assert_eq!(one.factors, other_seed.factors);
    }

    #[test]
    fn roots_and_split_detection() {
        let f = fp(11);
        // (X-1)(X-4)(X^2+1): X^2+1 is irreducible mod 11.
        let input = Poly::from_i64(f, &[-1, 1])
            .mul(&Poly::from_i64(f, &[-4, 1]))
            .mul(&Poly::from_i64(f, &[1, 0, 1]));
        assert_eq!(roots_in_field(&input, 0), vec![1, 4]);
        assert!(!is_split_linear(&input));
        let split = Poly::from_i64(f, &[-1, 1]).mul(&Poly::from_i64(f, &[-4, 1]));
        assert!(is_split_linear(&split));
        // Extension roots of X^2 + 1 over F_11(sqrt c).
        let q = QuadField::new(PrimeModulus::new(11).unwrap()).unwrap();
        let ext = Poly::new(q, vec![q.one(), q.zero(), q.one()]);
        let r = roots_in_field(&ext, 0);
        assert_eq!(r.len(), 2);
        for root in r {
            assert_eq!(q.add(q.mul(root, root), q.one()), q.zero());
        }
    }

    #[test]
    fn irreducibility_certificates() {
        let f = fp(5);
        assert!(is_irreducible(&Poly::from_i64(f, &[2, 0, 1]))); // X^2+2
        assert!(!is_irreducible(&Poly::from_i64(f, &[4, 0, 1]))); // (X-1)(X+1)
        assert!(is_irreducible(&Poly::from_i64(f, &[1, 1])));
        let q = QuadField::new(PrimeModulus::new(5).unwrap()).unwrap();
        // X^2 + 2 splits over F_25.
        let ext = Poly::new(q, vec![q.from_u64(2), q.zero(), q.one()]);
        assert!(!is_irreducible(&ext));
    }

    #[test]
    fn sqrt_round_trip() {
        let f = fp(1009);
        let g = Poly::from_i64(f, &[12, 7, 0, 991, 1]);
        let sq = g.mul(&g);
        assert_eq!(poly_exact_sqrt(&sq).unwrap(), g);
        assert!(poly_exact_sqrt(&sq.add(&Poly::one(f))).is_err());
        assert!(poly_exact_sqrt(&Poly::from_i64(f, &[1, 1])).is_err());
    }

    #[test]
    fn rendering_matches_table_style() {
        let f = fp(11);
        let input = Poly::from_i64(f, &[0, 1, 0, 1]); // x(x^2+1), x^2+1 irreducible mod 11
        let fac = factor(&input, 0);
        assert_eq!(render_factored(&fac, "x"), "x(x^2+1)");
        let lone = factor(&Poly::from_i64(f, &[8, 1]), 0);
        assert_eq!(render_factored(&lone, "x"), "x+8");
        let sq = factor(&Poly::from_i64(f, &[3, 1]).pow(2), 0);
        assert_eq!(render_factored(&sq, "Y"), "(Y+3)^2");
        let xonly = factor(&Poly::from_i64(f, &[0, 0, 1]), 0);
        assert_eq!(render_factored(&xonly, "Y"), "Y^2");
    }

    #[test]
    fn factor_over_f2() {
        let f = fp(2);
        // X^2 + X = X(X+1); X^2 + X + 1 irreducible.
        let fac = factor(&Poly::from_i64(f, &[0, 1, 1]), 0);
        assert_eq!(fac.factors.len(), 2);
        let irr = factor(&Poly::from_i64(f, &[1, 1, 1]), 0);
        assert_eq!(irr.factors.len(), 1);
        assert_eq!(irr.factors[0].1, 1);
    }
}
