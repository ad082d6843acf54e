//! Bivariate integer polynomials stored as rows by first-variable degree,
//! each row a polynomial in the second variable.

use crate::field::{Field, PrimeField};
use crate::intpoly::IntPoly;
use crate::poly::Poly;
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiIntPoly {
    /// rows[i] is the coefficient of X^i, a polynomial in Y.
    pub rows: Vec<IntPoly>,
}

impl BiIntPoly {
    pub fn new(mut rows: Vec<IntPoly>) -> Self {
        while rows.last().is_some_and(|r| r.is_zero()) {
            rows.pop();
        }
        BiIntPoly { rows }
    }

    pub fn zero() -> Self {
        BiIntPoly { rows: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Lift a polynomial in the first variable.
    pub fn from_poly_x(p: &IntPoly) -> Self {
        BiIntPoly::new(p.c.iter().map(|a| IntPoly::constant(a.clone())).collect())
    }

    /// Lift a polynomial in the second variable.
    pub fn from_poly_y(p: &IntPoly) -> Self {
        BiIntPoly::new(vec![p.clone()])
    }

    /// Degree in the first variable, zero for the zero polynomial.
    pub fn deg_x(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    /// Degree in the second variable.
    pub fn deg_y(&self) -> usize {
        self.rows.iter().map(|r| r.deg0()).max().unwrap_or(0)
    }

    pub fn row(&self, i: usize) -> IntPoly {
        self.rows.get(i).cloned().unwrap_or_else(IntPoly::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.rows.len().max(other.rows.len());
        BiIntPoly::new((0..n).map(|i| self.row(i).add(&other.row(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.rows.len().max(other.rows.len());
        BiIntPoly::new((0..n).map(|i| self.row(i).sub(&other.row(i))).collect())
    }

    pub fn neg(&self) -> Self {
        BiIntPoly::new(self.rows.iter().map(|r| r.neg()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return BiIntPoly::zero();
        }
        let mut rows = vec![IntPoly::zero(); self.rows.len() + other.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.rows.iter().enumerate() {
                rows[i + j] = rows[i + j].add(&a.mul(b));
            }
        }
        BiIntPoly::new(rows)
    }

    pub fn mul_scalar(&self, s: &BigInt) -> Self {
        BiIntPoly::new(self.rows.iter().map(|r| r.mul_scalar(s)).collect())
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut r = BiIntPoly::from_poly_x(&IntPoly::one());
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        r
    }

    /// Substitute an integer for the first variable; result in the second.
    pub fn subst_x(&self, x: &BigInt) -> IntPoly {
        let mut acc = IntPoly::zero();
        for r in self.rows.iter().rev() {
            acc = acc.mul_scalar(x).add(r);
        }
        acc
    }

    /// Substitute an integer for the second variable; result in the first.
    pub fn subst_y(&self, y: &BigInt) -> IntPoly {
        IntPoly::new(self.rows.iter().map(|r| r.eval(y)).collect())
    }

    /// Swap the two variables.
    pub fn transpose(&self) -> Self {
        let dy = self.deg_y();
        let rows = (0..=dy)
            .map(|j| IntPoly::new(self.rows.iter().map(|r| r.coeff(j)).collect()))
            .collect();
        BiIntPoly::new(rows)
    }

    /// Evaluate at a point of any finite field.
    pub fn eval_in<F: Field>(&self, f: &F, x: F::El, y: F::El) -> F::El {
        let mut acc = f.zero();
        for r in self.rows.iter().rev() {
            acc = f.add(f.mul(acc, x), r.eval_in(f, y));
        }
        acc
    }

    /// Reduce to rows of F_p polynomials (still by first-variable degree).
    pub fn reduce_mod(&self, f: PrimeField) -> Vec<Poly<PrimeField>> {
        self.rows.iter().map(|r| r.reduce_mod(f)).collect()
    }

    /// Substitute fractions x -> xn/xd and y -> yn/yd (all univariate in a
    /// common variable) and clear denominators: returns
    /// sum_ij c_ij xn^i xd^(degx - i) yn^j yd^(degy - j).
    pub fn subst_fractions(
        &self,
        xn: &IntPoly,
        xd: &IntPoly,
        yn: &IntPoly,
        yd: &IntPoly,
    ) -> IntPoly {
        let dx = self.deg_x();
        let dy = self.deg_y();
        let mut acc = IntPoly::zero();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, cij) in row.c.iter().enumerate() {
                if cij.is_zero() {
                    continue;
                }
                let term = xn
                    .pow(i)
                    .mul(&xd.pow(dx - i))
                    .mul(&yn.pow(j))
                    .mul(&yd.pow(dy - j))
                    .mul_scalar(cij);
                acc = acc.add(&term);
            }
        }
        acc
    }

    /// Sum of absolute values of all integer coefficients.
    pub fn norm1(&self) -> BigUint {
        self.rows.iter().map(|r| r.norm1()).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeModulus;

    /// x^2 y + 3 x - y^2 + 2 as a test subject.
    fn sample() -> BiIntPoly {
        BiIntPoly::new(vec![
            IntPoly::from_i64(&[2, 0, -1]),
            IntPoly::from_i64(&[3]),
            IntPoly::from_i64(&[0, 1]),
        ])
    }

    #[test]
    fn substitution_consistency() {
        let f = sample();
        let x = BigInt::from(5);
        let y = BigInt::from(-2);
        let a = f.subst_x(&x).eval(&y);
        let b = f.subst_y(&y).eval(&x);
        assert_eq!(a, b);
        assert_eq!(a, BigInt::from(25 * (-2) + 15 - 4 + 2));
    }

    #[test]
    fn transpose_involution() {
        let f = sample();
        assert_eq!(f.transpose().transpose(), f);
        assert_eq!(f.transpose().deg_x(), f.deg_y());
        let x = BigInt::from(7);
        let y = BigInt::from(11);
        assert_eq!(f.transpose().eval_in(
            &PrimeField::new(PrimeModulus::new(101).unwrap()),
            11 % 101,
            7
        ), f.eval_in(&PrimeField::new(PrimeModulus::new(101).unwrap()), 7, 11));
        assert_eq!(f.subst_x(&x).eval(&y), f.transpose().subst_x(&y).eval(&x));
    }

    #[test]
    fn product_matches_evaluation() {
        let f = sample();
        let g = BiIntPoly::new(vec![IntPoly::from_i64(&[1, 4]), IntPoly::from_i64(&[-3])]);
        let prod = f.mul(&g);
        for (x, y) in [(2i64, 3i64), (-1, 5), (0, -7)] {
            let (bx, by) = (BigInt::from(x), BigInt::from(y));
            assert_eq!(
                prod.subst_x(&bx).eval(&by),
                f.subst_x(&bx).eval(&by) * g.subst_x(&bx).eval(&by)
            );
        }
    }

    #[test]
    fn fraction_substitution_clears_denominators() {
        // f = x - y^2 with x = (z+1)/z, y = 1/z, cleared by z^1 * (z^2)^1 = z^3:
        // z^3 ((z+1)/z - 1/z^2) = z^2 (z+1) - z.
        let f = BiIntPoly::new(vec![
            IntPoly::from_i64(&[0, 0, -1]),
            IntPoly::from_i64(&[1]),
        ]);
        let v = f.subst_fractions(
            &IntPoly::from_i64(&[1, 1]),
            &IntPoly::from_i64(&[0, 1]),
            &IntPoly::from_i64(&[1]),
            &IntPoly::from_i64(&[0, 1]),
        );
        assert_eq!(v, IntPoly::from_i64(&[0, -1, 1, 1]));
    }
}
