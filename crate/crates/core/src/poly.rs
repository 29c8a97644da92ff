//! Dense univariate polynomials over [`Rational`] in the symbol `n`.
//!
//! Coefficients are stored ascending: index `i` holds the coefficient of
//! `n^i`. The representation is canonical — trailing zeros are trimmed
//! after every operation and the zero polynomial is the empty vector —
//! so structural equality is mathematical equality.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{from_int, Rational};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    /// Builds a polynomial from ascending coefficients, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Convenience constructor from ascending `(numerator, denominator)`
    /// pairs.
    pub fn from_ratios(pairs: &[(i64, i64)]) -> Self {
        Polynomial::from_coeffs(
            pairs
                .iter()
                .map(|&(p, q)| Rational::new(p.into(), q.into()))
                .collect(),
        )
    }

    /// Convenience constructor from ascending integer coefficients.
    pub fn from_integers(ints: &[i64]) -> Self {
        Polynomial::from_coeffs(ints.iter().map(|&c| from_int(c)).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// `c * n^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients, trailing zeros trimmed.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `n^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exact Horner evaluation at `x`.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluation at an integer point.
    pub fn eval_int(&self, n: impl Into<crate::rational::Integer>) -> Rational {
        self.eval(&Rational::from_integer(n.into()))
    }

    /// The composition `q(n) = p(a*n + b)`, computed exactly by Horner
    /// over polynomials.
    pub fn scale_shift(&self, a: &Rational, b: &Rational) -> Polynomial {
        let arg = Polynomial::from_coeffs(vec![b.clone(), a.clone()]);
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &arg) + &Polynomial::constant(c.clone());
        }
        acc
    }

    pub fn scalar_mul(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides every coefficient by `c`. Panics on a zero divisor.
    pub fn scalar_div(&self, c: &Rational) -> Polynomial {
        assert!(!c.is_zero(), "polynomial division by zero scalar");
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a / c).collect(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, other: Self) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, other: Self) -> Polynomial {
        self + &(-other)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, other: Self) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($($op:ident :: $method:ident),*) => {$(
        impl $op for Polynomial {
            type Output = Polynomial;
            fn $method(self, other: Self) -> Polynomial {
                (&self).$method(&other)
            }
        }
    )*};
}

forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        let p = Polynomial::from_coeffs(vec![rat(1, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert!(Polynomial::from_integers(&[0, 0]).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn product_of_conjugates() {
        let p = Polynomial::from_integers(&[1, 1]); // n + 1
        let q = Polynomial::from_integers(&[-1, 1]); // n - 1
        assert_eq!(&p * &q, Polynomial::from_integers(&[-1, 0, 1]));
    }

    #[test]
    fn additive_identity() {
        let p = Polynomial::from_ratios(&[(0, 1), (1, 2), (1, 2)]);
        assert_eq!(&p + &Polynomial::zero(), p);
    }

    #[test]
    fn hand_expanded_product() {
        // (n+1)(n+2) = n^2 + 3n + 2
        let p = Polynomial::from_integers(&[1, 1]);
        let q = Polynomial::from_integers(&[2, 1]);
        assert_eq!(&p * &q, Polynomial::from_integers(&[2, 3, 1]));
    }

    #[test]
    fn eval_triangular_number() {
        let p = Polynomial::from_ratios(&[(0, 1), (1, 2), (1, 2)]);
        assert_eq!(p.eval_int(100), rat(5050, 1));
    }

    #[test]
    fn eval_zero_polynomial() {
        assert!(Polynomial::zero().eval_int(12345).is_zero());
    }

    #[test]
    fn eval_sum_of_squares_formula() {
        // 1/3 n^3 + 1/2 n^2 + 1/6 n at n = 3 is 1 + 4 + 9 = 14
        let p = Polynomial::from_ratios(&[(0, 1), (1, 6), (1, 2), (1, 3)]);
        assert_eq!(p.eval_int(3), rat(14, 1));
    }

    #[test]
    fn scale_shift_expands_square() {
        let p = Polynomial::from_integers(&[0, 0, 1]); // n^2
        let shifted = p.scale_shift(&rat(1, 1), &rat(1, 1));
        assert_eq!(shifted, Polynomial::from_integers(&[1, 2, 1]));
    }

    #[test]
    fn scale_shift_collapses_to_constant() {
        let p = Polynomial::from_integers(&[0, 1]); // n
        let c = p.scale_shift(&rat(0, 1), &rat(5, 1));
        assert_eq!(c, Polynomial::from_integers(&[5]));
    }

    #[test]
    fn scale_shift_hand_expansion() {
        // p = n^2 + n at n-1: (n-1)^2 + (n-1) = n^2 - n
        let p = Polynomial::from_integers(&[0, 1, 1]);
        let q = p.scale_shift(&rat(1, 1), &rat(-1, 1));
        assert_eq!(q, Polynomial::from_integers(&[0, -1, 1]));
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-30i64..=30, 1i64..=12), 0..6)
            .prop_map(|v| Polynomial::from_coeffs(v.into_iter().map(|(p, q)| rat(p, q)).collect()))
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn degree_law(p in arb_poly(), q in arb_poly()) {
            if let (Some(dp), Some(dq)) = (p.degree(), q.degree()) {
                prop_assert_eq!((&p * &q).degree(), Some(dp + dq));
            }
        }

        #[test]
        fn evaluation_is_a_homomorphism(p in arb_poly(), q in arb_poly(), x in -20i64..=20) {
            let x = rat(x, 1);
            prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
            prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
        }

        #[test]
        fn operations_stay_canonical(p in arb_poly(), q in arb_poly()) {
            for out in [&p + &q, &p - &q, &p * &q] {
                prop_assert!(out.coeffs().last().is_none_or(|c| !c.is_zero()));
            }
        }

        #[test]
        fn scale_shift_agrees_with_pointwise(p in arb_poly(), a in -5i64..=5, b in -5i64..=5, x in -8i64..=8) {
            let (a, b, x) = (rat(a, 1), rat(b, 1), rat(x, 1));
            let q = p.scale_shift(&a, &b);
            prop_assert_eq!(q.eval(&x), p.eval(&(&a * &x + &b)));
        }
    }
}
