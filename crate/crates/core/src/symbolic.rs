//! Symbolic engine for rational functions of the shape
//! `N(x) / (x - 1)^k`, where the numerator is an exponential polynomial:
//! a finite sum of terms `c(n) * x^(eps*n + j)` with polynomial
//! coefficients in `n` and `eps` either 0 or 1.
//!
//! The finite geometric sum `1 + x + ... + x^n = (x^(n+1) - 1)/(x - 1)`
//! is the seed. The family is closed under the operators `d/dx` and
//! `x d/dx`, and each application raises the denominator power by
//! exactly one:
//!
//! ```text
//! x d/dx [ N/(x-1)^k ] = [ x(x-1)N' - k x N ] / (x-1)^(k+1)
//!   d/dx [ N/(x-1)^k ] = [  (x-1)N' - k N   ] / (x-1)^(k+1)
//! ```
//!
//! After `d` applications of `x d/dx` the left-hand side of the seed
//! identity is `sum_m m^d x^m`, so evaluating the right-hand side in the
//! limit `x -> 1` by L'Hopital's rule produces the power-sum polynomial.
//! With the denominator kept in this reduced form the limit takes
//! exactly `k = d + 1` differentiation steps, every intermediate
//! numerator vanishing at `x = 1` (the `0/0` condition), and the
//! denominator contributing `k!`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::poly::Polynomial;
use crate::rational::{self, factorial, from_int, Rational};

/// One numerator term `coeff(n) * x^(eps*n + shift)`; `has_n` is the
/// `eps = 1` case.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExpTerm {
    pub coeff: Polynomial,
    pub has_n: bool,
    pub shift: i64,
}

impl ExpTerm {
    pub fn new(coeff: Polynomial, has_n: bool, shift: i64) -> Self {
        ExpTerm {
            coeff,
            has_n,
            shift,
        }
    }

    /// Constant-in-`n` coefficient times a pure power of `x`.
    pub fn constant(c: i64, shift: i64) -> Self {
        ExpTerm::new(Polynomial::from_integers(&[c]), false, shift)
    }
}

/// Canonical sum of [`ExpTerm`]s: one term per `(eps, shift)` key,
/// sorted with the `x^(n + j)` terms first, descending in `j`, and no
/// zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ExpPoly {
    terms: Vec<ExpTerm>,
}

impl ExpPoly {
    /// Merges, drops zero coefficients, and sorts.
    pub fn new(terms: Vec<ExpTerm>) -> Self {
        let mut merged: BTreeMap<(bool, i64), Polynomial> = BTreeMap::new();
        for t in terms {
            debug_assert!(
                t.coeff.is_zero() || t.has_n || t.shift >= 0,
                "constant-exponent term with negative power of x"
            );
            let entry = merged
                .entry((t.has_n, t.shift))
                .or_insert_with(Polynomial::zero);
            *entry = &*entry + &t.coeff;
        }
        let terms = merged
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|((has_n, shift), coeff)| ExpTerm::new(coeff, has_n, shift))
            .collect();
        ExpPoly { terms }
    }

    pub fn zero() -> Self {
        ExpPoly { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[ExpTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Term-by-term derivative in `x`: `c(n) x^(en+j)` maps to
    /// `c(n)(en+j) x^(en+j-1)`. A constant term (`e = 0`, `j = 0`)
    /// vanishes.
    pub fn ddx(&self) -> ExpPoly {
        let mut out = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let exponent = if t.has_n {
                // n + shift as a degree-1 polynomial in n
                Polynomial::from_integers(&[t.shift, 1])
            } else {
                Polynomial::from_integers(&[t.shift])
            };
            out.push(ExpTerm::new(&t.coeff * &exponent, t.has_n, t.shift - 1));
        }
        ExpPoly::new(out)
    }

    /// Multiplication by `x`: shifts every exponent up by one.
    pub fn mul_x(&self) -> ExpPoly {
        ExpPoly {
            terms: self
                .terms
                .iter()
                .map(|t| ExpTerm::new(t.coeff.clone(), t.has_n, t.shift + 1))
                .collect(),
        }
    }

    /// Multiplication by `x - 1`.
    pub fn mul_x_minus_one(&self) -> ExpPoly {
        self.mul_x().sub(self)
    }

    pub fn add(&self, other: &ExpPoly) -> ExpPoly {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        ExpPoly::new(terms)
    }

    pub fn sub(&self, other: &ExpPoly) -> ExpPoly {
        let mut terms = self.terms.clone();
        terms.extend(
            other
                .terms
                .iter()
                .map(|t| ExpTerm::new(-&t.coeff, t.has_n, t.shift)),
        );
        ExpPoly::new(terms)
    }

    /// Multiplies every coefficient polynomial by `c`.
    pub fn scale(&self, c: &Rational) -> ExpPoly {
        if c.is_zero() {
            return ExpPoly::zero();
        }
        ExpPoly {
            terms: self
                .terms
                .iter()
                .map(|t| ExpTerm::new(t.coeff.scalar_mul(c), t.has_n, t.shift))
                .collect(),
        }
    }

    /// Setting `x = 1` kills every power of `x`, leaving the sum of the
    /// coefficient polynomials.
    pub fn eval_at_one(&self) -> Polynomial {
        self.terms
            .iter()
            .fold(Polynomial::zero(), |acc, t| &acc + &t.coeff)
    }

    /// Numeric instantiation at concrete `n` and `x`.
    ///
    /// Panics on a negative power of `x = 0`.
    pub fn eval_at(&self, n: i64, x: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|t| {
                let e = if t.has_n { n + t.shift } else { t.shift };
                t.coeff.eval_int(n) * rational::pow(x, e)
            })
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymbolicError {
    /// The numerator failed to vanish at `x = 1` before the final
    /// differentiation step. Pipeline inputs never trigger this; it
    /// signals an algebra bug.
    LhopitalPrecondition { step: u32 },
}

impl fmt::Display for SymbolicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolicError::LhopitalPrecondition { step } => {
                write!(f, "L'Hopital precondition violated at step {step}")
            }
        }
    }
}

impl std::error::Error for SymbolicError {}

/// A rational function `numerator / (x - 1)^denom_power`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeomRational {
    numerator: ExpPoly,
    denom_power: u32,
}

impl GeomRational {
    pub fn new(numerator: ExpPoly, denom_power: u32) -> Self {
        GeomRational {
            numerator,
            denom_power,
        }
    }

    pub fn numerator(&self) -> &ExpPoly {
        &self.numerator
    }

    pub fn denom_power(&self) -> u32 {
        self.denom_power
    }

    /// Applies `x d/dx`, raising the denominator power by one.
    pub fn x_ddx(&self) -> GeomRational {
        let k = from_int(i64::from(self.denom_power));
        let deriv = self.numerator.ddx();
        let numerator = deriv
            .mul_x_minus_one()
            .mul_x()
            .sub(&self.numerator.mul_x().scale(&k));
        GeomRational::new(numerator, self.denom_power + 1)
    }

    /// Applies plain `d/dx`, raising the denominator power by one.
    pub fn ddx(&self) -> GeomRational {
        let k = from_int(i64::from(self.denom_power));
        let numerator = self
            .numerator
            .ddx()
            .mul_x_minus_one()
            .sub(&self.numerator.scale(&k));
        GeomRational::new(numerator, self.denom_power + 1)
    }

    /// Evaluates the limit at `x -> 1` by L'Hopital's rule.
    ///
    /// With `k` the denominator power, the numerator is differentiated
    /// exactly `k` times; before each step it must vanish at `x = 1`
    /// (the `0/0` condition), and the denominator `(x-1)^k` contributes
    /// `k!` after its `k` differentiations. Returns the polynomial in
    /// `n` that the limit equals.
    pub fn lhopital_limit(&self) -> Result<Polynomial, SymbolicError> {
        let k = self.denom_power;
        let mut num = self.numerator.clone();
        for step in 0..k {
            if !num.eval_at_one().is_zero() {
                return Err(SymbolicError::LhopitalPrecondition { step });
            }
            num = num.ddx();
        }
        let k_factorial = Rational::from_integer(factorial(k));
        Ok(num.eval_at_one().scalar_div(&k_factorial))
    }

    /// Numeric instantiation at concrete `n` and `x != 1`.
    pub fn eval_at(&self, n: i64, x: &Rational) -> Rational {
        assert!(!(x - Rational::one()).is_zero(), "pole at x = 1");
        let denom = rational::pow(&(x - Rational::one()), i64::from(self.denom_power));
        self.numerator.eval_at(n, x) / denom
    }
}

/// The finite geometric sum `(x^(n+1) - 1)/(x - 1)`, the seed of every
/// pipeline in this module.
pub fn geometric_seed() -> GeomRational {
    let numerator = ExpPoly::new(vec![
        ExpTerm::new(Polynomial::one(), true, 1),
        ExpTerm::constant(-1, 0),
    ]);
    GeomRational::new(numerator, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    /// `c(n) x^(n+j)` with integer coefficients for `c`.
    fn nterm(coeffs: &[i64], shift: i64) -> ExpTerm {
        ExpTerm::new(Polynomial::from_integers(coeffs), true, shift)
    }

    #[test]
    fn seed_has_the_geometric_numerator() {
        let g = geometric_seed();
        assert_eq!(g.denom_power(), 1);
        assert_eq!(
            g.numerator(),
            &ExpPoly::new(vec![nterm(&[1], 1), ExpTerm::constant(-1, 0)])
        );
    }

    #[test]
    fn seed_instantiates_to_the_direct_sum() {
        let g = geometric_seed();
        // 1 + 2 + 4 + 8 at x = 2, n = 3
        assert_eq!(g.eval_at(3, &rat(2, 1)), rat(15, 1));
        // single-term sum at n = 0
        assert_eq!(g.eval_at(0, &rat(3, 1)), rat(1, 1));
    }

    #[test]
    fn canonical_form_merges_and_sorts() {
        let p = ExpPoly::new(vec![
            ExpTerm::constant(4, 2),
            nterm(&[0, 1], 1),
            nterm(&[1], 1),
            ExpTerm::constant(-4, 2),
        ]);
        // the two x^2 terms cancel; the x^(n+1) terms merge to (n+1)
        assert_eq!(p.terms(), &[nterm(&[1, 1], 1)]);
    }

    #[test]
    fn ddx_power_rule() {
        let p = ExpPoly::new(vec![nterm(&[1], 1)]); // x^(n+1)
        assert_eq!(p.ddx(), ExpPoly::new(vec![nterm(&[1, 1], 0)])); // (n+1) x^n
    }

    #[test]
    fn ddx_kills_constants() {
        let p = ExpPoly::new(vec![ExpTerm::constant(-1, 0)]);
        assert!(p.ddx().is_zero());
    }

    #[test]
    fn ddx_first_pipeline_numerator() {
        // n x^(n+2) - (n+1) x^(n+1) + x
        let p = ExpPoly::new(vec![
            nterm(&[0, 1], 2),
            nterm(&[-1, -1], 1),
            ExpTerm::constant(1, 1),
        ]);
        // n(n+2) x^(n+1) - (n+1)^2 x^n + 1
        let expected = ExpPoly::new(vec![
            nterm(&[0, 2, 1], 1),
            nterm(&[-1, -2, -1], 0),
            ExpTerm::constant(1, 0),
        ]);
        assert_eq!(p.ddx(), expected);
    }

    #[test]
    fn mul_x_shifts_exponents() {
        let g = geometric_seed();
        let shifted = g.numerator().mul_x();
        assert_eq!(
            shifted,
            ExpPoly::new(vec![nterm(&[1], 2), ExpTerm::constant(-1, 1)])
        );
        assert!(ExpPoly::zero().mul_x().is_zero());
    }

    #[test]
    fn x_ddx_of_seed_matches_known_form() {
        let g = geometric_seed().x_ddx();
        assert_eq!(g.denom_power(), 2);
        let expected = ExpPoly::new(vec![
            nterm(&[0, 1], 2),
            nterm(&[-1, -1], 1),
            ExpTerm::constant(1, 1),
        ]);
        assert_eq!(g.numerator(), &expected);
    }

    #[test]
    fn x_ddx_twice_canonical_numerator() {
        let g = geometric_seed().x_ddx().x_ddx();
        assert_eq!(g.denom_power(), 3);
        // n^2 x^(n+3) + (-2n^2-2n+1) x^(n+2) + (n+1)^2 x^(n+1) - x^2 - x
        let expected = ExpPoly::new(vec![
            nterm(&[0, 0, 1], 3),
            nterm(&[1, -2, -2], 2),
            nterm(&[1, 2, 1], 1),
            ExpTerm::constant(-1, 2),
            ExpTerm::constant(-1, 1),
        ]);
        assert_eq!(g.numerator(), &expected);
    }

    #[test]
    fn unsimplified_form_equivalence() {
        // multiplying the canonical second-stage numerator by (x-1)
        // reproduces the raw quotient-rule numerator over (x-1)^4:
        // n^2 x^(n+4) + (-3n^2-2n+1) x^(n+3) + (3n^2+4n) x^(n+2)
        //   - (n+1)^2 x^(n+1) - x^3 + x
        let g = geometric_seed().x_ddx().x_ddx();
        let raised = g.numerator().mul_x_minus_one();
        let expected = ExpPoly::new(vec![
            nterm(&[0, 0, 1], 4),
            nterm(&[1, -2, -3], 3),
            nterm(&[0, 4, 3], 2),
            nterm(&[-1, -2, -1], 1),
            ExpTerm::constant(-1, 3),
            ExpTerm::constant(1, 1),
        ]);
        assert_eq!(raised, expected);
    }

    #[test]
    fn numerators_vanish_at_one_along_the_pipeline() {
        let g = geometric_seed().x_ddx();
        assert!(g.numerator().eval_at_one().is_zero());
        let g = g.x_ddx();
        assert!(g.numerator().eval_at_one().is_zero());
    }

    #[test]
    fn ddx_of_seed_matches_known_form() {
        let g = geometric_seed().ddx();
        assert_eq!(g.denom_power(), 2);
        // n x^(n+1) - (n+1) x^n + 1
        let expected = ExpPoly::new(vec![
            nterm(&[0, 1], 1),
            nterm(&[-1, -1], 0),
            ExpTerm::constant(1, 0),
        ]);
        assert_eq!(g.numerator(), &expected);
        assert!(g.numerator().eval_at_one().is_zero());
    }

    #[test]
    fn ddx_limit_gives_triangular_numbers() {
        // after one d/dx the left side is 0 + 1 + 2x + ... + n x^(n-1),
        // which at x = 1 is the first power sum
        let p = geometric_seed().ddx().lhopital_limit().unwrap();
        assert_eq!(p, Polynomial::from_ratios(&[(0, 1), (1, 2), (1, 2)]));
    }

    #[test]
    fn eval_at_one_examples() {
        assert!(geometric_seed().numerator().eval_at_one().is_zero());
        let second = ExpPoly::new(vec![
            // n(n+2)(n+1) x^n - (n+1)^2 n x^(n-1)
            nterm(&[0, 2, 3, 1], 0),
            nterm(&[0, -1, -2, -1], -1),
        ]);
        // (n^3+3n^2+2n) - (n^3+2n^2+n) = n^2 + n, halved
        assert_eq!(
            second.eval_at_one().scalar_div(&rat(2, 1)),
            Polynomial::from_ratios(&[(0, 1), (1, 2), (1, 2)])
        );
    }

    #[test]
    fn lhopital_limit_of_seed_is_n_plus_one() {
        let p = geometric_seed().lhopital_limit().unwrap();
        assert_eq!(p, Polynomial::from_integers(&[1, 1]));
    }

    #[test]
    fn lhopital_limit_first_power() {
        let p = geometric_seed().x_ddx().lhopital_limit().unwrap();
        assert_eq!(p, Polynomial::from_ratios(&[(0, 1), (1, 2), (1, 2)]));
    }

    #[test]
    fn lhopital_limit_sum_of_squares() {
        let p = geometric_seed().x_ddx().x_ddx().lhopital_limit().unwrap();
        assert_eq!(
            p,
            Polynomial::from_ratios(&[(0, 1), (1, 6), (1, 2), (1, 3)])
        );
    }

    #[test]
    fn lhopital_rejects_nonvanishing_numerator() {
        // x^n alone does not vanish at x = 1
        let g = GeomRational::new(ExpPoly::new(vec![nterm(&[1], 0)]), 1);
        assert_eq!(
            g.lhopital_limit(),
            Err(SymbolicError::LhopitalPrecondition { step: 0 })
        );
    }

    /// Direct oracle: `sum_{m=0..n} m^k x^m` in exact arithmetic.
    fn power_weighted_sum(k: u32, n: i64, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for m in 0..=n {
            let mk = if k == 0 {
                Rational::one() // 0^0 = 1
            } else {
                rational::pow(&rat(m, 1), i64::from(k))
            };
            acc += mk * rational::pow(x, m);
        }
        acc
    }

    proptest! {
        /// After k applications of x d/dx, instantiating the rational
        /// function agrees exactly with the directly computed sum.
        #[test]
        fn operator_matches_direct_sum(
            k in 0u32..=4,
            n in 0i64..=8,
            p in -9i64..=9,
            q in 1i64..=9,
        ) {
            let x = rat(p, q);
            prop_assume!(!x.is_zero() && x != rat(1, 1));
            let mut g = geometric_seed();
            for _ in 0..k {
                g = g.x_ddx();
            }
            prop_assert_eq!(g.eval_at(n, &x), power_weighted_sum(k, n, &x));
        }

        /// Each operator application raises the denominator power by one.
        #[test]
        fn operators_increment_denominator(k in 0u32..=5) {
            let mut g = geometric_seed();
            let mut h = geometric_seed();
            for _ in 0..k {
                g = g.x_ddx();
                h = h.ddx();
            }
            prop_assert_eq!(g.denom_power(), k + 1);
            prop_assert_eq!(h.denom_power(), k + 1);
        }
    }
}
